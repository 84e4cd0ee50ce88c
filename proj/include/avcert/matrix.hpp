#ifndef AVCERT_MATRIX_HPP
#define AVCERT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "avcert/numeric.hpp"

namespace avcert {

class RatMat;

// Dense integer matrix, row-major, exact arithmetic throughout.
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMat identity(std::size_t n);
    static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    void set_row(std::size_t i, const IntVec& v);

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    IntMat transpose() const;
    IntMat operator*(const IntMat& other) const;
    IntMat operator+(const IntMat& other) const;
    IntMat operator-(const IntMat& other) const;
    IntMat operator-() const;
    IntMat scaled(const Int& c) const;
    friend bool operator==(const IntMat& a, const IntMat& b) = default;

    // Fraction-free (Bareiss) determinant.
    Int det() const;

    RatMat to_rat() const;
    std::string to_string() const;

    // Elementary row operations, shared by the normal-form routines.
    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void add_multiple_of_row(std::size_t dst, std::size_t src, const Int& c);
    // rows (i, j) <- (a*row_i + b*row_j, c*row_i + d*row_j)
    void combine_rows(std::size_t i, std::size_t j, const Int& a, const Int& b, const Int& c,
                      const Int& d);

  private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

IntMat mat_vec_to_row(const IntVec& v);
IntVec row_times_mat(const IntVec& v, const IntMat& m);

// Dense rational matrix; entries are canonical mpq (gmp keeps them reduced,
// denominators positive).
class RatMat {
  public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RatMat identity(std::size_t n);
    static RatMat from_rows(const std::vector<RatVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    RatVec row(std::size_t i) const;
    void set_row(std::size_t i, const RatVec& v);

    bool is_zero() const;
    bool is_integral() const;

    RatMat transpose() const;
    RatMat operator*(const RatMat& other) const;
    RatMat operator+(const RatMat& other) const;
    RatMat operator-(const RatMat& other) const;
    RatMat scaled(const Rat& c) const;
    friend bool operator==(const RatMat& a, const RatMat& b) = default;

    IntMat to_int() const;  // throws unless integral
    std::string to_string() const;

    std::size_t rank() const;
    Rat det() const;
    std::optional<RatMat> inverse() const;

    // Solve x * A = b (row vector convention). Empty optional if inconsistent;
    // when the system is underdetermined any one solution is returned.
    std::optional<RatVec> solve_left(const RatVec& b) const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

RatVec row_times_mat(const RatVec& v, const RatMat& m);
Rat dot(const RatVec& a, const RatVec& b);

}  // namespace avcert

#endif
