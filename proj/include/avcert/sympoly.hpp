#ifndef AVCERT_SYMPOLY_HPP
#define AVCERT_SYMPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "avcert/matrix.hpp"

namespace avcert {

// Fixed indeterminate set: alpha_1..alpha_9 at indices 0..8, omega at index 9.
inline constexpr std::size_t kSymVars = 10;
inline constexpr std::size_t kOmegaIndex = 9;

struct Monomial {
    std::array<std::uint8_t, kSymVars> e{};

    static Monomial one() { return {}; }
    static Monomial var(std::size_t i, std::uint8_t deg = 1);

    unsigned total_degree() const;
    friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

// Graded lexicographic term order with alpha_1 < ... < alpha_9 < omega.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exact multivariate polynomial over Q in the fixed indeterminates; canonical
// form by construction (no zero coefficients, deterministic term order).
class SymPoly {
  public:
    SymPoly() = default;
    static SymPoly constant(const Rat& c);
    static SymPoly alpha(std::size_t i);  // 1-based, alpha(1)..alpha(9)
    static SymPoly omega();
    static SymPoly monomial(const Monomial& m, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // throws unless constant
    Rat coefficient_of(const Monomial& m) const;
    std::size_t term_count() const { return terms_.size(); }

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly operator-() const;
    SymPoly scaled(const Rat& c) const;
    friend bool operator==(const SymPoly& a, const SymPoly& b) = default;

    // Exact division by omega as a monomial shift; empty if any term lacks an
    // omega factor.
    std::optional<SymPoly> divided_by_omega() const;

    const std::map<Monomial, Rat, GrlexLess>& terms() const { return terms_; }
    std::string to_string() const;

  private:
    void add_term(const Monomial& m, const Rat& c);
    std::map<Monomial, Rat, GrlexLess> terms_;
};

// A complex value re + im*i with symbolic parts.
struct SymComplex {
    SymPoly re, im;

    SymComplex() = default;
    SymComplex(SymPoly r, SymPoly i) : re(std::move(r)), im(std::move(i)) {}

    SymComplex conj() const { return {re, -im}; }
    SymComplex operator+(const SymComplex& o) const { return {re + o.re, im + o.im}; }
    SymComplex operator-(const SymComplex& o) const { return {re - o.re, im - o.im}; }
    SymComplex operator*(const SymComplex& o) const
    {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    SymComplex scaled(const Rat& c) const { return {re.scaled(c), im.scaled(c)}; }
    friend bool operator==(const SymComplex& a, const SymComplex& b) = default;
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

// Column vector in C^dim with symbolic coordinates.
class SymVec {
  public:
    SymVec() = default;
    explicit SymVec(std::size_t dim) : v_(dim) {}

    std::size_t dim() const { return v_.size(); }
    SymComplex& at(std::size_t i) { return v_[i]; }
    const SymComplex& at(std::size_t i) const { return v_[i]; }

    SymVec operator+(const SymVec& o) const;
    SymVec operator-(const SymVec& o) const;
    SymVec scaled(const Rat& c) const;
    SymVec scaled_complex(const SymComplex& c) const;
    friend bool operator==(const SymVec& a, const SymVec& b) = default;

    // Apply an integer matrix on the left: w = m * v.
    SymVec transformed(const IntMat& m) const;

  private:
    std::vector<SymComplex> v_;
};

}  // namespace avcert

#endif
