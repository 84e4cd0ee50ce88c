#ifndef AVCERT_LATTICE_HPP
#define AVCERT_LATTICE_HPP

#include <optional>
#include <string>

#include "avcert/matrix.hpp"
#include "avcert/normal_form.hpp"

namespace avcert {

// A sublattice of Q^dim of any rank, stored as a trimmed row-HNF integer
// basis over a single positive denominator, both minimal. Two lattices are
// equal iff their stored forms are identical.
class Lattice {
  public:
    Lattice() : dim_(0), denom_(1) {}

    static Lattice zero(std::size_t dim);
    static Lattice standard(std::size_t dim);  // Z^dim
    static Lattice from_rows(const RatMat& rows);
    static Lattice from_rows(const IntMat& rows);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.rows(); }
    bool is_full_rank() const { return rank() == dim_; }
    bool is_zero() const { return rank() == 0; }

    const IntMat& int_basis() const { return basis_; }
    const Int& denom() const { return denom_; }
    RatMat basis_rows() const;
    RatVec basis_row(std::size_t i) const;

    bool contains(const RatVec& v) const;
    bool contains(const Lattice& other) const;
    friend bool operator==(const Lattice& a, const Lattice& b) = default;

    Lattice sum(const Lattice& o) const;
    Lattice intersect(const Lattice& o) const;
    Lattice scaled(const Rat& c) const;
    // Row transform: { v * t : v in L }.
    Lattice transformed(const RatMat& t) const;

    // Rational coordinates of v with respect to the basis rows, if v lies in
    // the rational span.
    std::optional<RatVec> coordinates_of(const RatVec& v) const;

    // |L2 / L1| for L1 = *this contained in L2 with equal rank; exact.
    Int index_in(const Lattice& super) const;

    std::string to_string() const;

  private:
    std::size_t dim_;
    IntMat basis_;
    Int denom_;
};

}  // namespace avcert

#endif
