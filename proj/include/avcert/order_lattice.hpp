#ifndef AVCERT_ORDER_LATTICE_HPP
#define AVCERT_ORDER_LATTICE_HPP

#include <vector>

#include "avcert/lattice.hpp"
#include "avcert/order.hpp"

namespace avcert {

// A Z-lattice inside (fraction field)^ambient of an order, in order-basis
// coordinates (dimension rank * ambient). Carries an is_ideal flag when it
// was built, and verified, as an ideal of the owner.
class OrderLattice {
  public:
    OrderLattice() = default;
    OrderLattice(OrderRing owner, std::size_t ambient, Lattice lat, bool is_ideal = false);

    const OrderRing& owner() const { return owner_; }
    std::size_t ambient() const { return ambient_; }
    const Lattice& lat() const { return lat_; }
    bool is_ideal_flagged() const { return is_ideal_; }
    std::size_t rank() const { return lat_.rank(); }
    bool is_full_rank() const { return lat_.is_full_rank(); }

    // Closure under multiplication by every owner basis element.
    bool is_owner_stable() const;

    friend bool operator==(const OrderLattice& a, const OrderLattice& b);

  private:
    OrderRing owner_;
    std::size_t ambient_ = 1;
    Lattice lat_;
    bool is_ideal_ = false;
};

// HNF lattice of the Z-span of { g * b_i : g generator, b_i owner basis };
// flagged (and checked) as an ideal. Errors on the zero ideal.
OrderLattice ideal_from_generators(const OrderRing& r, const std::vector<OrderElement>& gens);

// Convenience: the unit ideal (the order itself as a lattice over itself).
OrderLattice unit_ideal(const OrderRing& r);

// x in the Z-row-span of l (owner coordinates); owners must match.
bool ideal_membership(const OrderElement& x, const OrderLattice& l);

// (l1 : l2) = { x in Frac(owner) : x * l2 contained in l1 }, ambient of l1 and
// l2 equal, both full rank. Result lives in the field (ambient 1).
OrderLattice colon_lattice(const OrderLattice& l1, const OrderLattice& l2);

// { x in ambient of l : g * x in l for all g in delta }, delta a full-rank
// lattice in the field. For ambient 1 this agrees with colon_lattice(l, delta).
OrderLattice quotient_by_ideal(const OrderLattice& l, const OrderLattice& delta);

// (l : l) equipped with its ring structure; always an order containing the
// owner's image.
OrderRing multiplier_ring(const OrderLattice& l);

struct IsogenyResult {
    Int n;                 // minimal positive integer with n * lambda_max in r
    OrderLattice delta;    // n * lambda_max as a lattice over r
    OrderLattice lattice;  // { x : delta * x in l }
};

// Constructive passage to the maximal order: r contained in lambda_max with
// finite index (same field), l an r-lattice. The returned lattice has
// multiplier ring lambda_max, and this is machine-verified before returning.
IsogenyResult isogeny_to_maximal(const OrderRing& r, const OrderRing& lambda_max,
                                 const OrderLattice& l);

}  // namespace avcert

#endif
