#ifndef AVCERT_FINITE_MODULE_HPP
#define AVCERT_FINITE_MODULE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "avcert/order_lattice.hpp"

namespace avcert {

class ModuleElement;

// A finite module over an order: the abelian group is in Smith form
// (invariant factors d_1 | d_2 | ..., all > 1) and each owner basis element
// acts by an integer matrix on coordinate rows. Actions are validated at
// construction: well-defined modulo the d_i, pairwise commuting, b_0 acting
// as the identity, and reproducing the owner's structure constants.
class FiniteModule {
  public:
    FiniteModule(OrderRing owner, std::vector<Int> invariant_factors,
                 std::vector<IntMat> actions);

    const OrderRing& owner() const { return owner_; }
    const std::vector<Int>& invariant_factors() const { return d_; }
    std::size_t length() const { return d_.size(); }
    const IntMat& action(std::size_t basis_index) const { return actions_[basis_index]; }
    Int size() const;

    ModuleElement element(IntVec coords) const;
    ModuleElement zero() const;
    Int element_count_guarded(const Int& guard) const;  // throws past the guard

    // Elements in mixed-radix index order, first coordinate most significant.
    ModuleElement element_at(const Int& index) const;

    // Action of an arbitrary integral owner element (coordinates a).
    IntMat action_of(const IntVec& a) const;

    friend bool operator==(const FiniteModule& a, const FiniteModule& b);

  private:
    IntVec reduce(IntVec v) const;
    OrderRing owner_;
    std::vector<Int> d_;
    std::vector<IntMat> actions_;
    friend class ModuleElement;
};

class ModuleElement {
  public:
    ModuleElement(const FiniteModule& owner, IntVec coords);

    const IntVec& coords() const { return coords_; }
    const FiniteModule& module() const { return *mod_; }

    bool is_zero() const;
    Int order() const;  // additive order

    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement scaled(const Int& c) const;
    // b * x for an integral owner element b.
    ModuleElement acted_by(const IntVec& owner_coords) const;
    friend bool operator==(const ModuleElement& a, const ModuleElement& b);

  private:
    const FiniteModule* mod_;
    IntVec coords_;
};

// Smith form of l2 / l1 with the induced owner action; l1 contained in l2,
// both full rank and owner stable. |module| = index of l1 in l2.
FiniteModule quotient_module(const OrderLattice& l1, const OrderLattice& l2);

// { alpha in owner : alpha * x = 0 }, an ideal of the owner.
OrderLattice annihilator(const ModuleElement& x);

struct SemicyclicResult {
    bool semicyclic;
    // On failure: the least violating pair (T1, T2) with ord(T1) | ord(T2)
    // and no owner element mapping T2 to T1.
    std::optional<std::pair<IntVec, IntVec>> witness;
};

// Exhaustive decision of the semi-cyclic property. The module size and the
// owner's image in the endomorphism ring are both guarded.
SemicyclicResult is_semicyclic(const FiniteModule& m, const Int& size_guard = Int(1) << 20);

}  // namespace avcert

#endif
