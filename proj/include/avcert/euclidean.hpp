#ifndef AVCERT_EUCLIDEAN_HPP
#define AVCERT_EUCLIDEAN_HPP

#include <optional>
#include <vector>

#include "avcert/order_lattice.hpp"

namespace avcert {

// An order element in integer coordinates.
using OElem = IntVec;
// A vector in owner^k, one order element per coordinate.
using ORow = std::vector<OElem>;

// A maximal order with division: quotient-with-remainder by nearest-integer
// rounding in the field, remainder of strictly smaller norm. Holds for Z and
// the norm-Euclidean imaginary quadratic orders used here (Z[i], Z[zeta_3]).
class EuclideanOrder {
  public:
    explicit EuclideanOrder(OrderRing ring);

    const OrderRing& ring() const { return ring_; }
    std::size_t rank() const { return ring_.rank(); }

    Int norm(const OElem& a) const;  // |field norm|
    OElem mul(const OElem& a, const OElem& b) const;
    OElem sub(const OElem& a, const OElem& b) const;
    bool is_unit(const OElem& a) const { return norm(a) == 1; }
    const std::vector<OElem>& units() const { return units_; }

    // a = q * b + r with norm(r) < norm(b); throws if rounding fails to
    // shrink (the order is then not norm-Euclidean).
    std::pair<OElem, OElem> divide(const OElem& a, const OElem& b) const;

    // The associate of a with canonical representative (lexicographically
    // largest coordinate vector among unit multiples).
    OElem canonical_associate(const OElem& a) const;

  private:
    OrderRing ring_;
    std::vector<OElem> units_;
};

// Row echelon form over the Euclidean order; the returned rows are an
// O-basis of the O-span of the input rows.
std::vector<ORow> o_echelon(const EuclideanOrder& o, std::vector<ORow> rows);

// Flat coordinates (length rank * k) of an O-row, and back.
RatVec orow_to_flat(const EuclideanOrder& o, const ORow& row);
ORow flat_to_orow(const EuclideanOrder& o, const RatVec& flat, std::size_t k);

// The Z-lattice of the O-span of the given rows, as an owner-stable lattice
// in owner^k.
OrderLattice o_span(const EuclideanOrder& o, const std::vector<ORow>& rows, std::size_t k);

struct IndependenceResult {
    bool independent;
    // When dependent: a nonzero integer N (as an owner element N * 1) with
    // N * candidate inside the module, verified by membership.
    std::optional<Int> multiplier;
};

// Is the candidate independent from the module m (no nonzero owner element
// maps it into m)? Equivalent in owner^k to the candidate lying outside the
// rational span of m.
IndependenceResult independent_point(const OrderLattice& m, const RatVec& candidate);

// First standard basis vector of owner^k independent from m, if any.
std::optional<std::size_t> first_independent_coordinate(const OrderLattice& m);

struct SubmoduleChain {
    OrderLattice inner;  // M
    OrderLattice outer;  // N, with M contained in N inside owner^k
};

struct FreeSeparation {
    OrderLattice separating;       // F with F /\ N = M; free over the owner
    std::vector<ORow> free_basis;  // O-basis certificate for F
    // Fresh coordinates picked greedily, each independent from N plus the
    // previously picked ones (the constructive independence extension).
    std::vector<std::size_t> fresh_coordinates;
};

// Constructive free separation over a Euclidean maximal order: computes a
// free O-basis of M (torsion-free finitely generated modules over these
// owners are free), reserves rank(M) fresh coordinates independent from N,
// and verifies F /\ N = M by an exact lattice intersection.
FreeSeparation free_separating_module(const EuclideanOrder& o, const SubmoduleChain& chain);

}  // namespace avcert

#endif
