#ifndef AVCERT_COMPLEX_TORUS_HPP
#define AVCERT_COMPLEX_TORUS_HPP

#include <array>
#include <optional>
#include <vector>

#include "avcert/finite_module.hpp"
#include "avcert/sympoly.hpp"
#include "avcert/unipoly.hpp"

namespace avcert {

// The rank-12 period lattice in C^6: e_1..e_6 the standard basis,
// e_7 = r + (omega i) e_1, e_10 = s + (omega i) e_4, and their images under
// 2M and 2M^2, where r and s are generic real vectors with coordinates among
// the formal indeterminates alpha_1..alpha_9.
class PeriodLattice {
  public:
    static std::array<std::size_t, 9> identity_labels();

    // alpha_labels permutes which indeterminate plays alpha_j; the integer
    // Riemann table must not depend on this choice.
    explicit PeriodLattice(const IntMat& m, const IntMat& x,
                           std::array<std::size_t, 9> alpha_labels = identity_labels());

    const IntMat& m() const { return m_; }
    const IntMat& x() const { return x_; }
    const SymVec& e(std::size_t i) const;  // 1-based, 1..12

    // E(v, w) = Im( (conj(v)^T X w) / omega ), exact; throws if some
    // imaginary term lacks an omega factor.
    SymPoly riemann_form(const SymVec& v, const SymVec& w) const;
    // E on lattice basis vectors must be a constant integer.
    Int riemann_entry(std::size_t i, std::size_t j) const;

    // Integer coordinates a_1..a_12 with v = sum a_i e_i, if they exist.
    // Throws on coefficient shapes outside span{1, alpha_j} + omega-multiples.
    std::optional<IntVec> membership(const SymVec& v) const;

  private:
    IntMat m_, x_;
    std::vector<SymVec> e_;
    RatMat features_;  // 12 x 66 coordinates of the basis in the monomial span
};

struct MatrixIdentityReport {
    bool x_symmetric = false;
    bool compatibility = false;  // X M = M^T X
    bool minpoly_ok = false;     // minpoly(M) = x^3 + x^2 - 2x - 1
    bool charpoly_ok = false;    // charpoly(X) = (x-1)^4 (x-7)^2
    bool positive_definite = false;
    std::vector<Int> leading_minors;
    bool all() const
    {
        return x_symmetric && compatibility && minpoly_ok && charpoly_ok && positive_definite;
    }
};

MatrixIdentityReport verify_matrix_identities(const IntMat& m, const IntMat& x);

struct RiemannReport {
    bool all_integer = false;
    bool alternating = false;
    bool hermitian_compatible = false;  // E(Mx, y) = E(x, My), symbolically
    IntMat table;                       // 12 x 12
    bool all() const { return all_integer && alternating && hermitian_compatible; }
};

RiemannReport verify_riemann_integrality(const PeriodLattice& pl);

struct EndoTuple {
    IntMat a1, a2, b1, b2;
};

struct EndoReport {
    std::size_t kernel_rank = 0;
    bool a2_all_zero = false;
    bool span_matches = false;       // Z-span of the S parts = Z{I, 2M, 2M^2}
    bool resubstitution_ok = false;  // every kernel tuple satisfies the matrix
                                     // equation exactly, re-checked symbolically
    bool converse_ok = false;        // every S in the span maps the 12 basis
                                     // vectors into the lattice
    std::vector<EndoTuple> basis;
    bool all() const
    {
        return kernel_rank == 3 && a2_all_zero && span_matches && resubstitution_ok && converse_ok;
    }
};

// Solves S = A1 + Omega A2, S Omega = B1 + Omega B2 over the integers via the
// saturated kernel of the exact monomial-coefficient system in 144 unknowns.
EndoReport endomorphism_solver(const PeriodLattice& pl);

struct TwoTorsionReport {
    long a = 0, b = 0;        // module type (R/2R)^a + (R/m)^b
    long kernel_dim = 0;      // dim over F_2 of ker(G1) /\ ker(G2)
    Int killed_by_m = 0;      // exhaustive census over all 4096 elements
    bool nilpotency_ok = false;  // G1^2 = G2^2 = G1 G2 = 0 over F_2
    bool actions_ok = false;     // 2M kills T_1..T_6, 2M T_7 = T_8, 2M^2 T_7 = T_9,
                                 // 2M T_10 = T_11, 2M^2 T_10 = T_12
    IntMat g1, g2;               // 12 x 12 actions over F_2
    bool all() const
    {
        return a == 2 && b == 6 && kernel_dim == 10 && killed_by_m == 1024 && nilpotency_ok &&
               actions_ok;
    }
};

TwoTorsionReport two_torsion_classification(const PeriodLattice& pl);

// A[2] = (1/2 L)/L as a finite module over R = Z[2tau, 2tau^2], with 2M and
// 2M^2 acting through the lattice membership solver.
FiniteModule two_torsion_module(const PeriodLattice& pl);

}  // namespace avcert

#endif
