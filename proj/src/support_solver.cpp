#include "avcert/support_solver.hpp"

#include "avcert/fixtures.hpp"
#include "avcert/normal_form.hpp"

namespace avcert {

SupportConstant support_constant_solver(long t)
{
    if (t < 0 || t > 12) throw Error("support_constant_solver: t must be in [0, 12]");
    const OrderRing& r = fixtures::order_R();
    const std::size_t n = r.rank();
    Int two_t = Int(1) << t;

    // Unknowns (c, a_1..a_3, b_1..b_3) with phi1 = 2^t * a, phi2 = 2^t * b:
    //   c * (2 tau^2) - 2^{t+1} * a - 2^t * (b * M_{2tau}) = 0 in R.
    const IntMat& m2tau = r.basis_mult_matrix(1);
    IntMat sys(n, 1 + 2 * n);
    sys.at(2, 0) = 1;  // coordinates of 2 tau^2 are e_3
    for (std::size_t i = 0; i < n; ++i) {
        sys.at(i, 1 + i) = -(two_t * 2);
        for (std::size_t j = 0; j < n; ++j) sys.at(j, 1 + n + i) = -(two_t * m2tau.at(i, j));
    }

    auto kernel = integer_kernel(sys);
    if (kernel.empty()) throw Error("support_constant_solver: empty solution lattice");
    IntMat kmat = IntMat::from_rows(kernel, 1 + 2 * n);
    IntMat h = hnf_basis(kmat);
    if (h.rows() == 0 || h.at(0, 0) <= 0)
        throw Error("support_constant_solver: no solution with positive c");

    SupportConstant out;
    out.c = h.at(0, 0);
    out.phi1 = RatVec(n), out.phi2 = RatVec(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.phi1[i] = Rat(two_t * h.at(0, 1 + i));
        out.phi2[i] = Rat(two_t * h.at(0, 1 + n + i));
    }

    // Exact re-substitution of the witness.
    RatVec two_tau_sq{Rat(0), Rat(0), Rat(1)};
    RatVec two_tau{Rat(0), Rat(1), Rat(0)};
    RatVec lhs = r.mul(two_tau_sq, RatVec{Rat(out.c), Rat(0), Rat(0)});
    RatVec rhs(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) rhs[i] = 2 * out.phi1[i];
    RatVec tphi2 = r.mul(two_tau, out.phi2);
    for (std::size_t i = 0; i < n; ++i) rhs[i] += tphi2[i];
    if (lhs != rhs) throw Error("support_constant_solver: witness re-substitution failed");
    return out;
}

}  // namespace avcert
