#ifndef AVCERT_FIXTURES_HPP
#define AVCERT_FIXTURES_HPP

#include "avcert/order.hpp"
#include "avcert/order_lattice.hpp"

namespace avcert::fixtures {

// tau = zeta_7 + zeta_7^{-1}, minimal polynomial x^3 + x^2 - 2x - 1; the field
// Q(tau) is totally real cubic with ring of integers Z[tau].
UniPoly tau_minpoly();

// The non-maximal order R = Z[2*tau, 2*tau^2] with Z-basis {1, 2tau, 2tau^2}.
const OrderRing& order_R();

// The maximal order Z[tau].
const OrderRing& order_Ztau();

// The maximal ideal m = (2, 2tau, 2tau^2) of R, residue field F_2.
const OrderLattice& ideal_m();

// Gaussian integers Z[i], minpoly x^2 + 1 (Euclidean maximal order).
const OrderRing& order_Zi();

// Eisenstein integers Z[zeta_3], minpoly x^2 + x + 1 (Euclidean maximal order).
const OrderRing& order_Zzeta3();

// The non-maximal order Z[sqrt(-3)] inside Q(zeta_3) (sqrt(-3) = 1 + 2*zeta_3).
const OrderRing& order_Zsqrtm3();

// Z as the (maximal) order of Q, minpoly x.
const OrderRing& order_Z();

// The displayed 6x6 matrices of the dimension-6 torus construction.
const IntMat& torus_M();
const IntMat& torus_X();

}  // namespace avcert::fixtures

#endif
