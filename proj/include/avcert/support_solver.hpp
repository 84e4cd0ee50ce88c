#ifndef AVCERT_SUPPORT_SOLVER_HPP
#define AVCERT_SUPPORT_SOLVER_HPP

#include "avcert/order.hpp"

namespace avcert {

struct SupportConstant {
    Int c;            // minimal positive constant
    RatVec phi1;      // witness: phi1, phi2 in 2^t R with
    RatVec phi2;      //   2 tau^2 c = 2 phi1 + 2 tau phi2   (coordinates in R)
};

// Minimal c > 0 such that 2 tau^2 c = 2 phi1 + 2 tau phi2 has a solution with
// phi1, phi2 in 2^t R, found through the HNF of the 7-unknown integer system.
// The witness is re-substituted exactly before returning. Guard: t <= 12.
SupportConstant support_constant_solver(long t);

}  // namespace avcert

#endif
