#ifndef AVCERT_NORMAL_FORM_HPP
#define AVCERT_NORMAL_FORM_HPP

#include <vector>

#include "avcert/matrix.hpp"

namespace avcert {

// Row-style Hermite normal form: h = u * m with u unimodular, pivots positive,
// entries above each pivot reduced into [0, pivot), zero rows last. h is the
// canonical basis of the row lattice of m.
struct HnfResult {
    IntMat h;
    IntMat u;
};

HnfResult hnf(const IntMat& m);

// Nonzero rows of hnf(m).h.
IntMat hnf_basis(const IntMat& m);

// Smith normal form: l * m * r = d, l and r unimodular, d diagonal with
// d_1 | d_2 | ... and all diagonal entries >= 0.
struct SnfResult {
    IntMat d;
    IntMat l;
    IntMat r;
};

SnfResult snf(const IntMat& m);

// Z-basis (HNF-canonical rows) of {v : m * v = 0} intersected with Z^cols.
// The result is saturated: it spans the full rational kernel.
std::vector<IntVec> integer_kernel(const IntMat& m);

}  // namespace avcert

#endif
