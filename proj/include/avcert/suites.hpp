#ifndef AVCERT_SUITES_HPP
#define AVCERT_SUITES_HPP

#include <string>
#include <vector>

#include "avcert/finite_module.hpp"
#include "avcert/report.hpp"

namespace avcert {

struct RunConfig {
    long prime_bound = 10000;
    long t = 2;
    std::string cache_path;  // empty: in-memory only
    bool perturb_x = false;  // testing aid: bump X[0][0] before the checks
};

// The four checks of the dimension-6 torus construction: matrix identities,
// Riemann-form integrality, the endomorphism ring, and the 2-torsion module.
std::vector<CheckReport> run_appendix_suite(const RunConfig& cfg);

// The non-maximal-order counterexample arithmetic: annihilator census of
// R/2R, ideal (non)membership of multiples of 2 tau^2, and the minimal
// support constant at the configured t.
std::vector<CheckReport> run_order_counterexample_suite(const RunConfig& cfg);

// The CM-curve counterexample ingredients: torsion bounds, 2-torsion
// emptiness, the quadratic-twist trace relation, the non-isogeny witness and
// the product-point scans.
std::vector<CheckReport> run_cm_counterexample_suite(const RunConfig& cfg);

// Module spec grammar: terms joined by '+', each "Z/n", "R/nR" or "R/m".
FiniteModule parse_module_spec(const std::string& spec);
std::vector<CheckReport> run_semicyclic(const std::string& spec);

// Scan spec: JSON object {"mode":"sp"|"spm","P":[{"curve":[a,b],"point":...}],
// "Q":[...]}; points are "inf", "x,y", or [x, y] with rational strings.
std::vector<CheckReport> run_scan(const std::string& spec_json, const RunConfig& cfg);

}  // namespace avcert

#endif
