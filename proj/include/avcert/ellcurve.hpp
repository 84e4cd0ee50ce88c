#ifndef AVCERT_ELLCURVE_HPP
#define AVCERT_ELLCURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "avcert/numeric.hpp"
#include "avcert/unipoly.hpp"

namespace avcert {

class ScanCache;

// y^2 = x^3 + a x + b over Q, short Weierstrass, nonzero discriminant.
struct CurveQ {
    Int a, b;

    CurveQ(Int a_, Int b_);
    Int discriminant() const;  // -16 (4 a^3 + 27 b^2)
    std::string id() const;

    friend bool operator==(const CurveQ& x, const CurveQ& y) = default;
    friend bool operator<(const CurveQ& x, const CurveQ& y)
    {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

// A rational point, affine or at infinity.
struct PointQ {
    bool infinity = true;
    Rat x, y;

    static PointQ at_infinity() { return PointQ{}; }
    static PointQ affine(Rat px, Rat py);
    bool on_curve(const CurveQ& c) const;  // exact
    std::string to_string() const;         // "inf" or "x,y" in lowest terms

    friend bool operator==(const PointQ& a, const PointQ& b) = default;
};

struct BadReductionError : Error {
    using Error::Error;
};

int jacobi_symbol(long long a, unsigned long long n);  // n odd positive
bool is_prime(long n);
std::vector<long> primes_in(long lo, long hi);

// A curve over F_p (p > 3, good reduction), with O(p) exact point counting by
// the quadratic-character sum.
class CurveFp {
  public:
    struct Pt {
        bool inf = true;
        long x = 0, y = 0;
        friend bool operator==(const Pt& a, const Pt& b) = default;
    };

    CurveFp(const CurveQ& c, long p);  // throws BadReductionError / guard p > 3

    long p() const { return p_; }
    long a() const { return a_; }
    long b() const { return b_; }

    long group_order() const;  // N = p + 1 + sum_x (x^3+ax+b | p); Hasse-checked
    long trace() const { return p_ + 1 - group_order(); }

    bool on_curve(const Pt& pt) const;
    Pt add(const Pt& p1, const Pt& p2) const;
    Pt negate(const Pt& pt) const;
    Pt mul(long k, const Pt& pt) const;
    // Reduction of a rational point; empty when a denominator vanishes mod p.
    std::optional<Pt> reduce_point(const PointQ& pt) const;
    long point_order(const Pt& pt) const;

  private:
    long p_, a_, b_;
    mutable long n_ = -1;
};

// --- scans ------------------------------------------------------------

struct ScanPair {
    CurveQ curve;
    PointQ point;
};

struct SpViolation {
    long p;
    long ord_p;  // order of the product point P mod p (lcm of components)
    long ord_q;
};

struct SpScanResult {
    long primes_scanned = 0;
    std::vector<SpViolation> violations;
};

// Condition check: for each good prime p <= bound, does ord(Q mod p) divide
// ord(P mod p)? Product points are modeled by the lcm of component orders;
// with module_exponent_side set, the P side is read as module generators
// (identical arithmetic, reported as the exponent of the reduction).
SpScanResult sp_scan(const std::vector<ScanPair>& p_side, const std::vector<ScanPair>& q_side,
                     long bound, ScanCache* cache = nullptr);

// Smallest good prime with differing traces, if any; a single disagreement
// certifies that the curves are not isogenous over Q.
std::optional<long> non_isogeny_witness(const CurveQ& a, const CurveQ& b, long bound,
                                        ScanCache* cache = nullptr);

struct TwistCheckResult {
    long primes_checked = 0;
    std::vector<long> violations;  // good p with a_p(A) != (d|p) a_p(B)
};

TwistCheckResult twist_check(const CurveQ& a, const CurveQ& b, long d, long bound,
                             ScanCache* cache = nullptr);

// gcd of group orders at the listed good primes; the rational torsion order
// divides it. At least two primes required.
Int torsion_bound(const CurveQ& c, const std::vector<long>& primes, ScanCache* cache = nullptr);

// Rational 2-torsion from the rational roots of x^3 + a x + b.
std::vector<PointQ> rational_two_torsion(const CurveQ& c);

// Can a monic integer cubic have a root in a number field of the given
// degree? False is a certificate of emptiness: the cubic has no rational
// root (hence is irreducible) and 3 does not divide the degree.
bool cubic_root_possible(const UniPoly& cubic, long field_degree);

// First good prime where the ell-adic valuations of the reduced point orders
// differ, if any below the bound.
std::optional<long> order_sequence_compare(const ScanPair& lhs, const ScanPair& rhs, long ell,
                                           long bound, ScanCache* cache = nullptr);

// Primes > 3 up to bound of good reduction for every listed curve.
std::vector<long> good_primes(const std::vector<CurveQ>& curves, long bound);

}  // namespace avcert

#endif
