#include "avcert/ellcurve.hpp"

#include <algorithm>
#include <numeric>

#include "avcert/scan_cache.hpp"

namespace avcert {

CurveQ::CurveQ(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_))
{
    if (discriminant() == 0) throw Error("CurveQ: singular curve (zero discriminant)");
}

Int CurveQ::discriminant() const { return Int(-16) * (4 * a * a * a + 27 * b * b); }

std::string CurveQ::id() const { return "[" + a.get_str() + "," + b.get_str() + "]"; }

PointQ PointQ::affine(Rat px, Rat py)
{
    PointQ p;
    p.infinity = false;
    p.x = std::move(px);
    p.y = std::move(py);
    return p;
}

bool PointQ::on_curve(const CurveQ& c) const
{
    if (infinity) return true;
    return y * y == x * x * x + Rat(c.a) * x + Rat(c.b);
}

std::string PointQ::to_string() const
{
    if (infinity) return "inf";
    return x.get_str() + "," + y.get_str();
}

int jacobi_symbol(long long a, unsigned long long n)
{
    if (n % 2 == 0) throw Error("jacobi_symbol: modulus must be odd");
    a %= static_cast<long long>(n);
    if (a < 0) a += static_cast<long long>(n);
    unsigned long long ua = static_cast<unsigned long long>(a);
    int result = 1;
    while (ua != 0) {
        while (ua % 2 == 0) {
            ua /= 2;
            unsigned long long r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(ua, n);
        if (ua % 4 == 3 && n % 4 == 3) result = -result;
        ua %= n;
    }
    return n == 1 ? result : 0;
}

bool is_prime(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> primes_in(long lo, long hi)
{
    std::vector<long> out;
    if (hi < 2) return out;
    std::vector<bool> comp(hi + 1, false);
    for (long i = 2; i * i <= hi; ++i)
        if (!comp[i])
            for (long j = i * i; j <= hi; j += i) comp[j] = true;
    for (long i = std::max<long>(2, lo); i <= hi; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

namespace {

long mod_long(const Int& v, long p)
{
    return mod_floor(v, Int(p)).get_si();
}

long mulmod(long a, long b, long p)
{
    return static_cast<long>(static_cast<unsigned __int128>(a) * static_cast<unsigned long long>(b) %
                             static_cast<unsigned long long>(p));
}

long addmod(long a, long b, long p) { return (a + b) % p; }

long submod(long a, long b, long p) { return ((a - b) % p + p) % p; }

long invmod(long a, long p)
{
    long t = 0, newt = 1, r = p, newr = a % p;
    if (newr < 0) newr += p;
    while (newr != 0) {
        long q = r / newr;
        long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw Error("invmod: not invertible");
    return t < 0 ? t + p : t;
}

}  // namespace

CurveFp::CurveFp(const CurveQ& c, long p) : p_(p)
{
    if (p <= 3) throw Error("CurveFp: only primes p > 3 are supported");
    if (!is_prime(p)) throw Error("CurveFp: modulus is not prime");
    if (mod_floor(c.discriminant(), Int(p)) == 0)
        throw BadReductionError("CurveFp: bad reduction at p = " + std::to_string(p));
    a_ = mod_long(c.a, p);
    b_ = mod_long(c.b, p);
}

long CurveFp::group_order() const
{
    if (n_ >= 0) return n_;
    long sum = 0;
    for (long x = 0; x < p_; ++x) {
        long fx = addmod(mulmod(mulmod(x, x, p_), x, p_), addmod(mulmod(a_, x, p_), b_, p_), p_);
        sum += jacobi_symbol(fx, static_cast<unsigned long long>(p_));
    }
    long n = p_ + 1 + sum;
    // Hasse: |a_p| <= 2 sqrt(p).
    long ap = p_ + 1 - n;
    if (static_cast<long long>(ap) * ap > 4ll * p_) throw Error("group_order: Hasse bound violated");
    n_ = n;
    return n_;
}

bool CurveFp::on_curve(const Pt& pt) const
{
    if (pt.inf) return true;
    long lhs = mulmod(pt.y, pt.y, p_);
    long rhs = addmod(mulmod(mulmod(pt.x, pt.x, p_), pt.x, p_),
                      addmod(mulmod(a_, pt.x, p_), b_, p_), p_);
    return lhs == rhs;
}

CurveFp::Pt CurveFp::negate(const Pt& pt) const
{
    if (pt.inf) return pt;
    return Pt{false, pt.x, (p_ - pt.y) % p_};
}

CurveFp::Pt CurveFp::add(const Pt& p1, const Pt& p2) const
{
    if (p1.inf) return p2;
    if (p2.inf) return p1;
    if (p1.x == p2.x && (p1.y + p2.y) % p_ == 0) return Pt{};
    long lambda;
    if (p1.x == p2.x && p1.y == p2.y) {
        long num = addmod(mulmod(3, mulmod(p1.x, p1.x, p_), p_), a_, p_);
        lambda = mulmod(num, invmod(addmod(p1.y, p1.y, p_), p_), p_);
    } else {
        long num = submod(p2.y, p1.y, p_);
        lambda = mulmod(num, invmod(submod(p2.x, p1.x, p_), p_), p_);
    }
    long x3 = submod(submod(mulmod(lambda, lambda, p_), p1.x, p_), p2.x, p_);
    long y3 = submod(mulmod(lambda, submod(p1.x, x3, p_), p_), p1.y, p_);
    return Pt{false, x3, y3};
}

CurveFp::Pt CurveFp::mul(long k, const Pt& pt) const
{
    Pt acc{};
    Pt base = pt;
    if (k < 0) {
        base = negate(base);
        k = -k;
    }
    while (k > 0) {
        if (k & 1) acc = add(acc, base);
        base = add(base, base);
        k >>= 1;
    }
    return acc;
}

std::optional<CurveFp::Pt> CurveFp::reduce_point(const PointQ& pt) const
{
    if (pt.infinity) return Pt{};
    Int dx(pt.x.get_den()), dy(pt.y.get_den());
    if (mod_floor(dx, Int(p_)) == 0 || mod_floor(dy, Int(p_)) == 0) return std::nullopt;
    long nx = mod_long(Int(pt.x.get_num()), p_), dxi = invmod(mod_long(dx, p_), p_);
    long ny = mod_long(Int(pt.y.get_num()), p_), dyi = invmod(mod_long(dy, p_), p_);
    Pt out{false, mulmod(nx, dxi, p_), mulmod(ny, dyi, p_)};
    if (!on_curve(out)) throw Error("reduce_point: reduced point is not on the curve");
    return out;
}

long CurveFp::point_order(const Pt& pt) const
{
    if (!on_curve(pt)) throw Error("point_order: point is not on the curve");
    long n = group_order();
    if (!mul(n, pt).inf) throw Error("point_order: group order does not kill the point");
    long ord = n;
    long rest = n;
    for (long q = 2; q * q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        while (ord % q == 0 && mul(ord / q, pt).inf) ord /= q;
    }
    if (rest > 1)
        while (ord % rest == 0 && mul(ord / rest, pt).inf) ord /= rest;
    return ord;
}

std::vector<long> good_primes(const std::vector<CurveQ>& curves, long bound)
{
    std::vector<long> out;
    for (long p : primes_in(5, bound)) {
        bool good = true;
        for (const auto& c : curves)
            if (mod_floor(c.discriminant(), Int(p)) == 0) {
                good = false;
                break;
            }
        if (good) out.push_back(p);
    }
    return out;
}

namespace {

long cached_point_order(const CurveQ& c, const PointQ& pt, long p, ScanCache* cache)
{
    if (cache) return cache->point_order(c, pt, p);
    CurveFp red(c, p);
    auto rp = red.reduce_point(pt);
    if (!rp) throw BadReductionError("point does not reduce at p");
    return red.point_order(*rp);
}

long cached_group_order(const CurveQ& c, long p, ScanCache* cache)
{
    if (cache) return cache->group_order(c, p);
    return CurveFp(c, p).group_order();
}

bool reduces_everywhere(const std::vector<ScanPair>& side, long p)
{
    for (const auto& [c, pt] : side) {
        if (pt.infinity) continue;
        if (mod_floor(Int(pt.x.get_den()), Int(p)) == 0 ||
            mod_floor(Int(pt.y.get_den()), Int(p)) == 0)
            return false;
    }
    return true;
}

}  // namespace

SpScanResult sp_scan(const std::vector<ScanPair>& p_side, const std::vector<ScanPair>& q_side,
                     long bound, ScanCache* cache)
{
    std::vector<CurveQ> curves;
    for (const auto& s : p_side) curves.push_back(s.curve);
    for (const auto& s : q_side) curves.push_back(s.curve);
    for (const auto& s : p_side)
        if (!s.point.on_curve(s.curve)) throw Error("sp_scan: point not on curve");
    for (const auto& s : q_side)
        if (!s.point.on_curve(s.curve)) throw Error("sp_scan: point not on curve");

    SpScanResult res;
    for (long p : good_primes(curves, bound)) {
        if (!reduces_everywhere(p_side, p) || !reduces_everywhere(q_side, p)) continue;
        long ord_p = 1, ord_q = 1;
        for (const auto& s : p_side)
            ord_p = std::lcm(ord_p, cached_point_order(s.curve, s.point, p, cache));
        for (const auto& s : q_side)
            ord_q = std::lcm(ord_q, cached_point_order(s.curve, s.point, p, cache));
        ++res.primes_scanned;
        if (ord_p % ord_q != 0) res.violations.push_back({p, ord_p, ord_q});
    }
    return res;
}

std::optional<long> non_isogeny_witness(const CurveQ& a, const CurveQ& b, long bound,
                                        ScanCache* cache)
{
    for (long p : good_primes({a, b}, bound)) {
        long na = cached_group_order(a, p, cache);
        long nb = cached_group_order(b, p, cache);
        if (na != nb) return p;
    }
    return std::nullopt;
}

TwistCheckResult twist_check(const CurveQ& a, const CurveQ& b, long d, long bound,
                             ScanCache* cache)
{
    TwistCheckResult res;
    for (long p : good_primes({a, b}, bound)) {
        if (d % p == 0) continue;
        long ap_a = p + 1 - cached_group_order(a, p, cache);
        long ap_b = p + 1 - cached_group_order(b, p, cache);
        ++res.primes_checked;
        if (ap_a != jacobi_symbol(d, static_cast<unsigned long long>(p)) * ap_b)
            res.violations.push_back(p);
    }
    return res;
}

Int torsion_bound(const CurveQ& c, const std::vector<long>& primes, ScanCache* cache)
{
    if (primes.size() < 2) throw Error("torsion_bound: at least two good primes required");
    Int g = 0;
    for (long p : primes) g = int_gcd(g, Int(cached_group_order(c, p, cache)));
    return g;
}

std::vector<PointQ> rational_two_torsion(const CurveQ& c)
{
    // Rational roots of the monic integer cubic x^3 + a x + b are integers
    // dividing b (and 0 when b = 0).
    std::vector<Int> candidates;
    if (c.b == 0) {
        candidates.push_back(0);
        // x^2 = -a: add the integer square roots when -a is a square.
        if (c.a <= 0) {
            Int s;
            Int target = -c.a;
            mpz_sqrt(s.get_mpz_t(), target.get_mpz_t());
            if (s * s == target && s != 0) {
                candidates.push_back(s);
                candidates.push_back(-s);
            }
        }
    } else {
        for (Int d = 1; d * d <= abs(c.b); ++d) {
            if (mod_floor(c.b, d) != 0) continue;
            Int e = abs(c.b) / d;
            for (const Int& r : {d, Int(-d), e, Int(-e)}) candidates.push_back(r);
        }
    }
    std::vector<PointQ> out;
    for (const auto& r : candidates) {
        if (r * r * r + c.a * r + c.b != 0) continue;
        PointQ pt = PointQ::affine(Rat(r), Rat(0));
        bool seen = false;
        for (const auto& q : out) seen = seen || q == pt;
        if (!seen) out.push_back(pt);
    }
    std::sort(out.begin(), out.end(),
              [](const PointQ& a, const PointQ& b) { return a.x < b.x; });
    return out;
}

bool cubic_root_possible(const UniPoly& cubic, long field_degree)
{
    if (cubic.degree() != 3 || !cubic.is_monic())
        throw Error("cubic_root_possible: expected a monic cubic");
    for (long k = 0; k <= 3; ++k)
        if (!is_integer(cubic.coeff(k))) throw Error("cubic_root_possible: integer coefficients");
    // A rational root r of a monic integer cubic is an integer dividing the
    // constant term.
    Int c0 = to_int(cubic.coeff(0));
    std::vector<Int> candidates{Int(0)};
    for (Int d = 1; d * d <= abs(c0); ++d) {
        if (c0 != 0 && mod_floor(c0, d) != 0) continue;
        Int e = c0 == 0 ? d : abs(c0) / d;
        for (const Int& r : {d, Int(-d), e, Int(-e)}) candidates.push_back(r);
        if (c0 == 0) break;
    }
    for (const auto& r : candidates)
        if (cubic.eval(Rat(r)) == 0) return true;  // a root in Q, hence in every field
    // No rational root: the cubic is irreducible over Q, so a root generates
    // a degree-3 extension.
    return field_degree % 3 == 0;
}

std::optional<long> order_sequence_compare(const ScanPair& lhs, const ScanPair& rhs, long ell,
                                           long bound, ScanCache* cache)
{
    auto val = [ell](long n) {
        long v = 0;
        while (n % ell == 0) {
            n /= ell;
            ++v;
        }
        return v;
    };
    for (long p : good_primes({lhs.curve, rhs.curve}, bound)) {
        if (!reduces_everywhere({lhs}, p) || !reduces_everywhere({rhs}, p)) continue;
        long ol = cached_point_order(lhs.curve, lhs.point, p, cache);
        long orr = cached_point_order(rhs.curve, rhs.point, p, cache);
        if (val(ol) != val(orr)) return p;
    }
    return std::nullopt;
}

}  // namespace avcert
