#ifndef AVCERT_NUMERIC_HPP
#define AVCERT_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace avcert {

// Exact scalars. Every quantity in this library is an mpz/mpq; there is no
// floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_gcd(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Floor division and the matching remainder (sign of divisor irrelevant,
// remainder in [0, |b|)).
inline Int floor_div(const Int& a, const Int& b)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod_floor(const Int& a, const Int& b)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// ax + by = g, g = gcd(a, b) >= 0.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y)
{
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q)
{
    if (!is_integer(q)) throw Error("expected an integer, got " + q.get_str());
    return q.get_num();
}

inline Rat to_rat(const Int& n) { return Rat(n); }

inline IntVec to_int_vec(const RatVec& v)
{
    IntVec out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(to_int(q));
    return out;
}

inline RatVec to_rat_vec(const IntVec& v)
{
    RatVec out;
    out.reserve(v.size());
    for (const auto& n : v) out.emplace_back(n);
    return out;
}

inline Int denominator_lcm(const RatVec& v)
{
    Int l = 1;
    for (const auto& q : v) l = int_lcm(l, Int(q.get_den()));
    return l;
}

inline bool is_zero(const RatVec& v)
{
    for (const auto& q : v)
        if (q != 0) return false;
    return true;
}

inline bool is_zero(const IntVec& v)
{
    for (const auto& n : v)
        if (n != 0) return false;
    return true;
}

}  // namespace avcert

#endif
