#include "avcert/unipoly.hpp"

#include <sstream>

namespace avcert {

void UniPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::x() { return UniPoly(RatVec{Rat(0), Rat(1)}); }

UniPoly UniPoly::from_ints(const std::vector<long>& coeffs)
{
    RatVec v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

Rat UniPoly::leading() const
{
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const
{
    RatVec v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const
{
    RatVec v(c_);
    for (auto& x : v) x = -x;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const
{
    if (c_.empty() || o.c_.empty()) return UniPoly();
    RatVec v(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rat& c) const
{
    RatVec v(c_);
    for (auto& x : v) x *= c;
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const
{
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    RatVec rem(c_);
    const long dd = divisor.degree();
    RatVec quo;
    if (static_cast<long>(rem.size()) - 1 >= dd) quo.assign(rem.size() - dd, Rat(0));
    Rat lead_inv = 1 / divisor.leading();
    for (long k = static_cast<long>(rem.size()) - 1; k >= dd; --k) {
        Rat f = rem[k] * lead_inv;
        if (f == 0) continue;
        quo[k - dd] = f;
        for (long j = 0; j <= dd; ++j) rem[k - dd + j] -= f * divisor.c_[j];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

bool UniPoly::divides(const UniPoly& other) const { return other.divmod(*this).second.is_zero(); }

Rat UniPoly::eval(const Rat& x) const
{
    Rat acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RatMat UniPoly::eval(const RatMat& m) const
{
    if (m.rows() != m.cols()) throw Error("UniPoly::eval: matrix not square");
    RatMat acc(m.rows(), m.cols());
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t d = 0; d < m.rows(); ++d) acc.at(d, d) += c_[i];
    }
    return acc;
}

UniPoly UniPoly::pow(unsigned long e) const
{
    UniPoly acc = UniPoly::constant(1);
    for (unsigned long i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rat c = c_[i];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UniPoly charpoly(const IntMat& m)
{
    if (!m.is_square()) throw Error("charpoly: matrix not square");
    const std::size_t n = m.rows();
    RatMat a = m.to_rat();
    // Faddeev-LeVerrier: c_n = 1; M_1 = A, c_{n-k} = -tr(M_k)/k,
    // M_{k+1} = A (M_k + c_{n-k} I).
    RatVec coeffs(n + 1, Rat(0));
    coeffs[n] = 1;
    RatMat mk = a;
    for (std::size_t k = 1; k <= n; ++k) {
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
        Rat ck = -tr / Rat(static_cast<long>(k));
        coeffs[n - k] = ck;
        if (k < n) {
            RatMat t = mk;
            for (std::size_t i = 0; i < n; ++i) t.at(i, i) += ck;
            mk = a * t;
        }
    }
    return UniPoly(std::move(coeffs));
}

UniPoly minpoly(const IntMat& m)
{
    if (!m.is_square()) throw Error("minpoly: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return UniPoly::constant(1);
    // Flatten powers of m and look for the first linear dependence.
    std::vector<RatVec> flat;
    RatMat power = RatMat::identity(n);
    RatMat a = m.to_rat();
    for (std::size_t d = 0;; ++d) {
        RatVec row(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) row[i * n + j] = power.at(i, j);
        // Is power expressible in the previous ones?  Solve x * F = row.
        if (!flat.empty()) {
            RatMat f = RatMat::from_rows(flat, n * n);
            if (auto x = f.solve_left(row)) {
                RatVec coeffs(d + 1, Rat(0));
                for (std::size_t i = 0; i < d; ++i) coeffs[i] = -(*x)[i];
                coeffs[d] = 1;
                return UniPoly(std::move(coeffs));
            }
        }
        flat.push_back(std::move(row));
        power = power * a;
        if (d > n) throw Error("minpoly: no dependence found (unreachable)");
    }
}

}  // namespace avcert
