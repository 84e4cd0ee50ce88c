#include "avcert/sympoly.hpp"

#include <sstream>

namespace avcert {

Monomial Monomial::var(std::size_t i, std::uint8_t deg)
{
    if (i >= kSymVars) throw Error("Monomial::var: index out of range");
    Monomial m;
    m.e[i] = deg;
    return m;
}

unsigned Monomial::total_degree() const
{
    unsigned t = 0;
    for (auto d : e) t += d;
    return t;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const
{
    unsigned ta = a.total_degree(), tb = b.total_degree();
    if (ta != tb) return ta < tb;
    // Ties: compare from the largest variable (omega) downwards.
    for (std::size_t i = kSymVars; i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

SymPoly SymPoly::constant(const Rat& c)
{
    SymPoly p;
    p.add_term(Monomial::one(), c);
    return p;
}

SymPoly SymPoly::alpha(std::size_t i)
{
    if (i < 1 || i > 9) throw Error("SymPoly::alpha: index must be 1..9");
    SymPoly p;
    p.add_term(Monomial::var(i - 1), 1);
    return p;
}

SymPoly SymPoly::omega()
{
    SymPoly p;
    p.add_term(Monomial::var(kOmegaIndex), 1);
    return p;
}

SymPoly SymPoly::monomial(const Monomial& m, const Rat& c)
{
    SymPoly p;
    p.add_term(m, c);
    return p;
}

void SymPoly::add_term(const Monomial& m, const Rat& c)
{
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool SymPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial::one());
}

Rat SymPoly::constant_value() const
{
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw Error("constant_value: polynomial is not constant: " + to_string());
    return terms_.begin()->second;
}

Rat SymPoly::coefficient_of(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

SymPoly SymPoly::operator+(const SymPoly& o) const
{
    SymPoly p(*this);
    for (const auto& [m, c] : o.terms_) p.add_term(m, c);
    return p;
}

SymPoly SymPoly::operator-(const SymPoly& o) const
{
    SymPoly p(*this);
    for (const auto& [m, c] : o.terms_) p.add_term(m, -c);
    return p;
}

SymPoly SymPoly::operator-() const
{
    SymPoly p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

SymPoly SymPoly::operator*(const SymPoly& o) const
{
    SymPoly p;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            for (std::size_t i = 0; i < kSymVars; ++i) {
                unsigned s = static_cast<unsigned>(ma.e[i]) + mb.e[i];
                if (s > 255) throw Error("SymPoly::operator*: exponent overflow");
                m.e[i] = static_cast<std::uint8_t>(s);
            }
            p.add_term(m, ca * cb);
        }
    return p;
}

SymPoly SymPoly::scaled(const Rat& c) const
{
    SymPoly p;
    if (c == 0) return p;
    for (const auto& [m, coef] : terms_) p.terms_.emplace(m, coef * c);
    return p;
}

std::optional<SymPoly> SymPoly::divided_by_omega() const
{
    SymPoly p;
    for (const auto& [m, c] : terms_) {
        if (m.e[kOmegaIndex] == 0) return std::nullopt;
        Monomial shifted = m;
        shifted.e[kOmegaIndex] -= 1;
        p.terms_.emplace(shifted, c);
    }
    return p;
}

std::string SymPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Render highest terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        bool is_one_monomial = (m == Monomial::one());
        bool coeff_shown = (a != 1 || is_one_monomial);
        if (coeff_shown) os << a.get_str();
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < kSymVars; ++i) {
            if (m.e[i] == 0) continue;
            if (need_star) os << "*";
            need_star = true;
            os << (i == kOmegaIndex ? std::string("w") : "a" + std::to_string(i + 1));
            if (m.e[i] > 1) os << "^" << static_cast<int>(m.e[i]);
        }
        first = false;
    }
    return os.str();
}

SymVec SymVec::operator+(const SymVec& o) const
{
    if (dim() != o.dim()) throw Error("SymVec::operator+: dim mismatch");
    SymVec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.v_[i] = v_[i] + o.v_[i];
    return r;
}

SymVec SymVec::operator-(const SymVec& o) const
{
    if (dim() != o.dim()) throw Error("SymVec::operator-: dim mismatch");
    SymVec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.v_[i] = v_[i] - o.v_[i];
    return r;
}

SymVec SymVec::scaled(const Rat& c) const
{
    SymVec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.v_[i] = v_[i].scaled(c);
    return r;
}

SymVec SymVec::scaled_complex(const SymComplex& c) const
{
    SymVec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r.v_[i] = v_[i] * c;
    return r;
}

SymVec SymVec::transformed(const IntMat& m) const
{
    if (m.cols() != dim()) throw Error("SymVec::transformed: shape mismatch");
    SymVec r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        SymComplex acc;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (m.at(i, j) == 0) continue;
            acc = acc + v_[j].scaled(Rat(m.at(i, j)));
        }
        r.v_[i] = acc;
    }
    return r;
}

}  // namespace avcert
