#include "avcert/complex_torus.hpp"

#include <map>
#include <tuple>

#include "avcert/fixtures.hpp"
#include "avcert/normal_form.hpp"

namespace avcert {

namespace {

constexpr std::size_t kDim = 6;

using SymMat = std::vector<std::vector<SymComplex>>;

SymMat sym_zero(std::size_t n)
{
    return SymMat(n, std::vector<SymComplex>(n));
}

SymMat sym_from_int(const IntMat& m)
{
    SymMat s = sym_zero(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            s[i][j] = SymComplex(SymPoly::constant(Rat(m.at(i, j))), SymPoly());
    return s;
}

SymMat sym_mul(const SymMat& a, const SymMat& b)
{
    const std::size_t n = a.size();
    SymMat p = sym_zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                p[i][j] = p[i][j] + a[i][k] * b[k][j];
        }
    return p;
}

SymMat sym_add(const SymMat& a, const SymMat& b)
{
    const std::size_t n = a.size();
    SymMat s = sym_zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = a[i][j] + b[i][j];
    return s;
}

SymMat sym_sub(const SymMat& a, const SymMat& b)
{
    const std::size_t n = a.size();
    SymMat s = sym_zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = a[i][j] - b[i][j];
    return s;
}

bool sym_is_zero(const SymMat& a)
{
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

}  // namespace

std::array<std::size_t, 9> PeriodLattice::identity_labels()
{
    return {1, 2, 3, 4, 5, 6, 7, 8, 9};
}

PeriodLattice::PeriodLattice(const IntMat& m, const IntMat& x,
                             std::array<std::size_t, 9> alpha_labels)
    : m_(m), x_(x)
{
    if (m_.rows() != kDim || m_.cols() != kDim || x_.rows() != kDim || x_.cols() != kDim)
        throw Error("PeriodLattice: expected 6x6 matrices");

    auto alpha = [&](std::size_t j) {  // 1-based in 1..9
        return SymPoly::alpha(alpha_labels[j - 1]);
    };

    e_.assign(12, SymVec(kDim));
    for (std::size_t i = 0; i < kDim; ++i)
        e_[i].at(i) = SymComplex(SymPoly::constant(1), SymPoly());

    SymVec r(kDim), s(kDim);
    for (std::size_t i = 0; i < kDim; ++i) {
        r.at(i) = SymComplex(alpha(i + 1), SymPoly());
        s.at(i) = SymComplex(alpha(i + 4), SymPoly());
    }
    SymPoly w = SymPoly::omega();
    // e_7 = r + (omega i) e_1; e_10 = s + (omega i) e_4.
    e_[6] = r;
    e_[6].at(0) = SymComplex(e_[6].at(0).re, e_[6].at(0).im + w);
    e_[9] = s;
    e_[9].at(3) = SymComplex(e_[9].at(3).re, e_[9].at(3).im + w);
    IntMat two_m = m_.scaled(2);
    e_[7] = e_[6].transformed(two_m);
    e_[8] = e_[7].transformed(m_);  // 2 M^2 e_7 = M e_8
    e_[10] = e_[9].transformed(two_m);
    e_[11] = e_[10].transformed(m_);

    // Feature rows: per coordinate the coefficients of 1, alpha_1..alpha_9 in
    // the real part and of omega in the imaginary part.
    features_ = RatMat(12, kDim * 11);
    for (std::size_t v = 0; v < 12; ++v)
        for (std::size_t c = 0; c < kDim; ++c) {
            const SymComplex& z = e_[v].at(c);
            features_.at(v, c * 11) = z.re.coefficient_of(Monomial::one());
            for (std::size_t j = 1; j <= 9; ++j)
                features_.at(v, c * 11 + j) = z.re.coefficient_of(Monomial::var(j - 1));
            features_.at(v, c * 11 + 10) = z.im.coefficient_of(Monomial::var(kOmegaIndex));
        }
}

const SymVec& PeriodLattice::e(std::size_t i) const
{
    if (i < 1 || i > 12) throw Error("PeriodLattice::e: index must be 1..12");
    return e_[i - 1];
}

SymPoly PeriodLattice::riemann_form(const SymVec& v, const SymVec& w) const
{
    if (v.dim() != kDim || w.dim() != kDim) throw Error("riemann_form: dimension mismatch");
    SymComplex h;
    for (std::size_t a = 0; a < kDim; ++a) {
        if (v.at(a).is_zero()) continue;
        SymComplex va = v.at(a).conj();
        for (std::size_t b = 0; b < kDim; ++b) {
            if (x_.at(a, b) == 0 || w.at(b).is_zero()) continue;
            h = h + (va * w.at(b)).scaled(Rat(x_.at(a, b)));
        }
    }
    auto divided = h.im.divided_by_omega();
    if (!divided) throw Error("riemann_form: imaginary part is not divisible by omega");
    return *divided;
}

Int PeriodLattice::riemann_entry(std::size_t i, std::size_t j) const
{
    SymPoly e_val = riemann_form(e(i), e(j));
    Rat c = e_val.constant_value();
    return to_int(c);
}

std::optional<IntVec> PeriodLattice::membership(const SymVec& v) const
{
    if (v.dim() != kDim) throw Error("membership: dimension mismatch");
    RatVec f(kDim * 11, Rat(0));
    for (std::size_t c = 0; c < kDim; ++c) {
        const SymComplex& z = v.at(c);
        for (const auto& [mono, coef] : z.re.terms()) {
            if (mono == Monomial::one()) {
                f[c * 11] = coef;
            } else {
                bool shaped = false;
                for (std::size_t j = 1; j <= 9; ++j)
                    if (mono == Monomial::var(j - 1)) {
                        f[c * 11 + j] = coef;
                        shaped = true;
                        break;
                    }
                if (!shaped) throw Error("membership: malformed real coefficient shape");
            }
        }
        for (const auto& [mono, coef] : z.im.terms()) {
            if (mono == Monomial::var(kOmegaIndex))
                f[c * 11 + 10] = coef;
            else
                throw Error("membership: malformed imaginary coefficient shape");
        }
    }
    auto sol = features_.solve_left(f);
    if (!sol) return std::nullopt;
    // solve_left returns one solution; the basis features have rank 12, so it
    // is the only one. Must be integral, and must reproduce f exactly.
    if (row_times_mat(*sol, features_) != f) return std::nullopt;
    IntVec out(12);
    for (std::size_t i = 0; i < 12; ++i) {
        if (!is_integer((*sol)[i])) return std::nullopt;
        out[i] = (*sol)[i].get_num();
    }
    return out;
}

MatrixIdentityReport verify_matrix_identities(const IntMat& m, const IntMat& x)
{
    MatrixIdentityReport rep;
    rep.x_symmetric = (x == x.transpose());
    rep.compatibility = (x * m == m.transpose() * x);
    rep.minpoly_ok = (minpoly(m) == fixtures::tau_minpoly());
    UniPoly xm1 = UniPoly::from_ints({-1, 1});
    UniPoly xm7 = UniPoly::from_ints({-7, 1});
    rep.charpoly_ok = (charpoly(x) == xm1.pow(4) * xm7.pow(2));
    rep.positive_definite = true;
    for (std::size_t k = 1; k <= x.rows(); ++k) {
        IntMat lead(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = x.at(i, j);
        Int d = lead.det();
        rep.leading_minors.push_back(d);
        if (d <= 0) rep.positive_definite = false;
    }
    return rep;
}

RiemannReport verify_riemann_integrality(const PeriodLattice& pl)
{
    RiemannReport rep;
    rep.table = IntMat(12, 12);
    rep.all_integer = true;
    rep.alternating = true;
    rep.hermitian_compatible = true;
    for (std::size_t i = 1; i <= 12; ++i)
        for (std::size_t j = 1; j <= 12; ++j) {
            SymPoly val = pl.riemann_form(pl.e(i), pl.e(j));
            if (!val.is_constant() || !is_integer(val.constant_value())) {
                rep.all_integer = false;
                continue;
            }
            rep.table.at(i - 1, j - 1) = val.constant_value().get_num();
        }
    for (std::size_t i = 1; i <= 12; ++i)
        for (std::size_t j = 1; j <= 12; ++j) {
            // E(x, y) = -E(y, x), checked symbolically on the basis pairs.
            SymPoly anti = pl.riemann_form(pl.e(i), pl.e(j)) + pl.riemann_form(pl.e(j), pl.e(i));
            if (!anti.is_zero()) rep.alternating = false;
            SymPoly compat = pl.riemann_form(pl.e(i).transformed(pl.m()), pl.e(j)) -
                             pl.riemann_form(pl.e(i), pl.e(j).transformed(pl.m()));
            if (!compat.is_zero()) rep.hermitian_compatible = false;
        }
    return rep;
}

EndoReport endomorphism_solver(const PeriodLattice& pl)
{
    // Unknown layout: A1 = 0..35, A2 = 36..71, B1 = 72..107, B2 = 108..143,
    // each matrix row-major.
    constexpr std::size_t kUnknowns = 144;
    SymMat omega = sym_zero(kDim);
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j) omega[i][j] = pl.e(7 + j).at(i);

    struct RowKey {
        std::size_t i, j;
        int part;  // 0 = re, 1 = im
        Monomial mono;
        bool operator<(const RowKey& o) const
        {
            if (i != o.i) return i < o.i;
            if (j != o.j) return j < o.j;
            if (part != o.part) return part < o.part;
            return GrlexLess{}(mono, o.mono);
        }
    };
    std::map<RowKey, RatVec> rows;
    auto accumulate = [&](std::size_t i, std::size_t j, std::size_t unknown,
                          const SymComplex& coeff) {
        for (const auto& [mono, c] : coeff.re.terms()) {
            auto& row = rows.try_emplace(RowKey{i, j, 0, mono}, RatVec(kUnknowns, Rat(0)))
                            .first->second;
            row[unknown] += c;
        }
        for (const auto& [mono, c] : coeff.im.terms()) {
            auto& row = rows.try_emplace(RowKey{i, j, 1, mono}, RatVec(kUnknowns, Rat(0)))
                            .first->second;
            row[unknown] += c;
        }
    };

    // Omega A2 Omega + A1 Omega - Omega B2 - B1 = 0, entry by entry.
    const SymComplex minus_one(SymPoly::constant(Rat(-1)), SymPoly());
    for (std::size_t i = 0; i < kDim; ++i)
        for (std::size_t j = 0; j < kDim; ++j) {
            for (std::size_t p = 0; p < kDim; ++p)
                for (std::size_t q = 0; q < kDim; ++q)
                    accumulate(i, j, 36 + 6 * p + q, omega[i][p] * omega[q][j]);
            for (std::size_t q = 0; q < kDim; ++q) accumulate(i, j, 6 * i + q, omega[q][j]);
            for (std::size_t p = 0; p < kDim; ++p)
                accumulate(i, j, 108 + 6 * p + j, minus_one * omega[i][p]);
            accumulate(i, j, 72 + 6 * i + j, minus_one);
        }

    // Integer matrix of the stacked monomial-coefficient system.
    std::vector<IntVec> int_rows;
    int_rows.reserve(rows.size());
    for (const auto& [key, row] : rows) {
        Int d = denominator_lcm(row);
        IntVec r(kUnknowns);
        bool nonzero = false;
        for (std::size_t u = 0; u < kUnknowns; ++u) {
            r[u] = to_int(row[u] * Rat(d));
            if (r[u] != 0) nonzero = true;
        }
        if (nonzero) int_rows.push_back(std::move(r));
    }
    IntMat sys = IntMat::from_rows(int_rows, kUnknowns);
    auto kernel = integer_kernel(sys);

    EndoReport rep;
    rep.kernel_rank = kernel.size();
    rep.a2_all_zero = true;
    rep.resubstitution_ok = true;
    auto unpack = [&](const IntVec& v) {
        EndoTuple t{IntMat(kDim, kDim), IntMat(kDim, kDim), IntMat(kDim, kDim),
                    IntMat(kDim, kDim)};
        for (std::size_t i = 0; i < kDim; ++i)
            for (std::size_t j = 0; j < kDim; ++j) {
                t.a1.at(i, j) = v[6 * i + j];
                t.a2.at(i, j) = v[36 + 6 * i + j];
                t.b1.at(i, j) = v[72 + 6 * i + j];
                t.b2.at(i, j) = v[108 + 6 * i + j];
            }
        return t;
    };
    for (const auto& v : kernel) {
        EndoTuple t = unpack(v);
        if (!t.a2.is_zero()) rep.a2_all_zero = false;
        SymMat lhs = sym_add(
            sym_add(sym_mul(sym_mul(omega, sym_from_int(t.a2)), omega),
                    sym_mul(sym_from_int(t.a1), omega)),
            sym_sub(sym_from_int(-t.b1), sym_mul(omega, sym_from_int(t.b2))));
        if (!sym_is_zero(lhs)) rep.resubstitution_ok = false;
        rep.basis.push_back(std::move(t));
    }

    // The S parts must span exactly Z{I, 2M, 2M^2}.
    IntMat two_m = pl.m().scaled(2);
    IntMat two_m2 = (pl.m() * pl.m()).scaled(2);
    auto flatten = [&](const IntMat& s) {
        IntVec f(36);
        for (std::size_t i = 0; i < kDim; ++i)
            for (std::size_t j = 0; j < kDim; ++j) f[6 * i + j] = s.at(i, j);
        return f;
    };
    std::vector<IntVec> span_rows, expected_rows;
    for (const auto& t : rep.basis) span_rows.push_back(flatten(t.a1));
    expected_rows.push_back(flatten(IntMat::identity(kDim)));
    expected_rows.push_back(flatten(two_m));
    expected_rows.push_back(flatten(two_m2));
    IntMat span_h = hnf_basis(IntMat::from_rows(span_rows, 36));
    IntMat expect_h = hnf_basis(IntMat::from_rows(expected_rows, 36));
    rep.span_matches = (span_h == expect_h);

    // Converse: every element of Z[2M, 2M^2] maps the basis into the lattice.
    rep.converse_ok = true;
    std::vector<IntMat> gens = {IntMat::identity(kDim), two_m, two_m2,
                                two_m * two_m2 - two_m.scaled(3) + IntMat::identity(kDim)};
    for (const auto& s : gens)
        for (std::size_t i = 1; i <= 12; ++i)
            if (!pl.membership(pl.e(i).transformed(s))) rep.converse_ok = false;
    return rep;
}

TwoTorsionReport two_torsion_classification(const PeriodLattice& pl)
{
    TwoTorsionReport rep;
    IntMat two_m = pl.m().scaled(2);
    IntMat two_m2 = (pl.m() * pl.m()).scaled(2);
    rep.g1 = IntMat(12, 12);
    rep.g2 = IntMat(12, 12);

    // Action on T_i = e_i/2: 2M (e_i/2) = (2M e_i)/2, so the coordinates of
    // 2M e_i in the lattice, reduced mod 2, are the F_2 action row.
    auto fill = [&](const IntMat& g, IntMat& out) {
        for (std::size_t i = 1; i <= 12; ++i) {
            auto coords = pl.membership(pl.e(i).transformed(g));
            if (!coords) throw Error("two_torsion: endomorphism does not preserve the lattice");
            for (std::size_t j = 0; j < 12; ++j) out.at(i - 1, j) = mod_floor((*coords)[j], Int(2));
        }
    };
    fill(two_m, rep.g1);
    fill(two_m2, rep.g2);

    // Stated action facts.
    rep.actions_ok = true;
    auto row_is = [&](const IntMat& g, std::size_t i, std::optional<std::size_t> j) {
        for (std::size_t c = 0; c < 12; ++c) {
            Int want = (j && *j == c) ? 1 : 0;
            if (g.at(i, c) != want) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < 6; ++i) {
        if (!row_is(rep.g1, i, std::nullopt)) rep.actions_ok = false;
        if (!row_is(rep.g2, i, std::nullopt)) rep.actions_ok = false;
    }
    if (!row_is(rep.g1, 6, 7)) rep.actions_ok = false;   // 2M T_7 = T_8
    if (!row_is(rep.g2, 6, 8)) rep.actions_ok = false;   // 2M^2 T_7 = T_9
    if (!row_is(rep.g1, 9, 10)) rep.actions_ok = false;  // 2M T_10 = T_11
    if (!row_is(rep.g2, 9, 11)) rep.actions_ok = false;  // 2M^2 T_10 = T_12

    // F_2 linear algebra on 12-bit masks.
    auto to_mask = [&](const IntMat& g, std::size_t row) {
        unsigned m = 0;
        for (std::size_t c = 0; c < 12; ++c)
            if (g.at(row, c) != 0) m |= 1u << c;
        return m;
    };
    std::array<unsigned, 12> g1r{}, g2r{};
    for (std::size_t i = 0; i < 12; ++i) g1r[i] = to_mask(rep.g1, i), g2r[i] = to_mask(rep.g2, i);
    auto apply = [&](const std::array<unsigned, 12>& g, unsigned x) {
        unsigned y = 0;
        for (std::size_t i = 0; i < 12; ++i)
            if (x & (1u << i)) y ^= g[i];
        return y;
    };

    rep.nilpotency_ok = true;
    for (std::size_t i = 0; i < 12; ++i) {
        if (apply(g1r, g1r[i]) != 0) rep.nilpotency_ok = false;
        if (apply(g2r, g2r[i]) != 0) rep.nilpotency_ok = false;
        if (apply(g2r, g1r[i]) != 0) rep.nilpotency_ok = false;
    }

    // dim ker(G1) /\ ker(G2) = 12 - rank[G1 | G2].
    std::vector<unsigned long> stacked;  // rows of the 12 x 24 matrix as bits
    for (std::size_t i = 0; i < 12; ++i)
        stacked.push_back(static_cast<unsigned long>(g1r[i]) |
                          (static_cast<unsigned long>(g2r[i]) << 12));
    int rank = 0;
    for (int bit = 0; bit < 24; ++bit) {
        std::size_t piv = stacked.size();
        for (std::size_t i = rank; i < stacked.size(); ++i)
            if (stacked[i] & (1ul << bit)) {
                piv = i;
                break;
            }
        if (piv == stacked.size()) continue;
        std::swap(stacked[rank], stacked[piv]);
        for (std::size_t i = 0; i < stacked.size(); ++i)
            if (static_cast<int>(i) != rank && (stacked[i] & (1ul << bit)))
                stacked[i] ^= stacked[rank];
        ++rank;
    }
    rep.kernel_dim = 12 - rank;

    // 3a + b = 12, 2a + b = kernel_dim.
    rep.a = 12 - rep.kernel_dim;
    rep.b = 12 - 3 * rep.a;

    // Exhaustive census: elements killed by m = (2, 2tau, 2tau^2) are exactly
    // those killed by both actions.
    Int killed = 0;
    for (unsigned x = 0; x < 4096; ++x)
        if (apply(g1r, x) == 0 && apply(g2r, x) == 0) ++killed;
    rep.killed_by_m = killed;
    return rep;
}

FiniteModule two_torsion_module(const PeriodLattice& pl)
{
    TwoTorsionReport rep = two_torsion_classification(pl);
    std::vector<Int> d(12, Int(2));
    std::vector<IntMat> actions = {IntMat::identity(12), rep.g1, rep.g2};
    return FiniteModule(fixtures::order_R(), std::move(d), std::move(actions));
}

}  // namespace avcert
