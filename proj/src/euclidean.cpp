#include "avcert/euclidean.hpp"

namespace avcert {

EuclideanOrder::EuclideanOrder(OrderRing ring) : ring_(std::move(ring))
{
    // Units: elements of norm 1 in a small coordinate box. The unit groups of
    // Z, Z[i] and Z[zeta_3] all live in [-2, 2]^rank.
    const std::size_t n = ring_.rank();
    if (n > 2) throw Error("EuclideanOrder: only Z and imaginary quadratic orders are supported");
    OElem cur(n, Int(0));
    const long bound = 2;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (!avcert::is_zero(cur) && norm(cur) == 1) units_.push_back(cur);
            return;
        }
        for (long v = -bound; v <= bound; ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
        cur[i] = 0;
    };
    rec(rec, 0);
    if (units_.empty()) throw Error("EuclideanOrder: no units found");
}

Int EuclideanOrder::norm(const OElem& a) const
{
    Rat n = ring_.field().norm(ring_.to_field(to_rat_vec(a)));
    return to_int(abs(n));
}

OElem EuclideanOrder::mul(const OElem& a, const OElem& b) const
{
    return to_int_vec(ring_.mul(to_rat_vec(a), to_rat_vec(b)));
}

OElem EuclideanOrder::sub(const OElem& a, const OElem& b) const
{
    OElem r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

std::pair<OElem, OElem> EuclideanOrder::divide(const OElem& a, const OElem& b) const
{
    if (avcert::is_zero(b)) throw Error("EuclideanOrder::divide: division by zero");
    auto binv = ring_.field().inverse(ring_.to_field(to_rat_vec(b)));
    RatVec quot_field = ring_.field().mul(ring_.to_field(to_rat_vec(a)), *binv);
    RatVec quot = ring_.from_field(quot_field);
    OElem q(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        // Nearest integer, halves rounded up.
        Rat shifted = quot[i] + Rat(1, 2);
        q[i] = floor_div(Int(shifted.get_num()), Int(shifted.get_den()));
    }
    OElem r = sub(a, mul(q, b));
    if (!avcert::is_zero(r) && norm(r) >= norm(b))
        throw Error("EuclideanOrder::divide: remainder did not shrink");
    return {std::move(q), std::move(r)};
}

OElem EuclideanOrder::canonical_associate(const OElem& a) const
{
    OElem best(a);
    for (const auto& u : units_) {
        OElem cand = mul(a, u);
        if (cand > best) best = cand;
    }
    return best;
}

std::vector<ORow> o_echelon(const EuclideanOrder& o, std::vector<ORow> rows)
{
    if (rows.empty()) return rows;
    const std::size_t k = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != k) throw Error("o_echelon: ragged rows");

    auto row_sub_mul = [&](ORow& dst, const ORow& src, const OElem& q) {
        for (std::size_t c = 0; c < k; ++c) dst[c] = o.sub(dst[c], o.mul(q, src[c]));
    };
    auto row_mul = [&](ORow& dst, const OElem& u) {
        for (std::size_t c = 0; c < k; ++c) dst[c] = o.mul(dst[c], u);
    };
    auto row_is_zero = [&](const ORow& r) {
        for (const auto& e : r)
            if (!avcert::is_zero(e)) return false;
        return true;
    };

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < k && pivot_row < rows.size(); ++col) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = pivot_row; i < rows.size(); ++i) {
                if (avcert::is_zero(rows[i][col])) continue;
                if (best == rows.size() || o.norm(rows[i][col]) < o.norm(rows[best][col]))
                    best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[pivot_row], rows[best]);
            bool clean = true;
            for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
                if (avcert::is_zero(rows[i][col])) continue;
                auto [q, rem] = o.divide(rows[i][col], rows[pivot_row][col]);
                row_sub_mul(rows[i], rows[pivot_row], q);
                if (!avcert::is_zero(rows[i][col])) clean = false;
            }
            if (clean) break;
        }
        if (avcert::is_zero(rows[pivot_row][col])) continue;

        // Normalize the pivot to its canonical associate and reduce the
        // entries above it.
        OElem piv = rows[pivot_row][col];
        OElem canon = o.canonical_associate(piv);
        for (const auto& u : o.units()) {
            if (o.mul(piv, u) == canon) {
                row_mul(rows[pivot_row], u);
                break;
            }
        }
        for (std::size_t i = 0; i < pivot_row; ++i) {
            if (avcert::is_zero(rows[i][col])) continue;
            auto [q, rem] = o.divide(rows[i][col], rows[pivot_row][col]);
            row_sub_mul(rows[i], rows[pivot_row], q);
        }
        ++pivot_row;
    }

    std::vector<ORow> out;
    for (auto& r : rows)
        if (!row_is_zero(r)) out.push_back(std::move(r));
    return out;
}

RatVec orow_to_flat(const EuclideanOrder& o, const ORow& row)
{
    const std::size_t n = o.rank();
    RatVec flat(n * row.size(), Rat(0));
    for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c].size() != n) throw Error("orow_to_flat: entry size mismatch");
        for (std::size_t i = 0; i < n; ++i) flat[c * n + i] = Rat(row[c][i]);
    }
    return flat;
}

ORow flat_to_orow(const EuclideanOrder& o, const RatVec& flat, std::size_t k)
{
    const std::size_t n = o.rank();
    if (flat.size() != n * k) throw Error("flat_to_orow: size mismatch");
    ORow row(k, OElem(n));
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < n; ++i) row[c][i] = to_int(flat[c * n + i]);
    return row;
}

OrderLattice o_span(const EuclideanOrder& o, const std::vector<ORow>& rows, std::size_t k)
{
    const std::size_t n = o.rank();
    std::vector<RatVec> zrows;
    for (const auto& row : rows) {
        if (row.size() != k) throw Error("o_span: ambient mismatch");
        for (std::size_t b = 0; b < n; ++b) {
            RatVec zr(n * k, Rat(0));
            OElem basis_elem(n, Int(0));
            basis_elem[b] = 1;
            for (std::size_t c = 0; c < k; ++c) {
                OElem prod = o.mul(basis_elem, row[c]);
                for (std::size_t i = 0; i < n; ++i) zr[c * n + i] = Rat(prod[i]);
            }
            zrows.push_back(std::move(zr));
        }
    }
    Lattice lat = zrows.empty() ? Lattice::zero(n * k)
                                : Lattice::from_rows(RatMat::from_rows(zrows, n * k));
    return OrderLattice(o.ring(), k, std::move(lat), false);
}

IndependenceResult independent_point(const OrderLattice& m, const RatVec& candidate)
{
    if (candidate.size() != m.lat().dim()) throw Error("independent_point: dimension mismatch");
    auto coords = m.lat().coordinates_of(candidate);
    if (!coords) return {true, std::nullopt};
    // candidate = sum q_i * row_i: clearing denominators gives an integer
    // multiple landing inside m.
    Int n = denominator_lcm(*coords);
    RatVec scaled(candidate);
    for (auto& x : scaled) x *= Rat(n);
    if (!m.lat().contains(scaled))
        throw Error("independent_point: dependence witness failed membership");
    return {false, n};
}

std::optional<std::size_t> first_independent_coordinate(const OrderLattice& m)
{
    const std::size_t n = m.owner().rank();
    for (std::size_t c = 0; c < m.ambient(); ++c) {
        RatVec e(n * m.ambient(), Rat(0));
        e[c * n] = 1;  // the O-vector with 1 in coordinate c
        if (independent_point(m, e).independent) return c;
    }
    return std::nullopt;
}

FreeSeparation free_separating_module(const EuclideanOrder& o, const SubmoduleChain& chain)
{
    const OrderRing& ring = o.ring();
    const std::size_t n = ring.rank();
    if (!(chain.inner.owner() == ring) || !(chain.outer.owner() == ring))
        throw Error("free_separating_module: owner mismatch");
    if (chain.inner.ambient() != chain.outer.ambient())
        throw Error("free_separating_module: ambient mismatch");
    const std::size_t k = chain.inner.ambient();
    if (!chain.outer.lat().contains(chain.inner.lat()))
        throw Error("free_separating_module: chain containment failure");
    if (chain.inner.lat().denom() != 1 || chain.outer.lat().denom() != 1)
        throw Error("free_separating_module: modules must lie inside owner^k");
    if (!chain.inner.is_owner_stable() || !chain.outer.is_owner_stable())
        throw Error("free_separating_module: modules must be owner stable");

    if (chain.inner.rank() % n != 0 || chain.outer.rank() % n != 0)
        throw Error("free_separating_module: Z-rank is not a multiple of the owner rank");
    const std::size_t rank_m = chain.inner.rank() / n;
    const std::size_t rank_n = chain.outer.rank() / n;
    if (k < rank_m + rank_n)
        throw Error("free_separating_module: ambient rank too small to host fresh coordinates");

    // Free O-basis of M by echelon over the order.
    std::vector<ORow> gens;
    for (std::size_t i = 0; i < chain.inner.rank(); ++i)
        gens.push_back(flat_to_orow(o, chain.inner.lat().basis_row(i), k));
    std::vector<ORow> basis = o_echelon(o, std::move(gens));
    if (basis.size() != rank_m)
        throw Error("free_separating_module: echelon rank does not match the module rank");
    OrderLattice span = o_span(o, basis, k);
    if (!(span.lat() == chain.inner.lat()))
        throw Error("free_separating_module: echelon basis does not span the module");

    // Reserve rank(M) fresh coordinates, each independent from N plus the
    // previously reserved ones. Over these owners the projective complement
    // of a free module is zero, so the separating module is M itself; the
    // reserved coordinates certify the greedy independence extension.
    std::vector<std::size_t> fresh;
    Lattice grow = chain.outer.lat();
    for (std::size_t picked = 0; picked < rank_m; ++picked) {
        std::optional<std::size_t> found;
        for (std::size_t c = 0; c < k; ++c) {
            RatVec e(n * k, Rat(0));
            e[c * n] = 1;
            OrderLattice cur(ring, k, grow, false);
            if (independent_point(cur, e).independent) {
                found = c;
                grow = grow.sum(o_span(o, {flat_to_orow(o, e, k)}, k).lat());
                break;
            }
        }
        if (!found)
            throw Error("free_separating_module: no independent coordinate available");
        fresh.push_back(*found);
    }

    FreeSeparation out{chain.inner, std::move(basis), std::move(fresh)};
    Lattice meet = out.separating.lat().intersect(chain.outer.lat());
    if (!(meet == chain.inner.lat()))
        throw Error("free_separating_module: separation postcondition failed");
    return out;
}

}  // namespace avcert
