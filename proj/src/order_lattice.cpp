#include "avcert/order_lattice.hpp"

namespace avcert {

namespace {

// Multiplication by the order element a on (fraction field)^k, as a row-vector
// transform of dimension n*k.
RatMat diagonal_mult_matrix(const OrderRing& r, const RatVec& a, std::size_t k)
{
    const std::size_t n = r.rank();
    RatMat m = r.mult_matrix(a);
    RatMat big(n * k, n * k);
    for (std::size_t blk = 0; blk < k; ++blk)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) big.at(blk * n + i, blk * n + j) = m.at(i, j);
    return big;
}

// Row i = coordinates of b_i * g for an ambient vector g (k blocks of n).
RatMat pairing_matrix(const OrderRing& r, const RatVec& g, std::size_t k)
{
    const std::size_t n = r.rank();
    RatMat t(n, n * k);
    for (std::size_t blk = 0; blk < k; ++blk) {
        RatVec gblk(g.begin() + blk * n, g.begin() + (blk + 1) * n);
        // row i of mult_matrix(gblk) = coords(gblk * b_i) = coords(b_i * g) here
        RatMat mm = r.mult_matrix(gblk);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t.at(i, blk * n + j) = mm.at(i, j);
    }
    return t;
}

// Columns spanning { w : t * w = 0 } over Q.
std::vector<RatVec> rational_column_kernel(const RatMat& t)
{
    // Solve via row echelon of t.
    RatMat a(t);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
        Rat inv = 1 / a.at(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatVec> ker;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        RatVec v(a.cols(), Rat(0));
        v[c] = 1;
        for (std::size_t rr = 0; rr < pivots.size(); ++rr) v[pivots[rr]] = -a.at(rr, c);
        ker.push_back(std::move(v));
    }
    return ker;
}

// { x in Q^n : x * t in sub }, t an n x m rational matrix of rank n.
Lattice preimage_lattice(const RatMat& t, const Lattice& sub)
{
    const std::size_t n = t.rows();
    if (sub.dim() != t.cols()) throw Error("preimage_lattice: shape mismatch");

    // W = sub intersected with the row span of t: integer combinations u of
    // sub's basis with (u * B) * K = 0, K spanning the column kernel of t.
    auto kcols = rational_column_kernel(t);
    Lattice w = sub;
    if (!kcols.empty()) {
        RatMat k(t.cols(), kcols.size());
        for (std::size_t j = 0; j < kcols.size(); ++j)
            for (std::size_t i = 0; i < t.cols(); ++i) k.at(i, j) = kcols[j][i];
        RatMat bk = sub.basis_rows() * k;
        // Scale columns to integers; column scaling keeps the kernel.
        IntMat bki(bk.rows(), bk.cols());
        for (std::size_t j = 0; j < bk.cols(); ++j) {
            Int d = 1;
            for (std::size_t i = 0; i < bk.rows(); ++i) d = int_lcm(d, Int(bk.at(i, j).get_den()));
            for (std::size_t i = 0; i < bk.rows(); ++i) bki.at(i, j) = to_int(bk.at(i, j) * Rat(d));
        }
        auto u_basis = integer_kernel(bki.transpose());
        RatMat rows(u_basis.size(), sub.dim());
        for (std::size_t i = 0; i < u_basis.size(); ++i)
            rows.set_row(i, row_times_mat(to_rat_vec(u_basis[i]), sub.basis_rows()));
        w = Lattice::from_rows(rows);
    }

    // Pull each basis row of W back through t (unique solution, t injective).
    RatMat rows(w.rank(), n);
    for (std::size_t i = 0; i < w.rank(); ++i) {
        auto x = t.solve_left(w.basis_row(i));
        if (!x) throw Error("preimage_lattice: inconsistent pullback");
        rows.set_row(i, *x);
    }
    return Lattice::from_rows(rows);
}

}  // namespace

OrderLattice::OrderLattice(OrderRing owner, std::size_t ambient, Lattice lat, bool is_ideal)
    : owner_(std::move(owner)), ambient_(ambient), lat_(std::move(lat)), is_ideal_(is_ideal)
{
    if (!owner_.valid()) throw Error("OrderLattice: invalid owner");
    if (ambient_ == 0) throw Error("OrderLattice: ambient rank must be positive");
    if (lat_.dim() != owner_.rank() * ambient_)
        throw Error("OrderLattice: lattice dimension mismatch");
    if (is_ideal_ && !is_owner_stable())
        throw Error("OrderLattice: flagged as ideal but not closed under the owner");
}

bool OrderLattice::is_owner_stable() const
{
    const std::size_t n = owner_.rank();
    for (std::size_t b = 0; b < n; ++b) {
        RatVec e(n, Rat(0));
        e[b] = 1;
        RatMat t = diagonal_mult_matrix(owner_, e, ambient_);
        for (std::size_t i = 0; i < lat_.rank(); ++i)
            if (!lat_.contains(row_times_mat(lat_.basis_row(i), t))) return false;
    }
    return true;
}

bool operator==(const OrderLattice& a, const OrderLattice& b)
{
    return a.owner_ == b.owner_ && a.ambient_ == b.ambient_ && a.lat_ == b.lat_;
}

OrderLattice ideal_from_generators(const OrderRing& r, const std::vector<OrderElement>& gens)
{
    const std::size_t n = r.rank();
    bool all_zero = true;
    for (const auto& g : gens)
        if (!g.is_zero()) all_zero = false;
    if (gens.empty() || all_zero) throw Error("ideal_from_generators: zero ideal");

    std::vector<RatVec> rows;
    rows.reserve(gens.size() * n);
    for (const auto& g : gens) {
        if (!(g.owner() == r)) throw Error("ideal_from_generators: owner mismatch");
        RatMat mm = r.mult_matrix(g.coords());
        for (std::size_t i = 0; i < n; ++i) rows.push_back(mm.row(i));
    }
    Lattice lat = Lattice::from_rows(RatMat::from_rows(rows, n));
    if (lat.rank() != n) throw Error("ideal_from_generators: ideal is not full rank");
    return OrderLattice(r, 1, std::move(lat), true);
}

OrderLattice unit_ideal(const OrderRing& r)
{
    return OrderLattice(r, 1, Lattice::standard(r.rank()), true);
}

bool ideal_membership(const OrderElement& x, const OrderLattice& l)
{
    if (!(x.owner() == l.owner())) throw Error("ideal_membership: owner mismatch");
    if (l.ambient() != 1) throw Error("ideal_membership: lattice is not in the field");
    return l.lat().contains(x.coords());
}

OrderLattice colon_lattice(const OrderLattice& l1, const OrderLattice& l2)
{
    if (!(l1.owner() == l2.owner())) throw Error("colon_lattice: owner mismatch");
    if (l1.ambient() != l2.ambient()) throw Error("colon_lattice: ambient mismatch");
    if (!l1.is_full_rank() || !l2.is_full_rank())
        throw Error("colon_lattice: operands must be full rank");
    const OrderRing& r = l1.owner();
    const std::size_t n = r.rank();

    bool first = true;
    Lattice acc;
    for (std::size_t i = 0; i < l2.rank(); ++i) {
        RatMat t = pairing_matrix(r, l2.lat().basis_row(i), l2.ambient());
        Lattice s = preimage_lattice(t, l1.lat());
        acc = first ? s : acc.intersect(s);
        first = false;
    }
    if (acc.rank() != n) throw Error("colon_lattice: result is not full rank");
    OrderLattice out(r, 1, std::move(acc));
    // A colon lattice is always an owner module.
    if (!out.is_owner_stable()) throw Error("colon_lattice: result not owner stable");
    return OrderLattice(r, 1, out.lat(), true);
}

OrderLattice quotient_by_ideal(const OrderLattice& l, const OrderLattice& delta)
{
    if (!(l.owner() == delta.owner())) throw Error("quotient_by_ideal: owner mismatch");
    if (delta.ambient() != 1) throw Error("quotient_by_ideal: delta must live in the field");
    if (!delta.is_full_rank()) throw Error("quotient_by_ideal: delta must be full rank");
    const OrderRing& r = l.owner();

    bool first = true;
    Lattice acc;
    for (std::size_t i = 0; i < delta.rank(); ++i) {
        RatMat t = diagonal_mult_matrix(r, delta.lat().basis_row(i), l.ambient());
        auto tinv = t.inverse();
        if (!tinv) throw Error("quotient_by_ideal: zero divisor in delta");
        Lattice s = l.lat().transformed(*tinv);
        acc = first ? s : acc.intersect(s);
        first = false;
    }
    return OrderLattice(r, l.ambient(), std::move(acc), false);
}

OrderRing multiplier_ring(const OrderLattice& l)
{
    OrderLattice colon = colon_lattice(l, l);
    RatMat rows_field = colon.lat().basis_rows() * l.owner().basis_in_field();
    OrderRing ring = OrderRing::from_field_basis(l.owner().field_ptr(), rows_field);
    // The multiplier ring always contains the owner's image.
    Lattice ring_lat = ring.lattice_in_field();
    for (std::size_t i = 0; i < l.owner().rank(); ++i)
        if (!ring_lat.contains(l.owner().basis_in_field().row(i)))
            throw Error("multiplier_ring: result does not contain the owner");
    return ring;
}

IsogenyResult isogeny_to_maximal(const OrderRing& r, const OrderRing& lambda_max,
                                 const OrderLattice& l)
{
    if (!(r.field().minpoly() == lambda_max.field().minpoly()))
        throw Error("isogeny_to_maximal: orders live in different fields");
    if (!(l.owner() == r)) throw Error("isogeny_to_maximal: lattice owner mismatch");

    auto lam_inv = lambda_max.basis_in_field().inverse();
    auto r_inv = r.basis_in_field().inverse();
    if (!lam_inv || !r_inv) throw Error("isogeny_to_maximal: degenerate order basis");
    RatMat r_in_lambda = r.basis_in_field() * *lam_inv;
    if (!r_in_lambda.is_integral())
        throw Error("isogeny_to_maximal: lambda_max does not contain r");

    // Minimal n >= 1 with n * lambda_max contained in r: the lcm of the
    // denominators of lambda_max written in r-coordinates.
    RatMat lambda_in_r = lambda_max.basis_in_field() * *r_inv;
    Int n = 1;
    for (std::size_t i = 0; i < lambda_in_r.rows(); ++i)
        for (std::size_t j = 0; j < lambda_in_r.cols(); ++j)
            n = int_lcm(n, Int(lambda_in_r.at(i, j).get_den()));

    Lattice delta_lat = Lattice::from_rows(lambda_in_r.scaled(Rat(n)));
    OrderLattice delta(r, 1, std::move(delta_lat), true);

    OrderLattice result = quotient_by_ideal(l, delta);
    OrderRing mult = multiplier_ring(result);
    if (!(mult == lambda_max))
        throw Error("isogeny_to_maximal: multiplier ring of the result is not the maximal order");
    return {std::move(n), std::move(delta), std::move(result)};
}

}  // namespace avcert
