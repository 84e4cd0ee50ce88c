#include "avcert/lattice.hpp"

#include <sstream>

namespace avcert {

Lattice Lattice::zero(std::size_t dim)
{
    Lattice l;
    l.dim_ = dim;
    l.basis_ = IntMat(0, dim);
    l.denom_ = 1;
    return l;
}

Lattice Lattice::standard(std::size_t dim)
{
    Lattice l;
    l.dim_ = dim;
    l.basis_ = IntMat::identity(dim);
    l.denom_ = 1;
    return l;
}

Lattice Lattice::from_rows(const RatMat& rows)
{
    Int d = 1;
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) d = int_lcm(d, Int(rows.at(i, j).get_den()));
    IntMat scaled(rows.rows(), rows.cols());
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) {
            Rat q = rows.at(i, j) * Rat(d);
            scaled.at(i, j) = to_int(q);
        }
    IntMat h = hnf_basis(scaled);
    // Minimal denominator: cancel the common content.
    Int g = d;
    for (std::size_t i = 0; i < h.rows() && g != 1; ++i)
        for (std::size_t j = 0; j < h.cols() && g != 1; ++j) g = int_gcd(g, h.at(i, j));
    if (g > 1) {
        for (std::size_t i = 0; i < h.rows(); ++i)
            for (std::size_t j = 0; j < h.cols(); ++j)
                mpz_divexact(h.at(i, j).get_mpz_t(), h.at(i, j).get_mpz_t(), g.get_mpz_t());
        mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
    }
    Lattice l;
    l.dim_ = rows.cols();
    l.basis_ = std::move(h);
    l.denom_ = std::move(d);
    return l;
}

Lattice Lattice::from_rows(const IntMat& rows)
{
    Lattice l;
    l.dim_ = rows.cols();
    l.basis_ = hnf_basis(rows);
    l.denom_ = 1;
    // Integer input can still share content with denom 1: nothing to cancel.
    return l;
}

RatMat Lattice::basis_rows() const
{
    RatMat m(basis_.rows(), dim_);
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        for (std::size_t j = 0; j < dim_; ++j) m.at(i, j) = Rat(basis_.at(i, j)) / Rat(denom_);
    return m;
}

RatVec Lattice::basis_row(std::size_t i) const
{
    RatVec v(dim_);
    for (std::size_t j = 0; j < dim_; ++j) v[j] = Rat(basis_.at(i, j)) / Rat(denom_);
    return v;
}

bool Lattice::contains(const RatVec& v) const
{
    if (v.size() != dim_) throw Error("Lattice::contains: dimension mismatch");
    IntVec z(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Rat q = v[j] * Rat(denom_);
        if (!is_integer(q)) return false;
        z[j] = q.get_num();
    }
    // Greedy reduction against the HNF rows.
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t p = 0;
        while (p < dim_ && basis_.at(i, p) == 0) ++p;
        if (p == dim_) continue;
        Int q = floor_div(z[p], basis_.at(i, p));
        if (q != 0)
            for (std::size_t j = p; j < dim_; ++j) z[j] -= q * basis_.at(i, j);
    }
    return avcert::is_zero(z);
}

bool Lattice::contains(const Lattice& other) const
{
    if (other.dim_ != dim_) throw Error("Lattice::contains: dimension mismatch");
    for (std::size_t i = 0; i < other.rank(); ++i)
        if (!contains(other.basis_row(i))) return false;
    return true;
}

Lattice Lattice::sum(const Lattice& o) const
{
    if (o.dim_ != dim_) throw Error("Lattice::sum: dimension mismatch");
    RatMat stacked(rank() + o.rank(), dim_);
    for (std::size_t i = 0; i < rank(); ++i) stacked.set_row(i, basis_row(i));
    for (std::size_t i = 0; i < o.rank(); ++i) stacked.set_row(rank() + i, o.basis_row(i));
    return from_rows(stacked);
}

Lattice Lattice::intersect(const Lattice& o) const
{
    if (o.dim_ != dim_) throw Error("Lattice::intersect: dimension mismatch");
    if (is_zero() || o.is_zero()) return zero(dim_);
    Int common = int_lcm(denom_, o.denom_);
    Int f1 = common / denom_, f2 = common / o.denom_;
    IntMat a = basis_.scaled(f1);
    IntMat b = o.basis_.scaled(f2);
    // (u, v) with u*a + v*b = 0 parametrize the intersection as u*a.
    IntMat stacked(a.rows() + b.rows(), dim_);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < dim_; ++j) stacked.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < dim_; ++j) stacked.at(a.rows() + i, j) = -b.at(i, j);
    auto ker = integer_kernel(stacked.transpose());
    RatMat rows(ker.size(), dim_);
    for (std::size_t k = 0; k < ker.size(); ++k) {
        IntVec u(ker[k].begin(), ker[k].begin() + a.rows());
        IntVec w = row_times_mat(u, a);
        for (std::size_t j = 0; j < dim_; ++j) rows.at(k, j) = Rat(w[j]) / Rat(common);
    }
    return from_rows(rows);
}

Lattice Lattice::scaled(const Rat& c) const
{
    if (c == 0) return zero(dim_);
    return from_rows(basis_rows().scaled(c));
}

Lattice Lattice::transformed(const RatMat& t) const
{
    if (t.rows() != dim_) throw Error("Lattice::transformed: shape mismatch");
    return from_rows(basis_rows() * t);
}

std::optional<RatVec> Lattice::coordinates_of(const RatVec& v) const
{
    if (v.size() != dim_) throw Error("Lattice::coordinates_of: dimension mismatch");
    if (rank() == 0) return avcert::is_zero(v) ? std::optional<RatVec>(RatVec{}) : std::nullopt;
    return basis_rows().solve_left(v);
}

Int Lattice::index_in(const Lattice& super) const
{
    if (!super.contains(*this)) throw Error("index_in: not a sublattice");
    if (rank() != super.rank()) throw Error("index_in: rank mismatch");
    // Express our basis in the superlattice basis; the index is |det|.
    RatMat coeff(rank(), rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        auto c = super.coordinates_of(basis_row(i));
        if (!c) throw Error("index_in: inconsistent containment");
        coeff.set_row(i, *c);
    }
    Rat d = coeff.det();
    Int idx = to_int(abs(d));
    return idx;
}

std::string Lattice::to_string() const
{
    std::ostringstream os;
    os << "1/" << denom_.get_str() << " * " << basis_.to_string();
    return os.str();
}

}  // namespace avcert
