#include "avcert/normal_form.hpp"

namespace avcert {

HnfResult hnf(const IntMat& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMat h(m);
    IntMat u = IntMat::identity(rows);

    std::size_t r = 0;  // next pivot row
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Clear the column below row r with unimodular two-row gcd transforms.
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (h.at(i, c) == 0) continue;
            if (h.at(r, c) == 0) {
                h.swap_rows(r, i);
                u.swap_rows(r, i);
                continue;
            }
            Int a = h.at(r, c), b = h.at(i, c), x, y;
            Int g = ext_gcd(a, b, x, y);
            Int ag = a / g, bg = b / g;
            // [[x, y], [-b/g, a/g]] has determinant 1.
            h.combine_rows(r, i, x, y, -bg, ag);
            u.combine_rows(r, i, x, y, -bg, ag);
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, c), h.at(r, c));
            if (q != 0) {
                h.add_multiple_of_row(i, r, -q);
                u.add_multiple_of_row(i, r, -q);
            }
        }
        ++r;
    }
    return {std::move(h), std::move(u)};
}

IntMat hnf_basis(const IntMat& m)
{
    IntMat h = hnf(m).h;
    std::size_t nz = h.rows();
    while (nz > 0) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h.at(nz - 1, j) != 0) {
                zero = false;
                break;
            }
        if (!zero) break;
        --nz;
    }
    IntMat b(nz, h.cols());
    for (std::size_t i = 0; i < nz; ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) b.at(i, j) = h.at(i, j);
    return b;
}

namespace {

bool find_nonzero(const IntMat& d, std::size_t s, std::size_t& pi, std::size_t& pj)
{
    bool found = false;
    Int best;
    for (std::size_t i = s; i < d.rows(); ++i)
        for (std::size_t j = s; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Int a = abs(d.at(i, j));
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

void swap_cols(IntMat& m, std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}

void add_multiple_of_col(IntMat& m, std::size_t dst, std::size_t src, const Int& c)
{
    if (c == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, dst) += c * m.at(r, src);
}

void negate_col(IntMat& m, std::size_t j)
{
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, j) = -m.at(r, j);
}

}  // namespace

SnfResult snf(const IntMat& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMat d(m);
    IntMat l = IntMat::identity(rows);
    IntMat r = IntMat::identity(cols);
    const std::size_t nmin = rows < cols ? rows : cols;

    for (std::size_t s = 0; s < nmin; ++s) {
        for (;;) {
            std::size_t pi = s, pj = s;
            if (!find_nonzero(d, s, pi, pj)) break;
            d.swap_rows(s, pi);
            l.swap_rows(s, pi);
            swap_cols(d, s, pj);
            swap_cols(r, s, pj);

            bool dirty = false;
            for (std::size_t i = s + 1; i < rows; ++i) {
                if (d.at(i, s) == 0) continue;
                Int q = floor_div(d.at(i, s), d.at(s, s));
                d.add_multiple_of_row(i, s, -q);
                l.add_multiple_of_row(i, s, -q);
                if (d.at(i, s) != 0) dirty = true;
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                if (d.at(s, j) == 0) continue;
                Int q = floor_div(d.at(s, j), d.at(s, s));
                add_multiple_of_col(d, j, s, -q);
                add_multiple_of_col(r, j, s, -q);
                if (d.at(s, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Pivot divides the rest of its row and column; enforce that it
            // also divides every entry of the trailing block.
            bool divides_all = true;
            for (std::size_t i = s + 1; i < rows && divides_all; ++i)
                for (std::size_t j = s + 1; j < cols; ++j)
                    if (mod_floor(d.at(i, j), d.at(s, s)) != 0) {
                        d.add_multiple_of_row(s, i, 1);
                        l.add_multiple_of_row(s, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (d.at(s, s) < 0) {
            negate_col(d, s);
            negate_col(r, s);
        }
    }
    return {std::move(d), std::move(l), std::move(r)};
}

std::vector<IntVec> integer_kernel(const IntMat& m)
{
    // Row-HNF the transpose: rows of u matching zero rows of h form a basis of
    // the left kernel of m^T, i.e. of {v : m v = 0}; unimodularity of u makes
    // the basis saturated.
    IntMat t = m.transpose();
    HnfResult res = hnf(t);
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < res.h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < res.h.cols(); ++j)
            if (res.h.at(i, j) != 0) {
                zero = false;
                break;
            }
        if (zero) gens.push_back(res.u.row(i));
    }
    if (gens.empty()) return gens;
    IntMat canon = hnf_basis(IntMat::from_rows(gens, m.cols()));
    std::vector<IntVec> out;
    out.reserve(canon.rows());
    for (std::size_t i = 0; i < canon.rows(); ++i) out.push_back(canon.row(i));
    return out;
}

}  // namespace avcert
