#include "avcert/finite_module.hpp"

#include <map>
#include <set>

namespace avcert {

FiniteModule::FiniteModule(OrderRing owner, std::vector<Int> invariant_factors,
                           std::vector<IntMat> actions)
    : owner_(std::move(owner)), d_(std::move(invariant_factors)), actions_(std::move(actions))
{
    const std::size_t n = owner_.rank();
    const std::size_t m = d_.size();
    if (actions_.size() != n) throw Error("FiniteModule: one action per owner basis element");
    for (std::size_t j = 0; j < m; ++j) {
        if (d_[j] <= 1) throw Error("FiniteModule: invariant factors must exceed 1");
        if (j + 1 < m && mod_floor(d_[j + 1], d_[j]) != 0)
            throw Error("FiniteModule: invariant factors must form a divisibility chain");
    }
    for (auto& a : actions_) {
        if (a.rows() != m || a.cols() != m) throw Error("FiniteModule: action shape mismatch");
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) a.at(i, j) = mod_floor(a.at(i, j), d_[j]);
    }
    // Well-defined: (d_i e_i) * G must vanish modulo the d_j.
    for (const auto& a : actions_)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (mod_floor(d_[i] * a.at(i, j), d_[j]) != 0)
                    throw Error("FiniteModule: action not well-defined modulo the invariants");
    // b_0 acts as the identity.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (actions_[0].at(i, j) != Int(i == j ? 1 : 0))
                throw Error("FiniteModule: b_0 does not act as the identity");
    // Pairwise commuting and consistent with the structure constants:
    // G_i G_j = sum_k c_ijk G_k modulo the invariants.
    auto reduce_mat = [&](IntMat x) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) x.at(i, j) = mod_floor(x.at(i, j), d_[j]);
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMat lhs = reduce_mat(actions_[i] * actions_[j]);
            IntMat rhs(m, m);
            for (std::size_t k = 0; k < n; ++k) {
                const Int& c = owner_.structure_constant(i, j, k);
                if (c != 0) rhs = rhs + actions_[k].scaled(c);
            }
            rhs = reduce_mat(rhs);
            if (lhs != reduce_mat(actions_[j] * actions_[i]))
                throw Error("FiniteModule: actions do not commute");
            if (lhs != rhs)
                throw Error("FiniteModule: actions violate the owner structure constants");
        }
}

IntVec FiniteModule::reduce(IntVec v) const
{
    for (std::size_t j = 0; j < d_.size(); ++j) v[j] = mod_floor(v[j], d_[j]);
    return v;
}

Int FiniteModule::size() const
{
    Int s = 1;
    for (const auto& d : d_) s *= d;
    return s;
}

ModuleElement FiniteModule::element(IntVec coords) const
{
    if (coords.size() != d_.size()) throw Error("FiniteModule::element: size mismatch");
    return ModuleElement(*this, reduce(std::move(coords)));
}

ModuleElement FiniteModule::zero() const { return element(IntVec(d_.size(), Int(0))); }

Int FiniteModule::element_count_guarded(const Int& guard) const
{
    Int s = size();
    if (s > guard) throw Error("FiniteModule: size guard exceeded (" + s.get_str() + ")");
    return s;
}

ModuleElement FiniteModule::element_at(const Int& index) const
{
    IntVec v(d_.size());
    Int rest = index;
    for (std::size_t j = d_.size(); j-- > 0;) {
        v[j] = mod_floor(rest, d_[j]);
        rest = floor_div(rest, d_[j]);
    }
    return element(std::move(v));
}

IntMat FiniteModule::action_of(const IntVec& a) const
{
    if (a.size() != owner_.rank()) throw Error("FiniteModule::action_of: size mismatch");
    const std::size_t m = d_.size();
    IntMat acc(m, m);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) acc = acc + actions_[i].scaled(a[i]);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) acc.at(i, j) = mod_floor(acc.at(i, j), d_[j]);
    return acc;
}

bool operator==(const FiniteModule& a, const FiniteModule& b)
{
    return a.owner_ == b.owner_ && a.d_ == b.d_ && a.actions_ == b.actions_;
}

ModuleElement::ModuleElement(const FiniteModule& owner, IntVec coords)
    : mod_(&owner), coords_(std::move(coords))
{
}

bool ModuleElement::is_zero() const { return avcert::is_zero(coords_); }

Int ModuleElement::order() const
{
    Int ord = 1;
    const auto& d = mod_->invariant_factors();
    for (std::size_t j = 0; j < coords_.size(); ++j)
        ord = int_lcm(ord, d[j] / int_gcd(d[j], coords_[j]));
    return ord;
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const
{
    if (!(*mod_ == *o.mod_)) throw Error("ModuleElement: module mismatch");
    IntVec v(coords_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.coords_[i];
    return mod_->element(std::move(v));
}

ModuleElement ModuleElement::scaled(const Int& c) const
{
    IntVec v(coords_);
    for (auto& x : v) x *= c;
    return mod_->element(std::move(v));
}

ModuleElement ModuleElement::acted_by(const IntVec& owner_coords) const
{
    IntMat g = mod_->action_of(owner_coords);
    return mod_->element(row_times_mat(coords_, g));
}

bool operator==(const ModuleElement& a, const ModuleElement& b)
{
    return *a.mod_ == *b.mod_ && a.coords_ == b.coords_;
}

FiniteModule quotient_module(const OrderLattice& l1, const OrderLattice& l2)
{
    if (!(l1.owner() == l2.owner())) throw Error("quotient_module: owner mismatch");
    if (l1.ambient() != l2.ambient()) throw Error("quotient_module: ambient mismatch");
    if (!l1.is_full_rank() || !l2.is_full_rank())
        throw Error("quotient_module: lattices must be full rank");
    if (!l2.lat().contains(l1.lat())) throw Error("quotient_module: l1 is not contained in l2");
    if (!l1.is_owner_stable() || !l2.is_owner_stable())
        throw Error("quotient_module: lattices must be owner stable");

    const OrderRing& r = l1.owner();
    const std::size_t n = r.rank();
    const std::size_t dim = l2.lat().dim();

    // Express l1 in l2's basis, take the Smith form, and change l2's basis by
    // the right transform: l2 = (+) Z q_i, l1 = (+) Z D_ii q_i.
    RatMat p2 = l2.lat().basis_rows();
    auto p2inv = p2.inverse();
    if (!p2inv) throw Error("quotient_module: degenerate basis");
    RatMat c = l1.lat().basis_rows() * *p2inv;
    if (!c.is_integral()) throw Error("quotient_module: containment failure");
    SnfResult s = snf(c.to_int());
    auto rinv = s.r.to_rat().inverse();
    if (!rinv) throw Error("quotient_module: non-invertible transform");
    RatMat q = rinv->to_int().to_rat() * p2;

    std::vector<std::size_t> kept;
    std::vector<Int> invariants;
    for (std::size_t i = 0; i < dim; ++i) {
        if (s.d.at(i, i) == 0) throw Error("quotient_module: quotient is infinite");
        if (s.d.at(i, i) > 1) {
            kept.push_back(i);
            invariants.push_back(s.d.at(i, i));
        }
    }

    // Induced actions: image of each kept generator under b, re-expressed in
    // the q basis, restricted to the kept columns.
    auto qinv = q.inverse();
    if (!qinv) throw Error("quotient_module: degenerate generator basis");
    std::vector<IntMat> actions;
    actions.reserve(n);
    const std::size_t m = kept.size();
    for (std::size_t b = 0; b < n; ++b) {
        RatVec e(n, Rat(0));
        e[b] = 1;
        RatMat mm = r.mult_matrix(e);
        RatMat big(dim, dim);
        for (std::size_t blk = 0; blk < l2.ambient(); ++blk)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    big.at(blk * n + i, blk * n + j) = mm.at(i, j);
        IntMat g(m, m);
        for (std::size_t ii = 0; ii < m; ++ii) {
            RatVec image = row_times_mat(q.row(kept[ii]), big);
            RatVec u = row_times_mat(image, *qinv);
            for (std::size_t jj = 0; jj < m; ++jj) {
                if (!is_integer(u[kept[jj]]))
                    throw Error("quotient_module: action does not preserve the lattice");
                g.at(ii, jj) = u[kept[jj]].get_num();
            }
        }
        actions.push_back(std::move(g));
    }
    return FiniteModule(r, std::move(invariants), std::move(actions));
}

OrderLattice annihilator(const ModuleElement& x)
{
    const FiniteModule& mod = x.module();
    const OrderRing& r = mod.owner();
    const std::size_t n = r.rank();
    const std::size_t m = mod.length();
    if (m == 0) return unit_ideal(r);

    // alpha = sum a_i b_i kills x iff sum a_i (x * G_i) = 0 modulo the d_j:
    // stack the images with diag(d) and take the integer kernel.
    IntMat k(n + m, m);
    for (std::size_t i = 0; i < n; ++i) {
        IntVec row = row_times_mat(x.coords(), mod.action(i));
        for (std::size_t j = 0; j < m; ++j) k.at(i, j) = mod_floor(row[j], mod.invariant_factors()[j]);
    }
    for (std::size_t j = 0; j < m; ++j) k.at(n + j, j) = mod.invariant_factors()[j];

    auto ker = integer_kernel(k.transpose());
    std::vector<RatVec> rows;
    rows.reserve(ker.size());
    for (const auto& v : ker) rows.push_back(to_rat_vec(IntVec(v.begin(), v.begin() + n)));
    Lattice lat = Lattice::from_rows(RatMat::from_rows(rows, n));
    if (lat.rank() != n) throw Error("annihilator: expected a full-rank ideal");
    return OrderLattice(r, 1, std::move(lat), true);
}

SemicyclicResult is_semicyclic(const FiniteModule& m, const Int& size_guard)
{
    Int count = m.element_count_guarded(size_guard);
    const std::size_t len = m.length();
    if (len == 0) return {true, std::nullopt};

    // The owner's image in End(module): the additive closure of the basis
    // actions. Guarded by the same bound as the element count.
    std::set<std::vector<Int>> image;
    std::vector<IntMat> frontier{m.action_of(IntVec(m.owner().rank(), Int(0)))};
    auto key = [&](const IntMat& g) {
        std::vector<Int> k;
        k.reserve(len * len);
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; j < len; ++j) k.push_back(g.at(i, j));
        return k;
    };
    auto reduce_mat = [&](IntMat g) {
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; j < len; ++j)
                g.at(i, j) = mod_floor(g.at(i, j), m.invariant_factors()[j]);
        return g;
    };
    image.insert(key(frontier[0]));
    std::vector<IntMat> image_mats{frontier[0]};
    while (!frontier.empty()) {
        IntMat cur = frontier.back();
        frontier.pop_back();
        for (std::size_t b = 0; b < m.owner().rank(); ++b) {
            IntMat nxt = reduce_mat(cur + m.action(b));
            if (image.insert(key(nxt)).second) {
                if (Int(image.size()) > size_guard)
                    throw Error("is_semicyclic: endomorphism image guard exceeded");
                image_mats.push_back(nxt);
                frontier.push_back(nxt);
            }
        }
    }

    // Orbit of T2 under the image, cached per element index.
    std::map<Int, std::set<IntVec>> orbit_cache;
    auto orbit_of = [&](const Int& idx, const ModuleElement& t2) -> const std::set<IntVec>& {
        auto it = orbit_cache.find(idx);
        if (it != orbit_cache.end()) return it->second;
        std::set<IntVec> orb;
        for (const auto& g : image_mats) orb.insert(m.element(row_times_mat(t2.coords(), g)).coords());
        return orbit_cache.emplace(idx, std::move(orb)).first->second;
    };

    for (Int i1 = 0; i1 < count; ++i1) {
        ModuleElement t1 = m.element_at(i1);
        Int o1 = t1.order();
        for (Int i2 = 0; i2 < count; ++i2) {
            ModuleElement t2 = m.element_at(i2);
            if (mod_floor(t2.order(), o1) != 0) continue;  // need ord(T1) | ord(T2)
            const auto& orb = orbit_of(i2, t2);
            if (orb.find(t1.coords()) == orb.end())
                return {false, std::make_pair(t1.coords(), t2.coords())};
        }
    }
    return {true, std::nullopt};
}

}  // namespace avcert
