#include <doctest.h>

#include <random>

#include "avcert/fixtures.hpp"
#include "avcert/order_lattice.hpp"
#include "oracles.hpp"

using namespace avcert;
using fixtures::ideal_m;
using fixtures::order_R;
using fixtures::order_Zsqrtm3;
using fixtures::order_Ztau;
using fixtures::order_Zzeta3;

namespace {

OrderElement elem(const OrderRing& r, long a, long b, long c)
{
    return r.element({Rat(a), Rat(b), Rat(c)});
}

std::vector<IntVec> ideal_generator_rows(const OrderLattice& l)
{
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < l.rank(); ++i) {
        RatVec r = l.lat().basis_row(i);
        rows.push_back(to_int_vec(r));
    }
    return rows;
}

}  // namespace

TEST_SUITE("order_lattice")
{
    TEST_CASE("the maximal ideal m has index 2 (residue field F_2)")
    {
        const OrderLattice& m = ideal_m();
        CHECK(m.is_ideal_flagged());
        CHECK(m.lat().index_in(Lattice::standard(3)) == 2);
    }

    TEST_CASE("(2, 2tau) has index 4 via the minor-gcd oracle")
    {
        const OrderRing& r = order_R();
        auto ideal = ideal_from_generators(r, {elem(r, 2, 0, 0), elem(r, 0, 1, 0)});

        // Oracle: index = gcd of all 3x3 minors of the 6 product rows
        // g_i * b_j, computed with the closed-form determinant.
        std::vector<IntVec> rows;
        for (const auto& g : {elem(r, 2, 0, 0), elem(r, 0, 1, 0)}) {
            RatMat mm = r.mult_matrix(g.coords());
            for (std::size_t i = 0; i < 3; ++i) rows.push_back(to_int_vec(mm.row(i)));
        }
        Int gcd_minors = 0;
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = a + 1; b < rows.size(); ++b)
                for (std::size_t c = b + 1; c < rows.size(); ++c) {
                    const IntVec &x = rows[a], &y = rows[b], &z = rows[c];
                    Int det = x[0] * (y[1] * z[2] - y[2] * z[1]) -
                              x[1] * (y[0] * z[2] - y[2] * z[0]) +
                              x[2] * (y[0] * z[1] - y[1] * z[0]);
                    gcd_minors = int_gcd(gcd_minors, det);
                }
        REQUIRE(gcd_minors == 4);
        CHECK(ideal.lat().index_in(Lattice::standard(3)) == gcd_minors);
    }

    TEST_CASE("the unit ideal is R itself")
    {
        const OrderRing& r = order_R();
        auto one = ideal_from_generators(r, {r.one()});
        CHECK(one == unit_ideal(r));
    }

    TEST_CASE("odd multiples of 2tau^2 avoid (2, 2tau)")
    {
        const OrderRing& r = order_R();
        auto ideal = ideal_from_generators(r, {elem(r, 2, 0, 0), elem(r, 0, 1, 0)});

        // Residue-closure oracle: 2*Z^3 lies inside the ideal, so membership
        // can be decided modulo 2.
        auto gens = ideal_generator_rows(ideal);
        auto member = [&](long a, long b, long c) {
            return oracles::lattice_member_residue({Int(a), Int(b), Int(c)}, gens, Int(2));
        };
        REQUIRE_FALSE(member(0, 0, 1));
        REQUIRE_FALSE(member(0, 0, 3));
        REQUIRE(member(0, 0, 2));

        CHECK_FALSE(ideal_membership(elem(r, 0, 0, 1), ideal));  // 2tau^2
        CHECK_FALSE(ideal_membership(elem(r, 0, 0, 3), ideal));  // 3 * 2tau^2
        CHECK(ideal_membership(elem(r, 0, 0, 2), ideal));        // 2 * 2tau^2
        CHECK(ideal_membership(r.zero(), ideal));
        CHECK(ideal_membership(r.zero(), ideal_m()));
    }

    TEST_CASE("membership does not depend on the generating set")
    {
        const OrderRing& r = order_R();
        auto g = elem(r, 2, -1, 3);
        auto a = ideal_from_generators(r, {g});
        auto b = ideal_from_generators(r, {g, g + g});
        CHECK(a == b);
    }

    TEST_CASE("owner mismatch is rejected")
    {
        const OrderRing& r = order_R();
        const OrderRing& zt = order_Ztau();
        auto ideal = ideal_from_generators(r, {elem(r, 2, 0, 0)});
        CHECK_THROWS_AS(ideal_membership(zt.one(), ideal), Error);
    }

    TEST_CASE("colon lattice: (R : R) = R and (m : m) = Z[tau]")
    {
        const OrderRing& r = order_R();
        auto rr = colon_lattice(unit_ideal(r), unit_ideal(r));
        CHECK(rr == unit_ideal(r));

        // m = 2*Z[tau] as lattices, so (m : m) = Z[tau]: in R-coordinates
        // Z[tau] = <1, tau, tau^2> = rows {(1,0,0),(0,1/2,0),(0,0,1/2)}.
        RatMat ztau_rows(3, 3);
        ztau_rows.at(0, 0) = 1;
        ztau_rows.at(1, 1) = Rat(1, 2);
        ztau_rows.at(2, 2) = Rat(1, 2);
        Lattice ztau_in_r = Lattice::from_rows(ztau_rows);

        // Oracle for m = 2*Z[tau]: the ideal equals the scaled lattice.
        CHECK(ideal_m().lat() == ztau_in_r.scaled(Rat(2)));

        auto mm = colon_lattice(ideal_m(), ideal_m());
        CHECK(mm.lat() == ztau_in_r);

        // tau * m stays in m: independent spot check of the multiplier.
        RatVec tau_coords{Rat(0), Rat(1, 2), Rat(0)};
        for (std::size_t i = 0; i < ideal_m().rank(); ++i) {
            RatVec prod = r.mul(tau_coords, ideal_m().lat().basis_row(i));
            CHECK(ideal_m().lat().contains(prod));
        }
    }

    TEST_CASE("(R : m) strictly contains R")
    {
        const OrderRing& r = order_R();
        auto c = colon_lattice(unit_ideal(r), ideal_m());
        CHECK(c.lat().contains(unit_ideal(r).lat()));
        CHECK_FALSE(unit_ideal(r).lat().contains(c.lat()));
        // By hand: (R : 2*Z[tau]) = (1/2) * conductor = Z[tau].
        RatMat ztau_rows(3, 3);
        ztau_rows.at(0, 0) = 1;
        ztau_rows.at(1, 1) = Rat(1, 2);
        ztau_rows.at(2, 2) = Rat(1, 2);
        CHECK(c.lat() == Lattice::from_rows(ztau_rows));
    }

    TEST_CASE("(l1 : l2) * l2 is contained in l1, on random ideal pairs")
    {
        const OrderRing& r = order_R();
        std::mt19937_64 rng(31337);
        std::uniform_int_distribution<long> coef(-3, 3);
        int done = 0;
        while (done < 12) {
            OrderElement g1 = elem(r, coef(rng), coef(rng), coef(rng));
            OrderElement g2 = elem(r, coef(rng), coef(rng), coef(rng));
            OrderElement g3 = elem(r, coef(rng), coef(rng), coef(rng));
            if (g1.is_zero() || g2.is_zero() || g3.is_zero()) continue;
            auto l1 = ideal_from_generators(r, {g1, g2});
            auto l2 = ideal_from_generators(r, {g3});
            auto q = colon_lattice(l1, l2);
            for (std::size_t i = 0; i < q.rank(); ++i)
                for (std::size_t j = 0; j < l2.rank(); ++j) {
                    RatVec prod = r.mul(q.lat().basis_row(i), l2.lat().basis_row(j));
                    CHECK(l1.lat().contains(prod));
                }
            ++done;
        }
    }

    TEST_CASE("colon and ideal-quotient routes agree on field ideals")
    {
        // Two independent implementations of (l1 : l2) for ideals: the
        // pairing/preimage route and the inverse-transform route.
        const OrderRing& r = order_R();
        std::mt19937_64 rng(8080);
        std::uniform_int_distribution<long> coef(-3, 3);
        int done = 0;
        while (done < 10) {
            OrderElement g1 = elem(r, coef(rng), coef(rng), coef(rng));
            OrderElement g2 = elem(r, coef(rng), coef(rng), coef(rng));
            if (g1.is_zero() || g2.is_zero()) continue;
            auto l1 = ideal_from_generators(r, {g1});
            auto l2 = ideal_from_generators(r, {g2});
            auto a = colon_lattice(l1, l2);
            auto b = quotient_by_ideal(l1, l2);
            CHECK(a.lat() == b.lat());
            ++done;
        }
    }

    TEST_CASE("lattice sum and intersection sanity")
    {
        std::mt19937_64 rng(909);
        for (int t = 0; t < 25; ++t) {
            IntMat a = oracles::random_int_matrix(rng, 2, 3, -4, 4);
            IntMat b = oracles::random_int_matrix(rng, 2, 3, -4, 4);
            Lattice la = Lattice::from_rows(a), lb = Lattice::from_rows(b);
            Lattice meet = la.intersect(lb), join = la.sum(lb);
            CHECK(la.contains(meet));
            CHECK(lb.contains(meet));
            CHECK(join.contains(la));
            CHECK(join.contains(lb));
            CHECK(join.contains(meet));
            // Double intersection is idempotent.
            CHECK(meet.intersect(la) == meet);
        }
    }

    TEST_CASE("multiplier rings")
    {
        const OrderRing& r = order_R();
        CHECK(multiplier_ring(unit_ideal(r)) == r);
        CHECK(multiplier_ring(ideal_m()) == order_Ztau());

        // (2, 1 + sqrt(-3)) over Z[sqrt(-3)]: multiplier ring is the maximal
        // order Z[zeta_3]. In the basis {1, 2*zeta3}: 1 + sqrt(-3) = 2 + 2*zeta3.
        const OrderRing& zs = order_Zsqrtm3();
        REQUIRE(zs.basis_labels()[1] == "2*zeta3");
        auto ideal = ideal_from_generators(
            zs, {zs.element({Rat(2), Rat(0)}), zs.element({Rat(2), Rat(1)})});
        OrderRing mult = multiplier_ring(ideal);
        CHECK(mult == order_Zzeta3());
        // (1 + sqrt(-3))/2 = 1 + zeta3 must lie in the colon lattice.
        auto colon = colon_lattice(ideal, ideal);
        RatVec half_sum = zs.from_field({Rat(1), Rat(1)});
        CHECK(colon.lat().contains(half_sum));
    }

    TEST_CASE("isogeny to the maximal order: R inside Z[tau]")
    {
        const OrderRing& r = order_R();
        auto res = isogeny_to_maximal(r, order_Ztau(), unit_ideal(r));
        CHECK(res.n == 2);
        CHECK(multiplier_ring(res.lattice) == order_Ztau());
        // Delta = 2*Z[tau] = m.
        CHECK(res.delta.lat() == ideal_m().lat());
    }

    TEST_CASE("isogeny to the maximal order: Z[sqrt(-3)] inside Z[zeta3]")
    {
        const OrderRing& zs = order_Zsqrtm3();
        auto res = isogeny_to_maximal(zs, order_Zzeta3(), unit_ideal(zs));
        CHECK(res.n == 2);
        CHECK(multiplier_ring(res.lattice) == order_Zzeta3());
    }

    TEST_CASE("isogeny with r already maximal is the identity")
    {
        const OrderRing& zt = order_Ztau();
        auto res = isogeny_to_maximal(zt, zt, unit_ideal(zt));
        CHECK(res.n == 1);
        CHECK(res.lattice == unit_ideal(zt));
    }

    TEST_CASE("isogeny rejects a non-containing maximal order")
    {
        const OrderRing& r = order_R();
        CHECK_THROWS_AS(isogeny_to_maximal(order_Ztau(), r, unit_ideal(order_Ztau())), Error);
    }
}
