#include <doctest.h>

#include "avcert/fixtures.hpp"
#include "avcert/unipoly.hpp"
#include "oracles.hpp"

using namespace avcert;

TEST_SUITE("unipoly")
{
    TEST_CASE("arithmetic and division basics")
    {
        UniPoly f = UniPoly::from_ints({-1, 0, 1});  // x^2 - 1
        UniPoly g = UniPoly::from_ints({1, 1});      // x + 1
        auto [q, r] = f.divmod(g);
        CHECK(r.is_zero());
        CHECK(q == UniPoly::from_ints({-1, 1}));
        CHECK(q * g == f);
        CHECK(g.divides(f));
        CHECK(f.eval(Rat(3)) == Rat(8));
    }

    TEST_CASE("minimal polynomial of the torus matrix M")
    {
        UniPoly mp = minpoly(fixtures::torus_M());
        CHECK(mp == fixtures::tau_minpoly());
        CHECK(mp.to_string() == "x^3 + x^2 - 2*x - 1");
        // minpoly(M)(M) = 0
        RatMat z = mp.eval(fixtures::torus_M().to_rat());
        CHECK(z.is_zero());
    }

    TEST_CASE("characteristic polynomial of the torus matrix X")
    {
        UniPoly cp = charpoly(fixtures::torus_X());
        // Claimed factorization, verified by expanding it.
        UniPoly xm1 = UniPoly::from_ints({-1, 1});
        UniPoly xm7 = UniPoly::from_ints({-7, 1});
        UniPoly expected = xm1.pow(4) * xm7.pow(2);
        CHECK(cp == expected);
        CHECK(minpoly(fixtures::torus_X()).divides(cp));
    }

    TEST_CASE("charpoly and minpoly of the zero matrix")
    {
        IntMat z(6, 6);
        UniPoly cp = charpoly(z);
        RatVec expect(7, Rat(0));
        expect[6] = 1;
        CHECK(cp == UniPoly(expect));
        CHECK(minpoly(z) == UniPoly::x());
    }

    TEST_CASE("Cayley-Hamilton on random 4x4 matrices")
    {
        std::mt19937_64 rng(777);
        for (int trial = 0; trial < 100; ++trial) {
            IntMat m = oracles::random_int_matrix(rng, 4, 4);
            UniPoly cp = charpoly(m);
            CHECK(cp.is_monic());
            CHECK(cp.eval(m.to_rat()).is_zero());
            UniPoly mp = minpoly(m);
            CHECK(mp.divides(cp));
            CHECK(mp.eval(m.to_rat()).is_zero());
        }
    }

    TEST_CASE("charpoly requires a square matrix")
    {
        IntMat m(2, 3);
        CHECK_THROWS_AS(charpoly(m), Error);
        CHECK_THROWS_AS(minpoly(m), Error);
    }

    TEST_CASE("determinant agrees with the rational eliminator")
    {
        std::mt19937_64 rng(4242);
        for (int trial = 0; trial < 50; ++trial) {
            IntMat m = oracles::random_int_matrix(rng, 4, 4, -6, 6);
            CHECK(Rat(m.det()) == m.to_rat().det());
        }
    }
}
