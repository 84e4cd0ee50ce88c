#include <doctest.h>

#include <random>

#include "avcert/sympoly.hpp"

using namespace avcert;

namespace {

SymPoly random_sympoly(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> nterms(0, 5), var(0, 9), deg(0, 2), coef(-4, 4);
    SymPoly p;
    for (int t = nterms(rng); t > 0; --t) {
        Monomial m;
        m.e[var(rng)] = static_cast<std::uint8_t>(deg(rng));
        m.e[var(rng)] += 1;
        p = p + SymPoly::monomial(m, Rat(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_SUITE("sympoly")
{
    TEST_CASE("difference of squares")
    {
        SymPoly a1 = SymPoly::alpha(1), w = SymPoly::omega();
        SymPoly prod = (a1 + w) * (a1 - w);
        SymPoly expect = a1 * a1 - w * w;
        CHECK(prod == expect);
        CHECK(prod.term_count() == 2);
    }

    TEST_CASE("coefficient extraction")
    {
        SymPoly p = SymPoly::alpha(1) + SymPoly::constant(3) * SymPoly::omega() * SymPoly::omega();
        CHECK(p.coefficient_of(Monomial::var(kOmegaIndex, 2)) == Rat(3));
        CHECK(p.coefficient_of(Monomial::var(0)) == Rat(1));
        CHECK(p.coefficient_of(Monomial::one()) == Rat(0));
    }

    TEST_CASE("additive inverses cancel")
    {
        std::mt19937_64 rng(99);
        for (int t = 0; t < 50; ++t) {
            SymPoly p = random_sympoly(rng);
            CHECK((p + (-p)).is_zero());
        }
    }

    TEST_CASE("multiplication is commutative and associative")
    {
        std::mt19937_64 rng(123);
        for (int t = 0; t < 30; ++t) {
            SymPoly a = random_sympoly(rng), b = random_sympoly(rng), c = random_sympoly(rng);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }

    TEST_CASE("division by omega is an exact monomial shift")
    {
        SymPoly w = SymPoly::omega();
        SymPoly p = w * (SymPoly::alpha(2) + SymPoly::constant(5));
        auto q = p.divided_by_omega();
        REQUIRE(q.has_value());
        CHECK(*q == SymPoly::alpha(2) + SymPoly::constant(5));
        CHECK_FALSE((p + SymPoly::alpha(1)).divided_by_omega().has_value());
        CHECK(SymPoly().divided_by_omega().has_value());
    }

    TEST_CASE("constants and rendering")
    {
        SymPoly p = SymPoly::constant(Rat(-3)) * SymPoly::alpha(9) + SymPoly::omega();
        CHECK_FALSE(p.is_constant());
        CHECK(SymPoly::constant(Rat(7, 2)).constant_value() == Rat(7, 2));
        CHECK(SymPoly().is_constant());
        CHECK(SymPoly().constant_value() == 0);
        CHECK(p.to_string() == "w - 3*a9");
    }

    TEST_CASE("complex parts multiply like complex numbers")
    {
        SymComplex x(SymPoly::alpha(1), SymPoly::omega());
        SymComplex y(SymPoly::alpha(2), SymPoly::constant(2));
        SymComplex p = x * y;
        CHECK(p.re == SymPoly::alpha(1) * SymPoly::alpha(2) -
                          SymPoly::omega() * SymPoly::constant(2));
        CHECK(p.im == SymPoly::alpha(1) * SymPoly::constant(2) +
                          SymPoly::omega() * SymPoly::alpha(2));
        CHECK((x * x.conj()).im.is_zero());
    }
}
