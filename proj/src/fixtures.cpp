#include "avcert/fixtures.hpp"

namespace avcert::fixtures {

UniPoly tau_minpoly() { return UniPoly::from_ints({-1, -2, 1, 1}); }

const OrderRing& order_R()
{
    static const OrderRing r = [] {
        UniPoly two_tau = UniPoly::from_ints({0, 2});
        UniPoly two_tau_sq = UniPoly::from_ints({0, 0, 2});
        return order_from_minpoly(tau_minpoly(), {two_tau, two_tau_sq}, "tau");
    }();
    return r;
}

const OrderRing& order_Ztau()
{
    static const OrderRing r =
        order_from_minpoly(tau_minpoly(), {UniPoly::x()}, "tau");
    return r;
}

const OrderLattice& ideal_m()
{
    static const OrderLattice m = [] {
        const OrderRing& r = order_R();
        std::vector<OrderElement> gens = {
            r.element({Rat(2), Rat(0), Rat(0)}),
            r.element({Rat(0), Rat(1), Rat(0)}),
            r.element({Rat(0), Rat(0), Rat(1)}),
        };
        return ideal_from_generators(r, gens);
    }();
    return m;
}

const OrderRing& order_Zi()
{
    static const OrderRing r =
        order_from_minpoly(UniPoly::from_ints({1, 0, 1}), {UniPoly::x()}, "i");
    return r;
}

const OrderRing& order_Zzeta3()
{
    static const OrderRing r =
        order_from_minpoly(UniPoly::from_ints({1, 1, 1}), {UniPoly::x()}, "zeta3");
    return r;
}

const OrderRing& order_Zsqrtm3()
{
    // sqrt(-3) = 1 + 2*zeta_3 inside Q(zeta_3).
    static const OrderRing r =
        order_from_minpoly(UniPoly::from_ints({1, 1, 1}), {UniPoly::from_ints({1, 2})}, "zeta3");
    return r;
}

const OrderRing& order_Z()
{
    static const OrderRing r = order_from_minpoly(UniPoly::x(), {}, "x");
    return r;
}

const IntMat& torus_M()
{
    static const IntMat m = [] {
        const long block[3][3] = {{0, 0, 1}, {1, 0, 2}, {0, 1, -1}};
        IntMat x(6, 6);
        for (int b = 0; b < 2; ++b)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) x.at(3 * b + i, 3 * b + j) = block[i][j];
        return x;
    }();
    return m;
}

const IntMat& torus_X()
{
    static const IntMat m = [] {
        const long block[3][3] = {{2, -1, 2}, {-1, 2, -2}, {2, -2, 5}};
        IntMat x(6, 6);
        for (int b = 0; b < 2; ++b)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) x.at(3 * b + i, 3 * b + j) = block[i][j];
        return x;
    }();
    return m;
}

}  // namespace avcert::fixtures
