#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kzeta/gaussint.hpp"
#include "kzeta/hecke_zeta.hpp"

using namespace kzeta;

TEST_CASE("sigma examples") {
    CHECK(std::abs(sigma_nu({1, 0}, 0.0, 0) - cplx(1, 0)) < 1e-15);
    CHECK(std::abs(sigma_nu({2, 0}, 0.0, 0) - cplx(3, 0)) < 1e-14);
    CHECK(std::abs(sigma_nu({1, 1}, 0.0, 2)) < 1e-14);  // unit block +4, (1+i) block -4
}

TEST_CASE("sigma is multiplicative on coprime arguments") {
    cplx nu(0.3, 0.4);
    for (GaussInt m : lattice_by_norm(200)) {
        if (norm(m) < 2 || !(m.re > 0 && m.im >= 0)) continue;
        for (GaussInt n : {GaussInt{1, 1}, GaussInt{3, 0}, GaussInt{2, 1}}) {
            if (norm(gcd(m, n)) != 1) continue;
            for (int tp : {0, 2}) {
                cplx lhs = sigma_nu(m * n, nu, tp);
                cplx rhs = sigma_nu(m, nu, tp) * sigma_nu(n, nu, tp);
                CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(lhs)));
            }
        }
    }
}

TEST_CASE("zeta_F truncated against the classical product") {
    // zeta_F(s,0) = zeta(s) * beta(s); at s=2: zeta(2)*Catalan
    const double ref2 = 1.6449340668482264 * 0.9159655941772190;
    ZetaValue z2 = zeta_F_truncated(cplx(2, 0), 0, 300000);
    CHECK(std::abs(z2.value - ref2) <= z2.tail_bound);
    CHECK(std::abs(z2.value - ref2) < 2e-5);
    // s=3: zeta(3) * pi^3/32, radius chosen so the bound is below 1e-10
    const double ref3 = 1.2020569031595943 * 0.9689461462593694;
    ZetaValue z3 = zeta_F_truncated(cplx(3, 0), 0, 120000);
    CHECK(z3.tail_bound < 1e-9);
    CHECK(std::abs(z3.value - ref3) <= z3.tail_bound);
}

TEST_CASE("continued evaluation matches the truncated series in Re s > 1") {
    for (double sr : {1.5, 2.0, 2.75, 4.0})
        for (double si : {0.0, 1.0, -2.5})
            for (int p : {0, 1, 2}) {
                cplx s(sr, si);
                ZetaValue trunc = zeta_F_truncated(s, p, 200000);
                ZetaValue cont = zeta_F(s, p);
                CHECK(std::abs(trunc.value - cont.value) <=
                      trunc.tail_bound + cont.tail_bound +
                          1e-12 * (1.0 + std::abs(cont.value)));
            }
}

TEST_CASE("functional equation via the off-center split") {
    for (int p : {0, 1, 2, 3}) {
        CHECK(functional_equation_residual(cplx(0.3, 2.0), p) < 1e-10);
        CHECK(functional_equation_residual(cplx(0.7, -1.2), p) < 1e-10);
        CHECK(functional_equation_residual(cplx(0.5, 0.33), p) < 1e-10);
    }
}

TEST_CASE("pole of zeta_F at s=1 has residue pi/4") {
    double prev = 0;
    for (double eps : {1e-2, 1e-3, 1e-4}) {
        cplx v = zeta_F(cplx(1.0 + eps, 0.0), 0).value;
        prev = (v * eps).real();
    }
    CHECK(std::abs(prev - 3.14159265358979 / 4) < 1e-3);
}

TEST_CASE("ramanujan identity over F") {
    QuadratureSpec spec;
    spec.lattice_radius = 10000;
    CHECK(ramanujan_identity_residual({1, 0}, cplx(3, 0), 0, spec) < 1e-4);
    CHECK(ramanujan_identity_residual({1, 1}, cplx(2.5, 0), 2, spec) < 1e-3);
    QuadratureSpec zspec;
    zspec.lattice_radius = 400000;
    CHECK(ramanujan_identity_residual({0, 0}, cplx(3, 0), 0, zspec) < 1e-4);
    CHECK_THROWS_AS(ramanujan_identity_residual({1, 0}, cplx(1.5, 0), 0, spec),
                    std::domain_error);
}

TEST_CASE("sigma product identity") {
    QuadratureSpec spec;
    spec.lattice_radius = 20000;
    CHECK(ramanujan_product_residual(0, 0, 0, 0.0, 0.0, cplx(3, 0), spec) < 1e-6);
    CHECK(ramanujan_product_residual(1, 0, 0, 0.0, 0.0, cplx(3, 0), spec) < 1e-6);
    CHECK(ramanujan_product_residual(0, 1, -1, cplx(0.2, 0.1), cplx(-0.3, 0), cplx(3.5, 0),
                                     spec) < 1e-6);
    CHECK_THROWS_AS(
        ramanujan_product_residual(0, 0, 0, cplx(2.5, 0), 0.0, cplx(1.2, 0), spec),
        std::domain_error);
}
