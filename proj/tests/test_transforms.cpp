#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kzeta/gamma.hpp"
#include "kzeta/transforms.hpp"

using namespace kzeta;

static const double PI = 3.14159265358979323846;

TEST_CASE("mellin--fourier basics") {
    // rotation-invariant f has no higher angular coefficients
    TestFunctionC f = annulus_bump_radial();
    CHECK(std::abs(mellin_fourier(f, cplx(0.4, 0.2), 1)) < 1e-12);
    CHECK(std::abs(mellin_fourier(f, cplx(0.4, 0.2), -3)) < 1e-12);
    // gaussian: Mf(nu,0) = Gamma(nu)/2
    TestFunctionC g;
    g.eval = [](cplx u) -> cplx { return std::exp(-std::norm(u)); };
    g.sigma0 = 0.0;
    for (cplx nu : {cplx(0.7, 0.0), cplx(1.2, 0.9)}) {
        cplx v = mellin_fourier(g, nu, 0);
        CHECK(std::abs(v - 0.5 * gamma_fn(nu)) < 1e-9);
    }
    // scaling f(u) -> f(cu) multiplies Mf by |c|^{-2nu}
    double c = 1.7;
    TestFunctionC gc;
    gc.eval = [c](cplx u) -> cplx { return std::exp(-std::norm(c * u)); };
    gc.sigma0 = 0.0;
    cplx nu(0.8, 0.3);
    cplx lhs = mellin_fourier(gc, nu, 0);
    cplx rhs = std::exp(-2.0 * nu * std::log(c)) * mellin_fourier(g, nu, 0);
    CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("k_transform linearity and symmetry") {
    TestFunctionC f = annulus_bump_cos2();
    TestFunctionC g = annulus_bump_radial();
    TestFunctionC fg;
    fg.eval = [&](cplx u) { return f(u) + g(u); };
    fg.r_min = 1.0;
    fg.r_max = 2.0;
    SpectralParam sp{cplx(0, 0.8), 1};
    cplx a = k_transform(f, sp), b = k_transform(g, sp), c = k_transform(fg, sp);
    CHECK(std::abs(a + b - c) < 1e-9);
    CHECK(std::abs(k_transform(f, sp) - k_transform(f, {cplx(0, -0.8), -1})) < 1e-9);
}

TEST_CASE("quadrature route vs series route for Kf") {
    TestFunctionC f = annulus_bump_radial();
    for (SpectralParam sp : {SpectralParam{cplx(0, 0.6), 0}, SpectralParam{cplx(0, 1.3), 1}}) {
        cplx quad = k_transform(f, sp);
        cplx series = k_transform_series(f, sp);
        CHECK(std::abs(quad - series) < 1e-6);
    }
}

TEST_CASE("Kf decays in (nu, p)") {
    TestFunctionC f = annulus_bump_cos2();
    double base = std::abs(k_transform(f, {cplx(0, 1.0), 1}));
    double far_p = std::abs(k_transform(f, {cplx(0, 1.0), 9}));
    double far_t = std::abs(k_transform(f, {cplx(0, 16.0), 1}));
    CHECK(far_p < 1e-10 * base);   // measured: ~1e-13 absolute by p = 9
    CHECK(far_t < 0.01 * base);    // slow spectral decay in |nu|
}

TEST_CASE("b_transform basics") {
    TestFunctionSpec h;
    h.eval = [](cplx nu, int p) -> cplx {
        return std::exp(nu * nu - double(p) * double(p));
    };
    h.decay_scale = 1.0;
    // h == 0 gives 0
    TestFunctionSpec z;
    z.eval = [](cplx, int) -> cplx { return 0.0; };
    CHECK(std::abs(b_transform(z, cplx(0.5, 0.2))) < 1e-12);
    // small-u trend |Bh(u)| <= C |u|^{1+eps}: halving u at least halves Bh
    double b1 = std::abs(b_transform(h, cplx(0.2, 0)));
    double b2 = std::abs(b_transform(h, cplx(0.1, 0)));
    double b3 = std::abs(b_transform(h, cplx(0.05, 0)));
    CHECK(b2 < 0.6 * b1);
    CHECK(b3 < 0.6 * b2);
}

TEST_CASE("bessel operator eigen-relation through the K transform") {
    // smooth log-gaussian bump: K(b_u f) = (nu - p)^2 Kf
    TestFunctionC f;
    f.eval = [](cplx u) -> cplx {
        double x = std::log(std::abs(u));
        return std::exp(-6.0 * x * x) * std::cos(2.0 * std::arg(u));
    };
    f.r_min = 0.05;
    f.r_max = 20.0;
    TestFunctionC bf = bessel_operator(f);
    for (SpectralParam sp : {SpectralParam{cplx(0, 0.9), 0}, SpectralParam{cplx(0, 0.4), 1}}) {
        cplx lhs = k_transform(bf, sp, QuadratureSpec{}.with_tol(1e-8));
        cplx rhs = (sp.nu - double(sp.p)) * (sp.nu - double(sp.p)) *
                   k_transform(f, sp, QuadratureSpec{}.with_tol(1e-8));
        CHECK(std::abs(lhs - rhs) < 1e-5 * (1 + std::abs(rhs)));
    }
    // b_u(u^2) = 4u^2 + u^4 on a monomial probe
    TestFunctionC mono;
    mono.eval = [](cplx u) -> cplx { return u * u; };
    mono.r_min = 0.1;
    mono.r_max = 3.0;
    TestFunctionC bmono = bessel_operator(mono);
    cplx u(0.8, 0.5);
    CHECK(std::abs(bmono(u) - (4.0 * u * u + u * u * u * u)) < 1e-7);
}
