#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kzeta/kernels.hpp"
#include "kzeta/lebedev.hpp"
#include "kzeta/su2.hpp"
#include "kzeta/gamma.hpp"

using namespace kzeta;

static EtaFunction gauss_eta() {
    EtaFunction eta;
    eta.eval = [](cplx nu, int) { return std::exp(nu * nu); };
    return eta;
}

TEST_CASE("m_transform: the two contour routes agree") {
    EtaFunction eta = gauss_eta();
    for (double r : {0.35, 1.1}) {
        auto a = m_transform(eta, 1, 1, cplx(1, 0), r, {}, MRoute::CentralAlpha);
        auto b = m_transform(eta, 1, 1, cplx(1, 0), r, {}, MRoute::ShiftedBeta);
        for (int m = -1; m <= 1; ++m)
            CHECK(std::abs(a[m + 1] - b[m + 1]) < 1e-10);
    }
    // zero eta gives the zero vector
    EtaFunction z;
    z.eval = [](cplx, int) { return cplx(0, 0); };
    for (cplx v : m_transform(z, 1, 0, cplx(1, 0), 0.8)) CHECK(std::abs(v) < 1e-14);
}

TEST_CASE("m_transform decay in r") {
    EtaFunction eta = gauss_eta();
    auto v2 = m_transform(eta, 1, 1, cplx(1, 0), 2.0);
    auto v4 = m_transform(eta, 1, 1, cplx(1, 0), 4.0);
    for (int m = -1; m <= 1; ++m)
        CHECK(std::abs(v4[m + 1]) < 0.05 * std::abs(v2[m + 1]) + 1e-12);
}

TEST_CASE("kappa map") {
    EtaFunction eta = gauss_eta();
    EtaFunction ke = kappa_map(eta, cplx(1, 0), cplx(1, 0), cplx(0.4, 0.1));
    cplx nu(0, 0.7);
    int p = 2;
    cplx expect = k_kernel({nu, p}, 2.0 * 3.14159265358979323846 * cplx(0.4, 0.1)) *
                  eta(nu, p);
    CHECK(std::abs(ke(nu, p) - expect) < 1e-12);
    // symmetry preserved
    CHECK(std::abs(ke(nu, p) - ke(-nu, -p)) < 1e-12);
    // small tau sends the kernel (and the image) to zero
    EtaFunction ks = kappa_map(eta, cplx(1, 0), cplx(1, 0), cplx(1e-3, 0));
    CHECK(std::abs(ks(cplx(0, 0.5), 1)) < 1e-4);
    CHECK_THROWS_AS(kappa_map(eta, cplx(0, 0), cplx(1, 0), cplx(1, 0)),
                    std::domain_error);
}

TEST_CASE("l_transform on a power-law coefficient") {
    // u_p(r) = r^{1+k} on (0,1]: the radial integral is 1/(k - nu), so the
    // transform equals its closed form
    double k = 1.7;
    auto u_p = [k](double r) -> cplx { return r <= 1.0 ? std::pow(r, 1.0 + k) : 0.0; };
    cplx nu(0, 0.6);
    int l = 1, p = 1, q = 0;
    cplx got = l_transform(u_p, nu, p, l, q, cplx(1, 0), -30.0, 0.0);
    cplx integral = 1.0 / (k - nu);
    cplx pre = got / integral;  // remaining prefactor, checked against (7.7)
    cplx expect_pre = std::exp(-2.0 * std::log(3.14159265358979323846) +
                               nu * std::log(3.14159265358979323846)) *
                      std::pow(cplx(0, -1), double(p)) * phi_norm(l, p, q) *
                      gamma_fn(double(l + 1) - nu);
    CHECK(std::abs(pre - expect_pre) < 1e-8 * std::abs(expect_pre));
    auto zero = [](double) -> cplx { return 0.0; };
    CHECK(std::abs(l_transform(zero, nu, p, l, q, cplx(1, 0))) < 1e-14);
}

TEST_CASE("lambda weight helper") {
    cplx v = lambda_l_weight(2, cplx(0, 0.8), 1);
    CHECK(std::isfinite(v.real()));
    CHECK(std::abs(lambda_l_weight(1, cplx(0, 0.5), 0) -
                   lambda_l_weight(1, cplx(0, -0.5), 0)) < 1e-12);
}
