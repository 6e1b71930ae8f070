#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "kzeta/kernels.hpp"
#include "kzeta/parallel.hpp"
#include "kzeta/quadrature.hpp"

namespace kzeta {

// Test function on C^x with support/decay metadata.
struct TestFunctionC {
    std::function<cplx(cplx)> eval;
    bool even = true;
    double r_min = 0;   // support annulus (0,0 = decay-based)
    double r_max = 0;
    double sigma0 = 1;  // f(u) = O(|u|^{2 sigma0}) as u -> 0 when unsupported
    double rho = 0.4;

    cplx operator()(cplx u) const { return eval(u); }
};

// Test function on the spectral set (nu on the axis/strip) x Z.
struct TestFunctionSpec {
    std::function<cplx(cplx, int)> eval;
    double strip = 0.5;      // holomorphy half-width
    double decay_scale = 1;  // Gaussian-type scale for truncation heuristics

    cplx operator()(cplx nu, int p) const { return eval(nu, p); }
};

// K f(nu,p) = int_{C^x} K_{nu,p}(u) f(u) d^x u   (2D polar quadrature).
cplx k_transform(const TestFunctionC& f, const SpectralParam& sp,
                 const QuadratureSpec& spec = {});

// J f(nu,p), same with the J-kernel.
cplx j_transform(const TestFunctionC& f, const SpectralParam& sp,
                 const QuadratureSpec& spec = {});

// Series route through Mellin--Fourier coefficients (cross-check for Kf).
cplx j_transform_series(const TestFunctionC& f, const SpectralParam& sp,
                        const QuadratureSpec& spec = {});
cplx k_transform_series(const TestFunctionC& f, const SpectralParam& sp,
                        const QuadratureSpec& spec = {});

// M f(nu,p) = int_0^inf f_p(r) r^{2nu-1} dr with f_p the 2p-th angular coeff.
cplx mellin_fourier(const TestFunctionC& f, cplx nu, int p,
                    const QuadratureSpec& spec = {});

// B h(u) = sum_p (1/8 pi i) int_{(0)} K_{nu,p}(u) h(nu,p) (p^2-nu^2) dnu.
cplx b_transform(const TestFunctionSpec& h, cplx u, const QuadratureSpec& spec = {});

// b_u = (u d_u)^2 + u^2, applied through central differences in (log r, theta).
TestFunctionC bessel_operator(const TestFunctionC& f, double h_log = 1e-4);

// ---- sampled-grid machinery shared by the inversion and sum-formula checks ----

// Kf sampled on the grid (nu = i t_j, p), t_j = j*dt, |p| <= p_max,
// with the (nu,p) -> (-nu,-p) symmetry supplying the lower half.
struct KTransformGrid {
    double dt = 0;
    int n_t = 0;
    int p_max = 0;
    std::vector<cplx> val;  // [(p + p_max) * n_t + j]

    cplx at(int p, int j) const { return val[(p + p_max) * (size_t)n_t + j]; }
};

KTransformGrid k_transform_grid(const TestFunctionC& f, double dt, double t_max,
                                int p_max, const QuadratureSpec& spec = {},
                                Exec exec = Exec::Parallel);

// 2 pi B applied to a sampled K-transform, evaluated at u.
cplx b_of_grid(const KTransformGrid& g, cplx u);

// sum_p int_{(0)} Kf(nu,p)(p^2-nu^2) dnu from the sampled grid.
cplx spectral_weight_sum(const KTransformGrid& g);

// The fixed even bump profiles used by the flagship checks.
double annulus_bump(double r);                    // C^inf bump on [1,2], peak 1
TestFunctionC annulus_bump_cos2();                // bump(|u|) cos(2 arg u)
TestFunctionC annulus_bump_radial();              // bump(|u|)

struct InversionReport {
    double sup_error = 0;      // sup |2pi B(Kf) - f| over the polar grid
    double lemma_sum = 0;      // |sum_p int Kf (p^2 - nu^2) dnu|
    double symmetry_gap = 0;   // max |Kf(nu,p) - Kf(-nu,-p)| over samples
    int p_max = 0;
    double t_max = 0;
};
InversionReport inversion_check(double dt = 0.1, double t_max = 26.0, int p_max = 14,
                                const QuadratureSpec& spec = {});

}  // namespace kzeta
