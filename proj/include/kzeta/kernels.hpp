#pragma once

#include <complex>

#include "kzeta/quadrature.hpp"

namespace kzeta {

using cplx = std::complex<double>;

// Spectral parameter (nu, p), identified with (-nu, -p).
struct SpectralParam {
    cplx nu;
    int p = 0;

    SpectralParam canonical() const {
        if (nu.real() > 0 || (nu.real() == 0 && nu.imag() >= 0)) return *this;
        return {-nu, -p};
    }
};

// |u/2|^{2 nu} (u/|u|)^{-2p} J*_{nu-p}(u) J*_{nu+p}(conj u).
cplx j_kernel(const SpectralParam& sp, cplx u);

// (J_{-nu,-p}(u) - J_{nu,p}(u)) / sin(pi nu); Hankel closed form at
// integer nu (removable singularity).
cplx k_kernel(const SpectralParam& sp, cplx u);

// The kernel as a one-dimensional oscillatory integral
//   (-1)^p (2/pi) int_0^inf y^{2nu-1} (w/|w|)^{2p} J_{2p}(|u| |w|) dy,
// w = y e^{i arg u} + (y e^{i arg u})^{-1}; requires |Re nu| < 1/4.
cplx k_kernel_integral(const SpectralParam& sp, cplx u,
                       const QuadratureSpec& spec = {});

// 2q-th angular Fourier coefficient of the kernel:
//   (-1)^{max(|p|,|q|)} (2/pi) int_0^inf y^{2nu-1} J_{|p+q|}(ry) J_{|p-q|}(r/y) dy.
cplx k_fourier_coeff(const SpectralParam& sp, double r, int q,
                     const QuadratureSpec& spec = {});

// Angular Fourier coefficient by direct theta-quadrature of k_kernel (oracle).
cplx k_fourier_coeff_direct(const SpectralParam& sp, double r, int q, int n_theta = 256);

// Mellin transform of the 2q-th coefficient, closed gamma-quotient form;
// valid on 2|Re nu| < Re s < 1 - 2|Re nu|.
cplx k_mellin(const SpectralParam& sp, cplx s, int q);

// Inverse Mellin of k_mellin along Re s = sigma (independent route back to
// the Fourier coefficient).
cplx k_fourier_from_mellin(const SpectralParam& sp, double r, int q,
                           double sigma = 0, double t_max = 0,
                           double tol = 1e-9);

// Marching panel integrator for int_0^T f with locally frequency-sized
// panels; refines by doubling the density until two sweeps agree.
cplx oscillatory_integral(const std::function<cplx(double)>& f,
                          const std::function<double(double)>& frequency,
                          double T, double tol);

}  // namespace kzeta
