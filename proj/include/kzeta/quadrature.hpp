#pragma once

#include <complex>
#include <functional>

namespace kzeta {

using cplx = std::complex<double>;

// Contour placement, truncation radii and tolerance for the numerical
// integrals and lattice sums.  Zero fields mean "operation default".
struct QuadratureSpec {
    double tol = 1e-8;
    double lattice_radius = 0;  // norm truncation for lattice sums
    double contour_shift = 0;   // Re-part placement of vertical contours
    double t_max = 0;           // height truncation of vertical contours
    int p_max = 0;              // angular/K-type truncation
    int max_intervals = 200000;

    QuadratureSpec with_tol(double t) const {
        QuadratureSpec s = *this;
        s.tol = t;
        return s;
    }
};

// Adaptive Gauss7/Kronrod15 on [a,b]; absolute tolerance.
cplx integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                  double tol, int max_intervals = 20000);

// Uniform trapezoid for 2*pi-periodic integrands: int_0^{2pi} f.
cplx trapezoid_periodic(const std::function<cplx(double)>& f, int n);

// int_a^infty by doubling panels; stops when two consecutive panels fall
// below tol.  Suitable once the integrand decays (oscillation allowed).
cplx integrate_semi_infinite(const std::function<cplx(double)>& f, double a,
                             double tol, double first_panel = 1.0,
                             int max_panels = 60);

// Vertical-line integral int_{sigma-iT}^{sigma+iT} f(s) ds (with ds = i dt).
cplx integrate_vertical(const std::function<cplx(cplx)>& f, double sigma,
                        double t_max, double tol);

}  // namespace kzeta
