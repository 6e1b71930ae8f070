#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "kzeta/quadrature.hpp"

namespace kzeta {

using cplx = std::complex<double>;

// Spectral function eta(nu, p) holomorphic on |Re nu| <= sigma (sigma > 1),
// of rapid decay in |Im nu|; eta(nu,p) = eta(-nu,-p).
struct EtaFunction {
    std::function<cplx(cplx, int)> eval;
    double sigma = 2.0;
    double t_decay = 1.0;  // Gaussian-type scale used for truncation

    cplx operator()(cplx nu, int p) const { return eval(nu, p); }
};

// Pointwise product with the kernel at 2 pi tau sqrt(omega1 omega2);
// preserves the (nu,p) -> (-nu,-p) symmetry.
EtaFunction kappa_map(const EtaFunction& eta, cplx omega1, cplx omega2, cplx tau);

// Coefficient vector {v_m(r)}, |m| <= l, of the M-transform in the
// Phi^l_{m,q} basis at a[r].  The default route integrates the
// K-Bessel (alpha) expansion on the central contour; the exponential-side
// route shifts to (contour_shift) and uses the I-Bessel (beta) expansion
// plus the crossing term, and serves as a cross-check.
enum class MRoute { CentralAlpha, ShiftedBeta };
std::vector<cplx> m_transform(const EtaFunction& eta, int l, int q, cplx omega,
                              double r, const QuadratureSpec& spec = {},
                              MRoute route = MRoute::CentralAlpha);

// The Mellin-type pairing of (7.7): prefactor times int u_p(r) r^{-nu-2} dr,
// with the radial integral taken over [e^{x_lo}, e^{x_hi}].
cplx l_transform(const std::function<cplx(double)>& u_p, cplx nu, int p, int l,
                 int q, cplx omega, double x_lo = -8.0, double x_hi = 3.0,
                 const QuadratureSpec& spec = {});

// Full round trip: evaluate the M-transform, push it through the Jacquet
// zero-coefficient by direct 2D quadrature over the unipotent variable,
// Mellin-pair the radial coefficient, and compare with
//   (2/pi) nu^{eps(p)+1}/(p^2-nu^2) prod_{j<=l} (j^2-nu^2) eta(nu,p).
struct Theorem71Point {
    cplx nu;
    int p;
    cplx measured;
    cplx expected;
    cplx ratio;
};
struct Theorem71Report {
    std::vector<Theorem71Point> points;
    double max_ratio_spread = 0;  // |ratio - mean| / |mean|, the shared-constant check
};
Theorem71Report theorem_7_1_check(int l = 1, int q = 1,
                                  const QuadratureSpec& spec = {});

// lambda_l(nu,p) = Gamma(l+1+nu) Gamma(l+1-nu) (nu^{eps(p)} sin(pi nu)/(nu^2-p^2))^2
// (test helper for the spectral-weight bookkeeping).
cplx lambda_l_weight(int l, cplx nu, int p);

inline int eps_of_p(int p) { return p == 0 ? 1 : -1; }

}  // namespace kzeta
