#pragma once

#include <complex>
#include <vector>

#include "kzeta/gaussint.hpp"
#include "kzeta/quadrature.hpp"
#include "kzeta/rational.hpp"

namespace kzeta {

using cplx = std::complex<double>;

struct KTypeIndex {
    int l = 0, p = 0, q = 0;
    bool valid() const { return l >= 0 && std::abs(p) <= l && std::abs(q) <= l; }
};

// k[alpha, beta] with |alpha|^2 + |beta|^2 = 1.
struct KElement {
    cplx alpha{1.0, 0.0};
    cplx beta{0.0, 0.0};

    KElement() = default;
    KElement(cplx a, cplx b);

    static KElement from_euler(double phi, double theta, double psi);
    KElement operator*(const KElement& o) const;  // matrix product
};

// Matrix coefficient: the x^{l-p} coefficient of
// (alpha x - conj(beta))^{l-q} (beta x + conj(alpha))^{l+q}.
// Out-of-range (l,p,q) gives 0.
cplx phi_coeff(int l, int p, int q, const KElement& k);

// Exact-rational oracle for l <= 8 at rational points of SU(2):
// alpha = (a0 + a1 i)/m, beta = (b0 + b1 i)/m with a0^2+a1^2+b0^2+b1^2 = m^2.
struct RationalComplex {
    Rational re, im;
};
RationalComplex phi_coeff_exact(int l, int p, int q, const RationalComplex& alpha,
                                const RationalComplex& beta);

// Closed-form norm: (l+1/2)^{-1/2} C(2l,l-p)^{1/2} C(2l,l-q)^{-1/2}.
double phi_norm(int l, int p, int q);

// Full (2l+1)x(2l+1) matrix, rows/columns indexed by p,q = -l..l.
std::vector<std::vector<cplx>> phi_matrix(int l, const KElement& k);

// Quadrature of int_K |Phi^l_{p,q}|^2 dk with the normalized Haar measure;
// phi_norm(l,p,q)^2 / quadrature equals the constant kappa_norm = 2 for all
// (l,p,q) (the closed-form norm corresponds to Euler ranges of total mass 2).
double phi_norm_quadrature_sq(int l, int p, int q);
inline double kappa_norm() { return 2.0; }

// Expansion coefficient xi^l_p(m,b); exact rational, 0 out of range.
Rational xi_coeff(int l, int p, int m, int b);
double xi_coeff_d(int l, int p, int m, int b);

// Radial Jacquet coefficient: sum_j (-1)^j xi^l_p(m,j)
//   (pi r)^{l+1-j} / Gamma(nu+l+1-j) * K_{nu+l-|m+p|-j}(2 pi r).
cplx alpha_coeff(int l, int p, int m, cplx nu, double r);

// Same with I-Bessel and no sign alternation (exponential solution).
cplx beta_coeff(int l, int p, int m, cplx nu, double r);

// Scalar form of the alpha/beta link: residual (relative to the term sizes) of
//   2 pi^{-1} (-1)^{l+p+m} sin(pi nu) Gamma(l+1+nu) alpha^l_m(nu,p;r)
//     = -Gamma(l+1+nu) beta^l_m(nu,p;r) + Gamma(l+1-nu) beta^l_m(-nu,-p;r).
double alpha_beta_link_residual(int l, int p, int m, cplx nu, double r);

// a(m,n) = (pi i w)^m (pi i conj(w))^n / (m! n! Gamma(nu+1-p+m) Gamma(nu+1+p+n)).
cplx gw_coeff(int m, int n, cplx nu, int p, cplx omega);

// sigma_{-nu}(omega, p/2) / zeta_F(1+nu, p/2); p must be even.
cplx eisenstein_fourier_coefficient(GaussInt omega, cplx nu, int p_even,
                                    const QuadratureSpec& spec = {});

}  // namespace kzeta
