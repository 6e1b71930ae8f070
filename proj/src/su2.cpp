#include "kzeta/su2.hpp"

#include <cmath>
#include <stdexcept>

#include "kzeta/bessel.hpp"
#include "kzeta/gamma.hpp"
#include "kzeta/hecke_zeta.hpp"

namespace kzeta {

namespace {
const double PI = 3.14159265358979323846;

cplx ipow(cplx z, int n) {
    cplx out = 1.0;
    for (int i = 0; i < n; ++i) out *= z;
    return out;
}

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double out = 1.0;
    for (int j = 1; j <= k; ++j) out *= double(n - k + j) / double(j);
    return out;
}
}  // namespace

KElement::KElement(cplx a, cplx b) : alpha(a), beta(b) {
    double n2 = std::norm(a) + std::norm(b);
    if (std::abs(n2 - 1.0) > 1e-12)
        throw std::invalid_argument("KElement: |alpha|^2+|beta|^2 != 1");
}

KElement KElement::from_euler(double phi, double theta, double psi) {
    double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    cplx a = c * std::exp(cplx(0, 0.5 * (phi + psi)));
    cplx b = cplx(0, 1) * s * std::exp(cplx(0, 0.5 * (phi - psi)));
    return KElement(a, b);
}

KElement KElement::operator*(const KElement& o) const {
    // [[a, b], [-conj b, conj a]] matrix product
    cplx a = alpha * o.alpha - beta * std::conj(o.beta);
    cplx b = alpha * o.beta + beta * std::conj(o.alpha);
    return KElement(a, b);
}

cplx phi_coeff(int l, int p, int q, const KElement& k) {
    if (l < 0 || std::abs(p) > l || std::abs(q) > l) return 0.0;
    // coefficient of x^{l-p} in (a x - conj(b))^{l-q} (b x + conj(a))^{l+q}
    const cplx a = k.alpha, b = k.beta;
    const int target = l - p;
    cplx acc = 0.0;
    for (int j = std::max(0, target - (l + q)); j <= std::min(l - q, target); ++j) {
        int j2 = target - j;  // power of x from the second factor
        cplx t1 = binom(l - q, j) * ipow(a, j) * ipow(-std::conj(b), l - q - j);
        cplx t2 = binom(l + q, j2) * ipow(b, j2) * ipow(std::conj(a), l + q - j2);
        acc += t1 * t2;
    }
    return acc;
}

namespace {
RationalComplex rc_mul(const RationalComplex& x, const RationalComplex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
RationalComplex rc_pow(RationalComplex x, int n) {
    RationalComplex out{Rational(1), Rational(0)};
    for (int i = 0; i < n; ++i) out = rc_mul(out, x);
    return out;
}
}  // namespace

RationalComplex phi_coeff_exact(int l, int p, int q, const RationalComplex& alpha,
                                const RationalComplex& beta) {
    if (l > 8) throw std::invalid_argument("phi_coeff_exact: l > 8");
    if (l < 0 || std::abs(p) > l || std::abs(q) > l) return {Rational(0), Rational(0)};
    RationalComplex acc{Rational(0), Rational(0)};
    RationalComplex nbc{-beta.re, beta.im};        // -conj(beta)
    RationalComplex ac{alpha.re, -alpha.im};       // conj(alpha)
    const int target = l - p;
    for (int j = std::max(0, target - (l + q)); j <= std::min(l - q, target); ++j) {
        int j2 = target - j;
        RationalComplex t = rc_mul(rc_pow(alpha, j), rc_pow(nbc, l - q - j));
        t = rc_mul(t, rc_mul(rc_pow(beta, j2), rc_pow(ac, l + q - j2)));
        Rational c = binomial_rational(l - q, j) * binomial_rational(l + q, j2);
        acc.re += c * t.re;
        acc.im += c * t.im;
    }
    return acc;
}

double phi_norm(int l, int p, int q) {
    if (l < 0 || std::abs(p) > l || std::abs(q) > l)
        throw std::invalid_argument("phi_norm: index out of range");
    return std::sqrt(binom(2 * l, l - p) / binom(2 * l, l - q)) /
           std::sqrt(double(l) + 0.5);
}

std::vector<std::vector<cplx>> phi_matrix(int l, const KElement& k) {
    std::vector<std::vector<cplx>> m(2 * l + 1, std::vector<cplx>(2 * l + 1));
    for (int p = -l; p <= l; ++p)
        for (int q = -l; q <= l; ++q) m[p + l][q + l] = phi_coeff(l, p, q, k);
    return m;
}

double phi_norm_quadrature_sq(int l, int p, int q) {
    // (1/2) int_0^pi |Phi(theta)|^2 sin(theta) dtheta; the phi/psi phases drop.
    auto f = [&](double theta) -> cplx {
        KElement k(std::cos(0.5 * theta), cplx(0, 1) * std::sin(0.5 * theta));
        cplx v = phi_coeff(l, p, q, k);
        return std::norm(v) * std::sin(theta);
    };
    return 0.5 * integrate_gk(f, 0.0, PI, 1e-12).real();
}

Rational xi_coeff(int l, int p, int m, int b) {
    if (b < 0) return Rational(0);
    int h1 = (std::abs(m + p) + std::abs(m - p)) / 2;  // = max(|m|,|p|)
    int h2 = (std::abs(m + p) - std::abs(m - p)) / 2;
    Rational bin1 = binomial_rational(l - h1, b);
    Rational bin2 = binomial_rational(l - h2, b);
    if (bin1.is_zero() || bin2.is_zero()) return Rational(0);
    // b! (2l-b)! / ((l-p)! (l+p)!) assembled with interleaved division
    Rational r(1);
    for (int j = 1; j <= b; ++j) r *= Rational(j);
    {
        // (2l-b)! / ((l-p)!(l+p)!): multiply numerator terms while dividing
        int np = l - p, nq = l + p;
        int top = 2 * l - b;
        int i1 = 1, i2 = 1;
        for (int j = 1; j <= top; ++j) {
            r *= Rational(j);
            if (i1 <= np) { r /= Rational(i1); ++i1; }
            if (i2 <= nq) { r /= Rational(i2); ++i2; }
        }
        while (i1 <= np) { r /= Rational(i1); ++i1; }
        while (i2 <= nq) { r /= Rational(i2); ++i2; }
    }
    return r * bin1 * bin2;
}

double xi_coeff_d(int l, int p, int m, int b) { return xi_coeff(l, p, m, b).to_double(); }

cplx alpha_coeff(int l, int p, int m, cplx nu, double r) {
    if (!(r > 0)) throw std::domain_error("alpha_coeff: r <= 0");
    int jmax = l - (std::abs(m + p) + std::abs(m - p)) / 2;
    cplx acc = 0.0;
    for (int j = 0; j <= jmax; ++j) {
        double xi = xi_coeff_d(l, p, m, j);
        if (xi == 0.0) continue;
        cplx term = xi * std::pow(PI * r, double(l + 1 - j)) *
                    recip_gamma(nu + double(l + 1 - j)) *
                    bessel_K(nu + double(l - std::abs(m + p) - j), 2 * PI * r);
        acc += (j & 1) ? -term : term;
    }
    return acc;
}

cplx beta_coeff(int l, int p, int m, cplx nu, double r) {
    if (!(r > 0)) throw std::domain_error("beta_coeff: r <= 0");
    int jmax = l - (std::abs(m + p) + std::abs(m - p)) / 2;
    cplx acc = 0.0;
    for (int j = 0; j <= jmax; ++j) {
        double xi = xi_coeff_d(l, p, m, j);
        if (xi == 0.0) continue;
        acc += xi * std::pow(PI * r, double(l + 1 - j)) *
               recip_gamma(nu + double(l + 1 - j)) *
               bessel_I(nu + double(l - std::abs(m + p) - j), 2 * PI * r);
    }
    return acc;
}

double alpha_beta_link_residual(int l, int p, int m, cplx nu, double r) {
    cplx lhs = 2.0 / PI * (((l + p + m) & 1) ? -1.0 : 1.0) * std::sin(PI * nu) *
               gamma_fn(double(l + 1) + nu) * alpha_coeff(l, p, m, nu, r);
    cplx t1 = -gamma_fn(double(l + 1) + nu) * beta_coeff(l, p, m, nu, r);
    cplx t2 = gamma_fn(double(l + 1) - nu) * beta_coeff(l, -p, m, -nu, r);
    double scale = 1.0 + std::abs(t1) + std::abs(t2);
    return std::abs(lhs - (t1 + t2)) / scale;
}

cplx gw_coeff(int m, int n, cplx nu, int p, cplx omega) {
    cplx piw = PI * cplx(0, 1) * omega;
    cplx piwc = PI * cplx(0, 1) * std::conj(omega);
    cplx num = ipow(piw, m) * ipow(piwc, n);
    double fact = 1.0;
    for (int j = 2; j <= m; ++j) fact *= j;
    for (int j = 2; j <= n; ++j) fact *= j;
    return num / fact * recip_gamma(nu + 1.0 - double(p) + double(m)) *
           recip_gamma(nu + 1.0 + double(p) + double(n));
}

cplx eisenstein_fourier_coefficient(GaussInt omega, cplx nu, int p_even,
                                    const QuadratureSpec& spec) {
    if (omega.is_zero()) throw std::domain_error("eisenstein coefficient: omega = 0");
    if (p_even % 2 != 0)
        throw std::domain_error("eisenstein coefficient: p must be even");
    int P = p_even / 2;
    cplx z = zeta_F(1.0 + nu, P, spec).value;
    return sigma_nu(omega, -nu, p_even) / z;
}

}  // namespace kzeta
