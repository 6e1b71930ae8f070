#include "kzeta/bessel.hpp"

#include <cmath>
#include <vector>

#include "kzeta/gamma.hpp"

namespace kzeta {

namespace {

const double PI = 3.14159265358979323846;
const double EULER_GAMMA = 0.57721566490153286061;

double besselJ_series(int n, double x) {  // n >= 0, small x
    double w = 0.25 * x * x;
    double t = 1.0;
    for (int k = 1; k <= n; ++k) t *= 0.5 * x / k;
    double sum = t;
    for (int k = 1; k < 200; ++k) {
        t *= -w / (double(k) * double(n + k));
        sum += t;
        if (std::abs(t) < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

double besselJ_miller(int n, double x) {  // backward recurrence
    int m = int(std::max<double>(n, x)) + 20 + int(std::sqrt(40.0 * std::max(1.0, x)));
    m += m & 1;  // even start
    double jp = 0.0, jc = 1e-300, result = 0.0, norm = 0.0;
    for (int k = m; k >= 1; --k) {
        double jm = (2.0 * k / x) * jc - jp;
        jp = jc;
        jc = jm;
        if (std::abs(jc) > 1e250) {  // rescale
            jc *= 1e-250;
            jp *= 1e-250;
            result *= 1e-250;
            norm *= 1e-250;
        }
        if (k - 1 == n) result = jc;
        if (((k - 1) & 1) == 0) norm += (k - 1 == 0) ? jc : 2.0 * jc;
    }
    return result / norm;
}

double besselJ_asymptotic(int n, double x) {  // Hankel expansion, x >> n^2
    double mu = 4.0 * double(n) * double(n);
    double p = 1.0, q = 0.0;
    double t = 1.0;
    double prev = 1e300;
    for (int k = 1; k < 40; ++k) {
        t *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * x * k);
        if (std::abs(t) > prev) break;  // truncate at the smallest term
        prev = std::abs(t);
        switch (k & 3) {
            case 0: p += t; break;
            case 1: q += t; break;
            case 2: p -= t; break;
            case 3: q -= t; break;
        }
        if (std::abs(t) < 1e-17) break;
    }
    double chi = x - (0.5 * n + 0.25) * PI;
    return std::sqrt(2.0 / (PI * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double bessel_J(int n, double x) {
    double sign = 1.0;
    if (n < 0) {
        n = -n;
        if (n & 1) sign = -sign;
    }
    if (x < 0) {
        x = -x;
        if (n & 1) sign = -sign;
    }
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x <= 8.0) return sign * besselJ_series(n, x);
    if (x >= std::max(40.0, 1.4 * double(n) * double(n) + 20.0))
        return sign * besselJ_asymptotic(n, x);
    return sign * besselJ_miller(n, x);
}

cplx bessel_I(cplx nu, double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_I: x <= 0");
    if (x > 700.0) throw ConvergenceError("bessel_I: argument too large");
    double w = 0.25 * x * x;
    // first nonzero term index (negative integer orders start late)
    int k0 = 0;
    if (nu.imag() == 0.0 && nu.real() < 0.0 && nu.real() == std::floor(nu.real()))
        k0 = int(-nu.real());
    cplx lg = (nu + double(2 * k0)) * std::log(0.5 * x);
    cplx t = std::exp(lg) * recip_gamma(nu + double(k0 + 1));
    for (int k = 1; k <= k0; ++k) t /= double(k);
    cplx sum = t;
    for (int k = k0 + 1; k < 400; ++k) {
        t *= w / (double(k) * (nu + double(k)));
        sum += t;
        if (std::abs(t) < 1e-18 * (std::abs(sum) + 1e-300)) return sum;
    }
    throw ConvergenceError("bessel_I: series stalled");
}

namespace {

// CF2 (Thompson--Barnett) for K_mu, K_{mu+1} with |Re mu| <= 1/2, x > 2.
void besselK_cf2(cplx mu, double x, cplx& kmu, cplx& kmu1) {
    const int maxit = 20000;
    cplx mu2 = mu * mu;
    cplx b = 2.0 * (1.0 + x);
    cplx d = 1.0 / b;
    cplx h = d, delh = d;
    cplx q1 = 0.0, q2 = 1.0;
    cplx a1 = 0.25 - mu2;
    cplx q = a1, c = a1;
    cplx a = -a1;
    cplx s = 1.0 + q * delh;
    int i;
    for (i = 2; i <= maxit; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / double(i);
        cplx qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        cplx dels = q * delh;
        s += dels;
        if (std::abs(dels) <= 1e-16 * std::abs(s)) break;
    }
    if (i > maxit) throw ConvergenceError("bessel_K: CF2 stalled");
    h = a1 * h;
    kmu = std::sqrt(PI / (2.0 * x)) * std::exp(-x) / s;
    kmu1 = kmu * (mu + x + 0.5 - h) / x;
}

cplx besselK_via_I(cplx nu, double x) {  // (I_{-nu} - I_nu) route, off-integer nu
    return PI / (2.0 * std::sin(PI * nu)) * (bessel_I(-nu, x) - bessel_I(nu, x));
}

double besselK_int_series(int n, double x) {  // classical log series, small x
    double half = 0.5 * x, w = half * half;
    double out = 0.0;
    if (n > 0) {
        double t = std::pow(half, -n);
        double fact = 1.0;
        for (int k = 1; k <= n - 1; ++k) fact *= k;  // (n-1)!
        for (int k = 0; k <= n - 1; ++k) {
            out += 0.5 * fact * t;
            t *= -w;
            if (k < n - 1) fact /= double(n - 1 - k) * double(k + 1);
        }
    }
    out += (n & 1 ? 1.0 : -1.0) * std::log(half) * bessel_I(cplx(n, 0), x).real();
    double psi1 = -EULER_GAMMA, psi2 = -EULER_GAMMA;
    for (int j = 1; j <= n; ++j) psi2 += 1.0 / j;
    double t = std::pow(half, n);
    for (int k = 1; k <= n; ++k) t /= double(k);
    double acc = 0.0;
    for (int k = 0; k < 300; ++k) {
        double piece = (psi1 + psi2) * t;
        acc += piece;
        t *= w / (double(k + 1) * double(n + k + 1));
        psi1 += 1.0 / double(k + 1);
        psi2 += 1.0 / double(n + k + 1);
        if (std::abs(piece) < 1e-18 * (std::abs(acc) + 1e-300)) break;
    }
    out += (n & 1 ? -1.0 : 1.0) * 0.5 * acc;
    return out;
}

}  // namespace

cplx bessel_K(cplx nu, double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_K: x <= 0");
    if (nu.real() < 0.0) nu = -nu;  // K_{-nu} = K_nu
    if (x > 4.0) {
        int n = (int)std::lround(nu.real());
        cplx mu = nu - double(n);
        cplx kmu, kmu1;
        besselK_cf2(mu, x, kmu, kmu1);
        for (int k = 0; k < n; ++k) {
            cplx knext = kmu + (2.0 * (mu + double(k + 1)) / x) * kmu1;
            kmu = kmu1;
            kmu1 = knext;
        }
        return kmu;
    }
    double dist = std::abs(nu.real() - std::round(nu.real()));
    if (nu.imag() == 0.0 && dist == 0.0)
        return besselK_int_series((int)std::lround(nu.real()), x);  // x <= 4 here
    if (nu.imag() != 0.0 || dist > 1e-4) return besselK_via_I(nu, x);
    // nearly integer real order: epsilon limit, Richardson-extrapolated
    double n = std::round(nu.real());
    auto avg = [&](double eps) {
        return 0.5 * (besselK_via_I(cplx(n + eps, nu.imag()), x) +
                      besselK_via_I(cplx(n - eps, nu.imag()), x));
    };
    const double eps = 1e-5;
    cplx a1 = avg(eps), a2 = avg(0.5 * eps);
    return (4.0 * a2 - a1) / 3.0;  // O(eps^4)
}

cplx bessel_J_complex(int n, cplx z) {
    double sign = 1.0;
    if (n < 0) {
        n = -n;
        if (n & 1) sign = -sign;
    }
    cplx w = 0.25 * z * z;
    cplx t = 1.0;
    for (int k = 1; k <= n; ++k) t *= 0.5 * z / double(k);
    cplx sum = t;
    for (int k = 1; k < 300; ++k) {
        t *= -w / (double(k) * double(n + k));
        sum += t;
        if (std::abs(t) < 1e-18 * (std::abs(sum) + 1e-300)) return sign * sum;
    }
    throw ConvergenceError("bessel_J_complex: series stalled");
}

cplx bessel_Y_complex(int n, cplx z) {
    double sign = 1.0;
    if (n < 0) {
        n = -n;
        if (n & 1) sign = -sign;
    }
    if (z == 0.0) throw std::domain_error("bessel_Y_complex: z = 0");
    cplx half = 0.5 * z;
    cplx w = half * half;
    cplx out = 2.0 / PI * std::log(half) * bessel_J_complex(n, z);
    if (n > 0) {
        cplx t = std::pow(half, -n);
        double fact = 1.0;  // (n-1-k)!/k!
        for (int k = 1; k <= n - 1; ++k) fact *= k;
        for (int k = 0; k <= n - 1; ++k) {
            out -= fact / PI * t;
            t *= w;
            if (k < n - 1) fact /= double(n - 1 - k) * double(k + 1) / 1.0;
        }
    }
    // -(1/pi) (z/2)^n sum_k (psi(k+1)+psi(n+k+1)) (-w)^k /(k!(n+k)!)
    double psi1 = -EULER_GAMMA;           // psi(k+1)
    double psi2 = -EULER_GAMMA;           // psi(n+k+1)
    for (int j = 1; j <= n; ++j) psi2 += 1.0 / j;
    cplx t = std::pow(half, n);
    for (int k = 1; k <= n; ++k) t /= double(k);
    cplx acc = 0.0;
    for (int k = 0; k < 300; ++k) {
        acc += (psi1 + psi2) * t;
        cplx prev = t;
        t *= -w / (double(k + 1) * double(n + k + 1));
        psi1 += 1.0 / double(k + 1);
        psi2 += 1.0 / double(n + k + 1);
        if (std::abs(prev) < 1e-18 * (std::abs(acc) + 1e-300)) break;
    }
    out -= acc / PI;
    return sign * out;
}

cplx jstar(cplx nu, cplx u) {
    cplx w = 0.25 * u * u;
    int k0 = 0;
    if (nu.imag() == 0.0 && nu.real() <= -1.0 && nu.real() == std::floor(nu.real()))
        k0 = int(-nu.real());  // 1/Gamma kills the first -nu terms
    cplx t = recip_gamma(nu + double(k0 + 1));
    for (int k = 1; k <= k0; ++k) t *= -w / double(k);
    cplx sum = t;
    for (int k = k0 + 1; k <= 200; ++k) {
        t *= -w / (double(k) * (nu + double(k)));
        sum += t;
        if (std::abs(t) < 1e-18 * (std::abs(sum) + 1e-300)) return sum;
    }
    throw ConvergenceError("jstar: series stalled (|u| too large)");
}

}  // namespace kzeta
