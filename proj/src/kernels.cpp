#include "kzeta/kernels.hpp"

#include <cmath>

#include "kzeta/bessel.hpp"
#include "kzeta/gamma.hpp"

namespace kzeta {

namespace {
const double PI = 3.14159265358979323846;

bool is_real_integer(cplx z) {
    return z.imag() == 0.0 && z.real() == std::floor(z.real());
}

cplx unit_power(cplx u, int n) {  // (u/|u|)^n
    cplx dir = u / std::abs(u);
    cplx out = 1.0;
    cplx base = n >= 0 ? dir : std::conj(dir);
    for (int i = 0; i < std::abs(n); ++i) out *= base;
    return out;
}
}  // namespace

cplx j_kernel(const SpectralParam& sp, cplx u) {
    if (u == 0.0) throw std::domain_error("j_kernel: u = 0");
    cplx nu = sp.nu;
    int p = sp.p;
    cplx mod = std::exp(2.0 * nu * std::log(0.5 * std::abs(u)));
    return mod * unit_power(u, -2 * p) * jstar(nu - double(p), u) *
           jstar(nu + double(p), std::conj(u));
}

namespace {

// d/dnu [1/Gamma(nu+k+1)] at nu = n, i.e. (1/Gamma)'(z) at z = n+k+1:
// -psi(z)/Gamma(z) for z >= 1 and (-1)^m m! at z = -m <= 0.
double recip_gamma_dz_int(int z) {
    if (z >= 1) {
        double psi = -0.57721566490153286061;
        double fact = 1.0;
        for (int j = 1; j < z; ++j) {
            psi += 1.0 / j;
            fact *= j;
        }
        return -psi / fact;
    }
    int m = -z;
    double fact = 1.0;
    for (int j = 2; j <= m; ++j) fact *= j;
    return (m & 1) ? -fact : fact;
}

// [d/dnu J*_nu(u)] at integer order n
cplx djstar_int(int n, cplx u) {
    cplx w = 0.25 * u * u;
    cplx t = 1.0;  // (-w)^k / k!
    cplx acc = 0.0;
    for (int k = 0; k < 240; ++k) {
        cplx term = t * recip_gamma_dz_int(n + k + 1);
        acc += term;
        t *= -w / double(k + 1);
        if (k > std::abs(n) + 4 && std::abs(t) < 1e-18 * (std::abs(acc) + 1e-300)) break;
    }
    return acc;
}

// [d/dmu J_{mu,p}(u)] at mu = n (the kernel's order-derivative)
cplx dj_kernel_int(int n, int p, cplx u) {
    cplx base = j_kernel({cplx(double(n), 0), p}, u);
    cplx mod = std::exp(2.0 * double(n) * std::log(0.5 * std::abs(u)));
    cplx extra = mod * unit_power(u, -2 * p) *
                 (djstar_int(n - p, u) * jstar(cplx(double(n + p), 0), std::conj(u)) +
                  jstar(cplx(double(n - p), 0), u) * djstar_int(n + p, std::conj(u)));
    return 2.0 * std::log(0.5 * std::abs(u)) * base + extra;
}

}  // namespace

cplx k_kernel(const SpectralParam& sp, cplx u) {
    if (u == 0.0) throw std::domain_error("k_kernel: u = 0");
    if (is_real_integer(sp.nu)) {
        // removable singularity: K_{q,p} = (-1)^q/pi * d/dnu[J_{-nu,-p} - J_{nu,p}]
        int q = (int)std::lround(sp.nu.real());
        int p = sp.p;
        cplx d = -dj_kernel_int(-q, -p, u) - dj_kernel_int(q, p, u);
        return ((q & 1) ? -1.0 : 1.0) / PI * d;
    }
    SpectralParam neg{-sp.nu, -sp.p};
    return (j_kernel(neg, u) - j_kernel(sp, u)) / std::sin(PI * sp.nu);
}

cplx oscillatory_integral(const std::function<cplx(double)>& f,
                          const std::function<double(double)>& frequency,
                          double T, double tol) {
    auto sweep = [&](double density) {
        cplx acc = 0.0;
        double t = 0.0;
        while (t < T) {
            double freq = std::max(1.0, frequency(t));
            double h = std::min(density / freq, 0.45 * density);
            h = std::min(h, T - t);
            acc += integrate_gk(f, t, t + h, tol * h / T * 4.0, 64);
            t += h;
        }
        return acc;
    };
    cplx a = sweep(6.0);
    cplx b = sweep(4.0);
    if (std::abs(a - b) > 10.0 * tol)
        throw ConvergenceError("oscillatory_integral: sweeps disagree");
    return b;
}

cplx k_kernel_integral(const SpectralParam& sp, cplx u, const QuadratureSpec& spec) {
    if (u == 0.0) throw std::domain_error("k_kernel_integral: u = 0");
    cplx nu = sp.nu;
    int p = sp.p;
    if (std::abs(nu.real()) >= 0.25)
        throw std::domain_error("k_kernel_integral: |Re nu| >= 1/4");
    double tol = spec.tol > 0 ? spec.tol : 1e-8;
    double au = std::abs(u);
    double theta = std::arg(u);
    double s2 = std::sin(theta) * std::sin(theta);
    // y = e^t, folded onto t >= 0: w(t) and w(-t) are conjugate
    auto wmag = [&](double t) {
        double c = std::cosh(t);
        return 2.0 * std::sqrt(std::max(0.0, c * c - s2));
    };
    auto f = [&](double t) -> cplx {
        double aw = wmag(t);
        cplx w = std::exp(cplx(t, theta)) + std::exp(cplx(-t, -theta));
        cplx ph = 1.0;
        if (p != 0) ph = unit_power(w, 2 * p);
        double J = bessel_J(2 * std::abs(p), au * aw);
        cplx e = std::exp(2.0 * nu * t);
        return (e * ph + std::conj(ph) / e) * J;
    };
    // alternating-tail truncation: envelope ~ e^{(2 Re nu - 1/2)t}, frequency ~ |u| e^t
    double growth = 1.5 - 2.0 * std::max(0.0, nu.real());
    double T = std::max(5.0, std::log(16.0 / (tol * std::pow(au, 1.5))) / growth);
    auto freq = [&](double t) { return au * std::exp(t); };
    cplx val = oscillatory_integral(f, freq, T, tol);
    double sign = (p & 1) ? -1.0 : 1.0;
    return sign * 2.0 / PI * val;
}

cplx k_fourier_coeff(const SpectralParam& sp, double r, int q,
                     const QuadratureSpec& spec) {
    cplx nu = sp.nu;
    int p = sp.p;
    if (std::abs(nu.real()) >= 0.25)
        throw std::domain_error("k_fourier_coeff: |Re nu| >= 1/4");
    if (!(r > 0)) throw std::domain_error("k_fourier_coeff: r <= 0");
    double tol = spec.tol > 0 ? spec.tol : 1e-8;
    int a = std::abs(p + q), b = std::abs(p - q);
    // y = e^t, each half-line separately; t -> -t swaps the roles of a and b
    auto half = [&](double sgn) {
        auto fa = [&](double t) -> cplx {
            int grow = sgn > 0 ? a : b, decay = sgn > 0 ? b : a;
            return std::exp(2.0 * sgn * nu * t) * bessel_J(grow, r * std::exp(t)) *
                   bessel_J(decay, r * std::exp(-t));
        };
        int inner = sgn > 0 ? b : a;  // order of the decaying factor
        double growth = 1.5 + inner - 2.0 * std::max(0.0, sgn * nu.real());
        double T = std::max(5.0, std::log(16.0 / (tol * std::pow(r, 1.5))) / growth);
        auto freq = [&](double t) { return r * std::exp(t); };
        return oscillatory_integral(fa, freq, T, tol);
    };
    cplx val = half(+1.0) + half(-1.0);
    int m = std::max(std::abs(p), std::abs(q));
    double sign = (m & 1) ? -1.0 : 1.0;
    return sign * 2.0 / PI * val;
}

cplx k_fourier_coeff_direct(const SpectralParam& sp, double r, int q, int n_theta) {
    auto f = [&](double th) {
        return k_kernel(sp, std::polar(r, th)) * std::exp(cplx(0, -2.0 * q * th));
    };
    return trapezoid_periodic(f, n_theta) / (2.0 * PI);
}

cplx k_mellin(const SpectralParam& sp, cplx s, int q) {
    cplx nu = sp.nu;
    int p = sp.p;
    double a = std::abs(nu.real());
    if (!(2 * a < s.real() && s.real() < 1.0 - 2 * a))
        throw std::domain_error("k_mellin: s outside the allowed strip");
    int apq = std::abs(p + q), amq = std::abs(p - q);
    cplx quarter = 0.25 * s;
    cplx val = gamma_ratio(quarter + 0.5 * (nu + double(apq)),
                           1.0 - quarter - 0.5 * (nu - double(apq))) *
               gamma_ratio(quarter - 0.5 * (nu - double(amq)),
                           1.0 - quarter + 0.5 * (nu + double(amq)));
    int m = std::max(std::abs(p), std::abs(q));
    double sign = (m & 1) ? -1.0 : 1.0;
    return sign * std::exp((s - 2.0) * std::log(2.0)) / PI * val;
}

cplx k_fourier_from_mellin(const SpectralParam& sp, double r, int q, double sigma,
                           double t_max, double tol) {
    if (sigma <= 0) sigma = 2.0 * std::abs(sp.nu.real()) + 0.05;
    if (t_max <= 0) {
        // |integrand| ~ |t|^{sigma-2}; truncation error ~ T^{sigma-2}/|log r|
        double lr = std::max(0.05, std::abs(std::log(r)));
        t_max = std::pow(4.0 / (tol * lr), 1.0 / (2.0 - sigma));
        t_max = std::min(std::max(t_max, 200.0), 6000.0);
    }
    auto f = [&](cplx s) { return k_mellin(sp, s, q) * std::exp(-s * std::log(r)); };
    cplx line = integrate_vertical(f, sigma, t_max, tol);
    return line / (2.0 * PI * cplx(0, 1));
}

}  // namespace kzeta
