#include "kzeta/hecke_zeta.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "kzeta/gamma.hpp"
#include "kzeta/kloosterman.hpp"

namespace kzeta {

namespace {

const double PI = 3.14159265358979323846;

// shell sums sum_{norm(n)=N} n^{4|p|} (conjugated for p<0 they coincide;
// real by conjugation closure)
const std::vector<double>& harmonic_shells(int abs_p, long long max_norm) {
    static std::map<std::pair<int, long long>, std::vector<double>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(abs_p, max_norm);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<double> shells(max_norm + 1, 0.0);
    long long r = (long long)std::sqrt((double)max_norm) + 1;
    for (long long x = -r; x <= r; ++x)
        for (long long y = -r; y <= r; ++y) {
            long long nn = x * x + y * y;
            if (nn == 0 || nn > max_norm) continue;
            cplx z{double(x), double(y)};
            cplx h = 1.0;
            for (int k = 0; k < 4 * abs_p; ++k) h *= z;
            shells[nn] += h.real();  // imaginary parts cancel by conjugation
        }
    return cache.emplace(key, std::move(shells)).first->second;
}

}  // namespace

cplx sigma_nu(GaussInt n, cplx nu, int twice_p) {
    if (n.is_zero()) throw std::domain_error("sigma_nu: n = 0");
    cplx acc = 0.0;
    for (GaussInt d : divisors(n)) {
        cplx dv = d.value();
        cplx dir = dv / std::abs(dv);
        acc += std::pow(dir, 2 * twice_p) * std::exp(nu * std::log(double(norm(d))));
    }
    return 0.25 * acc;
}

ZetaValue zeta_F_truncated(cplx s, int p, long long radius) {
    if (s.real() <= 1.0)
        throw std::domain_error("zeta_F_truncated: Re s <= 1");
    if (radius < 4) radius = 4;
    const std::vector<double>& H = harmonic_shells(std::abs(p), radius);
    cplx acc = 0.0;
    for (long long N = 1; N <= radius; ++N) {
        if (H[N] == 0.0) continue;
        double eN = H[N] / std::pow(double(N), 2.0 * std::abs(p));
        cplx coeff = (p >= 0) ? cplx(eN, 0) : cplx(eN, 0);  // shells are real
        acc += coeff * std::exp(-s * std::log(double(N)));
    }
    double sigma = s.real();
    double tail = 0.25 * (PI * (sigma + 1.0) / (sigma - 1.0) * std::pow(double(radius), 1.0 - sigma) +
                          20.0 * std::pow(double(radius), 0.5 - sigma));
    return {s, p, 0.25 * acc, ZetaValue::Method::TruncatedSeries, tail};
}

cplx lambda_completed(cplx s, int p, double x0) {
    const int a = 2 * std::abs(p);
    const double side = std::min(x0, 1.0 / x0);
    const long long R = (long long)std::ceil(44.0 / (PI * side)) + 2 * a + 6;
    const std::vector<double>& H = harmonic_shells(std::abs(p), R);
    cplx acc = 0.0;
    for (long long N = 1; N <= R; ++N) {
        if (H[N] == 0.0) continue;
        double piN = PI * double(N);
        cplx w1 = s + double(a);
        cplx w2 = (1.0 - s) + double(a);
        cplx t1 = upper_gamma(w1, piN * x0) * std::exp(-w1 * std::log(piN));
        cplx t2 = upper_gamma(w2, piN / x0) * std::exp((s - 1.0 - double(a)) * std::log(piN));
        acc += H[N] * (t1 + t2);
    }
    acc *= 0.25 * std::pow(PI, double(a));
    if (p == 0)
        acc += 0.25 * (std::pow(x0, s - 1.0) / (s - 1.0) - std::pow(x0, s) / s);
    return acc;
}

ZetaValue zeta_F(cplx s, int p, const QuadratureSpec& spec) {
    if (p == 0 && (s == cplx(1.0, 0.0) || s == cplx(0.0, 0.0)))
        throw std::domain_error("zeta_F: pole at s = 1 (and s = 0) for p = 0");
    (void)spec;
    const int a = 2 * std::abs(p);
    cplx lam = lambda_completed(s, p, 1.0);
    cplx val = std::exp(s * std::log(PI) - log_gamma(s + double(a))) * lam;
    // significance-loss certificate of the expansion at this height
    double loss = std::exp(0.5 * PI * std::abs(s.imag())) * 1e-15;
    return {s, p, val, ZetaValue::Method::Continued, loss * (1.0 + std::abs(val))};
}

double functional_equation_residual(cplx s, int p, double x0) {
    cplx l1 = lambda_completed(s, p, x0);
    cplx l2 = lambda_completed(1.0 - s, p, x0);
    return std::abs(l1 - l2) / (std::abs(l1) + std::abs(l2) + 1e-300);
}

double ramanujan_identity_residual(GaussInt n, cplx s, int p_even,
                                   const QuadratureSpec& spec, Exec exec) {
    if (p_even % 2 != 0) throw std::domain_error("ramanujan identity: p must be even");
    if (s.real() <= 2.0) throw std::domain_error("ramanujan identity: Re s <= 2");
    long long radius = (long long)spec.lattice_radius;
    if (radius <= 0) radius = n.is_zero() ? 1000000 : 10000;
    cplx lhs = ramanujan_lattice_sum(n, s, p_even, radius, exec);
    int P = p_even / 2;
    cplx zs = zeta_F(s, P).value;
    cplx rhs;
    if (n.is_zero())
        rhs = 4.0 * zeta_F(s - 1.0, P).value / zs;
    else
        rhs = 4.0 * sigma_nu(n, 1.0 - s, p_even) / zs;
    return std::abs(lhs - rhs);
}

double ramanujan_product_residual(int a, int b, int c, cplx tau, cplx xi, cplx s,
                                  const QuadratureSpec& spec, Exec exec) {
    for (cplx arg : {s, s - tau, s - xi, s - tau - xi, 2.0 * s - tau - xi})
        if (arg.real() <= 1.0)
            throw std::domain_error("ramanujan product: argument outside Re > 1");
    long long radius = (long long)spec.lattice_radius;
    if (radius <= 0) radius = 10000;
    std::vector<GaussInt> pts = lattice_by_norm(radius);
    cplx lhs = indexed_sum<cplx>(
        pts.size(),
        [&](size_t i) {
            GaussInt n = pts[i];
            cplx dir = n.value() / std::abs(n.value());
            return std::pow(dir, 4 * a) * sigma_nu(n, tau, 2 * b) * sigma_nu(n, xi, 2 * c) *
                   std::exp(-s * std::log(double(norm(n))));
        },
        exec);
    lhs *= 0.25;
    cplx rhs = zeta_F(s, a).value * zeta_F(s - tau, a + b).value *
               zeta_F(s - xi, a + c).value * zeta_F(s - tau - xi, a + b + c).value /
               zeta_F(2.0 * s - tau - xi, 2 * a + b + c).value;
    return std::abs(lhs - rhs);
}

}  // namespace kzeta
