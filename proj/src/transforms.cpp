#include "kzeta/transforms.hpp"

#include <cmath>

#include "kzeta/bessel.hpp"
#include "kzeta/gamma.hpp"

namespace kzeta {

namespace {
const double PI = 3.14159265358979323846;

// polar quadrature grid over the support annulus: Kronrod radial panels
// crossed with a uniform angle grid
struct PolarGrid {
    std::vector<double> r, wr;
    int n_theta;
    double w_theta;
};

PolarGrid support_grid(const TestFunctionC& f, int radial_panels = 5, int n_theta = 64) {
    if (!(f.r_max > f.r_min && f.r_min > 0))
        throw std::domain_error("transforms: test function needs a support annulus");
    static const double XK[8] = {
        0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
        0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
    static const double WK[8] = {
        0.209482141084728, 0.204432940075299, 0.190350578064785, 0.169004726639268,
        0.140653259715526, 0.104790010322250, 0.063092092629979, 0.022935322010529};
    PolarGrid g;
    g.n_theta = n_theta;
    g.w_theta = 2.0 * PI / n_theta;
    double h = (f.r_max - f.r_min) / radial_panels;
    for (int p = 0; p < radial_panels; ++p) {
        double c = f.r_min + (p + 0.5) * h, half = 0.5 * h;
        for (int i = 7; i >= 1; --i) {
            g.r.push_back(c - half * XK[i]);
            g.wr.push_back(half * WK[i]);
        }
        g.r.push_back(c);
        g.wr.push_back(half * WK[0]);
        for (int i = 1; i <= 7; ++i) {
            g.r.push_back(c + half * XK[i]);
            g.wr.push_back(half * WK[i]);
        }
    }
    return g;
}

}  // namespace

cplx k_transform(const TestFunctionC& f, const SpectralParam& sp,
                 const QuadratureSpec& spec) {
    double tol = spec.tol > 0 ? spec.tol : 1e-8;
    auto radial = [&](int n_theta) {
        auto fr = [&](double r) -> cplx {
            cplx acc = 0.0;
            for (int j = 0; j < n_theta; ++j) {
                double th = 2.0 * PI * j / n_theta;
                cplx u = std::polar(r, th);
                acc += k_kernel(sp, u) * f(u);
            }
            return acc * (2.0 * PI / n_theta) / r;
        };
        return integrate_gk(fr, f.r_min, f.r_max, tol);
    };
    cplx a = radial(48), b = radial(96);
    if (std::abs(a - b) > 50 * tol)
        throw ConvergenceError("k_transform: angular refinement disagrees");
    return b;
}

cplx j_transform(const TestFunctionC& f, const SpectralParam& sp,
                 const QuadratureSpec& spec) {
    double tol = spec.tol > 0 ? spec.tol : 1e-8;
    auto fr = [&](double r) -> cplx {
        cplx acc = 0.0;
        const int n_theta = 96;
        for (int j = 0; j < n_theta; ++j) {
            double th = 2.0 * PI * j / n_theta;
            cplx u = std::polar(r, th);
            acc += j_kernel(sp, u) * f(u);
        }
        return acc * (2.0 * PI / n_theta) / r;
    };
    return integrate_gk(fr, f.r_min, f.r_max, tol);
}

cplx mellin_fourier(const TestFunctionC& f, cplx nu, int p,
                    const QuadratureSpec& spec) {
    double tol = spec.tol > 0 ? spec.tol : 1e-10;
    auto f_p = [&](double r) -> cplx {
        const int n = 96;
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j) {
            double th = 2.0 * PI * j / n;
            acc += f(std::polar(r, th)) * std::exp(cplx(0, -2.0 * p * th));
        }
        return acc / double(n);
    };
    if (f.r_max > f.r_min && f.r_min > 0) {
        auto g = [&](double x) { return f_p(std::exp(x)) * std::exp(2.0 * nu * x); };
        return integrate_gk(g, std::log(f.r_min), std::log(f.r_max), tol);
    }
    // decay-based: the lower end is controlled by the O(|u|^{2 sigma0}) bound
    double ex = 2.0 * nu.real() + 2.0 * f.sigma0;
    if (ex <= 0) throw std::domain_error("mellin_fourier: divergent at r = 0");
    double x_lo = std::max(-60.0, std::log(tol * 0.01) / ex);
    double r_hi = 2.0;
    while (r_hi < 512.0) {
        double m = 0;
        for (int j = 0; j < 8; ++j) m = std::max(m, std::abs(f(std::polar(r_hi, 0.7 * j))));
        if (m < tol * 1e-3) break;
        r_hi *= 2.0;
    }
    if (r_hi >= 512.0) throw ConvergenceError("mellin_fourier: tail does not settle");
    auto g = [&](double x) { return f_p(std::exp(x)) * std::exp(2.0 * nu * x); };
    return integrate_gk(g, x_lo, std::log(r_hi), tol);
}

cplx j_transform_series(const TestFunctionC& f, const SpectralParam& sp,
                        const QuadratureSpec& spec) {
    if (!(f.r_max > f.r_min && f.r_min > 0))
        throw std::domain_error("j_transform_series: needs a support annulus");
    cplx nu = sp.nu;
    int p = sp.p;
    double tol = spec.tol > 0 ? spec.tol : 1e-9;
    // scaled Mellin--Fourier moment int f_q(r) (r/2)^{2w} dr/r, which stays
    // O(1) for the high series terms (plain Mf would grow like r_max^{2w})
    auto scaled_moment = [&](int q, cplx w) {
        auto g = [&](double x) -> cplx {
            double r = std::exp(x);
            const int n = 96;
            cplx acc = 0.0;
            for (int j = 0; j < n; ++j) {
                double th = 2.0 * PI * j / n;
                acc += f(std::polar(r, th)) * std::exp(cplx(0, -2.0 * q * th));
            }
            return acc / double(n) * std::exp(2.0 * w * (x - std::log(2.0)));
        };
        return integrate_gk(g, std::log(f.r_min), std::log(f.r_max), tol * 0.01);
    };
    cplx acc = 0.0;
    const int MN = 24;
    for (int m = 0; m <= MN; ++m)
        for (int n = 0; n <= MN; ++n) {
            cplx g1 = recip_gamma(nu - double(p) + double(m) + 1.0);
            cplx g2 = recip_gamma(nu + double(p) + double(n) + 1.0);
            if (g1 == 0.0 || g2 == 0.0) continue;
            cplx mom = scaled_moment(p - m + n, nu + double(m + n));
            double fact = 1.0;
            for (int j = 2; j <= m; ++j) fact *= j;
            for (int j = 2; j <= n; ++j) fact *= j;
            acc += (((m + n) & 1) ? -1.0 : 1.0) * mom / fact * g1 * g2;
        }
    return 2.0 * PI * acc;
}

cplx k_transform_series(const TestFunctionC& f, const SpectralParam& sp,
                        const QuadratureSpec& spec) {
    SpectralParam neg{-sp.nu, -sp.p};
    return (j_transform_series(f, neg, spec) - j_transform_series(f, sp, spec)) /
           std::sin(PI * sp.nu);
}

cplx b_transform(const TestFunctionSpec& h, cplx u, const QuadratureSpec& spec) {
    double tol = spec.tol > 0 ? spec.tol : 1e-7;
    double T = spec.t_max > 0 ? spec.t_max : 8.0 * h.decay_scale + 8.0;
    int p_cap = spec.p_max > 0 ? spec.p_max : 64;
    cplx acc = 0.0;
    int quiet = 0;
    for (int p = 0; p <= p_cap; ++p) {
        cplx piece = 0.0;
        for (int sgn : {+1, -1}) {
            if (p == 0 && sgn < 0) continue;
            int pp = sgn * p;
            auto f = [&](double t) -> cplx {
                cplx nu(0, t);
                return k_kernel({nu, pp}, u) * h(nu, pp) * (double(pp) * pp + t * t);
            };
            piece += integrate_gk(f, -T, T, tol * 0.2);
        }
        acc += piece;
        if (std::abs(piece) < tol * 0.1) {
            if (++quiet >= 3) break;
        } else
            quiet = 0;
        if (p == p_cap)
            throw ConvergenceError("b_transform: p-sum did not settle");
    }
    return acc / (8.0 * PI);
}

TestFunctionC bessel_operator(const TestFunctionC& f, double h) {
    if (h <= 0) h = 3e-3;
    TestFunctionC out = f;
    auto base = f.eval;
    out.eval = [base, h](cplx u) -> cplx {
        double x = std::log(std::abs(u)), th = std::arg(u);
        auto F = [&](double dx, double dth) {
            return base(std::polar(std::exp(x + dx), th + dth));
        };
        // 4th-order central stencils in (log r, theta)
        const double c1[4] = {-1.0, 8.0, -8.0, 1.0};     // at +2h,+h,-h,-2h over 12h
        const double off[4] = {2.0, 1.0, -1.0, -2.0};
        cplx f0 = F(0, 0);
        cplx fxx = 0.0, ftt = 0.0;
        {
            const double c2[5] = {-1.0, 16.0, -30.0, 16.0, -1.0};
            const double o2[5] = {2.0, 1.0, 0.0, -1.0, -2.0};
            for (int i = 0; i < 5; ++i) {
                fxx += c2[i] * F(o2[i] * h, 0);
                ftt += c2[i] * F(0, o2[i] * h);
            }
            fxx /= 12.0 * h * h;
            ftt /= 12.0 * h * h;
        }
        cplx fxt = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                fxt += c1[i] * c1[j] * F(off[i] * h, off[j] * h);
        fxt /= 144.0 * h * h;
        cplx ud2 = 0.25 * (fxx - ftt - 2.0 * cplx(0, 1) * fxt);
        return ud2 + u * u * f0;
    };
    return out;
}

KTransformGrid k_transform_grid(const TestFunctionC& f, double dt, double t_max,
                                int p_max, const QuadratureSpec& spec, Exec exec) {
    (void)spec;
    PolarGrid g = support_grid(f);
    // sample f once
    std::vector<cplx> fv(g.r.size() * g.n_theta);
    std::vector<cplx> us(g.r.size() * g.n_theta);
    for (size_t i = 0; i < g.r.size(); ++i)
        for (int j = 0; j < g.n_theta; ++j) {
            cplx u = std::polar(g.r[i], g.w_theta * j);
            us[i * g.n_theta + j] = u;
            fv[i * g.n_theta + j] = f(u);
        }
    KTransformGrid out;
    out.dt = dt;
    out.n_t = (int)std::lround(t_max / dt) + 1;
    out.p_max = p_max;
    out.val.assign((2 * p_max + 1) * (size_t)out.n_t, 0.0);
    indexed_for(
        (2 * p_max + 1) * (size_t)out.n_t,
        [&](size_t idx) {
            int p = int(idx / out.n_t) - p_max;
            int j = int(idx % out.n_t);
            cplx nu(0, dt * j);
            SpectralParam sp{nu, p};
            cplx acc = 0.0;
            for (size_t i = 0; i < g.r.size(); ++i) {
                cplx row = 0.0;
                for (int k = 0; k < g.n_theta; ++k)
                    row += k_kernel(sp, us[i * g.n_theta + k]) * fv[i * g.n_theta + k];
                acc += row * g.wr[i] / g.r[i];
            }
            out.val[idx] = acc * g.w_theta;
        },
        exec);
    return out;
}

cplx b_of_grid(const KTransformGrid& g, cplx u) {
    cplx acc = 0.0;
    for (int p = -g.p_max; p <= g.p_max; ++p)
        for (int j = 0; j < g.n_t; ++j) {
            double t = g.dt * j;
            double w = (j == 0) ? 0.5 : 1.0;
            cplx nu(0, t);
            acc += w * k_kernel({nu, p}, u) * g.at(p, j) *
                   (double(p) * p + t * t);
        }
    // fold in the t<0 half via (nu,p) -> (-nu,-p); 2pi * (1/(8 pi)) * 2 = 1/2
    return 0.5 * acc * g.dt;
}

cplx spectral_weight_sum(const KTransformGrid& g) {
    cplx acc = 0.0;
    for (int p = -g.p_max; p <= g.p_max; ++p)
        for (int j = 0; j < g.n_t; ++j) {
            double t = g.dt * j;
            double w = (j == 0) ? 0.5 : 1.0;
            acc += w * g.at(p, j) * (double(p) * p + t * t);
        }
    return cplx(0, 2.0) * acc * g.dt;
}

double annulus_bump(double r) {
    double x = r - 1.0;
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return std::exp(4.0 - 1.0 / (x * (1.0 - x)));
}

TestFunctionC annulus_bump_cos2() {
    TestFunctionC f;
    f.eval = [](cplx u) -> cplx {
        return annulus_bump(std::abs(u)) * std::cos(2.0 * std::arg(u));
    };
    f.even = true;
    f.r_min = 1.0;
    f.r_max = 2.0;
    return f;
}

TestFunctionC annulus_bump_radial() {
    TestFunctionC f;
    f.eval = [](cplx u) -> cplx { return annulus_bump(std::abs(u)); };
    f.even = true;
    f.r_min = 1.0;
    f.r_max = 2.0;
    return f;
}

InversionReport inversion_check(double dt, double t_max, int p_max,
                                const QuadratureSpec& spec) {
    TestFunctionC f = annulus_bump_cos2();
    KTransformGrid g = k_transform_grid(f, dt, t_max, p_max, spec);
    InversionReport rep;
    rep.p_max = p_max;
    rep.t_max = t_max;
    // symmetry spot check: Kf(nu,p) = Kf(-nu,-p)
    for (int p : {0, 1, 3})
        for (double t : {0.5, 2.0}) {
            cplx a = k_transform(f, {cplx(0, t), p}, spec);
            cplx b = k_transform(f, {cplx(0, -t), -p}, spec);
            rep.symmetry_gap = std::max(rep.symmetry_gap, std::abs(a - b));
        }
    for (double r : {1.1, 1.3, 1.5, 1.7, 1.9})
        for (int m = 0; m < 8; ++m) {
            cplx u = std::polar(r, 2.0 * PI * m / 8 + 0.13);
            cplx rec = b_of_grid(g, u);
            rep.sup_error = std::max(rep.sup_error, std::abs(rec - f(u)));
        }
    rep.lemma_sum = std::abs(spectral_weight_sum(g));
    return rep;
}

}  // namespace kzeta
