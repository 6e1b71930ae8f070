#include "kzeta/moment.hpp"

#include <cmath>

#include "kzeta/bessel.hpp"
#include "kzeta/gamma.hpp"
#include "kzeta/hecke_zeta.hpp"
#include "kzeta/kernels.hpp"
#include "kzeta/kloosterman.hpp"

namespace kzeta {

namespace {
const double PI = 3.14159265358979323846;
const double SQRT_PI = 1.77245385090551602730;
}  // namespace

WeightG WeightG::gaussian(double a) {
    WeightG g;
    g.scale = a;
    g.eval = [a](cplx t) { return std::exp(-(t / a) * (t / a)); };
    g.hat = [a](double x) -> cplx { return a * SQRT_PI * std::exp(-0.25 * a * a * x * x); };
    return g;
}

cplx g_hat(const WeightG& g, double x) {
    if (g.hat) return g.hat(x);
    double T = 8.0 * g.scale + 4.0;
    auto f = [&](double t) { return g(t) * std::exp(cplx(0, x * t)); };
    return integrate_gk(f, -T, T, 1e-12);
}

cplx g_star(const WeightG& g, cplx u, cplx gamma, cplx delta) {
    double au = std::abs(u), a1u = std::abs(1.0 + u);
    if (au == 0.0 || a1u == 0.0) return 0.0;
    cplx num = g_hat(g, 2.0 * std::log(a1u / au));
    return num * std::exp(-2.0 * gamma * std::log(au) - 2.0 * delta * std::log(a1u));
}

namespace {

// ---- batched g-tilde machinery ----

// direct route on a fixed vertical line: G_q(x) angular modes of the profile
// at |u| = e^x, weighted with e^{2 eta x}; then g~_q(eta+it) is a plain
// Fourier pairing in x.
struct GTildeLine {
    double eta;
    std::vector<double> xs, ws;
    // modes[q + q_max][i]
    int q_max;
    std::vector<std::vector<cplx>> modes;

    cplx value(int q, double t) const {
        if (std::abs(q) > q_max) throw std::logic_error("g_tilde line: q out of range");
        const std::vector<cplx>& m = modes[q + q_max];
        cplx acc = 0.0;
        for (size_t i = 0; i < xs.size(); ++i)
            acc += ws[i] * m[i] * std::exp(cplx(0, 2.0 * t * xs[i]));
        return acc;
    }
};

GTildeLine build_gtilde_line(const WeightG& g, cplx gamma, cplx delta, double eta,
                             int q_max, double t_max = 14.0) {
    double margin = (gamma + delta).real() - eta;
    if (margin <= 0.05)
        throw std::domain_error("g_tilde: direct route needs Re(s) below Re(gamma+delta)");
    GTildeLine line;
    line.eta = eta;
    line.q_max = q_max;
    // x-range: gaussian ghat(2 log ...) controls the left end, the
    // e^{-2 margin x} envelope the right end
    double a = g.scale;
    double x_lo = -(std::sqrt(45.0) * a + 2.0 * std::abs(2.0 * (eta - gamma.real())) * a * a + 4.0);
    double x_hi = std::min(45.0 / (2.0 * margin) + 6.0, 700.0);
    // panel width resolves the e^{2 i t x} phase up to |t| = t_max
    double width = std::min(1.5, 3.5 / std::max(1.0, t_max));
    const int panels = std::max(24, int((x_hi - x_lo) / width));
    static const double XGK[8] = {
        0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
        0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
    static const double WGK[8] = {
        0.209482141084728, 0.204432940075299, 0.190350578064785, 0.169004726639268,
        0.140653259715526, 0.104790010322250, 0.063092092629979, 0.022935322010529};
    double hp = (x_hi - x_lo) / panels;
    for (int p = 0; p < panels; ++p) {
        double c = x_lo + (p + 0.5) * hp, half = 0.5 * hp;
        line.xs.push_back(c);
        line.ws.push_back(half * WGK[0]);
        for (int i = 1; i < 8; ++i) {
            line.xs.push_back(c + half * XGK[i]);
            line.ws.push_back(half * WGK[i]);
            line.xs.push_back(c - half * XGK[i]);
            line.ws.push_back(half * WGK[i]);
        }
    }
    const int n_theta = 256;
    line.modes.assign(2 * q_max + 1, std::vector<cplx>(line.xs.size(), 0.0));
    std::vector<std::vector<cplx>> slices(line.xs.size());
    indexed_for(line.xs.size(), [&](size_t i) {
        double r = std::exp(line.xs[i]);
        std::vector<cplx> fv(n_theta);
        for (int j = 0; j < n_theta; ++j)
            fv[j] = g_star(g, std::polar(r, 2.0 * PI * j / n_theta), gamma, delta);
        std::vector<cplx> out(2 * q_max + 1, 0.0);
        for (int q = -q_max; q <= q_max; ++q) {
            cplx acc = 0.0;
            for (int j = 0; j < n_theta; ++j)
                acc += fv[j] * std::exp(cplx(0, -q * 2.0 * PI * j / n_theta));
            out[q + q_max] = acc / double(n_theta);
        }
        slices[i] = std::move(out);
    });
    for (size_t i = 0; i < line.xs.size(); ++i)
        for (int qi = 0; qi <= 2 * q_max; ++qi)
            line.modes[qi][i] = slices[i][qi] * std::exp(2.0 * line.eta * line.xs[i]);
    return line;
}

cplx g_tilde_direct(const WeightG& g, int q, cplx s, cplx gamma, cplx delta) {
    GTildeLine line = build_gtilde_line(g, gamma, delta, s.real(), std::abs(q));
    return line.value(q, s.imag());
}

}  // namespace

GTildeBatch::GTildeBatch(const WeightG& g, cplx gamma, cplx delta, double eta,
                         int q_max, double t_max)
    : eta_(eta), q_max_(q_max) {
    GTildeLine line = build_gtilde_line(g, gamma, delta, eta, q_max, t_max);
    xs_ = line.xs;
    ws_ = line.ws;
    modes_ = std::move(line.modes);
}

cplx GTildeBatch::value(int q, double t) const {
    if (std::abs(q) > q_max_) throw std::domain_error("GTildeBatch: q out of range");
    const std::vector<cplx>& m = modes_[q + q_max_];
    cplx acc = 0.0;
    for (size_t i = 0; i < xs_.size(); ++i)
        acc += ws_[i] * m[i] * std::exp(cplx(0, 2.0 * t * xs_[i]));
    return acc;
}

namespace {

cplx g_tilde_gamma_route(const WeightG& g, int q, cplx s, cplx gamma, cplx delta) {
    // contour placement: dip below the poles of Gamma(1-delta+it), stay
    // above those of Gamma(s-gamma-it+|q|/2)
    double room_low = (s - gamma).real() + 0.5 * std::abs(q);
    double room_high = 1.0 - delta.real();
    if (room_low <= 1e-9)
        throw std::domain_error("g_tilde: gamma-route contour cannot be drawn");
    double mu = 0.5 * std::min(1.0, room_low);
    if (room_high < 0 && mu <= -room_high)
        mu = 0.5 * (std::min(1.0, room_low) - room_high);
    if (mu <= std::max(0.0, -room_high))
        throw std::domain_error("g_tilde: gamma-route contour cannot be drawn");
    double T = 8.0 * g.scale + 6.0;
    auto f = [&](double x) -> cplx {
        cplx t(x, -mu);
        cplx it(mu, x);  // i*t
        return gamma_ratio(1.0 - delta + it, delta - it) *
               gamma_ratio(s - gamma - it + 0.5 * std::abs(q),
                           1.0 + gamma - s + it + 0.5 * std::abs(q)) *
               g(t);
    };
    cplx integral = integrate_gk(f, -T, T, 1e-12);
    cplx pre = 0.5 * ((q & 1) ? -1.0 : 1.0) *
               gamma_ratio(gamma + delta - s + 0.5 * std::abs(q),
                           1.0 + s - gamma - delta + 0.5 * std::abs(q));
    return pre * integral;
}

}  // namespace

cplx g_tilde(const WeightG& g, int q, cplx s, cplx gamma, cplx delta,
             const QuadratureSpec& spec, GTildeRoute route) {
    (void)spec;
    if (route == GTildeRoute::Direct) return g_tilde_direct(g, q, s, gamma, delta);
    if (route == GTildeRoute::GammaContour) return g_tilde_gamma_route(g, q, s, gamma, delta);
    if ((s - gamma - delta).real() < -0.05) return g_tilde_direct(g, q, s, gamma, delta);
    return g_tilde_gamma_route(g, q, s, gamma, delta);
}

// ---- BracketTable ----

BracketTable::BracketTable(const WeightG& g, int p, cplx alpha, cplx beta,
                           cplx gamma, cplx delta, const QuadratureSpec& spec)
    : p_(p), alpha_(alpha), beta_(beta) {
    double tol = spec.tol > 0 ? spec.tol : 1e-9;
    (void)tol;
    eta_ = spec.contour_shift != 0 ? spec.contour_shift
                                   : 1.0 + std::min(0.0, alpha.real()) - 0.25;
    q_max_ = spec.p_max > 0 ? spec.p_max : 14;
    // g~_{p+q} indices run across p - q_max .. p + q_max
    GTildeLine line = build_gtilde_line(g, gamma, delta, eta_, std::abs(p) + q_max_);

    // s = eta + i t nodes (the integrand decays superpolynomially in t)
    const double T = 10.0 + 4.0 * g.scale;
    const int nt = 480;
    std::vector<double> ts(nt), wt(nt);
    for (int i = 0; i < nt; ++i) {  // composite Simpson on [-T, T]
        ts[i] = -T + (2.0 * T) * (i + 0.5) / nt;
        wt[i] = 2.0 * T / nt;
    }
    // radial grid in log|u|
    lx_lo_ = std::log(1e-4);
    double lx_hi = std::log(60.0);
    n_ = 1400;
    dlx_ = (lx_hi - lx_lo_) / (n_ - 1);
    mode_.assign(2 * q_max_ + 1, std::vector<cplx>(n_, 0.0));

    for (int q = -q_max_; q <= q_max_; ++q) {
        std::vector<cplx> gt(nt);
        for (int i = 0; i < nt; ++i) gt[i] = line.value(p + q, ts[i]);
        std::vector<cplx>& row = mode_[q + q_max_];
        indexed_for((size_t)n_, [&](size_t k) {
            double lhalf = lx_lo_ + dlx_ * double(k) - std::log(2.0);  // log(|u|/2)
            cplx acc = 0.0;
            for (int i = 0; i < nt; ++i) {
                cplx s(eta_, ts[i]);
                cplx gr = gamma_ratio(1.0 - s + 0.5 * std::abs(p + q),
                                      s + 0.5 * std::abs(p + q)) *
                          gamma_ratio(1.0 + alpha_ - s + 0.5 * std::abs(p - q),
                                      s - alpha_ + 0.5 * std::abs(p - q));
                acc += wt[i] * gt[i] * gr * std::exp(4.0 * s * lhalf);
            }
            // ds = i dt along the vertical line
            row[k] = cplx(0, 1) * acc * std::exp(-2.0 * (1.0 + alpha_ + beta_) * lhalf);
        });
    }
}

cplx BracketTable::mode_at(int qi, double lx) const {
    if (lx <= lx_lo_) lx = lx_lo_;  // power-law region; clamp (checked by tests)
    double s = (lx - lx_lo_) / dlx_;
    int i = std::max(1, std::min(n_ - 3, (int)s));
    double u = s - i;
    const std::vector<cplx>& row = mode_[qi];
    cplx a0 = row[i - 1], a1 = row[i], a2 = row[i + 1], a3 = row[i + 2];
    return a1 + 0.5 * u * (a2 - a0 + u * (2.0 * a0 - 5.0 * a1 + 4.0 * a2 - a3 +
                                          u * (3.0 * (a1 - a2) + a3 - a0)));
}

cplx BracketTable::operator()(cplx u) const {
    double au = std::abs(u);
    if (au >= 59.0) return 0.0;  // rapid decay; table ends dead
    double lx = std::log(au);
    double th = std::arg(u);
    cplx acc = 0.0;
    for (int q = -q_max_; q <= q_max_; ++q) {
        double sign = (std::max(std::abs(p_), std::abs(q)) & 1) ? -1.0 : 1.0;
        cplx phase = sign * std::exp(cplx(0, 2.0 * (p_ + q) * (th + 0.5 * PI)));
        acc += phase * mode_at(q + q_max_, lx);
    }
    return acc;
}

cplx bracket_g(const WeightG& g, cplx u, cplx alpha, cplx beta, cplx gamma,
               cplx delta, int p, const QuadratureSpec& spec) {
    BracketTable table(g, p, alpha, beta, gamma, delta, spec);
    return table(u);
}

// ---- Phi_p ----

cplx phi_p(const WeightG& g, cplx nu, int p, cplx alpha, cplx beta, cplx gamma,
           cplx delta, const QuadratureSpec& spec) {
    double tol = spec.tol > 0 ? spec.tol : 1e-9;
    int q_cap = spec.p_max > 0 ? spec.p_max : 18;
    double T = spec.t_max > 0 ? spec.t_max : 10.0 + 4.0 * g.scale;
    cplx total = 0.0;
    int quiet = 0;
    for (int q = 0; q <= q_cap; ++q) {
        cplx piece = 0.0;
        for (int sq : {+1, -1}) {
            if (q == 0 && sq < 0) continue;
            int qq = sq * q;
            // contour: poles of g~ Gamma_q to the right, of Gamma_{p,q} to the left
            double right = std::min({1.0, 1.0 + alpha.real(), (gamma + delta).real()}) +
                           0.5 * std::abs(qq);
            double left = std::max(
                0.5 * (1.0 + (alpha + beta - nu).real()) - 0.5 * std::abs(p + qq),
                0.5 * (1.0 + (alpha + beta + nu).real()) - 0.5 * std::abs(p - qq));
            if (left >= right - 1e-9)
                throw std::domain_error(
                    "phi_p: pole families collide (no separating contour)");
            double sigma = 0.5 * (std::max(left, 0.0) + right);
            if (sigma <= left) sigma = 0.5 * (left + right);
            auto f = [&](double t) -> cplx {
                cplx s(sigma, t);
                cplx gq = g_tilde(g, qq, s, gamma, delta, spec);
                cplx gamq = gamma_ratio(1.0 - s + 0.5 * std::abs(qq),
                                        s + 0.5 * std::abs(qq)) *
                            gamma_ratio(1.0 - s + alpha + 0.5 * std::abs(qq),
                                        s - alpha + 0.5 * std::abs(qq));
                cplx a1 = 0.5 * (alpha + beta - nu + 1.0);
                cplx a2 = 0.5 * (alpha + beta + nu + 1.0);
                cplx gpq = gamma_ratio(s - a1 + 0.5 * std::abs(p + qq),
                                       1.0 - s + a1 + 0.5 * std::abs(p + qq)) *
                           gamma_ratio(s - a2 + 0.5 * std::abs(p - qq),
                                       1.0 - s + a2 + 0.5 * std::abs(p - qq));
                return gq * gamq * gpq;
            };
            cplx line = cplx(0, 1) * integrate_gk(f, -T, T, tol * 0.05);
            double sign = (std::max(std::abs(p), std::abs(qq)) & 1) ? -1.0 : 1.0;
            piece += 0.5 * sign * line;
        }
        total += piece;
        if (std::abs(piece) < tol * 0.1) {
            if (++quiet >= 3) break;
        } else
            quiet = 0;
        if (q == q_cap) throw ConvergenceError("phi_p: q-sum did not settle");
    }
    return total;
}

cplx phi_p_quadrature(const WeightG& g, cplx nu, int p, cplx alpha, cplx beta,
                      cplx gamma, cplx delta, const QuadratureSpec& spec) {
    BracketTable table(g, 0, alpha, beta, gamma, delta, spec);
    double tol = spec.tol > 0 ? spec.tol : 1e-7;
    const int n_theta = 64;
    auto radial = [&](double lx) -> cplx {
        double r = std::exp(lx);
        cplx acc = 0.0;
        for (int j = 0; j < n_theta; ++j) {
            cplx u = std::polar(r, 2.0 * PI * j / n_theta);
            acc += k_kernel({nu, p}, u) * table(u);
        }
        return acc * (2.0 * PI / n_theta);
    };
    return integrate_gk(radial, std::log(2e-3), std::log(55.0), tol, 40000);
}

// ---- additive divisor machinery ----

SigmaGrid::SigmaGrid(cplx nu, long long box) : box_(box) {
    long long side = 2 * box + 1;
    val_.assign(side * side, 0.0);
    long long maxn = 2 * box * box;
    // powers of norms, shared
    std::vector<cplx> npow(maxn + 1);
    for (long long n = 1; n <= maxn; ++n)
        npow[n] = std::exp(nu * std::log(double(n)));
    for (GaussInt d : lattice_by_norm(maxn)) {
        long long nd = norm(d);
        cplx w = npow[nd];
        long long kmax = maxn / nd;
        long long r = (long long)std::sqrt((double)kmax) + 2;
        for (long long kx = -r; kx <= r; ++kx)
            for (long long ky = -r; ky <= r; ++ky) {
                if (kx == 0 && ky == 0) continue;
                if (kx * kx + ky * ky > kmax) continue;
                GaussInt n = d * GaussInt{kx, ky};
                if (std::abs(n.re) > box || std::abs(n.im) > box) continue;
                val_[(n.re + box) * side + (n.im + box)] += w;
            }
    }
    for (auto& v : val_) v *= 0.25;
}

cplx SigmaGrid::at(GaussInt n) const {
    if (std::abs(n.re) > box_ || std::abs(n.im) > box_)
        throw std::out_of_range("SigmaGrid: outside the box");
    long long side = 2 * box_ + 1;
    return val_[(n.re + box_) * side + (n.im + box_)];
}

cplx additive_divisor_sum(GaussInt m, cplx alpha, cplx beta,
                          const std::function<cplx(cplx)>& h, long long radius,
                          Exec exec) {
    if (m.is_zero()) throw std::domain_error("additive divisor sum: m = 0");
    long long box = (long long)std::sqrt((double)radius) + 1;
    long long boxb = box + std::max(std::abs(m.re), std::abs(m.im)) + 1;
    SigmaGrid sa(alpha, box), sb(beta, boxb);
    std::vector<GaussInt> pts = lattice_by_norm(radius);
    cplx mval = m.value();
    return indexed_sum<cplx>(
        pts.size(),
        [&](size_t i) -> cplx {
            GaussInt n = pts[i];
            if ((n + m).is_zero()) return 0.0;
            return sa.at(n) * sb.at(n + m) * h(n.value() / mval);
        },
        exec);
}

Lemma22Report lemma_2_2_residual(GaussInt m, cplx alpha, cplx beta, cplx gamma,
                                 cplx delta, const WeightG& g,
                                 const QuadratureSpec& spec) {
    if (m.is_zero()) throw std::domain_error("lemma 2.2: m = 0");
    if (!(1.0 + std::max(0.0, alpha.real()) < (gamma + delta).real()) ||
        !(std::abs(alpha.real()) + beta.real() < -2.0))
        throw std::domain_error("lemma 2.2: parameters outside the stated domain");
    long long radius = spec.lattice_radius > 0 ? (long long)spec.lattice_radius : 400;

    Lemma22Report rep;
    // direct additive-divisor value, Aitken-accelerated over doubling radii
    auto h = [&](cplx u) { return g_star(g, u, gamma, delta); };
    const long long R = 240000;
    cplx s0 = additive_divisor_sum(m, alpha, beta, h, R / 4);
    cplx s1 = additive_divisor_sum(m, alpha, beta, h, R / 2);
    cplx s2 = additive_divisor_sum(m, alpha, beta, h, R);
    cplx d1 = s1 - s0, d2 = s2 - s1;
    rep.direct_raw = s2;
    rep.direct = (std::abs(d2 - d1) > 1e-18) ? s2 - d2 * d2 / (d2 - d1) : s2;
    rep.certificates["direct_radius"] = double(R);
    rep.certificates["direct_acceleration_step"] = std::abs(d2);

    // main terms
    auto zf = [&](cplx s) { return zeta_F(s, 0).value; };
    cplx am = std::abs(m.value());
    cplx b0 = 2.0 * PI * std::exp(2.0 * std::log(am)) * sigma_nu(m, alpha + beta - 1.0, 0) *
                  zf(1.0 - alpha) * zf(1.0 - beta) / zf(2.0 - alpha - beta) *
                  g_tilde(g, 0, 1.0, gamma, delta, spec) +
              2.0 * PI * std::exp(2.0 * (alpha + 1.0) * std::log(am)) *
                  sigma_nu(m, beta - alpha - 1.0, 0) * zf(1.0 + alpha) * zf(1.0 - beta) /
                  zf(2.0 + alpha - beta) * g_tilde(g, 0, 1.0 + alpha, gamma, delta, spec);
    rep.b0 = b0;

    // Kloosterman part
    BracketTable table(g, 0, alpha, beta, gamma, delta, spec);
    std::vector<GaussInt> ns = lattice_by_norm(radius);
    std::vector<GaussInt> cs = lattice_by_norm(radius);
    std::vector<ModulusContext> ctx;
    ctx.reserve(cs.size());
    for (GaussInt c : cs) ctx.emplace_back(c);
    cplx inner = indexed_sum<cplx>(ns.size(), [&](size_t i) -> cplx {
        GaussInt n = ns[i];
        cplx sroot = std::sqrt(m.value() * n.value());
        cplx nsum = 0.0;
        for (size_t j = 0; j < ctx.size(); ++j) {
            cplx sf = ctx[j].sum(m, n);
            cplx u = 2.0 * PI * sroot / cs[j].value();
            nsum += sf / double(norm(cs[j])) * table(u);
        }
        cplx an = std::abs(n.value());
        return sigma_nu(n, -alpha, 0) * std::exp((alpha + beta - 1.0) * std::log(an)) * nsum;
    });
    cplx b1 = -0.25 * cplx(0, 1) * std::exp((2.0 * beta - 1.0) * std::log(PI)) *
              zf(1.0 - beta) * std::exp((alpha + beta + 1.0) * std::log(am)) * inner;
    rep.b1 = b1;
    rep.residual = std::abs(rep.direct - rep.b0 - rep.b1);
    rep.certificates["kloosterman_radius_n"] = double(radius);
    rep.certificates["kloosterman_radius_c"] = double(radius);
    return rep;
}

cplx x_q_series(int q, cplx s, cplx alpha, GaussInt d, GaussInt c, long long radius) {
    if (c.is_zero()) throw std::domain_error("x_q_series: c = 0");
    ModulusContext ctx(c);
    long long box = (long long)std::sqrt((double)radius) + 1;
    SigmaGrid sa(alpha, box);
    cplx acc = 0.0;
    for (GaussInt n : lattice_by_norm(radius)) {
        cplx nv = n.value();
        cplx dir = nv / std::abs(nv);
        cplx tw = 1.0;
        cplx b = q >= 0 ? dir : std::conj(dir);
        for (int k = 0; k < std::abs(q); ++k) tw *= b;
        acc += sa.at(n) * ctx.phase(ctx.phase_index(d * n)) * tw *
               std::exp(-s * std::log(double(norm(n))));
    }
    return acc;
}

}  // namespace kzeta
