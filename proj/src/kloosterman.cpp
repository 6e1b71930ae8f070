#include "kzeta/kloosterman.hpp"

#include <cmath>

namespace kzeta {

namespace {
const double TWO_PI = 6.28318530717958647692;
}

ModulusContext::ModulusContext(GaussInt c) : c_(c) {
    if (c.is_zero()) throw std::domain_error("kloosterman: zero modulus");
    n_ = kzeta::norm(c);
    cos_.resize(n_);
    sin_.resize(n_);
    for (long long k = 0; k < n_; ++k) {
        cos_[k] = std::cos(TWO_PI * double(k) / double(n_));
        sin_[k] = std::sin(TWO_PI * double(k) / double(n_));
    }
    if (c.is_unit()) {
        units_ = {GaussInt{0, 0}};
        inverses_ = {GaussInt{0, 0}};
        return;
    }
    for_each_invertible_residue(c_, [&](GaussInt d) { units_.push_back(d); });
    inverses_.reserve(units_.size());
    for (GaussInt d : units_) inverses_.push_back(mod_inverse(d, c_));
}

long long ModulusContext::phase_index(GaussInt z) const {
    long long k = (z * c_.conj()).re % n_;
    return k < 0 ? k + n_ : k;
}

cplx ModulusContext::sum(GaussInt m, GaussInt n) const {
    cplx acc = 0.0;
    for (size_t i = 0; i < units_.size(); ++i) {
        long long k = phase_index(m * units_[i] + n * inverses_[i]);
        acc += phase(k);
    }
    return acc;
}

cplx ModulusContext::sum_ramanujan(GaussInt n) const {
    cplx acc = 0.0;
    for (const GaussInt& d : units_) acc += phase(phase_index(n * d));
    return acc;
}

KloostermanValue kloosterman_sum(GaussInt m, GaussInt n, GaussInt c) {
    ModulusContext ctx(c);
    cplx v = ctx.sum(m, n);
    return {v, ctx.norm(), std::abs(v.imag())};
}

double ramanujan_sum(GaussInt n, GaussInt c) {
    ModulusContext ctx(c);
    return ctx.sum_ramanujan(n).real();
}

long long sigma0_classes(GaussInt c) {
    GaussFactorization f = factorize(c);
    long long d = 1;
    for (const auto& [p, e] : f.primes) d *= (e + 1);
    return d;
}

double weil_ratio(GaussInt m, GaussInt n, GaussInt c) {
    if (c.is_zero()) throw std::domain_error("weil_ratio: c = 0");
    cplx s = kloosterman_sum(m, n, c).value;
    GaussInt g = (m.is_zero() && n.is_zero()) ? canonical_associate(c)
                                              : gcd(gcd(m.is_zero() ? n : m, n.is_zero() ? m : n), c);
    double bound = std::sqrt(double(norm(g))) * std::sqrt(double(norm(c))) *
                   double(sigma0_classes(c));
    return std::abs(s) / bound;
}

KloostermanAudit audit_reality_symmetry(long long mn_norm_max, long long c_norm_max,
                                        Exec exec) {
    std::vector<GaussInt> pts = lattice_by_norm(mn_norm_max);
    std::vector<GaussInt> mods = lattice_by_norm(c_norm_max);
    const size_t npts = pts.size();

    struct Local {
        double imag = 0, sym = 0;
        long long count = 0;
        Local& operator+=(const Local& o) {
            imag = std::max(imag, o.imag);
            sym = std::max(sym, o.sym);
            count += o.count;
            return *this;
        }
    };
    Local total = indexed_sum<Local>(
        mods.size(),
        [&](size_t ci) {
            Local loc;
            ModulusContext ctx(mods[ci]);
            const size_t nd = ctx.units().size();
            const long long N = ctx.norm();
            // per-point phase rows: row[i][d] = Re(pts[i]*d*conj(c)) mod N
            std::vector<long long> row(npts * nd);
            std::vector<size_t> invpos(nd);
            for (size_t i = 0; i < npts; ++i)
                for (size_t d = 0; d < nd; ++d)
                    row[i * nd + d] = ctx.phase_index(pts[i] * ctx.units()[d]);
            // position of the inverse within the unit list is not needed:
            // use inverse rows directly
            std::vector<long long> rowinv(npts * nd);
            for (size_t i = 0; i < npts; ++i)
                for (size_t d = 0; d < nd; ++d)
                    rowinv[i * nd + d] = ctx.phase_index(pts[i] * ctx.inverses()[d]);
            std::vector<cplx> S(npts * npts);
            for (size_t i = 0; i < npts; ++i)
                for (size_t j = 0; j < npts; ++j) {
                    cplx acc = 0.0;
                    const long long* a = &row[i * nd];
                    const long long* b = &rowinv[j * nd];
                    for (size_t d = 0; d < nd; ++d) {
                        long long k = a[d] + b[d];
                        if (k >= N) k -= N;
                        acc += ctx.phase(k);
                    }
                    S[i * npts + j] = acc;
                    loc.imag = std::max(loc.imag,
                                        std::abs(acc.imag()) / (1.0 + std::abs(acc.real())));
                    ++loc.count;
                }
            for (size_t i = 0; i < npts; ++i)
                for (size_t j = 0; j < i; ++j)
                    loc.sym = std::max(loc.sym,
                                       std::abs(S[i * npts + j] - S[j * npts + i]));
            return loc;
        },
        exec);
    return {total.imag, total.sym, total.count};
}

double weil_ratio_max(const std::vector<std::pair<GaussInt, GaussInt>>& mn,
                      long long c_norm_max, Exec exec) {
    std::vector<GaussInt> mods = lattice_by_norm(c_norm_max);
    struct MaxD {
        double v = 0;
        MaxD& operator+=(const MaxD& o) {
            v = std::max(v, o.v);
            return *this;
        }
    };
    MaxD m = indexed_sum<MaxD>(
        mods.size(),
        [&](size_t ci) {
            MaxD loc;
            ModulusContext ctx(mods[ci]);
            double bound0 = std::sqrt(double(ctx.norm())) * double(sigma0_classes(mods[ci]));
            for (const auto& [mm, nn] : mn) {
                cplx s = ctx.sum(mm, nn);
                GaussInt g = (mm.is_zero() && nn.is_zero())
                                 ? canonical_associate(mods[ci])
                                 : gcd(gcd(mm.is_zero() ? nn : mm, nn.is_zero() ? mm : nn),
                                       mods[ci]);
                loc.v = std::max(loc.v,
                                 std::abs(s) / (std::sqrt(double(norm(g))) * bound0));
            }
            return loc;
        },
        exec);
    return m.v;
}

cplx ramanujan_lattice_sum(GaussInt n, cplx s, int p, long long radius, Exec exec) {
    std::vector<GaussInt> mods = lattice_by_norm(radius);
    return indexed_sum<cplx>(
        mods.size(),
        [&](size_t ci) {
            GaussInt c = mods[ci];
            double nc = double(norm(c));
            cplx sf;
            if (n.is_zero()) {
                sf = double(euler_phi(c));
            } else {
                ModulusContext ctx(c);
                sf = ctx.sum_ramanujan(n);
            }
            cplx dir = c.value() / std::abs(c.value());
            cplx tw = std::pow(dir, 2.0 * p);
            return tw * sf * std::exp(-s * std::log(nc));
        },
        exec);
}

}  // namespace kzeta
