#pragma once

#include <array>
#include <complex>
#include <functional>
#include <memory>
#include <map>
#include <string>
#include <vector>

#include "kzeta/gaussint.hpp"
#include "kzeta/parallel.hpp"
#include "kzeta/quadrature.hpp"
#include "kzeta/transforms.hpp"

namespace kzeta {

// Entire weight function of rapid decay in horizontal strips, with its
// Fourier transform available in closed form when known.
struct WeightG {
    std::function<cplx(cplx)> eval;
    std::function<cplx(double)> hat;  // int g(t) e^{ixt} dt (may be empty)
    double scale = 1.0;               // Gaussian-type decay scale

    static WeightG gaussian(double a = 1.0);
    cplx operator()(cplx t) const { return eval(t); }
};

// int g(t) e^{ixt} dt; closed form when the weight carries one.
cplx g_hat(const WeightG& g, double x);

enum class GTildeRoute { Auto, Direct, GammaContour };

// Mellin transform of the twisted profile g*(u; gamma, delta):
//   (1/2pi) int_{C^x} g*(u) (u/|u|)^{-q} |u|^{2s} d^x u,
// by the direct 2D quadrature (Re(s-gamma-delta) < 0) or by the
// gamma-quotient contour representation.
cplx g_tilde(const WeightG& g, int q, cplx s, cplx gamma, cplx delta,
             const QuadratureSpec& spec = {}, GTildeRoute route = GTildeRoute::Auto);

// the profile itself: g*(u; gamma, delta) = ghat(2 log|1+1/u|)/(|u|^{2gamma}|1+u|^{2delta})
cplx g_star(const WeightG& g, cplx u, cplx gamma, cplx delta);

// batched evaluation of g_tilde on a fixed vertical line (one profile scan
// serves every (q, t) pair); the workhorse behind the bracket table
class GTildeBatch {
public:
    GTildeBatch(const WeightG& g, cplx gamma, cplx delta, double eta, int q_max,
                double t_max = 14.0);
    cplx value(int q, double t) const;
    double eta() const { return eta_; }

private:
    double eta_;
    int q_max_;
    std::vector<double> xs_, ws_;
    std::vector<std::vector<cplx>> modes_;
};

// Tabulated weight transform [g]_p(u; alpha, beta, gamma, delta): the
// angular modes are splined on a log-|u| grid so lattice sums can consume
// millions of evaluations.
class BracketTable {
public:
    BracketTable(const WeightG& g, int p, cplx alpha, cplx beta, cplx gamma,
                 cplx delta, const QuadratureSpec& spec = {});
    cplx operator()(cplx u) const;

    int q_span() const { return q_max_; }
    double eta() const { return eta_; }

private:
    int p_, q_max_;
    double eta_;
    cplx alpha_, beta_;
    double lx_lo_, dlx_;
    int n_ = 0;
    std::vector<std::vector<cplx>> mode_;  // [q + q_max][i]
    cplx mode_at(int qi, double lx) const;
};

// Single-point evaluation through a fresh table (convenience; heavy use
// should hold a BracketTable).
cplx bracket_g(const WeightG& g, cplx u, cplx alpha, cplx beta, cplx gamma,
               cplx delta, int p = 0, const QuadratureSpec& spec = {});

// Phi_p(nu; alpha, beta, gamma, delta; g) by the gamma-quotient contour sum;
// throws std::domain_error when the pole families collide.
cplx phi_p(const WeightG& g, cplx nu, int p, cplx alpha, cplx beta, cplx gamma,
           cplx delta, const QuadratureSpec& spec = {});

// oracle route: int K_{nu,p}(u) [g](u;...) d^x u by 2D quadrature
cplx phi_p_quadrature(const WeightG& g, cplx nu, int p, cplx alpha, cplx beta,
                      cplx gamma, cplx delta, const QuadratureSpec& spec = {});

inline cplx lambda_weight_transform(const WeightG& g, cplx nu, int p,
                                    const QuadratureSpec& spec = {}) {
    return phi_p(g, nu, p, 0.0, 0.0, 0.5, 0.5, spec) / cplx(0, 2);
}

// ---- additive divisor machinery ----

// sigma_nu shell data on a square box, sieve-built:
// sigma[(x,y)] = sigma_nu(x+iy, nu, 0) for |x|,|y| <= box.
class SigmaGrid {
public:
    SigmaGrid(cplx nu, long long box);
    cplx at(GaussInt n) const;
    long long box() const { return box_; }

private:
    long long box_;
    std::vector<cplx> val_;
};

// sum_{n(n+m)!=0, norm(n)<=radius} sigma_alpha(n) sigma_beta(n+m) h(n/m)
cplx additive_divisor_sum(GaussInt m, cplx alpha, cplx beta,
                          const std::function<cplx(cplx)>& h, long long radius,
                          Exec exec = Exec::Parallel);

struct Lemma22Report {
    cplx direct;        // accelerated additive-divisor value
    cplx direct_raw;    // largest plain partial sum
    cplx b0;
    cplx b1;
    double residual;
    std::map<std::string, double> certificates;
};
Lemma22Report lemma_2_2_residual(GaussInt m, cplx alpha, cplx beta, cplx gamma,
                                 cplx delta, const WeightG& g,
                                 const QuadratureSpec& spec = {});

// X_q(s, alpha; d/c) truncated over 0 < norm(n) <= radius.
cplx x_q_series(int q, cplx s, cplx alpha, GaussInt d, GaussInt c, long long radius);

// ---- mock Hecke systems ----

class MockHecke {
public:
    // prime_values must cover every canonical (first-quadrant) Gaussian prime
    // of norm <= bound, keyed by (re, im); eps = t(i n)/t(n).
    MockHecke(const std::map<std::pair<long long, long long>, double>& prime_values,
              int eps, long long bound);
    // deterministic dyadic-valued system (|t(prime)| <= 2); every generated
    // eigenvalue is an exact double, so the Hecke relation closes exactly
    static MockHecke sato_tate_like(unsigned seed, long long bound);

    double t(GaussInt n) const;
    int eps() const { return eps_; }
    long long bound() const { return bound_; }

    // max |t(m)t(n) - (1/4) sum_{d | (m,n)} t(mn/d^2)| over norm(mn) <= bound
    double hecke_relation_gap(long long test_bound) const;

private:
    MockHecke(unsigned seed, long long bound);
    int eps_;
    long long bound_;
    std::map<std::pair<long long, long long>, double> table_;
    double prime_value(GaussInt p) const;
};

struct CuspidalDatum {
    cplx nu_V;       // purely imaginary
    int p_V = 0;
    double c1_sq = 1.0;
    int eps_V = 1;
    std::shared_ptr<MockHecke> t;
};

// truncated H_V(s,b) = (1/4) sum t(n) (n/|n|)^b |n|^{-2s}, b even
cplx hecke_series(const MockHecke& t, cplx s, int b, long long radius);

// |H(s1)H(s2) - (1/4) zeta_F(s1+s2) sum sigma_{s1-s2}(n) t(n) |n|^{-2s1}|
double hecke_series_product_residual(const MockHecke& t, cplx s1, cplx s2,
                                     long long radius);

// ---- sum formula and moment reports ----

struct SumFormulaReport {
    std::string mode;
    cplx delta_term{};
    cplx continuous_term{};
    cplx kloosterman_term{};
    cplx discrete_term{};
    cplx residual{};
    std::map<std::string, double> certificates;
    std::map<std::string, std::string> inputs;
};

SumFormulaReport spectral_to_kloosterman_report(GaussInt w1, GaussInt w2,
                                                const TestFunctionSpec& h,
                                                const std::vector<CuspidalDatum>& data,
                                                const QuadratureSpec& spec = {});

SumFormulaReport kloosterman_to_spectral_report(GaussInt w1, GaussInt w2,
                                                const TestFunctionC& f,
                                                const std::vector<CuspidalDatum>& data,
                                                const QuadratureSpec& spec = {});

std::string report_to_json(const SumFormulaReport& rep);

// ---- the fourth-moment integral ----

struct MomentPoint {
    cplx z1, z2, z3, z4;
    bool in_series_domain() const {
        return z1.real() > 1 && z2.real() > 1 && z3.real() > 1 && z4.real() > 1;
    }
};

enum class MomentRoute { Direct, Series, Split };

struct MomentValue {
    cplx value;
    std::map<std::string, double> certificates;
};
MomentValue moment_I(const MomentPoint& z, const WeightG& g, MomentRoute route,
                     const QuadratureSpec& spec = {});

// the exact finite rearrangement between the series and split routes
double moment_split_rearrangement_gap(const MomentPoint& z, const WeightG& g,
                                      long long radius);

struct MainTermResult {
    cplx value;                         // extrapolated M at the central point
    std::vector<cplx> ladder;           // per-epsilon values of the six-member sum
    std::vector<double> epsilons;
    double extrapolation_spread;        // gap between the last two Neville columns
};
MainTermResult main_term_constant(const WeightG& g, const std::array<cplx, 4>& direction,
                                  const QuadratureSpec& spec = {});

struct MomentSpectralReport {
    cplx main_term;
    cplx continuous_term;
    cplx discrete_term;
    cplx z2_direct;       // the truncated fourth-moment integral itself
    cplx unassigned_gap;  // z2_direct - (main + continuous + discrete); not asserted
    std::map<std::string, double> certificates;
};
MomentSpectralReport moment_spectral_report(const WeightG& g,
                                            const std::vector<CuspidalDatum>& data,
                                            const QuadratureSpec& spec = {});

std::string report_to_json(const MomentSpectralReport& rep);

}  // namespace kzeta
