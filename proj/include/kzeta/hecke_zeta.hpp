#pragma once

#include <complex>

#include "kzeta/gaussint.hpp"
#include "kzeta/parallel.hpp"
#include "kzeta/quadrature.hpp"

namespace kzeta {

using cplx = std::complex<double>;

// Grossencharakter index: the character is (n/|n|)^{4p}.
struct CharacterIndex {
    int p = 0;
};

struct ZetaValue {
    cplx s;
    int p = 0;
    cplx value;
    enum class Method { TruncatedSeries, Continued } method = Method::Continued;
    double tail_bound = 0;
};

// (1/4) sum_{d|n} (d/|d|)^{2*twice_p} |d|^{2 nu}.
// Character bookkeeping: sigma_nu(n,p) of the divisor sums used here always
// appears with an even or "half" twist; passing twice_p = 2p gives the
// integral-index sum, twice_p = p the half-index one.
cplx sigma_nu(GaussInt n, cplx nu, int twice_p);

// Truncated lattice series, valid for Re s > 1; tail bound included.
ZetaValue zeta_F_truncated(cplx s, int p, long long radius);

// Continued evaluation via the two-sided incomplete-gamma expansion of the
// completed function pi^{-s} Gamma(s+2|p|) zeta_F(s,p).  Trustworthy for
// |Im s| up to roughly 18; beyond that the expansion loses significance at
// the rate exp(pi |Im s| / 2) * eps and the tail_bound field reflects it.
ZetaValue zeta_F(cplx s, int p, const QuadratureSpec& spec = {});

// Completed function at an off-center split point; the residual
// |Lambda(s) - Lambda(1-s)| is a genuine check of the theta transformation.
cplx lambda_completed(cplx s, int p, double split_point = 1.0);
double functional_equation_residual(cplx s, int p, double split_point = 1.5);

// |LHS - RHS| of the Ramanujan-type identity: LHS sums the twisted
// Ramanujan sums (c/|c|)^{2p} S_F(n,0;c) |c|^{-2s} over norm(c) <= radius,
// RHS is 4 sigma_{1-s}(n,p/2)/zeta_F(s,p/2) (zeta branch when n = 0).
double ramanujan_identity_residual(GaussInt n, cplx s, int p_even,
                                   const QuadratureSpec& spec = {},
                                   Exec exec = Exec::Parallel);

// |truncated LHS - RHS| for the sigma-product identity
// (1/4) sum (n/|n|)^{4a} sigma_tau(n,b) sigma_xi(n,c) |n|^{-2s}
//   = zF(s,a) zF(s-tau,a+b) zF(s-xi,a+c) zF(s-tau-xi,a+b+c) / zF(2s-tau-xi,2a+b+c).
double ramanujan_product_residual(int a, int b, int c, cplx tau, cplx xi, cplx s,
                                  const QuadratureSpec& spec = {},
                                  Exec exec = Exec::Parallel);

}  // namespace kzeta
