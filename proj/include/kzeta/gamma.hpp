#pragma once

#include <complex>

namespace kzeta {

using cplx = std::complex<double>;

// Principal log-gamma up to multiples of 2*pi*i (exp(log_gamma) is exact).
cplx log_gamma(cplx z);

cplx gamma_fn(cplx z);

// Entire reciprocal 1/Gamma; exactly 0 at nonpositive integers.
cplx recip_gamma(cplx z);

// Gamma(a)/Gamma(b) without overflow of the individual factors.
cplx gamma_ratio(cplx a, cplx b);

// Upper incomplete gamma Gamma(w, x) for complex w and real x > 0.
cplx upper_gamma(cplx w, double x);

// Digamma, principal branch.
cplx digamma(cplx z);

}  // namespace kzeta
