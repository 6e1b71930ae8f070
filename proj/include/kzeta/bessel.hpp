#pragma once

#include <complex>

namespace kzeta {

using cplx = std::complex<double>;

// Thrown when an iteration fails to reach its accuracy target.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// J_n(x), integer order, real argument.
double bessel_J(int n, double x);

// Modified Bessel functions of complex order, real positive argument.
cplx bessel_I(cplx nu, double x);
cplx bessel_K(cplx nu, double x);

// J_n and Y_n of integer order at complex argument (principal branch for Y).
cplx bessel_J_complex(int n, cplx z);
cplx bessel_Y_complex(int n, cplx z);

// J*_nu(u): entire in u, equal to J_nu(x)(x/2)^{-nu} for x > 0.
cplx jstar(cplx nu, cplx u);

}  // namespace kzeta
