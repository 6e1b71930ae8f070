#pragma once

#include <complex>
#include <vector>

#include <numeric>

#include "kzeta/gaussint.hpp"
#include "kzeta/parallel.hpp"

namespace kzeta {

using cplx = std::complex<double>;

struct KloostermanValue {
    cplx value;             // full complex sum (imaginary part is roundoff)
    long long modulus_norm;
    double imag_residual;   // |Im| against the reality invariant
};

// Cached per-modulus data: invertible residues, their inverses and the
// e(k/N) phase table.  Immutable after construction, shareable.
class ModulusContext {
public:
    explicit ModulusContext(GaussInt c);

    GaussInt modulus() const { return c_; }
    long long norm() const { return n_; }
    const std::vector<GaussInt>& units() const { return units_; }
    const std::vector<GaussInt>& inverses() const { return inverses_; }

    // Re(z * conj(c)) mod norm(c), reduced into [0, N)
    long long phase_index(GaussInt z) const;
    cplx phase(long long k) const { return {cos_[k], sin_[k]}; }

    cplx sum(GaussInt m, GaussInt n) const;      // S_F(m,n;c)
    cplx sum_ramanujan(GaussInt n) const;        // S_F(n,0;c)

private:
    GaussInt c_;
    long long n_;
    std::vector<GaussInt> units_, inverses_;
    std::vector<double> cos_, sin_;
};

KloostermanValue kloosterman_sum(GaussInt m, GaussInt n, GaussInt c);
double ramanujan_sum(GaussInt n, GaussInt c);

// sigma_0(c,0): number of divisor associate-classes.
long long sigma0_classes(GaussInt c);

// |S_F(m,n;c)| / (|(m,n,c)| |c| sigma_0(c,0)), with (0,0,c) = c.
double weil_ratio(GaussInt m, GaussInt n, GaussInt c);

// Enumerates each invertible residue of c once (representatives from the
// Hermite box; phases are class functions so no canonical reduction).
template <class F>
void for_each_invertible_residue(GaussInt c, F&& fn) {
    long long n = norm(c);
    long long g = std::gcd(std::abs(c.re), std::abs(c.im));
    long long e = n / g;
    GaussFactorization fac = factorize(c);
    for (long long y = 0; y < g; ++y)
        for (long long x = 0; x < e; ++x) {
            GaussInt d{x, y};
            bool coprime = true;
            for (const auto& [p, exp] : fac.primes)
                if (divides(p, d)) {
                    coprime = false;
                    break;
                }
            if (coprime) fn(d);
        }
}

// Reality / symmetry audit over all norm(m),norm(n) <= mn_norm_max and
// 0 < norm(c) <= c_norm_max.
struct KloostermanAudit {
    double max_imag_residual = 0;  // |Im S| - 1e-9*(1+|Re S|) scale
    double max_symmetry_gap = 0;
    long long sums_evaluated = 0;
};
KloostermanAudit audit_reality_symmetry(long long mn_norm_max, long long c_norm_max,
                                        Exec exec = Exec::Parallel);

// max weil_ratio over norm(c) <= c_norm_max for every (m,n) in the list.
double weil_ratio_max(const std::vector<std::pair<GaussInt, GaussInt>>& mn,
                      long long c_norm_max, Exec exec = Exec::Parallel);

// sum_{0<norm(c)<=radius} (c/|c|)^{2p} S_F(n,0;c) |c|^{-2s}   (s as norm(c)^{-s})
cplx ramanujan_lattice_sum(GaussInt n, cplx s, int p, long long radius,
                           Exec exec = Exec::Parallel);

}  // namespace kzeta
