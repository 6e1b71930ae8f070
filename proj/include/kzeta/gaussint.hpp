#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kzeta {

// All GaussInt arithmetic is overflow-checked; breaching the 64-bit word
// throws std::overflow_error instead of wrapping.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("gaussint: add overflow");
    return r;
}
inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("gaussint: sub overflow");
    return r;
}
inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("gaussint: mul overflow");
    return r;
}

// Element of Z[i].
struct GaussInt {
    long long re = 0;
    long long im = 0;

    constexpr GaussInt() = default;
    constexpr GaussInt(long long r, long long i = 0) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return (re == 0 || im == 0) && (re == 1 || re == -1 || im == 1 || im == -1); }

    GaussInt conj() const { return {re, -im}; }

    friend GaussInt operator+(GaussInt a, GaussInt b) {
        return {checked_add(a.re, b.re), checked_add(a.im, b.im)};
    }
    friend GaussInt operator-(GaussInt a, GaussInt b) {
        return {checked_sub(a.re, b.re), checked_sub(a.im, b.im)};
    }
    friend GaussInt operator-(GaussInt a) { return {checked_sub(0, a.re), checked_sub(0, a.im)}; }
    friend GaussInt operator*(GaussInt a, GaussInt b) {
        return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
                checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
    }
    friend bool operator==(GaussInt a, GaussInt b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(GaussInt a, GaussInt b) { return !(a == b); }

    std::complex<double> value() const { return {double(re), double(im)}; }
    double abs() const { return std::abs(value()); }
};

// norm(z) = re^2 + im^2.
inline long long norm(GaussInt z) {
    return checked_add(checked_mul(z.re, z.re), checked_mul(z.im, z.im));
}

// Deterministic ordering used everywhere a canonical enumeration is needed.
inline bool norm_less(GaussInt a, GaussInt b) {
    long long na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

inline GaussInt unit_inverse(GaussInt u) {
    if (!u.is_unit()) throw std::invalid_argument("gaussint: not a unit");
    return u.conj();  // units have norm 1
}

// The unique associate in {re>0, im>=0} (or 0).
GaussInt canonical_associate(GaussInt z);

// True iff d divides z exactly; quotient via exact_div.
bool divides(GaussInt d, GaussInt z);
GaussInt exact_div(GaussInt z, GaussInt d);

// Canonical reduction mod c: z - c*round(z/c) with both coordinates of the
// quotient rounded to the nearest integer, exact halves rounded down.
GaussInt reduce_mod(GaussInt z, GaussInt c);

GaussInt gcd(GaussInt a, GaussInt b);

// g = u*a + v*b with g = gcd(a,b) canonicalized.
struct XgcdResult {
    GaussInt g, u, v;
};
XgcdResult xgcd(GaussInt a, GaussInt b);

struct ResidueSystem {
    GaussInt modulus;
    std::vector<GaussInt> representatives;  // canonical, sorted by (norm,re,im)
    std::string canonicalization = "nearest-half-down";
};

ResidueSystem residues_mod(GaussInt c);
std::vector<GaussInt> invertible_residues(GaussInt c);
GaussInt mod_inverse(GaussInt d, GaussInt c);

struct GaussFactorization {
    GaussInt unit;                                   // n = unit * prod p_i^{e_i}
    std::vector<std::pair<GaussInt, int>> primes;    // canonical first-quadrant primes
};
GaussFactorization factorize(GaussInt n);

// All divisors of n, unit multiples included (4 per associate class),
// sorted by (norm, re, im).
std::vector<GaussInt> divisors(GaussInt n);

long long euler_phi(GaussInt c);

// Text format "a+bi" / "a-bi" / "a" / "bi"; round-trips exactly.
std::string to_string(GaussInt z);
GaussInt parse_gauss(const std::string& s);

// Nonzero lattice points with norm(z) <= max_norm in the canonical order.
std::vector<GaussInt> lattice_by_norm(long long max_norm, bool include_zero = false);

// Number of z with norm(z) == n (the sum-of-two-squares count), n >= 0.
long long r2_count(long long n);

}  // namespace kzeta
