#include "kzeta/gaussint.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace kzeta {

GaussInt canonical_associate(GaussInt z) {
    if (z.is_zero()) return z;
    GaussInt best = z;
    GaussInt cur = z;
    const GaussInt I{0, 1};
    for (int k = 0; k < 3; ++k) {
        cur = cur * I;
        if ((cur.re > 0 && cur.im >= 0) ) best = cur;
    }
    if (z.re > 0 && z.im >= 0) best = z;
    return best;
}

bool divides(GaussInt d, GaussInt z) {
    if (d.is_zero()) return z.is_zero();
    GaussInt num = z * d.conj();
    long long n = norm(d);
    return num.re % n == 0 && num.im % n == 0;
}

GaussInt exact_div(GaussInt z, GaussInt d) {
    if (d.is_zero()) throw std::domain_error("gaussint: division by zero");
    GaussInt num = z * d.conj();
    long long n = norm(d);
    if (num.re % n != 0 || num.im % n != 0)
        throw std::domain_error("gaussint: inexact division");
    return {num.re / n, num.im / n};
}

namespace {

long long floor_div(long long a, long long b) {  // b > 0
    long long q = a / b, r = a % b;
    return (r != 0 && r < 0) ? q - 1 : q;
}

// nearest integer to a/n, exact halves down (n > 0)
long long round_half_down(long long a, long long n) {
    return floor_div(checked_add(checked_mul(2, a), n - 1), checked_mul(2, n));
}

}  // namespace

GaussInt reduce_mod(GaussInt z, GaussInt c) {
    if (c.is_zero()) throw std::domain_error("gaussint: zero modulus");
    GaussInt num = z * c.conj();
    long long n = norm(c);
    GaussInt q{round_half_down(num.re, n), round_half_down(num.im, n)};
    return z - c * q;
}

GaussInt gcd(GaussInt a, GaussInt b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gaussint: gcd(0,0)");
    while (!b.is_zero()) {
        GaussInt r = reduce_mod(a, b);
        a = b;
        b = r;
    }
    return canonical_associate(a);
}

XgcdResult xgcd(GaussInt a, GaussInt b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gaussint: xgcd(0,0)");
    GaussInt r0 = a, r1 = b;
    GaussInt u0{1, 0}, u1{0, 0};
    GaussInt v0{0, 0}, v1{1, 0};
    while (!r1.is_zero()) {
        GaussInt num = r0 * r1.conj();
        long long n = norm(r1);
        GaussInt q{round_half_down(num.re, n), round_half_down(num.im, n)};
        GaussInt r2 = r0 - r1 * q;
        GaussInt u2 = u0 - u1 * q;
        GaussInt v2 = v0 - v1 * q;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    // canonicalize: r0 = u0*a + v0*b, multiply through by the unit that fixes r0
    GaussInt g = canonical_associate(r0);
    if (!r0.is_zero()) {
        GaussInt u = exact_div(g, r0);  // a unit
        u0 = u0 * u;
        v0 = v0 * u;
    }
    return {g, u0, v0};
}

ResidueSystem residues_mod(GaussInt c) {
    if (c.is_zero()) throw std::domain_error("gaussint: zero modulus");
    long long n = norm(c);
    long long a = c.re, b = c.im;
    // Hermite box for the lattice cZ[i]: second coordinates form gZ with
    // g = gcd(a,b); first coordinates at fixed second form (n/g)Z.
    long long g = std::gcd(std::abs(a), std::abs(b));
    if (g == 0) g = std::abs(a) + std::abs(b);
    long long e = n / g;
    std::vector<GaussInt> reps;
    reps.reserve(static_cast<size_t>(n));
    for (long long y = 0; y < g; ++y)
        for (long long x = 0; x < e; ++x)
            reps.push_back(reduce_mod(GaussInt{x, y}, c));
    std::sort(reps.begin(), reps.end(), norm_less);
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    if ((long long)reps.size() != n)
        throw std::logic_error("gaussint: residue enumeration mismatch");
    return {c, std::move(reps)};
}

std::vector<GaussInt> invertible_residues(GaussInt c) {
    ResidueSystem rs = residues_mod(c);
    std::vector<GaussInt> out;
    if (c.is_unit()) return {rs.representatives.front()};
    for (const GaussInt& d : rs.representatives) {
        if (d.is_zero()) continue;
        if (norm(gcd(d, c)) == 1) out.push_back(d);
    }
    return out;
}

GaussInt mod_inverse(GaussInt d, GaussInt c) {
    if (c.is_zero()) throw std::domain_error("gaussint: zero modulus");
    if (c.is_unit()) return reduce_mod(GaussInt{0, 0}, c);
    XgcdResult x = xgcd(d, c);
    if (norm(x.g) != 1) throw std::domain_error("gaussint: not invertible");
    return reduce_mod(x.u * unit_inverse(x.g), c);
}

namespace {

// x+yi with x^2+y^2 = p for a rational prime p = 1 mod 4 (or p = 2)
GaussInt split_prime(long long p) {
    static std::map<long long, GaussInt> cache;
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    for (long long x = 1; x * x <= p; ++x) {
        long long y2 = p - x * x;
        long long y = (long long)std::sqrt((double)y2);
        while (y * y < y2) ++y;
        while (y * y > y2) --y;
        if (y * y == y2) {
            GaussInt pi = canonical_associate(GaussInt{x, y});
            cache[p] = pi;
            return pi;
        }
    }
    throw std::logic_error("gaussint: no two-square decomposition");
}

}  // namespace

GaussFactorization factorize(GaussInt n) {
    if (n.is_zero()) throw std::domain_error("gaussint: factorize(0)");
    GaussFactorization f;
    GaussInt z = n;
    const GaussInt one_plus_i{1, 1};
    int a2 = 0;
    while (norm(z) % 2 == 0) {
        z = exact_div(z, one_plus_i);
        ++a2;
    }
    if (a2 > 0) f.primes.push_back({one_plus_i, a2});
    for (long long p = 3; p * p <= norm(z); p += 2) {
        if (p % 4 == 3) {
            int e = 0;
            while (z.re % p == 0 && z.im % p == 0) {
                z = GaussInt{z.re / p, z.im / p};
                ++e;
            }
            if (e > 0) f.primes.push_back({GaussInt{p, 0}, e});
        } else {
            if (norm(z) % p != 0) continue;
            GaussInt pi = split_prime(p);
            for (GaussInt q : {pi, canonical_associate(pi.conj())}) {
                int e = 0;
                while (divides(q, z)) {
                    z = exact_div(z, q);
                    ++e;
                }
                if (e > 0) f.primes.push_back({q, e});
            }
        }
    }
    if (norm(z) > 1) {
        GaussInt q = canonical_associate(z);
        f.primes.push_back({q, 1});
        z = exact_div(z, q);
    }
    f.unit = z;
    if (!f.unit.is_unit()) throw std::logic_error("gaussint: factorization failed");
    std::sort(f.primes.begin(), f.primes.end(),
              [](const auto& l, const auto& r) { return norm_less(l.first, r.first); });
    return f;
}

std::vector<GaussInt> divisors(GaussInt n) {
    if (n.is_zero()) throw std::domain_error("gaussint: divisors(0)");
    GaussFactorization f = factorize(n);
    std::vector<GaussInt> divs{GaussInt{1, 0}};
    for (const auto& [p, e] : f.primes) {
        std::vector<GaussInt> next;
        next.reserve(divs.size() * (e + 1));
        for (GaussInt d : divs) {
            GaussInt pk{1, 0};
            for (int k = 0; k <= e; ++k) {
                next.push_back(d * pk);
                if (k < e) pk = pk * p;
            }
        }
        divs = std::move(next);
    }
    std::vector<GaussInt> out;
    out.reserve(divs.size() * 4);
    const GaussInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (GaussInt d : divs)
        for (GaussInt u : units) out.push_back(d * u);
    std::sort(out.begin(), out.end(), norm_less);
    return out;
}

long long euler_phi(GaussInt c) {
    if (c.is_zero()) throw std::domain_error("gaussint: euler_phi(0)");
    GaussFactorization f = factorize(c);
    long long phi = 1;
    for (const auto& [p, e] : f.primes) {
        long long np = norm(p);
        long long pk = 1;
        for (int k = 0; k < e - 1; ++k) pk = checked_mul(pk, np);
        phi = checked_mul(phi, checked_mul(pk, np - 1));
    }
    return phi;
}

std::string to_string(GaussInt z) {
    if (z.im == 0) return std::to_string(z.re);
    std::string im_part;
    if (z.im == 1) im_part = "i";
    else if (z.im == -1) im_part = "-i";
    else im_part = std::to_string(z.im) + "i";
    if (z.re == 0) return im_part;
    if (z.im > 0) return std::to_string(z.re) + "+" + im_part;
    return std::to_string(z.re) + im_part;
}

GaussInt parse_gauss(const std::string& s) {
    auto fail = [&]() { throw std::invalid_argument("gaussint: cannot parse '" + s + "'"); };
    size_t i = 0, n = s.size();
    if (n == 0) fail();
    auto read_signed = [&](long long& out, bool& had_digits) {
        long long sign = 1;
        had_digits = false;
        if (i < n && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        long long v = 0;
        while (i < n && s[i] >= '0' && s[i] <= '9') {
            v = checked_add(checked_mul(v, 10), s[i] - '0');
            had_digits = true;
            ++i;
        }
        out = sign * v;
        return sign;
    };
    long long first = 0;
    bool digits = false;
    long long sign1 = read_signed(first, digits);
    if (i < n && s[i] == 'i') {  // pure imaginary
        ++i;
        if (i != n) fail();
        return {0, digits ? first : sign1};
    }
    if (!digits) fail();
    if (i == n) return {first, 0};
    long long second = 0;
    bool digits2 = false;
    if (s[i] != '+' && s[i] != '-') fail();
    long long sign2 = read_signed(second, digits2);
    if (i >= n || s[i] != 'i') fail();
    ++i;
    if (i != n) fail();
    return {first, digits2 ? second : sign2};
}

std::vector<GaussInt> lattice_by_norm(long long max_norm, bool include_zero) {
    std::vector<GaussInt> pts;
    long long r = (long long)std::sqrt((double)max_norm) + 2;
    for (long long x = -r; x <= r; ++x)
        for (long long y = -r; y <= r; ++y) {
            if (x == 0 && y == 0 && !include_zero) continue;
            if (x * x + y * y <= max_norm) pts.push_back({x, y});
        }
    std::sort(pts.begin(), pts.end(), norm_less);
    return pts;
}

long long r2_count(long long n) {
    if (n < 0) throw std::domain_error("gaussint: r2_count(n<0)");
    if (n == 0) return 1;
    // r2(n) = 4 * (d_{1 mod 4}(n) - d_{3 mod 4}(n))
    auto w = [](long long v) -> long long {
        return v % 4 == 1 ? 1 : (v % 4 == 3 ? -1 : 0);
    };
    long long count = 0;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        count += w(d);
        if (n / d != d) count += w(n / d);
    }
    return 4 * count;
}

}  // namespace kzeta
