#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kzeta {

using bigint = boost::multiprecision::int512_t;

// Exact rational arithmetic on 512-bit words, normalized after every
// operation.  Magnitudes are capped so a breach throws instead of wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        normalize();
    }

    static Rational from_i128(bigint n, bigint d) {
        if (d == 0) throw std::domain_error("rational: zero denominator");
        Rational r;
        r.num_ = n;
        r.den_ = d;
        r.normalize();
        return r;
    }

    bigint num() const { return num_; }
    bigint den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(checked(a.num_ * b.den_) + checked(b.num_ * a.den_),
                         checked(a.den_ * b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128(checked(a.num_ * b.den_) - checked(b.num_ * a.den_),
                         checked(a.den_ * b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational x = from_i128(a.num_, b.den_);   // cross-reduce first
        Rational y = from_i128(b.num_, a.den_);
        return from_i128(checked(x.num_ * y.num_), checked(x.den_ * y.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational: division by zero");
        return a * from_i128(b.den_, b.num_);
    }
    friend Rational operator-(const Rational& a) { return from_i128(-a.num_, a.den_); }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    bool is_zero() const { return num_ == 0; }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    std::string str() const {
        return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
    }

private:
    bigint num_, den_;

    static bigint checked(bigint v) {
        static const bigint LIMIT = (bigint)1 << 500;
        if (v >= LIMIT || v <= -LIMIT) throw std::overflow_error("rational: overflow");
        return v;
    }
    static bigint gcd128(bigint a, bigint b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            bigint t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        bigint g = gcd128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
        checked(num_);
        checked(den_);
    }
};

// Pochhammer (a)_k in exact arithmetic.
inline Rational pochhammer(const Rational& a, int k) {
    Rational out(1);
    Rational t = a;
    for (int j = 0; j < k; ++j) {
        out *= t;
        t += Rational(1);
    }
    return out;
}

inline Rational binomial_rational(long long n, long long k) {
    if (k < 0 || k > n) return Rational(0);
    Rational out(1);
    for (long long j = 1; j <= k; ++j) out *= Rational(n - k + j, j);
    return out;
}

}  // namespace kzeta
