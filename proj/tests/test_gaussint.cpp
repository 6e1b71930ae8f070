#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "kzeta/gaussint.hpp"
#include "kzeta/rational.hpp"

using namespace kzeta;

TEST_CASE("norm basics") {
    CHECK(norm(GaussInt{1, 1}) == 2);
    CHECK(norm(GaussInt{3, 4}) == 25);
    CHECK(norm(GaussInt{0, 0}) == 0);
}

TEST_CASE("norm is multiplicative (property)") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> d(-100, 100);
    for (int it = 0; it < 500; ++it) {
        GaussInt a{d(rng), d(rng)}, b{d(rng), d(rng)};
        CHECK(norm(a * b) == norm(a) * norm(b));
    }
}

TEST_CASE("overflow is detected, not wrapped") {
    GaussInt big{(long long)3e18, 0};
    CHECK_THROWS_AS(norm(big), std::overflow_error);
}

TEST_CASE("gcd") {
    CHECK(gcd(GaussInt{2, 0}, GaussInt{1, 1}) == GaussInt{1, 1});
    CHECK(gcd(GaussInt{3, 0}, GaussInt{1, 1}) == GaussInt{1, 0});
    CHECK(gcd(GaussInt{0, 0}, GaussInt{0, -7}) == GaussInt{7, 0});
    CHECK_THROWS_AS(gcd(GaussInt{0, 0}, GaussInt{0, 0}), std::domain_error);
    // gcd divides both inputs, every common divisor divides it
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> d(-30, 30);
    for (int it = 0; it < 200; ++it) {
        GaussInt a{d(rng), d(rng)}, b{d(rng), d(rng)};
        if (a.is_zero() && b.is_zero()) continue;
        GaussInt g = gcd(a, b);
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        CHECK(g.re > 0);
        CHECK(g.im >= 0);
    }
}

TEST_CASE("residue systems") {
    CHECK(residues_mod(GaussInt{1, 1}).representatives.size() == 2);
    CHECK(residues_mod(GaussInt{2, 0}).representatives.size() == 4);
    CHECK(residues_mod(GaussInt{0, 1}).representatives.size() == 1);
    CHECK(residues_mod(GaussInt{3, 2}).representatives.size() == 13);
    // every z reduces to exactly one representative
    auto rs = residues_mod(GaussInt{3, 1});
    std::set<std::pair<long long, long long>> reps;
    for (GaussInt r : rs.representatives) reps.insert({r.re, r.im});
    for (long long x = -7; x <= 7; ++x)
        for (long long y = -7; y <= 7; ++y) {
            GaussInt r = reduce_mod(GaussInt{x, y}, GaussInt{3, 1});
            CHECK(reps.count({r.re, r.im}) == 1);
            CHECK(divides(GaussInt{3, 1}, GaussInt{x, y} - r));
        }
}

TEST_CASE("invertible residues and phi") {
    auto u2 = invertible_residues(GaussInt{2, 0});
    REQUIRE(u2.size() == 2);
    // the classes of 1 and i (canonical order puts i first)
    CHECK(u2[0] == GaussInt{0, 1});
    CHECK(u2[1] == GaussInt{1, 0});
    CHECK(invertible_residues(GaussInt{1, 1}).size() == 1);
    CHECK(invertible_residues(GaussInt{0, 1}).size() == 1);

    CHECK(euler_phi(GaussInt{1, 1}) == 1);
    CHECK(euler_phi(GaussInt{2, 0}) == 2);
    CHECK(euler_phi(GaussInt{3, 0}) == 8);

    // formula vs enumeration for all 0 < norm(c) <= 500
    for (GaussInt c : lattice_by_norm(500)) {
        if (c.re < 0 || c.im < 0) continue;  // associates share phi
        CHECK((long long)invertible_residues(c).size() == euler_phi(c));
    }
}

TEST_CASE("mod_inverse") {
    GaussInt inv = mod_inverse(GaussInt{0, 1}, GaussInt{2, 0});
    CHECK(divides(GaussInt{2, 0}, GaussInt{0, 1} * inv - GaussInt{1, 0}));
    CHECK(mod_inverse(GaussInt{1, 0}, GaussInt{5, 3}) == GaussInt{1, 0});
    CHECK_THROWS_AS(mod_inverse(GaussInt{1, 1}, GaussInt{2, 0}), std::domain_error);
    // round trip over every invertible residue, norm(c) <= 200
    for (GaussInt c : lattice_by_norm(200)) {
        if (c.re <= 0 || c.im < 0) continue;
        for (GaussInt d : invertible_residues(c))
            CHECK(divides(c, d * mod_inverse(d, c) - GaussInt{1, 0}));
    }
}

TEST_CASE("divisors") {
    CHECK(divisors(GaussInt{1, 0}).size() == 4);
    CHECK(divisors(GaussInt{1, 1}).size() == 8);
    CHECK(divisors(GaussInt{2, 0}).size() == 12);
    for (GaussInt n : lattice_by_norm(500)) {
        auto dv = divisors(n);
        CHECK(dv.size() % 4 == 0);
        for (GaussInt d : dv) CHECK(divides(d, n));
    }
}

TEST_CASE("factorization reassembles") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> d(-60, 60);
    for (int it = 0; it < 300; ++it) {
        GaussInt n{d(rng), d(rng)};
        if (n.is_zero()) continue;
        auto f = factorize(n);
        GaussInt prod = f.unit;
        for (auto& [p, e] : f.primes)
            for (int k = 0; k < e; ++k) prod = prod * p;
        CHECK(prod == n);
    }
}

TEST_CASE("text format round trip") {
    const char* cases[] = {"0",  "1",    "-1",  "i",     "-i",   "3+4i",
                           "3-4i", "-3+4i", "-12", "7i",    "-15i", "100-1i"};
    for (const char* s : cases) {
        GaussInt z = parse_gauss(s);
        CHECK(parse_gauss(to_string(z)) == z);
    }
    CHECK(parse_gauss("3+4i") == GaussInt{3, 4});
    CHECK(parse_gauss("-i") == GaussInt{0, -1});
    CHECK(to_string(GaussInt{0, -1}) == "-i");
    CHECK_THROWS_AS(parse_gauss("2+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gauss("x"), std::invalid_argument);
}

TEST_CASE("r2 counts match the lattice") {
    std::vector<long long> counts(101, 0);
    for (GaussInt z : lattice_by_norm(100)) ++counts[norm(z)];
    for (long long n = 1; n <= 100; ++n) CHECK(r2_count(n) == counts[n]);
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 3), b(2, 5);
    CHECK((a + b) == Rational(11, 15));
    CHECK((a * b) == Rational(2, 15));
    CHECK((a / b) == Rational(5, 6));
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(binomial_rational(10, 3) == Rational(120));
    CHECK(binomial_rational(3, 7).is_zero());
}
