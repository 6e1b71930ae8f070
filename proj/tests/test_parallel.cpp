#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kzeta/hecke_zeta.hpp"
#include "kzeta/kloosterman.hpp"
#include "kzeta/moment.hpp"
#include "kzeta/parallel.hpp"

using namespace kzeta;

TEST_CASE("indexed_sum is bitwise identical across policies") {
    auto term = [](size_t i) {
        double x = double(i + 1);
        return cplx(std::sin(x) / x, std::cos(3 * x) / (x * x));
    };
    cplx s = indexed_sum<cplx>(100000, term, Exec::Serial);
    cplx p = indexed_sum<cplx>(100000, term, Exec::Parallel);
    CHECK(s.real() == p.real());
    CHECK(s.imag() == p.imag());
}

TEST_CASE("ramanujan lattice sum: serial equals parallel exactly") {
    cplx a = ramanujan_lattice_sum({1, 0}, cplx(3, 0), 0, 2000, Exec::Serial);
    cplx b = ramanujan_lattice_sum({1, 0}, cplx(3, 0), 0, 2000, Exec::Parallel);
    CHECK(a.real() == b.real());
    CHECK(a.imag() == b.imag());
}

TEST_CASE("additive divisor sum: serial equals parallel exactly") {
    WeightG g = WeightG::gaussian();
    auto h = [&](cplx u) { return g_star(g, u, cplx(1, 0), cplx(1, 0)); };
    cplx a = additive_divisor_sum({1, 0}, cplx(-0.2, 0), cplx(-2.3, 0), h, 3000,
                                  Exec::Serial);
    cplx b = additive_divisor_sum({1, 0}, cplx(-0.2, 0), cplx(-2.3, 0), h, 3000,
                                  Exec::Parallel);
    CHECK(a.real() == b.real());
    CHECK(a.imag() == b.imag());
}
