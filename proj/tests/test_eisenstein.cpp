#include "convsum/eisenstein.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using convsum::CuspLabel;
using convsum::EisensteinSpec;
using convsum::QSeries;
using convsum::Rational;

namespace {

QSeries series_of(std::vector<long> values) {
    std::vector<Rational> c;
    c.reserve(values.size());
    for (long v : values)
        c.emplace_back(v);
    return QSeries(std::move(c));
}

} // namespace

TEST_CASE("eisenstein spec validation") {
    CHECK_THROWS_AS(EisensteinSpec(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(EisensteinSpec(4, 0), std::invalid_argument);
    CHECK(EisensteinSpec(2, 5).weight == 2);
}

TEST_CASE("e4 expansion") {
    const QSeries e4 = eisenstein_series(EisensteinSpec(4, 1), 6);
    CHECK(e4 == series_of({1, 240, 2160, 6720, 17520, 30240}));
}

TEST_CASE("e2 expansion") {
    const QSeries e2 = eisenstein_series(EisensteinSpec(2, 1), 5);
    CHECK(e2 == series_of({1, -24, -72, -96, -168}));
}

TEST_CASE("rescaled expansions live on multiples of the scale") {
    const QSeries e4d = eisenstein_series(EisensteinSpec(4, 5), 11);
    CHECK(e4d == series_of({1, 0, 0, 0, 0, 240, 0, 0, 0, 0, 2160}));
    const QSeries e2d = eisenstein_series(EisensteinSpec(2, 3), 7);
    CHECK(e2d == series_of({1, 0, 0, -24, 0, 0, -72}));
}

TEST_CASE("l series expansion") {
    CHECK(convsum::l_series(2, 4) == series_of({-1, -24, -24, -96}));
    CHECK(convsum::l_series(5, 6) == series_of({-4, -24, -72, -96, -168, -24}));
    // L_d = E_2(z) - d E_2(dz) coefficientwise.
    for (long d : {2L, 3L, 6L, 11L}) {
        const QSeries direct = convsum::l_series(d, 30);
        const QSeries composed =
            eisenstein_series(EisensteinSpec(2, 1), 30) -
            Rational(d) * eisenstein_series(EisensteinSpec(2, d), 30);
        CHECK(direct == composed);
    }
    CHECK_THROWS_AS(convsum::l_series(1, 10), std::invalid_argument);
}

TEST_CASE("cusp labels") {
    const CuspLabel inf(22, 22);
    CHECK(inf.is_infinity());
    const CuspLabel zero_alias(0, 22);
    CHECK(zero_alias.is_infinity());
    CHECK(zero_alias.c() == 22);
    const CuspLabel two(2, 22);
    CHECK_FALSE(two.is_infinity());
    CHECK_THROWS_AS(CuspLabel(4, 22), std::invalid_argument);
    CHECK_THROWS_AS(CuspLabel(3, 22), std::invalid_argument);
}

TEST_CASE("cusp constants at infinity match constant terms") {
    for (long d : {2L, 3L, 5L, 7L, 11L, 13L, 30L}) {
        const CuspLabel inf(0, d);
        CHECK(cusp_constant_l(d, inf) == Rational(1 - d));
        CHECK(cusp_constant_l(d, inf) == convsum::l_series(d, 2).coeff(0));
        CHECK(cusp_constant_e4(d, inf) == Rational(1));
    }
}

TEST_CASE("cusp constant table for prime levels") {
    // Level p: cusps 1/1 and infinity; scales 1 and p.
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L}) {
        const CuspLabel one(1, p);
        const CuspLabel inf(p, p);
        CHECK(cusp_constant_e4(1, one) == Rational(1));
        CHECK(cusp_constant_e4(p, one) ==
              Rational(1, p) * Rational(1, p) * Rational(1, p) * Rational(1, p));
        CHECK(cusp_constant_e4(1, inf) == Rational(1));
        CHECK(cusp_constant_e4(p, inf) == Rational(1));
        // (L_p at 1/1)^2 = (p - 1)^2 / p^2.
        const Rational lp1 = cusp_constant_l(p, one);
        CHECK(lp1 == Rational(1 - p, p) * Rational(-1));
        CHECK(lp1 * lp1 == Rational((p - 1) * (p - 1), p * p));
    }
}

TEST_CASE("cusp constant tables for biprime levels") {
    // Level p1 p2: cusps 1/1, 1/p1, 1/p2, infinity against scales
    // 1, p1, p2, p1 p2.
    for (long p1 : {2L, 3L, 5L}) {
        for (long p2 : {3L, 5L, 7L, 11L, 13L}) {
            if (p1 == p2)
                continue;
            const long n = p1 * p2;
            const CuspLabel c1(1, n);
            const CuspLabel cp1(p1, n);
            const CuspLabel cp2(p2, n);
            const CuspLabel inf(n, n);

            auto fourth = [](const Rational& r) { return r * r * r * r; };
            for (const CuspLabel* cusp : {&c1, &cp1, &cp2, &inf})
                CHECK(cusp_constant_e4(1, *cusp) == Rational(1));
            CHECK(cusp_constant_e4(p1, c1) == fourth(Rational(1, p1)));
            CHECK(cusp_constant_e4(p1, cp1) == Rational(1));
            CHECK(cusp_constant_e4(p1, cp2) == fourth(Rational(1, p1)));
            CHECK(cusp_constant_e4(p1, inf) == Rational(1));
            CHECK(cusp_constant_e4(n, c1) == fourth(Rational(1, n)));
            CHECK(cusp_constant_e4(n, cp1) == fourth(Rational(1, p2)));
            CHECK(cusp_constant_e4(n, cp2) == fourth(Rational(1, p1)));
            CHECK(cusp_constant_e4(n, inf) == Rational(1));

            CHECK(cusp_constant_l(p1, c1) == Rational(1) - Rational(1, p1));
            CHECK(cusp_constant_l(p1, cp1) == Rational(1 - p1));
            CHECK(cusp_constant_l(p1, cp2) == Rational(1) - Rational(1, p1));
            CHECK(cusp_constant_l(p1, inf) == Rational(1 - p1));
            CHECK(cusp_constant_l(n, cp1) == Rational(1) - Rational(p1 * p1, n));
            CHECK(cusp_constant_l(n, cp2) == Rational(1) - Rational(p2 * p2, n));
            CHECK(cusp_constant_l(n, inf) == Rational(1 - n));
        }
    }
}

TEST_CASE("cusp constant validation errors") {
    const CuspLabel one(1, 6);
    CHECK_THROWS_AS(cusp_constant_e4(0, one), std::invalid_argument);
    CHECK_THROWS_AS(cusp_constant_l(1, one), std::invalid_argument);
}
