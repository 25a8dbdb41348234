#include "convsum/identities.hpp"

#include "convsum/errors.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <vector>

using convsum::Decomposition;
using convsum::FormulaFamily;
using convsum::QSeries;
using convsum::Rational;

namespace {

// Index of Gamma_0(N) by brute enumeration of the projective line over Z/N:
// pairs (a, b) with gcd(a, b, N) = 1 up to multiplication by units.
long p1_size(long n) {
    std::vector<long> units;
    for (long u = 0; u < n; ++u)
        if (std::gcd(u, n) == 1)
            units.push_back(u);
    long count = 0;
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b) {
            if (std::gcd(std::gcd(a, b), n) != 1)
                continue;
            bool canonical = true;
            for (long u : units) {
                const long ua = u * a % n;
                const long ub = u * b % n;
                if (ua < a || (ua == a && ub < b)) {
                    canonical = false;
                    break;
                }
            }
            if (canonical)
                ++count;
        }
    }
    return count;
}

} // namespace

TEST_CASE("sturm bound fixed values") {
    CHECK(convsum::sturm_bound(4, 1) == 0);
    CHECK(convsum::sturm_bound(4, 2) == 1);
    CHECK(convsum::sturm_bound(4, 5) == 2);
    CHECK(convsum::sturm_bound(4, 6) == 4);
    CHECK(convsum::sturm_bound(4, 10) == 6);
    CHECK(convsum::sturm_bound(4, 14) == 8);
    CHECK(convsum::sturm_bound(4, 22) == 12);
    CHECK(convsum::sturm_bound(4, 30) == 24);
    CHECK(convsum::sturm_bound(2, 11) == 2);
    CHECK_THROWS_AS(convsum::sturm_bound(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(convsum::sturm_bound(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(convsum::sturm_bound(4, 0), std::invalid_argument);
}

TEST_CASE("sturm bound against projective line enumeration") {
    for (long n = 1; n <= 30; ++n) {
        const long mu = p1_size(n);
        CHECK(convsum::sturm_bound(4, n) == 4 * mu / 12);
        CHECK(convsum::sturm_bound(6, n) == 6 * mu / 12);
    }
}

TEST_CASE("sturm bound monotone under divisor refinement") {
    for (long n = 1; n <= 60; ++n)
        for (long m = n; m <= 60; m += n)
            CHECK(convsum::sturm_bound(4, n) <= convsum::sturm_bound(4, m));
}

TEST_CASE("decomposition of the (1,5) product") {
    const Decomposition dec = convsum::solve_decomposition(1, 5, 8);
    CHECK(dec.level == 5);
    REQUIRE(dec.coeffs.size() == 2);
    CHECK(dec.coeffs.at(1) == Rational(8, 13));
    CHECK(dec.coeffs.at(5) == Rational(200, 13));
    CHECK(dec.residual.coeff(0) == Rational(0));
    CHECK(dec.residual.coeff(1) == Rational(576, 13));
}

TEST_CASE("decomposition of the (1,11) product") {
    const Decomposition dec = convsum::solve_decomposition(1, 11, 14);
    CHECK(dec.level == 11);
    CHECK(dec.coeffs.at(1) == Rational(50, 61));
    CHECK(dec.coeffs.at(11) == Rational(6050, 61));
    const std::vector<Rational> expected = {
        Rational(0),           Rational(17280, 61),  Rational(14976, 61),
        Rational(-8064, 61),   Rational(-73728, 61), Rational(-1152, 61),
        Rational(-213120, 61), Rational(182016, 61), Rational(-80640, 61),
        Rational(361728, 61),  Rational(411264, 61), Rational(-190080, 61),
        Rational(-377856, 61),
    };
    for (std::size_t n = 0; n < expected.size(); ++n)
        CHECK(dec.residual.coeff(n) == expected[n]);
}

TEST_CASE("decomposition of the degenerate pair") {
    const Decomposition dec = convsum::solve_decomposition(1, 1, 4);
    CHECK(dec.level == 1);
    CHECK(dec.coeffs.at(1) == Rational(0));
    CHECK(dec.residual.is_zero());
}

TEST_CASE("decomposition validation") {
    CHECK_THROWS_AS(convsum::solve_decomposition(2, 4, 32),
                    convsum::unsupported_level_error);
    CHECK_THROWS_AS(convsum::solve_decomposition(1, 12, 32),
                    convsum::unsupported_level_error);
    // lcm(2, 2) = 2 is square-free, so the repeated pair goes through and
    // reproduces the decomposition of L_2 squared.
    CHECK(convsum::solve_decomposition(2, 2, 8).coeffs ==
          convsum::solve_decomposition(1, 2, 8).coeffs);
    // Not enough terms to pass the Sturm bound, which is 4 at level 11.
    CHECK_THROWS_AS(convsum::solve_decomposition(1, 11, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(convsum::solve_decomposition(0, 5, 16),
                    std::invalid_argument);
}

TEST_CASE("decomposition general invariants") {
    const std::vector<std::pair<long, long>> pairs = {
        {1, 2}, {1, 3}, {2, 3}, {2, 5}, {1, 6}, {3, 5}, {1, 15},
        {6, 10}, {2, 15}, {5, 6}, {1, 30}, {10, 15},
    };
    for (const auto& [r, s] : pairs) {
        const long level = std::lcm(r, s);
        const std::size_t terms =
            static_cast<std::size_t>(convsum::sturm_bound(4, level)) + 2;
        const Decomposition dec = convsum::solve_decomposition(r, s, terms);
        CHECK(dec.level == level);
        CHECK(dec.coeffs.size() == convsum::divisors(level).size());

        // Constant term of the residual vanishes and the coefficients sum to
        // the constant term of the product, which is (1 - a)(1 - b) for the
        // effective legs.
        CHECK(dec.residual.coeff(0) == Rational(0));
        Rational sum;
        for (const auto& [d, c] : dec.coeffs)
            sum += c;
        const long a = (r == 1 && s == 1) ? 0 : (r == 1 ? s : r);
        const long b = (r == 1 && s == 1) ? 0 : (s == 1 ? a : s);
        CHECK(sum == Rational((1 - a) * (1 - b)));

        // q^1 coefficient of the residual is [q^1](L_r L_s) - 240 c_1.
        const QSeries product = convsum::detail::l_product(r, s, terms);
        CHECK(dec.residual.coeff(1) ==
              product.coeff(1) - Rational(240) * dec.coeffs.at(1));

        // Swapping the pair changes nothing.
        const Decomposition swapped = convsum::solve_decomposition(s, r, terms);
        CHECK(swapped.coeffs == dec.coeffs);
        CHECK(swapped.residual == dec.residual);
    }
}

TEST_CASE("decomposition at a three prime level stays solvable") {
    const Decomposition dec = convsum::solve_decomposition(1, 30, 26);
    CHECK(dec.coeffs.size() == 8);
    CHECK(dec.residual.coeff(0) == Rational(0));
    // Same system with four primes.
    const Decomposition big = convsum::solve_decomposition(1, 210, 578);
    CHECK(big.coeffs.size() == 16);
    CHECK(big.residual.coeff(0) == Rational(0));
}

TEST_CASE("closed form coefficients match the solver") {
    // (1, p) family.
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
        const auto closed = convsum::closed_form_coeffs(FormulaFamily::one_p, p);
        const auto solved = convsum::solve_decomposition(1, p).coeffs;
        CHECK(closed == solved);
    }
    // (p1, p2) family.
    for (const auto& [p1, p2] :
         std::vector<std::pair<long, long>>{{2, 3}, {2, 5}, {2, 7}, {3, 5}, {3, 7}, {5, 7}, {2, 11}, {3, 11}}) {
        const auto closed =
            convsum::closed_form_coeffs(FormulaFamily::p1_p2, p1, p2);
        const auto solved = convsum::solve_decomposition(p1, p2).coeffs;
        CHECK(closed == solved);
    }
    // (1, p1 p2) family.
    for (const auto& [p1, p2] :
         std::vector<std::pair<long, long>>{{2, 3}, {2, 5}, {2, 7}, {3, 5}, {3, 7}, {5, 7}}) {
        const auto closed =
            convsum::closed_form_coeffs(FormulaFamily::one_p1p2, p1, p2);
        const auto solved = convsum::solve_decomposition(1, p1 * p2).coeffs;
        CHECK(closed == solved);
    }
}

TEST_CASE("closed form fixed values") {
    const auto c12 = convsum::closed_form_coeffs(FormulaFamily::one_p, 2);
    CHECK(c12.at(1) == Rational(1, 5));
    CHECK(c12.at(2) == Rational(4, 5));

    const auto c111 = convsum::closed_form_coeffs(FormulaFamily::one_p, 11);
    CHECK(c111.at(1) == Rational(50, 61));
    CHECK(c111.at(11) == Rational(6050, 61));

    const auto c23 = convsum::closed_form_coeffs(FormulaFamily::p1_p2, 2, 3);
    CHECK(c23.at(1) == Rational(21, 50));
    CHECK(c23.at(2) == Rational(-28, 25));
    CHECK(c23.at(3) == Rational(-81, 50));
    CHECK(c23.at(6) == Rational(108, 25));

    const auto c16 = convsum::closed_form_coeffs(FormulaFamily::one_p1p2, 2, 3);
    CHECK(c16.at(1) == Rational(19, 25));
    CHECK(c16.at(2) == Rational(-24, 25));
    CHECK(c16.at(3) == Rational(-54, 25));
    CHECK(c16.at(6) == Rational(684, 25));

    CHECK_THROWS_AS(convsum::closed_form_coeffs(FormulaFamily::one_p, 6),
                    std::invalid_argument);
    CHECK_THROWS_AS(convsum::closed_form_coeffs(FormulaFamily::p1_p2, 3, 3),
                    std::invalid_argument);
}

TEST_CASE("exact linear solver") {
    using convsum::detail::solve_exact;
    // 2x2 with rational entries.
    std::vector<std::vector<Rational>> a = {
        {Rational(1), Rational(1, 16)},
        {Rational(1), Rational(1)},
    };
    std::vector<Rational> rhs = {Rational(1, 4), Rational(9)};
    const auto x = solve_exact(a, rhs);
    CHECK(x[0] * Rational(1) + x[1] * Rational(1, 16) == Rational(1, 4));
    CHECK(x[0] + x[1] == Rational(9));

    // Random nonsingular systems: check A x = b exactly.
    std::mt19937 rng(90210);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 6);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = 1 + static_cast<std::size_t>(trial % 5);
        std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m));
        std::vector<Rational> b(m);
        for (auto& row : mat)
            for (auto& v : row)
                v = Rational(num(rng), den(rng));
        for (auto& v : b)
            v = Rational(num(rng), den(rng));
        std::vector<Rational> sol;
        try {
            sol = solve_exact(mat, b);
        } catch (const std::logic_error&) {
            continue; // singular draw
        }
        for (std::size_t i = 0; i < m; ++i) {
            Rational acc;
            for (std::size_t j = 0; j < m; ++j)
                acc += mat[i][j] * sol[j];
            CHECK(acc == b[i]);
        }
    }

    // Singular matrix reports rather than divides by zero.
    std::vector<std::vector<Rational>> sing = {
        {Rational(1), Rational(2)},
        {Rational(2), Rational(4)},
    };
    CHECK_THROWS_AS(solve_exact(sing, {Rational(1), Rational(1)}),
                    std::logic_error);
}

TEST_CASE("eta identities verify through the sturm bound") {
    const auto cert15 = convsum::verify_eta_identity(1, 5);
    CHECK(cert15.equal);
    CHECK(cert15.level == 5);
    CHECK(cert15.bound == 2);
    CHECK_FALSE(cert15.mismatch.has_value());

    const auto cert111 = convsum::verify_eta_identity(1, 11);
    CHECK(cert111.equal);
    CHECK(cert111.level == 22);
    CHECK(cert111.bound == 12);

    const auto cert23 = convsum::verify_eta_identity(2, 3);
    CHECK(cert23.equal);
    CHECK(cert23.level == 6);
    CHECK(cert23.bound == 4);

    const auto cert115 = convsum::verify_eta_identity(1, 15);
    CHECK(cert115.equal);
    CHECK(cert115.level == 30);
    CHECK(cert115.bound == 24);

    CHECK_THROWS_AS(convsum::verify_eta_identity(1, 13),
                    convsum::unsupported_pair_error);
}
