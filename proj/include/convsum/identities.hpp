#pragma once

#include "convsum/divisors.hpp"
#include "convsum/eisenstein.hpp"
#include "convsum/errors.hpp"
#include "convsum/eta.hpp"
#include "convsum/qseries.hpp"
#include "convsum/rational.hpp"

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace convsum {

/// Sturm bound floor(k * mu / 12) for weight k and level N, where
/// mu = N * prod_(p | N) (1 + 1/p) is the index of Gamma_0(N).  Two modular
/// forms of that weight and level agreeing up to the bound are equal.
inline long sturm_bound(int weight, long level) {
    if (weight < 2 || weight % 2 != 0)
        throw std::invalid_argument("sturm_bound: weight " + std::to_string(weight) +
                                    " must be a positive even integer");
    if (level < 1)
        throw std::invalid_argument("sturm_bound: level " + std::to_string(level) +
                                    " is not positive");
    long mu = level;
    for (const auto& [p, e] : factorize(level)) {
        (void)e;
        mu = mu / p * (p + 1);
    }
    return weight * mu / 12;
}

namespace detail {

/// Exact solve of a square system by fraction-free (Bareiss) elimination.
/// Throws std::logic_error on a singular matrix.
inline std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a,
                                         std::vector<Rational> rhs) {
    const std::size_t m = a.size();
    if (rhs.size() != m)
        throw std::invalid_argument("solve_exact: shape mismatch");

    // Clear denominators row by row to reach an all-integer augmented matrix.
    std::vector<std::vector<Int>> w(m, std::vector<Int>(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != m)
            throw std::invalid_argument("solve_exact: shape mismatch");
        Int l = 1;
        for (const auto& x : a[i])
            l = boost::multiprecision::lcm(l, x.den());
        l = boost::multiprecision::lcm(l, rhs[i].den());
        for (std::size_t j = 0; j < m; ++j)
            w[i][j] = a[i][j].num() * (l / a[i][j].den());
        w[i][m] = rhs[i].num() * (l / rhs[i].den());
    }

    Int prev = 1;
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t pivot = k;
        while (pivot < m && w[pivot][k] == 0)
            ++pivot;
        if (pivot == m)
            throw std::logic_error("solve_exact: singular system");
        if (pivot != k)
            std::swap(w[pivot], w[k]);
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j <= m; ++j)
                w[i][j] = (w[k][k] * w[i][j] - w[i][k] * w[k][j]) / prev;
            w[i][k] = 0;
        }
        prev = w[k][k];
    }

    std::vector<Rational> x(m);
    for (std::size_t k = m; k-- > 0;) {
        Rational acc(w[k][m]);
        for (std::size_t j = k + 1; j < m; ++j)
            acc -= Rational(w[k][j]) * x[j];
        x[k] = acc / Rational(w[k][k]);
    }
    return x;
}

/// The weight 2 product whose decomposition is sought.  Pairs with r == 1
/// square the other leg, since L_1 would be identically zero; (1,1) has the
/// zero product.
inline QSeries l_product(long r, long s, std::size_t terms) {
    if (r == 1 && s == 1)
        return QSeries(terms);
    const long a = (r == 1) ? s : r;
    const long b = (s == 1) ? a : s;
    return l_series(a, terms) * l_series(b, terms);
}

inline Rational l_product_cusp_constant(long r, long s, const CuspLabel& cusp) {
    if (r == 1 && s == 1)
        return Rational(0);
    const long a = (r == 1) ? s : r;
    const long b = (s == 1) ? a : s;
    return cusp_constant_l(a, cusp) * cusp_constant_l(b, cusp);
}

} // namespace detail

/// Result of decomposing L_r L_s into Eisenstein series of weight 4 plus a
/// cusp form: coefficients c_d for each divisor d of the level, and the
/// residual series L_r L_s - sum_d c_d E_4(dz).
struct Decomposition {
    long r = 0;
    long s = 0;
    long level = 1;
    std::map<long, Rational> coeffs;
    QSeries residual{0};
};

/// Decompose L_r L_s at level N = lcm(r, s) by matching constant terms at
/// every cusp 1/c of Gamma_0(N).  Requires squarefree N; `terms` must exceed
/// sturm_bound(4, N) so the residual determines the cusp form.
inline Decomposition solve_decomposition(long r, long s,
                                         std::size_t terms = kDefaultTerms) {
    if (r < 1 || s < 1)
        throw std::invalid_argument("solve_decomposition: arguments must be positive");
    const long level = std::lcm(r, s);
    if (!is_squarefree(level))
        throw unsupported_level_error("solve_decomposition: level " +
                                      std::to_string(level) + " is not squarefree");
    const long bound = sturm_bound(4, level);
    if (terms <= static_cast<std::size_t>(bound))
        throw std::invalid_argument("solve_decomposition: " + std::to_string(terms) +
                                    " terms do not reach past the Sturm bound " +
                                    std::to_string(bound));

    const auto divs = divisors(level);
    const std::size_t m = divs.size();
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
    std::vector<Rational> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        const CuspLabel cusp(divs[i], level);
        for (std::size_t j = 0; j < m; ++j)
            a[i][j] = cusp_constant_e4(divs[j], cusp);
        rhs[i] = detail::l_product_cusp_constant(r, s, cusp);
    }
    const auto x = detail::solve_exact(std::move(a), std::move(rhs));

    Decomposition dec;
    dec.r = r;
    dec.s = s;
    dec.level = level;
    QSeries eisenstein_part(terms);
    for (std::size_t j = 0; j < m; ++j) {
        dec.coeffs[divs[j]] = x[j];
        if (!x[j].is_zero())
            eisenstein_part =
                eisenstein_part +
                x[j] * eisenstein_series(EisensteinSpec(4, divs[j]), terms);
    }
    dec.residual = detail::l_product(r, s, terms) - eisenstein_part;
    return dec;
}

/// Which closed-form coefficient family applies to a pair.
enum class FormulaFamily {
    one_p,    // (1, p)
    p1_p2,    // (p1, p2), distinct primes
    one_p1p2, // (1, p1 p2), distinct primes
};

/// Closed-form decomposition coefficients.  For one_p pass the prime as p1;
/// for the other families pass both primes.
inline std::map<long, Rational> closed_form_coeffs(FormulaFamily family, long p1,
                                                   long p2 = 0) {
    if (!is_prime(p1))
        throw std::invalid_argument("closed_form_coeffs: " + std::to_string(p1) +
                                    " is not prime");
    if (family == FormulaFamily::one_p) {
        const Rational d(Int(p1) * p1 + 1);
        const Rational sq(Int(p1 - 1) * (p1 - 1));
        return {
            {1, sq / d},
            {p1, Rational(Int(p1) * p1) * sq / d},
        };
    }
    if (!is_prime(p2) || p2 == p1)
        throw std::invalid_argument("closed_form_coeffs: " + std::to_string(p1) +
                                    ", " + std::to_string(p2) +
                                    " are not distinct primes");
    const Int q1 = Int(p1) * p1;
    const Int q2 = Int(p2) * p2;
    const Rational d(Int((q1 + 1) * (q2 + 1)));
    const Int c1 = Int(p1) * q1;
    const Int c2 = Int(p2) * q2;
    if (family == FormulaFamily::p1_p2) {
        const Int t1 = q1 - p1 + 1;
        const Int t2 = q2 - p2 + 1;
        return {
            {1, Rational(t1 * t2) / d},
            {p1, Rational(-c1 * t2) / d},
            {p2, Rational(-c2 * t1) / d},
            {p1 * p2, Rational(c1 * c2) / d},
        };
    }
    const Int pp = Int(p1) * p2;
    return {
        {1, Rational(1) - Rational(2 * pp) / d},
        {p1, Rational(-2 * c1 * p2) / d},
        {p2, Rational(-2 * p1 * c2) / d},
        {p1 * p2, Rational(Int(pp * pp)) - Rational(2 * c1 * c2) / d},
    };
}

/// Outcome of a Sturm-bound comparison between the solved residual and the
/// built-in eta combination for a pair.  `level` is the lcm of the pair's
/// level and the combination's, `bound` the Sturm bound there, and the
/// comparison window is q^0 through q^bound inclusive.
struct SturmCertificate {
    long r = 0;
    long s = 0;
    int weight = 4;
    long level = 1;
    long bound = 0;
    bool equal = false;

    struct Mismatch {
        long index;
        Rational residual;
        Rational combination;
    };
    std::optional<Mismatch> mismatch;
};

/// Verify that the built-in eta combination for (r, s) equals the residual of
/// the decomposition of L_r L_s, coefficient by coefficient through the Sturm
/// bound.  `terms` is raised to cover the bound when too small.
inline SturmCertificate verify_eta_identity(long r, long s,
                                            std::size_t terms = kDefaultTerms) {
    const EtaCombination& combination = builtin_cusp_form(r, s);
    const long pair_level = std::lcm(r, s);
    const long level = std::lcm(pair_level, combination.level());
    const long bound = sturm_bound(4, level);
    const std::size_t window = static_cast<std::size_t>(bound) + 1;
    const std::size_t teff = std::max(terms, window);

    const Decomposition dec = solve_decomposition(r, s, teff);
    const QSeries combo = eta_combination_series(combination, teff);

    SturmCertificate cert;
    cert.r = r;
    cert.s = s;
    cert.weight = 4;
    cert.level = level;
    cert.bound = bound;
    cert.equal = true;
    for (std::size_t n = 0; n < window; ++n) {
        if (dec.residual.coeff(n) == combo.coeff(n))
            continue;
        cert.equal = false;
        cert.mismatch = SturmCertificate::Mismatch{
            static_cast<long>(n), dec.residual.coeff(n), combo.coeff(n)};
        break;
    }
    return cert;
}

} // namespace convsum
