#pragma once

#include "convsum/divisors.hpp"
#include "convsum/errors.hpp"
#include "convsum/eta.hpp"
#include "convsum/identities.hpp"
#include "convsum/qseries.hpp"
#include "convsum/rational.hpp"

#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace convsum {

/// W(r, s; n) = sum over positive a, b with ra + sb = n of sigma(a) sigma(b),
/// by direct enumeration.  This is the reference every formula is tested
/// against.
inline Int w_brute(long r, long s, long n) {
    if (r < 1 || s < 1)
        throw std::invalid_argument("w_brute: r and s must be positive");
    Int total = 0;
    for (long a = 1; a * r + s <= n; ++a) {
        const long rest = n - a * r;
        if (rest % s != 0)
            continue;
        total += sigma(1, a) * sigma(1, rest / s);
    }
    return total;
}

/// Same sum using a precomputed table of sigma(1, m); table[m] must be valid
/// for every m up to n / min(r, s).
inline Int w_brute(long r, long s, long n, const std::vector<Int>& sigma1) {
    if (r < 1 || s < 1)
        throw std::invalid_argument("w_brute: r and s must be positive");
    Int total = 0;
    for (long a = 1; a * r + s <= n; ++a) {
        const long rest = n - a * r;
        if (rest % s != 0)
            continue;
        total += sigma1.at(static_cast<std::size_t>(a)) *
                 sigma1.at(static_cast<std::size_t>(rest / s));
    }
    return total;
}

/// Besge's evaluation of W(1, 1; n) for n >= 1:
/// (5/12) sigma_3(n) + (1 - 6n)/12 sigma(n).
inline Rational besge_w11(long n) {
    if (n < 1)
        throw std::invalid_argument("besge_w11: n must be positive");
    return Rational(5, 12) * Rational(sigma(3, n)) +
           Rational(1 - 6 * n, 12) * Rational(sigma(1, n));
}

/// One sigma term of a convolution formula: (constant + linear * n) applied
/// to sigma(n / d).
struct SigmaTerm {
    Rational constant;
    Rational linear;
};

/// Closed evaluation of W(r, s; n) as rational multiples of sigma_3(n/d),
/// affine-in-n multiples of sigma(n/d), and cusp-form corrections.
/// cusp_series is the cusp form of the pair's own decomposition, entering as
/// cusp_scale * [n] cusp_series.  For the (p1, p2) family the derivation
/// eliminates W(1, p1) and W(1, p2), whose own cusp forms then enter the
/// formula as well; cusp_extra carries those contributions already scaled,
/// and is a zero expansion for the other families.  Valid for n below the
/// series truncation.
struct WFormula {
    FormulaFamily family = FormulaFamily::one_p;
    long r = 1;
    long s = 2;
    long level = 2;
    std::map<long, Rational> sigma3_terms;
    std::map<long, SigmaTerm> sigma_terms;
    Rational cusp_scale;
    QSeries cusp_series{0};
    QSeries cusp_extra{0};
    bool cusp_from_eta = false;
};

namespace detail {

/// Cusp expansion of the decomposition of a pair, preferring the built-in
/// eta form and falling back to the exact solver.
inline std::pair<QSeries, bool> cusp_expansion(long a, long b,
                                               std::size_t terms) {
    try {
        return {eta_combination_series(builtin_cusp_form(a, b), terms), true};
    } catch (const unsupported_pair_error&) {
    }
    const long bound = sturm_bound(4, std::lcm(a, b));
    const std::size_t teff = std::max(terms, static_cast<std::size_t>(bound) + 1);
    return {solve_decomposition(a, b, teff).residual.truncated(terms), false};
}

} // namespace detail

/// Build the evaluator for a supported pair: (1, p), (p1, p2) or (1, p1 p2)
/// with distinct primes.  The cusp expansion comes from the built-in eta
/// combination when the pair has one, otherwise from the solved residual.
/// The pair is order-insensitive.
inline WFormula build_w_formula(long r, long s,
                                std::size_t terms = kDefaultTerms) {
    if (r < 1 || s < 1)
        throw std::invalid_argument("build_w_formula: r and s must be positive");
    if (terms == 0)
        throw std::invalid_argument("build_w_formula: need at least one term");
    const long a = std::min(r, s);
    const long b = std::max(r, s);

    WFormula f;
    f.r = a;
    f.s = b;
    if (a == 1 && is_prime(b)) {
        f.family = FormulaFamily::one_p;
    } else if (a > 1 && is_prime(a) && is_prime(b) && a != b) {
        f.family = FormulaFamily::p1_p2;
    } else if (a == 1) {
        const auto factors = factorize(b);
        if (factors.size() != 2 || factors[0].second != 1 || factors[1].second != 1)
            throw unsupported_pair_error("build_w_formula: no closed formula for (" +
                                         std::to_string(r) + ", " + std::to_string(s) +
                                         ")");
        f.family = FormulaFamily::one_p1p2;
    } else {
        throw unsupported_pair_error("build_w_formula: no closed formula for (" +
                                     std::to_string(r) + ", " + std::to_string(s) +
                                     ")");
    }
    f.level = std::lcm(a, b);

    const auto factors = factorize(f.level);
    const long p1 = factors[0].first;
    const long p2 = (factors.size() > 1) ? factors[1].first : 0;

    // Weight 4 part: 5/(12 D) sum over divisors d of the level of d^2
    // sigma_3(n/d), with D = prod (p^2 + 1) over the primes of the level.
    Rational d_factor(1);
    for (const auto& [p, e] : factors) {
        (void)e;
        d_factor *= Rational(Int(Int(p) * p + 1));
    }
    for (const long d : divisors(f.level))
        f.sigma3_terms[d] = Rational(5) * Rational(Int(Int(d) * d)) /
                            (Rational(12) * d_factor);

    // Weight 2 part and cusp scale, by family.
    switch (f.family) {
    case FormulaFamily::one_p:
        f.sigma_terms[1] = {Rational(1, 24), Rational(-1, 4 * b)};
        f.sigma_terms[b] = {Rational(1, 24), Rational(-1, 4)};
        f.cusp_scale = Rational(-1, 1152 * b);
        break;
    case FormulaFamily::p1_p2:
        f.sigma_terms[p1] = {Rational(1, 24), Rational(-1, 4 * p2)};
        f.sigma_terms[p2] = {Rational(1, 24), Rational(-1, 4 * p1)};
        f.cusp_scale = Rational(1, 576 * p1 * p2);
        break;
    case FormulaFamily::one_p1p2:
        f.sigma_terms[1] = {Rational(1, 24), Rational(-1, 4 * f.level)};
        f.sigma_terms[f.level] = {Rational(1, 24), Rational(-1, 4)};
        f.cusp_scale = Rational(-1, 1152 * f.level);
        break;
    }

    auto [series, from_eta] = detail::cusp_expansion(a, b, terms);
    f.cusp_series = std::move(series);
    f.cusp_from_eta = from_eta;
    f.cusp_extra = QSeries(terms);
    if (f.family == FormulaFamily::p1_p2) {
        const Rational aux_scale(-1, 1152 * p1 * p2);
        f.cusp_extra = f.cusp_extra +
                       aux_scale * detail::cusp_expansion(1, p1, terms).first +
                       aux_scale * detail::cusp_expansion(1, p2, terms).first;
    }
    return f;
}

/// Evaluate a formula at n >= 1.  The exact rational total must collapse to
/// an integer; anything else means inconsistent formula data and raises
/// consistency_error.  n at or past the cusp truncation is out of range.
inline Int w_eval(const WFormula& formula, long n) {
    if (n < 1)
        throw std::invalid_argument("w_eval: n must be positive");
    Rational total;
    for (const auto& [d, c] : formula.sigma3_terms)
        total += c * Rational(sigma_div(3, n, d));
    for (const auto& [d, t] : formula.sigma_terms)
        total += (t.constant + t.linear * Rational(n)) * Rational(sigma_div(1, n, d));
    total += formula.cusp_scale * formula.cusp_series.coeff(static_cast<std::size_t>(n));
    total += formula.cusp_extra.coeff(static_cast<std::size_t>(n));
    if (!total.is_integer())
        throw consistency_error("w_eval: W(" + std::to_string(formula.r) + ", " +
                                std::to_string(formula.s) + "; " + std::to_string(n) +
                                ") evaluated to non-integer " + total.str());
    return total.num();
}

} // namespace convsum
