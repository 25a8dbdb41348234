#pragma once

#include "convsum/errors.hpp"
#include "convsum/qseries.hpp"
#include "convsum/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace convsum {

/// Finite product of Dedekind eta factors eta(d z)^(r_d) with nonzero integer
/// exponents, stored as the map d -> r_d.  The q-expansion is
/// q^e0 * prod_d prod_n (1 - q^(d n))^(r_d) with leading exponent
/// e0 = (sum_d d * r_d) / 24, which must come out a non-negative integer.
class EtaQuotient {
public:
    explicit EtaQuotient(std::map<long, int> exponents)
        : level_(lcm_of_keys(exponents)), exponents_(std::move(exponents)) {
        validate();
    }

    EtaQuotient(long level, std::map<long, int> exponents)
        : level_(level), exponents_(std::move(exponents)) {
        validate();
    }

    long level() const noexcept { return level_; }
    const std::map<long, int>& exponents() const noexcept { return exponents_; }

    /// Order of vanishing at q = 0.
    long leading_exponent() const noexcept { return leading_; }

    friend bool operator==(const EtaQuotient& a, const EtaQuotient& b) {
        return a.level_ == b.level_ && a.exponents_ == b.exponents_;
    }

private:
    long level_;
    std::map<long, int> exponents_;
    long leading_ = 0;

    static long lcm_of_keys(const std::map<long, int>& exponents) {
        long l = 1;
        for (const auto& [d, r] : exponents) {
            (void)r;
            if (d >= 1)
                l = std::lcm(l, d);
        }
        return l;
    }

    void validate() {
        if (exponents_.empty())
            throw std::invalid_argument("EtaQuotient: no factors");
        if (level_ < 1)
            throw std::invalid_argument("EtaQuotient: level " +
                                        std::to_string(level_) + " is not positive");
        long weighted = 0;
        for (const auto& [d, r] : exponents_) {
            if (d < 1)
                throw std::invalid_argument("EtaQuotient: divisor " +
                                            std::to_string(d) + " is not positive");
            if (r == 0)
                throw std::invalid_argument("EtaQuotient: zero exponent on divisor " +
                                            std::to_string(d));
            if (level_ % d != 0)
                throw std::invalid_argument("EtaQuotient: divisor " + std::to_string(d) +
                                            " does not divide level " +
                                            std::to_string(level_));
            weighted += d * r;
        }
        if (weighted % 24 != 0)
            throw std::invalid_argument("EtaQuotient: leading exponent " +
                                        Rational(weighted, 24).str() +
                                        " is not an integer");
        leading_ = weighted / 24;
        if (leading_ < 0)
            throw std::invalid_argument("EtaQuotient: leading exponent " +
                                        std::to_string(leading_) + " is negative");
    }
};

/// Parse a quotient written as comma or whitespace separated "d^r" factors,
/// for example "1^4,5^4" or "1^6 2^-2 11^6 22^-2".
inline EtaQuotient parse_eta_spec(std::string_view text) {
    std::map<long, int> exponents;
    std::size_t pos = 0;
    bool any = false;
    while (pos < text.size()) {
        while (pos < text.size() &&
               (text[pos] == ',' || text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
        if (pos == text.size())
            break;
        std::size_t end = pos;
        while (end < text.size() && text[end] != ',' && text[end] != ' ' &&
               text[end] != '\t')
            ++end;
        const std::string token(text.substr(pos, end - pos));
        pos = end;
        any = true;

        const std::size_t caret = token.find('^');
        if (caret == std::string::npos || caret == 0 || caret + 1 == token.size())
            throw eta_parse_error("parse_eta_spec: token \"" + token +
                                  "\" is not of the form d^r");
        const std::string dpart = token.substr(0, caret);
        const std::string rpart = token.substr(caret + 1);
        auto all_digits = [](std::string_view s, std::size_t from) {
            if (from >= s.size())
                return false;
            for (std::size_t i = from; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9')
                    return false;
            return true;
        };
        if (!all_digits(dpart, 0) ||
            !all_digits(rpart, (rpart[0] == '-') ? 1 : 0))
            throw eta_parse_error("parse_eta_spec: token \"" + token +
                                  "\" is not of the form d^r");
        const long d = std::stol(dpart);
        const long r = std::stol(rpart);
        if (d < 1)
            throw eta_parse_error("parse_eta_spec: divisor in token \"" + token +
                                  "\" is not positive");
        if (r == 0)
            throw eta_parse_error("parse_eta_spec: zero exponent in token \"" +
                                  token + "\"");
        if (!exponents.emplace(d, static_cast<int>(r)).second)
            throw eta_parse_error("parse_eta_spec: repeated divisor " +
                                  std::to_string(d));
    }
    if (!any)
        throw eta_parse_error("parse_eta_spec: empty quotient");
    return EtaQuotient(std::move(exponents));
}

namespace detail {

/// prod_n (1 - q^(d n)) truncated to `terms` coefficients, via the pentagonal
/// number expansion, so the cost is the number of nonzero terms only.
inline QSeries euler_product(long d, std::size_t terms) {
    std::vector<Rational> c(terms);
    if (terms > 0)
        c[0] = 1;
    for (long j = 1;; ++j) {
        const long e1 = d * (j * (3 * j - 1)) / 2;
        const long e2 = d * (j * (3 * j + 1)) / 2;
        if (e1 >= static_cast<long>(terms) && e2 >= static_cast<long>(terms))
            break;
        const long sign = (j % 2 == 0) ? 1 : -1;
        if (e1 < static_cast<long>(terms))
            c[static_cast<std::size_t>(e1)] += Rational(sign);
        if (e2 < static_cast<long>(terms))
            c[static_cast<std::size_t>(e2)] += Rational(sign);
    }
    return QSeries(std::move(c));
}

} // namespace detail

/// q-expansion of an eta quotient, truncated to `terms` coefficients.
inline QSeries eta_series(const EtaQuotient& quotient, std::size_t terms) {
    if (terms == 0)
        throw std::invalid_argument("eta_series: need at least one term");
    const long e0 = quotient.leading_exponent();
    if (e0 >= static_cast<long>(terms))
        return QSeries(terms);
    const std::size_t unit_terms = terms - static_cast<std::size_t>(e0);

    // Split positive and negative exponents so only one reciprocal is taken.
    QSeries numer = QSeries::one(unit_terms);
    QSeries denom = QSeries::one(unit_terms);
    for (const auto& [d, r] : quotient.exponents()) {
        const QSeries base = detail::euler_product(d, unit_terms);
        if (r > 0)
            numer = numer * pow(base, r);
        else
            denom = denom * pow(base, -static_cast<long>(r));
    }
    const QSeries unit = denom == QSeries::one(unit_terms)
                             ? numer
                             : numer * reciprocal(denom);

    std::vector<Rational> c(terms);
    for (std::size_t i = 0; i < unit_terms; ++i)
        c[i + static_cast<std::size_t>(e0)] = unit.coeff(i);
    return QSeries(std::move(c));
}

/// One summand of a rational linear combination of eta quotients.
struct EtaTerm {
    Rational coeff;
    EtaQuotient quotient;
};

/// Rational linear combination of eta quotients.  The empty combination is
/// the zero cusp form and is only obtainable through zero().
class EtaCombination {
public:
    explicit EtaCombination(std::vector<EtaTerm> terms) : terms_(std::move(terms)) {
        if (terms_.empty())
            throw std::invalid_argument("EtaCombination: no terms; use zero()");
        level_ = 1;
        for (const auto& term : terms_) {
            if (term.coeff.is_zero())
                throw std::invalid_argument("EtaCombination: zero coefficient");
            level_ = std::lcm(level_, term.quotient.level());
        }
    }

    static EtaCombination zero() { return EtaCombination(private_tag{}); }

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<EtaTerm>& terms() const noexcept { return terms_; }
    long level() const noexcept { return level_; }

private:
    struct private_tag {};
    explicit EtaCombination(private_tag) {}

    std::vector<EtaTerm> terms_;
    long level_ = 1;
};

/// q-expansion of a combination, truncated to `terms` coefficients.
inline QSeries eta_combination_series(const EtaCombination& combination,
                                      std::size_t terms) {
    QSeries acc(terms);
    for (const auto& term : combination.terms())
        acc = acc + term.coeff * eta_series(term.quotient, terms);
    return acc;
}

namespace detail {

inline EtaCombination make_combination(
    std::initializer_list<std::pair<const char*, const char*>> parts) {
    std::vector<EtaTerm> terms;
    for (const auto& [coeff, spec] : parts)
        terms.push_back({Rational::parse(coeff), parse_eta_spec(spec)});
    return EtaCombination(std::move(terms));
}

/// The fourteen level 30 quotients shared by the (3,5) and (1,15) cusp forms,
/// in increasing order of vanishing (q^1 through q^13, then q^15).
inline const std::vector<const char*>& level30_quotients() {
    static const std::vector<const char*> specs = {
        "1^11 2^-5 3^-5 5^-5 6^3 10^3 15^11 30^-5",
        "1^2 2^-3 3^-4 5^-3 6^9 10^4 15^7 30^-4",
        "1^4 2^-3 3^-2 5^2 6^5 10^1 30^1",
        "1^1 2^-2 3^-3 5^2 6^8 10^-1 15^2 30^1",
        "1^2 2^-2 5^-2 6^2 10^6 30^2",
        "1^1 2^2 3^4 5^3 6^-3 10^-2 15^-4 30^7",
        "1^1 3^-1 5^-3 10^2 15^7 30^2",
        "1^1 2^-1 3^-2 5^1 6^4 10^-1 30^6",
        "2^1 5^2 6^-1 10^-3 15^2 30^7",
        "1^-2 2^3 3^5 5^3 6^-4 10^-4 15^-4 30^11",
        "1^1 3^1 5^3 10^-4 15^-5 30^12",
        "2^1 3^1 5^2 6^-2 10^-3 15^-3 30^12",
        "1^-1 2^3 3^1 5^3 6^-1 10^-5 15^-7 30^15",
        "2^1 3^2 5^2 6^-3 10^-3 15^-8 30^17",
    };
    return specs;
}

inline EtaCombination make_level30_combination(
    const std::vector<const char*>& coeffs) {
    const auto& specs = level30_quotients();
    std::vector<EtaTerm> terms;
    for (std::size_t i = 0; i < specs.size(); ++i)
        terms.push_back({Rational::parse(coeffs[i]), parse_eta_spec(specs[i])});
    return EtaCombination(std::move(terms));
}

} // namespace detail

/// The pairs with built-in cusp-form data, in the canonical order used by
/// reports and the command line.
inline const std::vector<std::pair<long, long>>& builtin_pairs() {
    static const std::vector<std::pair<long, long>> pairs = {
        {1, 2}, {1, 3}, {1, 5}, {1, 7}, {1, 11}, {2, 3},  {2, 5},
        {2, 7}, {3, 5}, {1, 6}, {1, 10}, {1, 14}, {1, 15},
    };
    return pairs;
}

/// Built-in eta-quotient expression of the cusp form C_(r,s).  The pair is
/// order-insensitive; anything outside builtin_pairs() throws
/// unsupported_pair_error.
inline const EtaCombination& builtin_cusp_form(long r, long s) {
    using detail::make_combination;
    using detail::make_level30_combination;
    static const std::map<std::pair<long, long>, EtaCombination> table = [] {
        std::map<std::pair<long, long>, EtaCombination> t;
        t.emplace(std::make_pair(1L, 2L), EtaCombination::zero());
        t.emplace(std::make_pair(1L, 3L), EtaCombination::zero());
        t.emplace(std::make_pair(1L, 5L), make_combination({
            {"576/13", "1^4 5^4"},
        }));
        t.emplace(std::make_pair(1L, 7L), make_combination({
            {"576/5", "1^5 2^-1 7^5 14^-1"},
            {"2304/5", "1^2 2^2 7^2 14^2"},
        }));
        t.emplace(std::make_pair(1L, 11L), make_combination({
            {"17280/61", "1^6 2^-2 11^6 22^-2"},
            {"118656/61", "1^4 11^4"},
            {"276480/61", "1^2 2^2 11^2 22^2"},
            {"276480/61", "2^4 22^4"},
        }));
        t.emplace(std::make_pair(2L, 3L), make_combination({
            {"-144/5", "1^2 2^2 3^2 6^2"},
        }));
        t.emplace(std::make_pair(2L, 5L), make_combination({
            {"48/13", "1^-2 2^8 5^2"},
            {"-6000/13", "1^2 5^-2 10^8"},
        }));
        t.emplace(std::make_pair(2L, 7L), make_combination({
            {"288/5", "1^5 2^-1 7^5 14^-1"},
            {"-336/25", "1^-2 2^6 7^6 14^-2"},
            {"8064/25", "1^2 2^2 7^2 14^2"},
            {"-5136/25", "1^6 2^-2 7^-2 14^6"},
        }));
        t.emplace(std::make_pair(3L, 5L), make_level30_combination({
            "108/13", "-1584/13", "-2376/13", "-5832/13", "11448/13",
            "33264/13", "10080/13", "83520/13", "145584/13", "-117720/13",
            "-1944", "158688/13", "216000/13", "316224/13",
        }));
        t.emplace(std::make_pair(1L, 6L), make_combination({
            {"288/5", "1^2 2^2 3^2 6^2"},
        }));
        t.emplace(std::make_pair(1L, 10L), make_combination({
            {"2976/13", "1^-1 2^5 5^5 10^-1"},
            {"-480/13", "1^5 2^-1 5^-1 10^5"},
        }));
        t.emplace(std::make_pair(1L, 14L), make_combination({
            {"10272/25", "1^-2 2^6 7^6 14^-2"},
            {"-4608/25", "1^2 2^2 7^2 14^2"},
            {"672/25", "1^6 2^-2 7^-2 14^6"},
        }));
        t.emplace(std::make_pair(1L, 15L), make_level30_combination({
            "5976/13", "74592/13", "-137808/13", "-85968/13", "153072/13",
            "-617184/13", "1513728/13", "-2807424/13", "-943200/13", "135504",
            "3255696/13", "-3409344/13", "586368/13", "-10461312/13",
        }));
        return t;
    }();

    const auto key = std::make_pair(std::min(r, s), std::max(r, s));
    const auto it = table.find(key);
    if (it == table.end())
        throw unsupported_pair_error("builtin_cusp_form: no data for pair (" +
                                     std::to_string(r) + ", " + std::to_string(s) +
                                     ")");
    return it->second;
}

} // namespace convsum
