#pragma once

#include "convsum/divisors.hpp"
#include "convsum/qseries.hpp"
#include "convsum/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace convsum {

/// A rescaled Eisenstein series E_w(d z) of weight 2 or 4.
struct EisensteinSpec {
    int weight;
    long scale;

    EisensteinSpec(int w, long d) : weight(w), scale(d) {
        if (w != 2 && w != 4)
            throw std::invalid_argument("EisensteinSpec: weight " +
                                        std::to_string(w) + " not supported");
        if (d < 1)
            throw std::invalid_argument("EisensteinSpec: scale " +
                                        std::to_string(d) + " is not positive");
    }
};

/// Cusp of Gamma_0(N) written as 1/c for a divisor c of N.  The cusp at
/// infinity is the one with c == N; 0 is accepted as an alias for it.
class CuspLabel {
public:
    CuspLabel(long c, long level) : level_(level) {
        if (level < 1)
            throw std::invalid_argument("CuspLabel: level " +
                                        std::to_string(level) + " is not positive");
        c_ = (c == 0) ? level : c;
        if (c_ < 1 || level % c_ != 0)
            throw std::invalid_argument("CuspLabel: " + std::to_string(c) +
                                        " does not divide level " +
                                        std::to_string(level));
    }

    long c() const noexcept { return c_; }
    long level() const noexcept { return level_; }
    bool is_infinity() const noexcept { return c_ == level_; }

private:
    long c_;
    long level_;
};

/// q-expansion of E_2(dz) = 1 - 24 sum sigma(n) q^(dn) or
/// E_4(dz) = 1 + 240 sum sigma_3(n) q^(dn), truncated to `terms` coefficients.
inline QSeries eisenstein_series(const EisensteinSpec& spec, std::size_t terms) {
    if (terms == 0)
        throw std::invalid_argument("eisenstein_series: need at least one term");
    std::vector<Rational> c(terms);
    c[0] = 1;
    const unsigned k = (spec.weight == 2) ? 1u : 3u;
    const long factor = (spec.weight == 2) ? -24 : 240;
    const std::size_t nmax = (terms - 1) / static_cast<std::size_t>(spec.scale);
    const auto sig = sigma_table(k, nmax + 1);
    for (std::size_t n = 1; n <= nmax; ++n)
        c[n * static_cast<std::size_t>(spec.scale)] = Rational(Int(factor * sig[n]));
    return QSeries(std::move(c));
}

/// L_d(z) = E_2(z) - d E_2(dz) for d >= 2.  Weight 2, level d, constant
/// term 1 - d.
inline QSeries l_series(long d, std::size_t terms) {
    if (d < 2)
        throw std::invalid_argument("l_series: scale " + std::to_string(d) +
                                    " must be at least 2");
    if (terms == 0)
        throw std::invalid_argument("l_series: need at least one term");
    std::vector<Rational> c(terms);
    c[0] = 1 - d;
    const auto sig = sigma_table(1, terms);
    for (std::size_t n = 1; n < terms; ++n) {
        Int v = -24 * sig[n];
        if (n % static_cast<std::size_t>(d) == 0)
            v += 24 * d * sig[n / static_cast<std::size_t>(d)];
        c[n] = Rational(std::move(v));
    }
    return QSeries(std::move(c));
}

/// Constant term of E_4(tz) at the cusp 1/c, namely (gcd(c, t) / t)^4.
inline Rational cusp_constant_e4(long t, const CuspLabel& cusp) {
    if (t < 1)
        throw std::invalid_argument("cusp_constant_e4: scale " +
                                    std::to_string(t) + " is not positive");
    const Int g = boost::multiprecision::gcd(Int(cusp.c()), Int(t));
    return Rational(boost::multiprecision::pow(g, 4),
                    boost::multiprecision::pow(Int(t), 4));
}

/// Constant term of L_t at the cusp 1/c, namely 1 - gcd(c, t)^2 / t.
inline Rational cusp_constant_l(long t, const CuspLabel& cusp) {
    if (t < 2)
        throw std::invalid_argument("cusp_constant_l: scale " +
                                    std::to_string(t) + " must be at least 2");
    const Int g = boost::multiprecision::gcd(Int(cusp.c()), Int(t));
    return Rational(1) - Rational(g * g, Int(t));
}

} // namespace convsum
