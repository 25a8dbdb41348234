#pragma once

#include "convsum/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace convsum {

/// Truncation used by series builders when the caller does not pick one.
inline constexpr std::size_t kDefaultTerms = 64;

/// Truncated power series in q with exact rational coefficients.
///
/// A series stores exactly truncation() coefficients, for q^0 through
/// q^(truncation()-1).  Binary operations truncate to the shorter operand,
/// so precision only ever shrinks and never silently invents zeros.
/// Instances are immutable once constructed.
class QSeries {
public:
    /// Zero series with the given number of retained coefficients.
    explicit QSeries(std::size_t truncation) : coeffs_(truncation) {}

    explicit QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    static QSeries one(std::size_t truncation) {
        QSeries s(truncation);
        if (truncation > 0)
            s.coeffs_[0] = 1;
        return s;
    }

    std::size_t truncation() const noexcept { return coeffs_.size(); }

    /// Coefficient of q^n.  Asking at or beyond the truncation is an error:
    /// that coefficient was never computed.
    const Rational& coeff(std::size_t n) const {
        if (n >= coeffs_.size())
            throw std::out_of_range("QSeries: coefficient " + std::to_string(n) +
                                    " requested but truncation is " +
                                    std::to_string(coeffs_.size()));
        return coeffs_[n];
    }

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /// Copy truncated to min(truncation(), t) coefficients.
    QSeries truncated(std::size_t t) const {
        std::vector<Rational> c(coeffs_.begin(),
                                coeffs_.begin() +
                                    static_cast<std::ptrdiff_t>(std::min(t, coeffs_.size())));
        return QSeries(std::move(c));
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const Rational& c) { return c.is_zero(); });
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        const std::size_t t = std::min(a.truncation(), b.truncation());
        std::vector<Rational> c(t);
        for (std::size_t i = 0; i < t; ++i)
            c[i] = a.coeffs_[i] + b.coeffs_[i];
        return QSeries(std::move(c));
    }

    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        const std::size_t t = std::min(a.truncation(), b.truncation());
        std::vector<Rational> c(t);
        for (std::size_t i = 0; i < t; ++i)
            c[i] = a.coeffs_[i] - b.coeffs_[i];
        return QSeries(std::move(c));
    }

    QSeries operator-() const {
        std::vector<Rational> c(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            c[i] = -coeffs_[i];
        return QSeries(std::move(c));
    }

    /// Cauchy product, truncated to the shorter operand.
    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        const std::size_t t = std::min(a.truncation(), b.truncation());
        std::vector<Rational> c(t);
        for (std::size_t i = 0; i < t; ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; i + j < t; ++j) {
                if (b.coeffs_[j].is_zero())
                    continue;
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return QSeries(std::move(c));
    }

    friend QSeries operator*(const Rational& c, const QSeries& s) {
        std::vector<Rational> out(s.truncation());
        if (!c.is_zero())
            for (std::size_t i = 0; i < out.size(); ++i)
                out[i] = c * s.coeffs_[i];
        return QSeries(std::move(out));
    }

    friend QSeries operator*(const QSeries& s, const Rational& c) { return c * s; }

    friend std::ostream& operator<<(std::ostream& os, const QSeries& s) {
        os << '[';
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
            if (i > 0)
                os << ", ";
            os << s.coeffs_[i];
        }
        return os << ']';
    }

private:
    std::vector<Rational> coeffs_;
};

/// Multiplicative inverse of a series with invertible constant term.
inline QSeries reciprocal(const QSeries& a) {
    const std::size_t t = a.truncation();
    if (t == 0)
        return QSeries(0);
    if (a.coeff(0).is_zero())
        throw std::domain_error("reciprocal: constant term is zero");
    std::vector<Rational> b(t);
    b[0] = Rational(1) / a.coeff(0);
    for (std::size_t n = 1; n < t; ++n) {
        Rational acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (a.coeff(k).is_zero())
                continue;
            acc += a.coeff(k) * b[n - k];
        }
        b[n] = -acc / a.coeff(0);
    }
    return QSeries(std::move(b));
}

/// Integer power by binary exponentiation; negative exponents invert first.
inline QSeries pow(const QSeries& base, long exponent) {
    if (exponent < 0)
        return pow(reciprocal(base), -exponent);
    QSeries result = QSeries::one(base.truncation());
    QSeries sq = base;
    long e = exponent;
    while (e > 0) {
        if (e & 1)
            result = result * sq;
        e >>= 1;
        if (e > 0)
            sq = sq * sq;
    }
    return result;
}

} // namespace convsum
