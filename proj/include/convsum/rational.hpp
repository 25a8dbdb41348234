#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace convsum {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, kept in lowest terms with a positive
/// denominator.  Zero is represented as 0/1.  Division by zero and a zero
/// denominator throw std::domain_error.
///
/// The textual form is "num/den", with "/den" omitted when den == 1 and the
/// sign always on the numerator.  parse() accepts exactly that form.
class Rational {
public:
    Rational() = default;
    Rational(long value) : num_(value) {}
    Rational(Int value) : num_(std::move(value)) {}

    Rational(Int numerator, Int denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        reduce();
    }

    Rational(long numerator, long denominator)
        : Rational(Int(numerator), Int(denominator)) {}

    const Int& num() const noexcept { return num_; }
    const Int& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    bool is_negative() const noexcept { return num_ < 0; }

    static Rational parse(std::string_view text);

    std::string str() const {
        std::string out = num_.str();
        if (den_ != 1) {
            out += '/';
            out += den_.str();
        }
        return out;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1)
            return Rational(Int(a.num_ + b.num_));
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1)
            return Rational(Int(a.num_ - b.num_));
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.den_ == 1 && b.den_ == 1)
            return Rational(Int(a.num_ * b.num_));
        // Cross-cancel first so the final reduction works on small values.
        Int g1 = gcd_abs(a.num_, b.den_);
        Int g2 = gcd_abs(b.num_, a.den_);
        Rational r;
        r.num_ = (a.num_ / g1) * (b.num_ / g2);
        r.den_ = (a.den_ / g2) * (b.den_ / g1);
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    Int num_{0};
    Int den_{1};

    static Int gcd_abs(const Int& a, const Int& b) {
        Int g = boost::multiprecision::gcd(a, b);
        if (g < 0)
            g = -g;
        return g;
    }

    void reduce() {
        if (den_ == 0)
            throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = gcd_abs(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
};

inline Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view part, const char* role) -> Int {
        std::size_t i = 0;
        if (i < part.size() && part[i] == '-')
            ++i;
        if (i == part.size())
            throw std::invalid_argument(std::string("Rational: empty ") + role +
                                        " in \"" + std::string(part) + "\"");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw std::invalid_argument("Rational: bad character in \"" +
                                            std::string(part) + "\"");
        return Int(std::string(part));
    };

    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text, "numerator"));
    Int num = parse_int(text.substr(0, slash), "numerator");
    Int den = parse_int(text.substr(slash + 1), "denominator");
    return Rational(std::move(num), std::move(den));
}

} // namespace convsum
