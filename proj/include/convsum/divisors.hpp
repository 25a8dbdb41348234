#pragma once

#include "convsum/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace convsum {

inline bool is_prime(long n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

/// Prime factorization of n >= 1 as (prime, exponent) pairs in increasing
/// prime order.  factorize(1) is empty.
inline std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1)
        throw std::invalid_argument("factorize: argument " + std::to_string(n) +
                                    " is not positive");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

/// Positive divisors of n >= 1 in increasing order.
inline std::vector<long> divisors(long n) {
    const auto factors = factorize(n);
    std::vector<long> out{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = out.size();
        long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_squarefree(long n) {
    const auto factors = factorize(n);
    return std::all_of(factors.begin(), factors.end(),
                       [](const auto& f) { return f.second == 1; });
}

/// Sum of the k-th powers of the positive divisors of n.  Zero when n <= 0,
/// which is the convention that makes sigma(n/d) vanish for d not dividing n.
inline Int sigma(unsigned k, long n) {
    if (n <= 0)
        return 0;
    Int result = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (k == 0) {
            result *= e + 1;
            continue;
        }
        const Int pk = boost::multiprecision::pow(Int(p), k);
        Int geom = 1;
        Int power = 1;
        for (int i = 0; i < e; ++i) {
            power *= pk;
            geom += power;
        }
        result *= geom;
    }
    return result;
}

/// sigma(k, n / d) under the same convention: zero unless d divides n.
inline Int sigma_div(unsigned k, long n, long d) {
    if (d <= 0)
        throw std::invalid_argument("sigma_div: divisor " + std::to_string(d) +
                                    " is not positive");
    if (n <= 0 || n % d != 0)
        return 0;
    return sigma(k, n / d);
}

/// Table of sigma(k, m) for 0 <= m < limit, with entry 0 equal to zero.
/// Sieve-based, so building the whole range is cheaper than repeated
/// factorization when many consecutive values are needed.
inline std::vector<Int> sigma_table(unsigned k, std::size_t limit) {
    std::vector<Int> table(limit, Int(0));
    for (std::size_t d = 1; d < limit; ++d) {
        const Int dk = boost::multiprecision::pow(Int(static_cast<long>(d)), k);
        for (std::size_t m = d; m < limit; m += d)
            table[m] += dk;
    }
    return table;
}

} // namespace convsum
