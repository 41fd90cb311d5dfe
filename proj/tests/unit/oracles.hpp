#pragma once

// Naive reference computations used by the tests. Nothing here touches the
// library's own algorithms; everything is plain integers or std::complex.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Mat = std::array<std::int64_t, 4>;  // a b c d, entries in [0, q)

inline const std::vector<std::uint32_t>& tested_primes() {
    static const std::vector<std::uint32_t> ps{3, 5, 7, 11, 13};
    return ps;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d < n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::int64_t mod(std::int64_t x, std::int64_t q) { return ((x % q) + q) % q; }

inline Mat mul(const Mat& x, const Mat& y, std::int64_t q) {
    return {mod(x[0] * y[0] + x[1] * y[2], q), mod(x[0] * y[1] + x[1] * y[3], q),
            mod(x[2] * y[0] + x[3] * y[2], q), mod(x[2] * y[1] + x[3] * y[3], q)};
}

inline Mat inv(const Mat& x, std::int64_t q) { return {x[3], mod(-x[1], q), mod(-x[2], q), x[0]}; }

inline std::vector<Mat> group(std::int64_t q) {
    std::vector<Mat> out;
    for (std::int64_t a = 0; a < q; ++a)
        for (std::int64_t b = 0; b < q; ++b)
            for (std::int64_t c = 0; c < q; ++c)
                for (std::int64_t d = 0; d < q; ++d)
                    if (mod(a * d - b * c, q) == 1) out.push_back({a, b, c, d});
    return out;
}

inline std::uint64_t order(const Mat& g, std::int64_t q) {
    const Mat one{1, 0, 0, 1};
    Mat x = g;
    std::uint64_t n = 1;
    while (x != one) {
        x = mul(x, g, q);
        ++n;
    }
    return n;
}

/// {h g h^-1 : h in G}, by direct conjugation.
inline std::set<Mat> conjugacy_class(const Mat& g, const std::vector<Mat>& G, std::int64_t q) {
    std::set<Mat> out;
    for (const auto& h : G) out.insert(mul(mul(h, g, q), inv(h, q), q));
    return out;
}

inline std::set<std::int64_t> squares_mod(std::int64_t q) {
    std::set<std::int64_t> s;
    for (std::int64_t x = 1; x < q; ++x) s.insert(x * x % q);
    return s;
}

inline std::complex<double> zeta(std::int64_t n, std::int64_t k) {
    const double t = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
    return {std::cos(t), std::sin(t)};
}

/// sum_k (k|q) zeta_q^k with the symbol read off the list of squares.
inline std::complex<double> gauss_sum(std::int64_t q) {
    const auto sq = squares_mod(q);
    std::complex<double> s{0, 0};
    for (std::int64_t k = 1; k < q; ++k) s += (sq.count(k) ? 1.0 : -1.0) * zeta(q, k);
    return s;
}

/// Integer coefficients of prod over primitive k of (x - zeta_n^k), rounded.
inline std::vector<std::int64_t> cyclotomic_numeric(std::int64_t n) {
    std::vector<std::complex<double>> p{1.0};
    for (std::int64_t k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        const auto r = zeta(n, k);
        std::vector<std::complex<double>> next(p.size() + 1, 0.0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i + 1] += p[i];
            next[i] -= r * p[i];
        }
        p = std::move(next);
    }
    std::vector<std::int64_t> out;
    for (const auto& c : p) out.push_back(std::llround(c.real()));
    return out;
}

/// Number of points of the projective line fixed by g.
inline int projective_fixed_points(const Mat& g, std::int64_t q) {
    int n = 0;
    // [x : 1]
    for (std::int64_t x = 0; x < q; ++x) {
        const auto top = mod(g[0] * x + g[1], q);
        const auto bot = mod(g[2] * x + g[3], q);
        if (bot != 0 && mod(top - x * bot, q) == 0) ++n;
    }
    // [1 : 0]
    if (g[2] == 0) ++n;
    return n;
}

}  // namespace oracle
