#pragma once
//
// Test-only oracles, independent of the library implementation paths they
// check: adaptive quadrature, brute-force predicates, direct series sums.

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace oracles {

// adaptive Simpson on [a,b]
inline double simpson(const std::function<double(double)>& f, double a, double b) {
    double m = 0.5 * (a + b);
    return (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b));
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double eps, int depth = 24) {
    double m = 0.5 * (a + b);
    double whole = simpson(f, a, b);
    double left = simpson(f, a, m);
    double right = simpson(f, m, b);
    if (depth <= 0) return left + right;
    if (std::abs(left + right - whole) < 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, eps / 2, depth - 1) +
           adaptive_simpson(f, m, b, eps / 2, depth - 1);
}

// brute-force squareful test: z expressible as x^2 y^3
inline bool squareful_by_search(std::int64_t z) {
    if (z == 0) throw std::invalid_argument("zero");
    std::int64_t az = z < 0 ? -z : z;
    for (std::int64_t y = 1; y * y * y <= az; ++y) {
        if (az % (y * y * y) != 0) continue;
        std::int64_t q = az / (y * y * y);
        std::int64_t x = static_cast<std::int64_t>(std::llround(std::sqrt(double(q))));
        for (std::int64_t xx = x > 1 ? x - 1 : 1; xx <= x + 1; ++xx)
            if (xx * xx == q) return true;
    }
    return false;
}

// trial-division prime test
inline bool is_prime_naive(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// direct zeta partial sum with integral tail correction:
// zeta(s) ~ sum_{n<=N} n^-s + N^{1-s}/(s-1) - N^{-s}/2
inline double zeta_direct(double s, std::int64_t N) {
    double sum = 0.0;
    for (std::int64_t n = N; n >= 1; --n) sum += std::pow(double(n), -s);
    return sum + std::pow(double(N), 1.0 - s) / (s - 1.0) - 0.5 * std::pow(double(N), -s);
}

}  // namespace oracles
