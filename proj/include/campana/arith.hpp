#pragma once
//
// Exact integer arithmetic primitives: prime sieve, trial-division
// factorization, Moebius, Jacobi symbol, p-adic valuation, and the
// squareful decomposition z = x^2 y^3 (x > 0, y squarefree).
//
// All magnitudes are 64-bit; intermediate products use __int128.
// Overflow is a checked error, never silent wraparound.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace campana {

using i64 = std::int64_t;
using i128 = __int128;
using u64 = std::uint64_t;

struct PrimePower {
    i64 prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Factorization of |n|: primes strictly increasing, exponents >= 1.
struct Factorization {
    std::vector<PrimePower> factors;

    bool squarefree() const {
        for (const auto& f : factors)
            if (f.exponent > 1) return false;
        return true;
    }
    int omega() const { return static_cast<int>(factors.size()); }
};

// The unique z = x^2 y^3 with x > 0, y squarefree, sign(z) = sign(y).
struct SquarefulDecomposition {
    i64 x;
    i64 y;
    i64 z;
};

// Exact rational with reduced representation, den > 0.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n) : num(n), den(1) {}
    Rational(i64 n, i64 d);

    Rational operator*(const Rational& o) const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

// Primes <= n, ascending. Empty for n < 2.
std::vector<i64> primes_up_to(i64 n);

// Shared read-only prime table (primes up to 1e6), built on first use.
const std::vector<i64>& prime_table();

// Factorization of |n| by trial division. Rejects n = 0; throws
// std::overflow_error when |n| exceeds the certifiable range (~1e12).
Factorization factorize(i64 n);

// Moebius function. 0 iff a square divides n, else (-1)^omega(n).
int mobius(i64 n);

bool is_squarefree(i64 n);

// true iff every prime dividing z does so at least twice; +-1 vacuously true.
bool is_squareful(i64 z);

// Unique decomposition of a squareful z. Rejects non-squareful input.
SquarefulDecomposition squareful_decompose(i64 z);

// Jacobi symbol (a|n) for odd positive n; any integer a. 0 iff gcd(a,n) > 1.
int jacobi(i64 a, i64 n);

// Largest e with p^e | n. Rejects n = 0.
int padic_val(i64 p, i64 n);

// |a*b| with overflow check.
i64 checked_mul(i64 a, i64 b);

}  // namespace campana
