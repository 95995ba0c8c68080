#include "campana/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace campana {

Rational::Rational(i64 n, i64 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i64 g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num = n;
    den = d;
}

static i64 check_narrow(i128 v, const char* what) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw std::overflow_error(std::string("overflow in ") + what);
    return static_cast<i64>(v);
}

Rational Rational::operator*(const Rational& o) const {
    i64 g1 = std::gcd(num < 0 ? -num : num, o.den);
    i64 g2 = std::gcd(o.num < 0 ? -o.num : o.num, den);
    i128 n = i128(num / g1) * (o.num / g2);
    i128 d = i128(den / g2) * (o.den / g1);
    return Rational(check_narrow(n, "Rational::mul"), check_narrow(d, "Rational::mul"));
}

Rational Rational::operator+(const Rational& o) const {
    i64 g = std::gcd(den, o.den);
    i128 n = i128(num) * (o.den / g) + i128(o.num) * (den / g);
    i128 d = i128(den / g) * o.den;
    return Rational(check_narrow(n, "Rational::add"), check_narrow(d, "Rational::add"));
}

Rational Rational::operator-(const Rational& o) const {
    return *this + Rational(-o.num, o.den);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::vector<i64> primes_up_to(i64 n) {
    std::vector<i64> out;
    if (n < 2) return out;
    std::vector<bool> comp(static_cast<size_t>(n) + 1, false);
    for (i64 p = 2; p <= n; ++p) {
        if (comp[p]) continue;
        out.push_back(p);
        for (i64 m = p * p; m <= n; m += p) comp[m] = true;
    }
    return out;
}

const std::vector<i64>& prime_table() {
    static const std::vector<i64> table = primes_up_to(1'000'000);
    return table;
}

Factorization factorize(i64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n = 0");
    u64 m = n < 0 ? -static_cast<u64>(n) : static_cast<u64>(n);
    Factorization f;
    const auto& primes = prime_table();
    for (i64 p : primes) {
        if (static_cast<u64>(p) * static_cast<u64>(p) > m) break;
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            f.factors.push_back({p, e});
        }
    }
    if (m > 1) {
        // residual is prime iff it is below (table max)^2; beyond that we
        // cannot certify with this sieve
        const u64 limit = 1'000'000ull * 1'000'000ull;
        if (m > limit)
            throw std::overflow_error("factorize: |n| beyond trial-division range");
        f.factors.push_back({static_cast<i64>(m), 1});
    }
    return f;
}

int mobius(i64 n) {
    if (n < 1) throw std::invalid_argument("mobius: n < 1");
    if (n == 1) return 1;
    Factorization f = factorize(n);
    if (!f.squarefree()) return 0;
    return (f.omega() % 2 == 0) ? 1 : -1;
}

bool is_squarefree(i64 n) { return mobius(n < 0 ? -n : n) != 0; }

bool is_squareful(i64 z) {
    if (z == 0) throw std::invalid_argument("is_squareful: z = 0");
    if (z == 1 || z == -1) return true;
    Factorization f = factorize(z);
    for (const auto& pp : f.factors)
        if (pp.exponent < 2) return false;
    return true;
}

SquarefulDecomposition squareful_decompose(i64 z) {
    if (z == 0) throw std::invalid_argument("squareful_decompose: z = 0");
    i64 az = z < 0 ? -z : z;
    Factorization f = factorize(az);
    i64 x = 1, y = 1;
    for (const auto& pp : f.factors) {
        if (pp.exponent < 2)
            throw std::invalid_argument("squareful_decompose: input not squareful");
        int e = pp.exponent;
        if (e % 2 == 1) {
            y = checked_mul(y, pp.prime);
            e -= 3;
        }
        for (int i = 0; i < e / 2; ++i) x = checked_mul(x, pp.prime);
    }
    if (z < 0) y = -y;
    return {x, y, z};
}

int jacobi(i64 a, i64 n) {
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi: n must be odd and positive");
    a %= n;
    if (a < 0) a += n;
    int r = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 m = n % 8;
            if (m == 3 || m == 5) r = -r;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) r = -r;
        a %= n;
    }
    return n == 1 ? r : 0;
}

int padic_val(i64 p, i64 n) {
    if (n == 0) throw std::invalid_argument("padic_val: n = 0");
    if (p < 2) throw std::invalid_argument("padic_val: p < 2");
    i64 m = n < 0 ? -n : n;
    int e = 0;
    while (m % p == 0) { m /= p; ++e; }
    return e;
}

i64 checked_mul(i64 a, i64 b) {
    i128 r = i128(a) * b;
    return check_narrow(r, "checked_mul");
}

}  // namespace campana
