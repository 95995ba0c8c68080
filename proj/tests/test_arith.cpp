#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "campana/arith.hpp"
#include "oracles.hpp"

using namespace campana;

TEST_CASE("primes_up_to basics") {
    CHECK(primes_up_to(10) == std::vector<i64>{2, 3, 5, 7});
    CHECK(primes_up_to(2) == std::vector<i64>{2});
    CHECK(primes_up_to(1).empty());
    // against trial-division oracle
    auto ps = primes_up_to(100);
    CHECK(ps.size() == 25);
    std::vector<i64> naive;
    for (i64 n = 2; n <= 100; ++n)
        if (oracles::is_prime_naive(n)) naive.push_back(n);
    CHECK(ps == naive);
}

TEST_CASE("factorize") {
    auto f = factorize(72);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == PrimePower{2, 3});
    CHECK(f.factors[1] == PrimePower{3, 2});
    CHECK(factorize(1).factors.empty());
    auto g = factorize(-37 * 109);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0] == PrimePower{37, 1});
    CHECK(g.factors[1] == PrimePower{109, 1});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    // product of two large primes beyond certification must throw, not lie
    CHECK_THROWS_AS(factorize((i64)1'000'003 * 1'000'003 * 1'000'003), std::overflow_error);
}

TEST_CASE("mobius") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);  // three prime factors
    CHECK(mobius(2 * 3 * 5 * 7) == 1);
}

TEST_CASE("mobius squared is the squarefree indicator") {
    for (i64 n = 1; n <= 20000; ++n) {
        int m = mobius(n);
        bool sf = true;
        for (i64 d = 2; d * d <= n; ++d)
            if (n % (d * d) == 0) { sf = false; break; }
        CHECK(m * m == (sf ? 1 : 0));
    }
}

TEST_CASE("is_squareful") {
    CHECK(is_squareful(72));
    CHECK_FALSE(is_squareful(12));
    CHECK(is_squareful(1));
    CHECK(is_squareful(-1));
    CHECK(is_squareful(-8));
    CHECK_THROWS_AS(is_squareful(0), std::invalid_argument);
}

TEST_CASE("is_squareful matches x^2 y^3 representability") {
    for (i64 z = 1; z <= 100000; ++z) {
        CHECK(is_squareful(z) == oracles::squareful_by_search(z));
        if (z % 7 == 0) CHECK(is_squareful(-z) == oracles::squareful_by_search(-z));
    }
}

TEST_CASE("squareful_decompose") {
    auto d = squareful_decompose(72);
    CHECK(d.x == 3);
    CHECK(d.y == 2);
    d = squareful_decompose(108);
    CHECK(d.x == 2);
    CHECK(d.y == 3);
    d = squareful_decompose(-8);
    CHECK(d.x == 1);
    CHECK(d.y == -2);
    d = squareful_decompose(1);
    CHECK(d.x == 1);
    CHECK(d.y == 1);
    d = squareful_decompose(-1);
    CHECK(d.y == -1);
    CHECK_THROWS_AS(squareful_decompose(12), std::invalid_argument);
}

TEST_CASE("decomposition reconstructs and y is squarefree") {
    std::mt19937_64 rng(12345);
    // dense sweep of small squarefuls plus random large ones up to 1e9
    for (i64 z = 1; z <= 30000; ++z) {
        if (!is_squareful(z)) continue;
        auto d = squareful_decompose(z);
        CHECK(d.x > 0);
        CHECK(is_squarefree(d.y));
        CHECK(d.x * d.x * d.y * d.y * d.y == z);
    }
    for (int i = 0; i < 2000; ++i) {
        i64 x = 1 + static_cast<i64>(rng() % 30000);
        i64 y = 1 + static_cast<i64>(rng() % 30);
        if (!is_squarefree(y)) continue;
        i128 z128 = i128(x) * x * y * y * y;
        if (z128 > 1'000'000'000) continue;
        i64 z = static_cast<i64>(z128);
        i64 sign = (i & 1) ? 1 : -1;
        auto d = squareful_decompose(sign * z);
        CHECK(d.x * d.x * d.y * d.y * d.y == sign * z);
        CHECK(is_squarefree(d.y));
        CHECK(d.x > 0);
        CHECK((sign * z > 0) == (d.y > 0));
    }
}

TEST_CASE("jacobi basics") {
    CHECK(jacobi(1, 15) == 1);
    // exhaustive squares mod 3: {0,1} -> 2 is a non-residue
    CHECK(jacobi(5, 3) == -1);
    // (2|3)(2|5) = (-1)(-1)
    CHECK(jacobi(2, 15) == 1);
    CHECK(jacobi(0, 3) == 0);
    CHECK(jacobi(-1, 5) == 1);
    CHECK_THROWS_AS(jacobi(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, -5), std::invalid_argument);
}

TEST_CASE("jacobi equals legendre for odd primes, by exhaustive squares") {
    for (i64 p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        std::vector<bool> residue(p, false);
        for (i64 x = 1; x < p; ++x) residue[x * x % p] = true;
        for (i64 a = 0; a < p; ++a) {
            int expect = a == 0 ? 0 : (residue[a] ? 1 : -1);
            CHECK(jacobi(a, p) == expect);
        }
    }
}

TEST_CASE("jacobi multiplicativity and gcd vanishing") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 5000; ++i) {
        i64 n1 = 2 * (rng() % 100) + 1, n2 = 2 * (rng() % 100) + 1;
        i64 a = static_cast<i64>(rng() % 400) - 200;
        i64 b = static_cast<i64>(rng() % 400) - 200;
        CHECK(jacobi(a, n1 * n2) == jacobi(a, n1) * jacobi(a, n2));
        CHECK(jacobi(a * b, n1) == jacobi(a, n1) * jacobi(b, n1));
        i64 aa = a == 0 ? 0 : (a < 0 ? -a : a);
        bool vanish = std::gcd(aa, n1) > 1 || a == 0;
        if (n1 > 1) CHECK((jacobi(a, n1) == 0) == vanish);
    }
}

TEST_CASE("padic_val") {
    CHECK(padic_val(2, 72) == 3);
    CHECK(padic_val(5, 72) == 0);
    CHECK(padic_val(3, -27) == 3);
    CHECK_THROWS_AS(padic_val(3, 0), std::invalid_argument);
}

TEST_CASE("Rational arithmetic") {
    Rational r(6, 8);
    CHECK(r.num == 3);
    CHECK(r.den == 4);
    CHECK((Rational(3, 4) * Rational(5, 6)) == Rational(5, 8));
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(1, 2) - Rational(1, 2)) == Rational(0));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).num == -1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}
