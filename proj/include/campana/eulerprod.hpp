#pragma once
//
// Euler product evaluation with zeta convergence factors.
//
// A product prod_p L(p) with L(p) -> 1 like p^{-3/2} converges far too
// slowly for 8-digit work. We pull out zeta powers so that the residual
// local factor is 1 + O(p^{-kappa}) with kappa >= 3, derive the residual
// and its tail bound by exact rational-coefficient polynomial arithmetic
// in q = p^{-1/2}, and keep a rigorous integral-bound enclosure
//   sum_{p > P} C p^{-kappa} <= C sum_{n > P} n^{-kappa} <= C P^{1-kappa}/(kappa-1).
// Character-twisted products are accelerated with Dirichlet L-values of the
// real characters involved, computed from Hurwitz zeta.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "campana/arith.hpp"
#include "campana/localdensity.hpp"
#include "campana/report.hpp"

namespace campana {

// zeta(s) for s > 1, Euler-Maclaurin (1e4 direct terms, 8 corrections).
double zeta(double s);

// Hurwitz zeta(s, x) for s > 1, 0 < x <= 1.
double hurwitz_zeta(double s, double x);

// ---------------------------------------------------------------------
// exact polynomials in q = p^{-1/2}

struct PolyQ {
    std::vector<Rational> c;  // c[k] * q^k

    static PolyQ one() { return {{Rational(1)}}; }
    // 1 - q^m (m >= 1) scaled by sign: (1 + sign*q^m)
    static PolyQ binomial(int m, int sign);
    PolyQ operator*(const PolyQ& o) const;
    double eval(double q) const;
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Rational coeff(int k) const { return k < static_cast<int>(c.size()) ? c[k] : Rational(0); }
};

// local factor as an exact rational function num/den of q
struct RationalFnQ {
    PolyQ num, den;
    double eval_at_prime(i64 p) const;
};

struct ZetaAccelerator {
    double s;      // > 1, with 2s integral
    int exponent;  // zeta(s)^exponent pulled out of the product
};

struct ResidualBound {
    double coeff;     // C
    double exponent;  // kappa: |residual(p) - 1| <= C p^-kappa for p >= valid_from
    i64 valid_from;
};

struct EulerProductSpec {
    std::function<double(i64)> residual_factor;  // per-prime residual after acceleration
    std::vector<ZetaAccelerator> zeta_accelerators;
    std::vector<i64> excluded_primes;
    i64 prime_cutoff;
    ResidualBound bound;
};

struct ProductResult {
    double value;
    double tail_estimate;  // rigorous: |true/value - 1| <= tail_estimate/|value|
    std::size_t primes_used;
};

// prefactor prod zeta(s)^e times prod_{p <= cutoff, p not excluded} residual(p).
// Rejects a residual factor <= 0.
ProductResult eval_product(const EulerProductSpec& spec);

// Build a spec from an exact local factor: multiplies in the accelerator
// Euler factors, verifies the residual is 1 + O(q^6) (build fails
// otherwise), and derives the tail bound from the exact coefficients.
EulerProductSpec accelerated_spec(const RationalFnQ& local,
                                  std::vector<ZetaAccelerator> accelerators,
                                  i64 prime_cutoff,
                                  std::vector<i64> excluded_primes = {});

// ---------------------------------------------------------------------
// real characters and their L-values

// completely multiplicative periodic function given by one period of values
struct PeriodicCharacter {
    i64 modulus;
    std::vector<int> values;  // values[n % modulus]
    int operator()(i64 n) const { return values[static_cast<size_t>(n % modulus)]; }
};

// chi(n) = (n|m) for odd m > 0; period m.
PeriodicCharacter jacobi_top_character(i64 m);
// chi(n) = (n|m) * (t|n) for odd n (0 at even n); period 4|t|*m-compatible
// modulus passed explicitly after verification.
PeriodicCharacter twisted_character(i64 m, i64 t);

// L(s, chi) = M^-s sum_r chi(r) zeta(s, r/M), s > 1.
double dirichlet_l(double s, const PeriodicCharacter& chi);

// ---------------------------------------------------------------------
// the concrete constants

// Euler factor data of the twisted products of the binary-form orbifold:
//   eps * prod_{p !| 2ab} (1 + chi(p) (1 + psi(p)) / ((1+1/p) p^{3/2}))
// with chi(p) = (p|kl), psi(p) = (-ab|p), eps = (b|k)(a|l).
// Accelerated through L(3/2,.) and L(5/2,.) of the two characters involved.
ProductResult twisted_product(const BinaryFormParams& params, i64 k, i64 l,
                              i64 prime_cutoff);

// prod over selected primes of (1 + 2g(p))(1 - 2g(p))^{-1},
// g(p) = 1/((1+1/p) p^{3/2}); accelerated when taken over all primes.
// max_p = nullopt selects all primes.
double cor16_ratio(std::optional<i64> max_p, i64 prime_cutoff = 100'000);

// Predicted leading constant for the three-squareful count, assembled as
// (1/4) sigma_inf prod_p (1-1/p) sigma_p with convergence factors
// zeta(3/2)^3 zeta(4)/zeta(2) (zeta(5)/zeta(5/2))^3.
ConstantReport c_pstva_three(i64 prime_cutoff = 10'000);

// Same value through the (9/2pi) prod (1 + 3p^{-3/2}/(1+1/p)) route;
// used to cross-check the assembly algebra.
double c_pstva_three_product_route(i64 prime_cutoff = 10'000);

// Predicted leading constant for squareful values of ax^2 + by^2:
// R * twisted_product(1,1) with R = 2 sigma_inf gamma(ab) / pi^2.
ConstantReport c_pstva_binary(const BinaryFormParams& params, i64 prime_cutoff = 10'000);

}  // namespace campana
