#pragma once
//
// Local densities for the two orbifolds:
//   * three-squareful: points of P^1 with z0, z1, z0+z1 all squareful,
//     sigma_p = 1 + 1/p + 3 p^{-3/2}, sigma_inf = 3 pi;
//   * squareful binary form ax^2+by^2, sigma_p of the two-case closed form,
//     sigma_inf from the arcsinh integral.
// Each closed form is paired with an exhaustive residue-counting oracle whose
// truncation error carries an explicit geometric-series bound.

#include <cstdint>

#include "campana/arith.hpp"

namespace campana {

// Fiber label y = (y0,y1,y2) of the conic y0^3 x0^2 + y1^3 x1^2 = y2^3 x2^2.
// Entries may be negative; density formulas act on |y_i|.
struct FiberIndex {
    i64 y0, y1, y2;
    bool valid() const;  // mu^2(|y0 y1 y2|) = 1
    friend bool operator==(const FiberIndex&, const FiberIndex&) = default;
};

// Coefficients of the binary form: a,b > 0, squarefree, coprime, = 1 mod 4.
struct BinaryFormParams {
    i64 a, b;
    bool valid() const;
    // throws std::invalid_argument naming the violated invariant
    void require_valid() const;
};

struct DensityValue {
    double value;
    double tail_bound;  // 0 for exact closed forms
};

// gamma(d) = prod_{p | d, p > 2} (1 + 1/p)^{-1}, exact.
Rational gamma_factor(i64 d);

// rho(y): the triple product of (1 + Legendre symbol) factors over odd
// primes of |y0|, |y1|, |y2|. Value is 0 or a power of 2.
i64 rho_y(const FiberIndex& y);

// 2-adic density sigma_{2,y}, five-case closed form.
int sigma_2y_closed(const FiberIndex& y);

// sigma_{2,y} at level r: 2^{-2r} #{x mod 2^r : congruence + min nu_2 = 0},
// exact rational. Cost ~ 4^r; rejects r outside [1,14].
Rational sigma_2y_limit(const FiberIndex& y, int r);

// sigma_p for the three-squareful orbifold; the closed form holds at p = 2
// as well (confirmed by the oracle test battery).
double sigma_p_three(i64 p);

double sigma_inf_three();  // 3 pi

// sigma_p of the binary-form orbifold: 1 when p | 2ab, else
// 1 + 1/p + (1 + (-ab|p)) p^{-3/2}.
double sigma_p_binary(i64 p, const BinaryFormParams& params);

// 2 (asinh(sqrt(a/b))/sqrt(a) + asinh(sqrt(b/a))/sqrt(b)).
double sigma_inf_binary(const BinaryFormParams& params);

// Residue-counting oracle for sigma_p (three-squareful): enumerates
// t mod p^(depth+1) plus the substituted t -> 1/s region, keeping all
// contributions with valuation <= depth. tail_bound is the geometric
// remainder 3 (1-1/p) p^{-(depth+1)/2} / (1-p^{-1/2}).
DensityValue sigma_p_three_oracle(i64 p, int depth);

// Same scheme for the binary orbifold, using the Campana condition
// "nu_p(a z^2 + b) is not 1 nor a negative odd integer".
DensityValue sigma_p_binary_oracle(i64 p, const BinaryFormParams& params, int depth);

}  // namespace campana
