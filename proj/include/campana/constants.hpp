#pragma once
//
// Assembly of the non-product constants: the fiber-sum constant of the
// three-squareful problem, per-fiber conic constants, the binary-form
// constant through its two independent routes (v-sum and character
// decomposition), and the sign of the counterexample margin.

#include <array>
#include <cstdint>

#include "campana/eulerprod.hpp"
#include "campana/localdensity.hpp"
#include "campana/report.hpp"

namespace campana {

// Leading constant of the conic attached to y in N^3:
// (4/pi) gamma(y0y1y2) / (y0y1y2)^{3/2} * sigma_{2,y} * rho(y).
double peyre_fiber_constant(const FiberIndex& y);

// Fiber-sum constant: (1/pi) * sum over mu^2-admissible triples with
// y0*y1*y2 <= product_bound, plus a heuristic mean-field tail correction
// calibrated on the computed range (applied for product_bound >= 256).
// value = partial sum + correction; breakdown carries both pieces.
ConstantReport c_bv(i64 product_bound);

// Raw partial sum only (no tail correction); used by stabilization checks.
double c_bv_partial(i64 product_bound);

// Per-v constant of the binary-form fiber ax^2 + by^2 = u^2 v^3:
// 4 sigma_inf gamma(abv) rho(a,b,v) / (pi^2 v^{3/2}) for v = 1 mod 4, else 0.
double c_v_binary(const BinaryFormParams& params, i64 v);

// c as the v-sum (2 sigma_inf / pi^2) sum_{v = 1 mod 4} mu^2(abv) gamma(abv)
// rho(a,b,v) v^{-3/2}, truncated at v <= V with a rigorous term-bound tail.
ConstantReport c_binary_vsum(const BinaryFormParams& params, i64 V);

// c through the character decomposition: R * sum_{k|a} sum_{l|b}
// twisted_product(k,l), R = 2 sigma_inf gamma(ab) / pi^2.
ConstantReport c_binary_chars(const BinaryFormParams& params, i64 prime_cutoff = 10'000);

// S(chi3) - S(chi1) - S(chi2) with a rigorous enclosure. The sign decides
// the comparison between the two leading-constant predictions.
struct CounterexampleMargin {
    double value;
    double enclosure_halfwidth;
    double s_chi0, s_chi1, s_chi2, s_chi3;
    bool decisive() const { return std::abs(value) > enclosure_halfwidth; }
    bool strictly_negative() const { return decisive() && value < 0.0; }
};

// Requires a, b distinct primes, both 1 mod 4, with (a|b) = -1.
CounterexampleMargin counterexample_margin(const BinaryFormParams& params,
                                           i64 prime_cutoff = 100'000);

// The four conditions on (a,b) used by the counterexample argument:
// (1) a,b = 1 mod 4; (2) (a|b) = -1; (3) (a|p) = (b|p) = 1 for p in {3,7};
// (4) (a|5) = -1 and (b|5) = 1.
std::array<bool, 4> cor16_conditions(const BinaryFormParams& params);

}  // namespace campana
