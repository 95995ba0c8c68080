#pragma once
//
// Exact brute-force enumeration: squareful numbers, the three-squareful
// counts N1 / N1~, conic point counts with the extra coprimality condition,
// thin-set fiber decompositions, binary-form counts, and the small-solution
// search. Counts are stored as raw integer + divisor so every persisted
// number is exact.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "campana/arith.hpp"
#include "campana/localdensity.hpp"

namespace campana {

struct CountRecord {
    i64 B = 0;         // height bound (or T for conic counts)
    i64 raw = 0;       // raw enumerated count
    i64 divisor = 1;   // normalization: the counted quantity is raw/divisor
    double value() const { return static_cast<double>(raw) / static_cast<double>(divisor); }
    friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

// Squareful integers in [1, B], ascending, each exactly once.
std::vector<i64> squareful_list(i64 B);

// N1(B) = (1/2)#{(z0,z1,z2) in (Z\0)^3 primitive: z0+z1=z2, |zi|<=B, all
// squareful}; raw = signed-pair count, divisor 2.
CountRecord count_N1(i64 B);

// The N^3 variant; raw = ordered positive pair count, divisor 1.
CountRecord count_N1_tilde(i64 B);

// max(|z0|,|z1|,|z0+z1|); rejects non-coprime input.
i64 height_H(i64 z0, i64 z1);

// Projective points [x0:x1:x2] with all xi != 0 on
// y0^3 x0^2 + y1^3 x1^2 = y2^3 x2^2, height max(|yi^3 xi^2|)^{1/2} <= T and
// gcd(x0 y0, x1 y1, x2 y2) = 1. raw = point count, divisor 1.
// When points != nullptr the normalized representatives (x0 > 0) are
// appended.
CountRecord count_conic_plus(const FiberIndex& y, double T,
                             std::vector<std::array<i64, 3>>* points = nullptr);

// All Campana points of height <= B bucketed by the squarefree-kernel
// profile of (|z0|, |z1|, |z0+z1|). raw counts are signed-pair counts
// (divisor 2 applies, as in count_N1).
struct FiberDecomposition {
    std::map<std::array<i64, 3>, i64> raw_by_fiber;
    i64 total_raw = 0;
};
FiberDecomposition campana_fiber_decomposition(i64 B);

// Positive solutions z0 + z1 = z2 <= B (the N1~ enumeration) bucketed the
// same way; raw counts are ordered positive pairs (divisor 1).
FiberDecomposition tilde_fiber_decomposition(i64 B);

// Count of Campana points of height <= B whose profile equals y.
CountRecord thin_fiber_count(const FiberIndex& y, i64 B);

// Sum of thin_fiber_count over admissible profiles with all y_i <= M.
CountRecord thin_set_count(i64 M, i64 B);

// N(B) = (1/2)#{(x,y) primitive, |x|,|y| <= B, ax^2+by^2 squareful}.
// raw = primitive signed-pair count, divisor 2.
CountRecord count_N_binary(const BinaryFormParams& params, i64 B);

// N_v(B) = (1/2)#{(x,y,u): gcd(x,y)=1, |x|,|y| <= B, ax^2+by^2 = u^2 v^3}.
// raw = triple count, divisor 2.
CountRecord count_Nv_binary(const BinaryFormParams& params, i64 v, i64 B);

// Least nontrivial solution of a x1^2 + b x2^2 = v^3 x3^2 with all
// coordinates nonzero, gcd(x1,x2) = 1 and sup-norm <= search_bound;
// ordered by sup-norm, then lexicographically. Absence is a value.
std::optional<std::array<i64, 3>> small_coprime_solution(const BinaryFormParams& params,
                                                         i64 v, i64 search_bound);

// ratios value / B^exponent for a ladder of records; the last ratio is the
// headline number for trend reports.
struct SlopeReport {
    std::vector<std::pair<i64, double>> ratios;
    double final_ratio = 0.0;
};
SlopeReport slope(const std::vector<CountRecord>& records, const Rational& exponent);

// ---------------------------------------------------------------------
// CSV count cache: one file per problem, header "B,raw_count,divisor",
// rows sorted by B.

std::vector<CountRecord> cache_load(const std::string& dir, const std::string& key);
// merge-by-B (new rows win), sort, write
void cache_store(const std::string& dir, const std::string& key,
                 const std::vector<CountRecord>& records);

std::string cache_key_n1();
std::string cache_key_n1_tilde();
std::string cache_key_binary(const BinaryFormParams& params);
std::string cache_key_binary_v(const BinaryFormParams& params, i64 v);
std::string cache_key_conic(const FiberIndex& y);

}  // namespace campana
