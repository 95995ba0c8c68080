#pragma once
//
// Computed-constant report: the value together with the pieces it was
// assembled from, the truncation used, and a tail estimate.

#include <string>
#include <utility>
#include <vector>

#include "campana/arith.hpp"

namespace campana {

struct ConstantReport {
    std::string name;
    double value = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double sigma_inf = 0.0;
    Rational exponent_a{1, 2};
    Rational exponent_b{1, 1};
    std::string truncation;
    double tail_estimate = 0.0;
    // provenance of sub-quantities, in assembly order
    std::vector<std::pair<std::string, double>> breakdown;
};

}  // namespace campana
