#pragma once

#include "wmetrics/types.hpp"

namespace wmetrics {

// Observation-weighted confusion tallies. Each observation contributes its
// full weight to exactly one cell, so tp + tn + fp + fn equals the total
// weight.
struct WeightedConfusion {
    double tp;
    double tn;
    double fp;
    double fn;

    double total() const { return tp + tn + fp + fn; }
};

WeightedConfusion confusion(const BinaryLabeledData& data, const WeightVector& w);

// Weighted Matthews correlation coefficient, evaluated in inner-product form:
//   [<t,c><1,1> - <t,1><1,c>] / sqrt(<t,1><1,c><1-t,1><1,1-c>)
// with every inner product taken under the observation weights. Result is
// in [-1, 1]. Throws DegenerateLabels when truth or prediction is constant.
double mcc(const BinaryLabeledData& data, const WeightVector& w);

}  // namespace wmetrics
