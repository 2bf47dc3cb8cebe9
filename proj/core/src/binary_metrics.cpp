#include "wmetrics/binary_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wmetrics {

namespace {

void check_lengths(const BinaryLabeledData& data, const WeightVector& w) {
    if (data.size() != w.size()) {
        throw DimensionError("labels and weights differ in length: " +
                             std::to_string(data.size()) + " vs " + std::to_string(w.size()));
    }
}

}  // namespace

WeightedConfusion confusion(const BinaryLabeledData& data, const WeightVector& w) {
    check_lengths(data, w);
    WeightedConfusion c{0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < data.size(); ++i) {
        double wi = w[i];
        if (data.truth()[i]) {
            (data.prediction()[i] ? c.tp : c.fn) += wi;
        } else {
            (data.prediction()[i] ? c.fp : c.tn) += wi;
        }
    }
    return c;
}

double mcc(const BinaryLabeledData& data, const WeightVector& w) {
    check_lengths(data, w);
    if (data.truth_constant()) {
        throw DegenerateLabels("truth labels are constant; correlation is undefined");
    }
    if (data.prediction_constant()) {
        throw DegenerateLabels("prediction labels are constant; correlation is undefined");
    }
    double s = 0.0;    // <1,1>
    double tc = 0.0;   // <t,c>
    double t1 = 0.0;   // <t,1>
    double c1 = 0.0;   // <1,c>
    double nt1 = 0.0;  // <1-t,1>
    double nc1 = 0.0;  // <1,1-c>
    for (std::size_t i = 0; i < data.size(); ++i) {
        double wi = w[i];
        s += wi;
        int t = data.truth()[i];
        int c = data.prediction()[i];
        if (t && c) {
            tc += wi;
        }
        (t ? t1 : nt1) += wi;
        (c ? c1 : nc1) += wi;
    }
    double value = (tc * s - t1 * c1) / std::sqrt(t1 * c1 * nt1 * nc1);
    // Rounding can push a perfect correlation a few ulp past +-1; project back.
    return std::clamp(value, -1.0, 1.0);
}

}  // namespace wmetrics
