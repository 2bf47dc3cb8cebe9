#include "wmetrics/multiclass_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wmetrics {

CovarianceSet covariance_set(const MulticlassLabeledData& data, const WeightVector& w) {
    if (data.size() != w.size()) {
        throw DimensionError("labels and weights differ in length: " +
                             std::to_string(data.size()) + " vs " + std::to_string(w.size()));
    }
    const std::size_t k = data.num_classes();
    const std::size_t n = data.size();
    const double s = w.trace();

    CovarianceSet cs;
    cs.t_bar.assign(k, 0.0);
    cs.c_bar.assign(k, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        cs.t_bar[static_cast<std::size_t>(data.truth_class()[j])] += w[j];
        cs.c_bar[static_cast<std::size_t>(data.predicted_class()[j])] += w[j];
    }
    for (std::size_t i = 0; i < k; ++i) {
        cs.t_bar[i] /= s;
        cs.c_bar[i] /= s;
    }

    cs.r_tt = Matrix(k, k);
    cs.r_tc = Matrix(k, k);
    cs.r_cc = Matrix(k, k);
    std::vector<double> a(k);
    std::vector<double> b(k);
    for (std::size_t j = 0; j < n; ++j) {
        const auto tj = static_cast<std::size_t>(data.truth_class()[j]);
        const auto cj = static_cast<std::size_t>(data.predicted_class()[j]);
        for (std::size_t i = 0; i < k; ++i) {
            a[i] = (i == tj ? 1.0 : 0.0) - cs.t_bar[i];
            b[i] = (i == cj ? 1.0 : 0.0) - cs.c_bar[i];
        }
        const double wj = w[j];
        for (std::size_t i = 0; i < k; ++i) {
            const double wa = wj * a[i];
            const double wb = wj * b[i];
            for (std::size_t l = 0; l < k; ++l) {
                cs.r_tt(i, l) += wa * a[l];
                cs.r_tc(i, l) += wa * b[l];
                cs.r_cc(i, l) += wb * b[l];
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            cs.r_tt(i, l) /= s;
            cs.r_tc(i, l) /= s;
            cs.r_cc(i, l) /= s;
        }
    }
    return cs;
}

double ecc(const CovarianceSet& cs) {
    const double var_t = cs.r_tt.trace();
    const double var_c = cs.r_cc.trace();
    if (var_t <= kDegenerateThreshold) {
        throw DegenerateLabels("truth labels carry no variation; correlation is undefined");
    }
    if (var_c <= kDegenerateThreshold) {
        throw DegenerateLabels("prediction labels carry no variation; correlation is undefined");
    }
    double value = cs.r_tc.trace() / std::sqrt(var_t * var_c);
    return std::clamp(value, -1.0, 1.0);
}

double mpc1(const CovarianceSet& cs) {
    const std::size_t k = cs.r_tc.rows();
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        num += cs.r_tc(i, i);
        den += std::sqrt(cs.r_tt(i, i) * cs.r_cc(i, i));
    }
    if (den <= kDegenerateThreshold) {
        throw DegenerateLabels("every class deviation product vanishes; correlation is undefined");
    }
    return std::clamp(num / den, -1.0, 1.0);
}

double mpc2(const CovarianceSet& cs) {
    const std::size_t k = cs.r_tc.rows();
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double den = std::sqrt(cs.r_tt(i, i) * cs.r_cc(i, i));
        if (den > kDegenerateThreshold) {
            sum += cs.r_tc(i, i) / den;
        }
    }
    return std::clamp(sum / static_cast<double>(k), -1.0, 1.0);
}

}  // namespace wmetrics
