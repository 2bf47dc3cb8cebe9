#pragma once

#include <vector>

#include "wmetrics/matrix.hpp"
#include "wmetrics/types.hpp"

namespace wmetrics {

// Denominator magnitudes at or below this are treated as zero when deciding
// degeneracy, both for whole metrics and for single-class terms.
inline constexpr double kDegenerateThreshold = 1e-15;

// Weighted class means and second-moment matrices of the one-hot label
// representation. t_bar and c_bar each sum to 1; r_tt and r_cc are symmetric
// with nonnegative diagonals.
struct CovarianceSet {
    std::vector<double> t_bar;
    std::vector<double> c_bar;
    Matrix r_tt;
    Matrix r_tc;
    Matrix r_cc;
};

// Accumulates the weighted covariance matrices observation by observation:
//   [r_ab]_ij = (1/s) * sum_n w_n (a_n(i) - a_bar_i)(b_n(j) - b_bar_j)
// where s is the total weight and a_n, b_n are one-hot columns.
CovarianceSet covariance_set(const MulticlassLabeledData& data, const WeightVector& w);

// Trace-ratio correlation: tr(r_tc) / sqrt(tr(r_tt) * tr(r_cc)), in [-1, 1].
// Throws DegenerateLabels when either variance trace vanishes.
double ecc(const CovarianceSet& cs);

// Ratio of summed per-class covariances to summed per-class deviation
// products: sum_k [r_tc]_kk / sum_k sqrt([r_tt]_kk [r_cc]_kk), in [-1, 1].
// Throws DegenerateLabels when the denominator sum vanishes.
double mpc1(const CovarianceSet& cs);

// Mean of per-class correlations, always dividing by the class count.
// A class whose deviation product vanishes contributes 0 rather than an
// indeterminate term, so mpc2 never throws for degenerate classes.
double mpc2(const CovarianceSet& cs);

}  // namespace wmetrics
