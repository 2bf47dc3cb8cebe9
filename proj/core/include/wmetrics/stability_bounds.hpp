#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wmetrics/types.hpp"

namespace wmetrics {

// Closed-form worst-case drift bounds for the building blocks of the weighted
// metrics, each valid when every perturbed input stays within eps of its
// original value (and, where stated, eps keeps the input away from zero).
// The two-sided variants return a (lower, upper) sandwich on the true drift.

struct BoundInterval {
    double lower;
    double upper;
};

// Product drift: |prod(x_i +- eps) - prod(x_i)| < eps * 2^n * max(1, M^n)
// with M = max x_i. Requires all x_i > 0 and 0 < eps < min(x_i)/2, eps < 1.
double bound_product(std::span<const double> xs, double eps);

// Reciprocal drift: 4eps/(9x^2) < |1/x - 1/(x +- eps)| < 4eps/x^2
// for x > 0 and 0 < eps < x/2.
BoundInterval bound_reciprocal(double x, double eps);

// Square-root drift: eps/sqrt(6x) < |sqrt(x) - sqrt(x +- eps)| < eps/sqrt(2x)
// for x > 0 and 0 < eps < x/2.
BoundInterval bound_sqrt(double x, double eps);

// Reciprocal-square-root drift:
//   sqrt(2)eps/(3x sqrt(3x)) < |1/sqrt(x) - 1/sqrt(x +- eps)| < sqrt(2)eps/(x sqrt(x))
// for x > 0 and 0 < eps < x/2.
BoundInterval bound_recip_sqrt(double x, double eps);

// Quotient drift when the numerator moves by at most eps and the denominator
// by at most delta: (x1/y1) * [4 delta/y1 + eps (1 + 4 delta/y1)].
// Requires x1, y1 > 0, 0 <= eps < x1/2, 0 <= delta < y1/2.
double bound_quotient(double x1, double y1, double eps, double delta);

// Extremes of the five weighted inner products that drive the binary bound:
// <t,c>, <t,1>, <1,c>, <1-t,1>, <1,1-c>. eps_max is the largest admissible
// perturbation radius, min(small_m/2, 1/n).
struct BinaryBoundContext {
    double big_m;
    double small_m;
    double trace_s;
    std::size_t n;
    double eps_max;
};

BinaryBoundContext binary_bound_context(const BinaryLabeledData& data, const WeightVector& w);

// Worst-case drift of the weighted MCC when every weight moves by less than
// eps:
//   |mcc| * (2^5 s^2 n / m^2) * [1 + M^2 (1 + 2^5 s^2 n eps / m^2)] * eps
// with s the total weight, M and m from the context. Requires m > 0 and
// 0 < eps < eps_max; throws PreconditionViolated naming the failed condition.
double mcc_bound(const BinaryLabeledData& data, const WeightVector& w, double eps);

// Worst-case Frobenius drift of the cross-covariance matrix:
//   (4 n eps^2 / s^2) * ||t - t_bar 1^T||_F * ||c - c_bar 1^T||_F
// for 0 < eps < s/2, where the norms are of the weighted-mean-centered
// one-hot matrices.
double rtc_bound(const MulticlassLabeledData& data, const WeightVector& w, double eps);

// Per-instance constants feeding the multiclass drift bounds. m_t and m_c
// are the largest absolute entries of the centered one-hot matrices. Each
// bound consumes its own constant:
//   c_trace_product -> ecc_bound   (with y_trace_product)
//   c_sqrt_sum      -> mpc1_bound  (with y_sqrt_sum)
//   c_max           -> mpc2_bound  (envelope of the named constants)
// Classes with a vanishing deviation product are skipped inside c_sqrt_sum,
// matching the zero-term convention of mpc2.
struct MulticlassBoundContext {
    double m_t;
    double m_c;
    double s;
    std::size_t n;
    double c_trace_product;        // m_t^2 tr(r_cc) + m_c^2 tr(r_tt) + 4 n^2 / s^2
    std::vector<double> c_class;   // [r_tt]_kk m_c^2 + [r_cc]_kk m_t^2 + 4 n / s^2
    double c_sqrt_sum;             // sum_k c_class[k] / sqrt(2 [r_tt]_kk [r_cc]_kk)
    double c_max;                  // max of m_t*m_c, every c_class[k], c_sqrt_sum
    double y_trace_product;        // tr(r_tt) * tr(r_cc)
    double y_sqrt_sum;             // sum_k sqrt([r_tt]_kk [r_cc]_kk)
};

MulticlassBoundContext multiclass_constants(const MulticlassLabeledData& data,
                                            const WeightVector& w);

// Worst-case drift of the weighted trace-ratio correlation under weight
// perturbations below eps, with y = y_trace_product and C = c_trace_product:
//   |ecc| * [4*4 n^2 C / (y sqrt(2) s^2)
//            + (4 n^2 m_t m_c / s^2) (1 + 4*4 n C eps^2 / (y sqrt(2) s^2))] * eps^2
// Requires 0 < eps < s/2 and eps < 1.
double ecc_bound(const MulticlassLabeledData& data, const WeightVector& w, double eps);

// Same drift form for the summed-ratio variant, with y = y_sqrt_sum and
// C = c_sqrt_sum:
//   |mpc1| * [4*4 n C / (y s^2)
//             + (4 n^2 m_t m_c / s^2) (1 + 4*4 n C eps^2 / (y s^2))] * eps^2
double mpc1_bound(const MulticlassLabeledData& data, const WeightVector& w, double eps);

// Per-class drift sum for the mean-of-correlations variant, with
// C = c_max and d_k = sqrt([r_tt]_kk [r_cc]_kk):
//   sum_k |[r_tc]_kk / (K d_k)| * [4*4 n C / s^2 + (4 n C / s^2)(1 + 4*4 n C eps^2 / s^2)] * eps^2
// Degenerate classes contribute 0, matching mpc2 itself.
double mpc2_bound(const MulticlassLabeledData& data, const WeightVector& w, double eps);

enum class Metric { kMcc, kEcc, kMpc1, kMpc2 };

// Outcome of an empirical perturbation run against a theoretical bound.
struct StabilityReport {
    double theoretical_bound;
    double empirical_max_deviation;
    int trials;
    bool preconditions_ok;
    int violations;
};

// Draws `trials` weight vectors with every entry within eps of the original
// (clamped to stay strictly positive), re-evaluates the metric under each,
// and counts deviations exceeding the theoretical bound. Deterministic for a
// fixed seed; each trial uses its own derived stream.
StabilityReport verify_bound(const BinaryLabeledData& data, const WeightVector& w, double eps,
                             int trials, std::uint64_t seed);
StabilityReport verify_bound(Metric metric, const MulticlassLabeledData& data,
                             const WeightVector& w, double eps, int trials, std::uint64_t seed);

}  // namespace wmetrics
