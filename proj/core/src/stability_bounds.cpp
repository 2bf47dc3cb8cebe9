#include "wmetrics/stability_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "wmetrics/binary_metrics.hpp"
#include "wmetrics/multiclass_metrics.hpp"
#include "wmetrics/rng.hpp"

namespace wmetrics {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void require(bool ok, const std::string& condition) {
    if (!ok) {
        throw PreconditionViolated(condition);
    }
}

void require_eps_window(double eps, double hi, const std::string& window_name) {
    require(eps > 0.0 && eps < hi,
            "eps must lie in (0, " + window_name + ") = (0, " + fmt(hi) + "); got " + fmt(eps));
}

void check_lengths(std::size_t data_n, std::size_t w_n) {
    if (data_n != w_n) {
        throw DimensionError("labels and weights differ in length: " + std::to_string(data_n) +
                             " vs " + std::to_string(w_n));
    }
}

// Weighted class means of the one-hot representation.
std::vector<double> class_means(const std::vector<int>& labels, const WeightVector& w,
                                std::size_t k) {
    std::vector<double> mean(k, 0.0);
    for (std::size_t j = 0; j < labels.size(); ++j) {
        mean[static_cast<std::size_t>(labels[j])] += w[j];
    }
    for (std::size_t i = 0; i < k; ++i) {
        mean[i] /= w.trace();
    }
    return mean;
}

// Frobenius norm of the mean-centered one-hot matrix, accumulated without
// materializing it.
double centered_frobenius(const std::vector<int>& labels, const std::vector<double>& mean) {
    double sum = 0.0;
    for (std::size_t j = 0; j < labels.size(); ++j) {
        const auto lj = static_cast<std::size_t>(labels[j]);
        for (std::size_t i = 0; i < mean.size(); ++i) {
            const double d = (i == lj ? 1.0 : 0.0) - mean[i];
            sum += d * d;
        }
    }
    return std::sqrt(sum);
}

// Largest absolute entry of the mean-centered one-hot matrix.
double centered_max_abs(const std::vector<int>& labels, const std::vector<double>& mean) {
    double best = 0.0;
    for (std::size_t j = 0; j < labels.size(); ++j) {
        const auto lj = static_cast<std::size_t>(labels[j]);
        for (std::size_t i = 0; i < mean.size(); ++i) {
            best = std::max(best, std::abs((i == lj ? 1.0 : 0.0) - mean[i]));
        }
    }
    return best;
}

MulticlassBoundContext constants_from(const CovarianceSet& cs, const MulticlassLabeledData& data,
                                      const WeightVector& w) {
    const std::size_t k = data.num_classes();
    const auto n = static_cast<double>(data.size());

    MulticlassBoundContext ctx;
    ctx.s = w.trace();
    ctx.n = data.size();
    ctx.m_t = centered_max_abs(data.truth_class(), cs.t_bar);
    ctx.m_c = centered_max_abs(data.predicted_class(), cs.c_bar);

    const double s2 = ctx.s * ctx.s;
    ctx.c_trace_product =
        ctx.m_t * ctx.m_t * cs.r_cc.trace() + ctx.m_c * ctx.m_c * cs.r_tt.trace() + 4.0 * n * n / s2;

    ctx.c_class.resize(k);
    ctx.c_sqrt_sum = 0.0;
    ctx.y_trace_product = cs.r_tt.trace() * cs.r_cc.trace();
    ctx.y_sqrt_sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double vt = cs.r_tt(i, i);
        const double vc = cs.r_cc(i, i);
        ctx.c_class[i] = vt * ctx.m_c * ctx.m_c + vc * ctx.m_t * ctx.m_t + 4.0 * n / s2;
        const double dev = std::sqrt(vt * vc);
        ctx.y_sqrt_sum += dev;
        if (dev > kDegenerateThreshold) {
            ctx.c_sqrt_sum += ctx.c_class[i] / std::sqrt(2.0 * vt * vc);
        }
    }

    ctx.c_max = ctx.m_t * ctx.m_c;
    for (double c : ctx.c_class) {
        ctx.c_max = std::max(ctx.c_max, c);
    }
    ctx.c_max = std::max(ctx.c_max, ctx.c_sqrt_sum);
    return ctx;
}

}  // namespace

double bound_product(std::span<const double> xs, double eps) {
    require(!xs.empty(), "bound_product needs at least one factor");
    double lo = xs[0];
    double hi = xs[0];
    for (double x : xs) {
        require(x > 0.0, "every factor must be positive; got " + fmt(x));
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    require_eps_window(eps, std::min(lo / 2.0, 1.0), "min(min(x)/2, 1)");
    const auto n = static_cast<double>(xs.size());
    return eps * std::pow(2.0, n) * std::max(1.0, std::pow(hi, n));
}

BoundInterval bound_reciprocal(double x, double eps) {
    require(x > 0.0, "x must be positive; got " + fmt(x));
    require_eps_window(eps, x / 2.0, "x/2");
    return {4.0 * eps / (9.0 * x * x), 4.0 * eps / (x * x)};
}

BoundInterval bound_sqrt(double x, double eps) {
    require(x > 0.0, "x must be positive; got " + fmt(x));
    require_eps_window(eps, x / 2.0, "x/2");
    return {eps / std::sqrt(6.0 * x), eps / std::sqrt(2.0 * x)};
}

BoundInterval bound_recip_sqrt(double x, double eps) {
    require(x > 0.0, "x must be positive; got " + fmt(x));
    require_eps_window(eps, x / 2.0, "x/2");
    const double sqrt2 = std::sqrt(2.0);
    return {sqrt2 * eps / (3.0 * x * std::sqrt(3.0 * x)), sqrt2 * eps / (x * std::sqrt(x))};
}

double bound_quotient(double x1, double y1, double eps, double delta) {
    require(x1 > 0.0, "x1 must be positive; got " + fmt(x1));
    require(y1 > 0.0, "y1 must be positive; got " + fmt(y1));
    require(eps >= 0.0 && eps < x1 / 2.0,
            "eps must lie in [0, x1/2) = [0, " + fmt(x1 / 2.0) + "); got " + fmt(eps));
    require(delta >= 0.0 && delta < y1 / 2.0,
            "delta must lie in [0, y1/2) = [0, " + fmt(y1 / 2.0) + "); got " + fmt(delta));
    const double shift = 4.0 * delta / y1;
    return (x1 / y1) * (shift + eps * (1.0 + shift));
}

BinaryBoundContext binary_bound_context(const BinaryLabeledData& data, const WeightVector& w) {
    check_lengths(data.size(), w.size());
    double tc = 0.0;
    double t1 = 0.0;
    double c1 = 0.0;
    double nt1 = 0.0;
    double nc1 = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double wi = w[i];
        const int t = data.truth()[i];
        const int c = data.prediction()[i];
        if (t && c) {
            tc += wi;
        }
        (t ? t1 : nt1) += wi;
        (c ? c1 : nc1) += wi;
    }
    BinaryBoundContext ctx;
    ctx.big_m = std::max({tc, t1, c1, nt1, nc1});
    ctx.small_m = std::min({tc, t1, c1, nt1, nc1});
    ctx.trace_s = w.trace();
    ctx.n = data.size();
    ctx.eps_max = std::min(ctx.small_m / 2.0, 1.0 / static_cast<double>(ctx.n));
    return ctx;
}

double mcc_bound(const BinaryLabeledData& data, const WeightVector& w, double eps) {
    const BinaryBoundContext ctx = binary_bound_context(data, w);
    const double base = mcc(data, w);  // throws DegenerateLabels for constant labels
    require(ctx.small_m > 0.0,
            "smallest inner product m must be positive; got " + fmt(ctx.small_m));
    require_eps_window(eps, ctx.eps_max, "min(m/2, 1/n)");
    const double factor =
        32.0 * ctx.trace_s * ctx.trace_s * static_cast<double>(ctx.n) / (ctx.small_m * ctx.small_m);
    const double bracket = 1.0 + ctx.big_m * ctx.big_m * (1.0 + factor * eps);
    return std::abs(base) * factor * bracket * eps;
}

double rtc_bound(const MulticlassLabeledData& data, const WeightVector& w, double eps) {
    check_lengths(data.size(), w.size());
    const double s = w.trace();
    require_eps_window(eps, s / 2.0, "s/2");
    const std::size_t k = data.num_classes();
    const std::vector<double> t_bar = class_means(data.truth_class(), w, k);
    const std::vector<double> c_bar = class_means(data.predicted_class(), w, k);
    const double norm_t = centered_frobenius(data.truth_class(), t_bar);
    const double norm_c = centered_frobenius(data.predicted_class(), c_bar);
    return (4.0 * static_cast<double>(data.size()) * eps * eps / (s * s)) * norm_t * norm_c;
}

MulticlassBoundContext multiclass_constants(const MulticlassLabeledData& data,
                                            const WeightVector& w) {
    check_lengths(data.size(), w.size());
    return constants_from(covariance_set(data, w), data, w);
}

double ecc_bound(const MulticlassLabeledData& data, const WeightVector& w, double eps) {
    check_lengths(data.size(), w.size());
    const CovarianceSet cs = covariance_set(data, w);
    const double base = ecc(cs);  // throws DegenerateLabels when a trace vanishes
    const MulticlassBoundContext ctx = constants_from(cs, data, w);
    require_eps_window(eps, std::min(ctx.s / 2.0, 1.0), "min(s/2, 1)");
    const auto n = static_cast<double>(ctx.n);
    const double s2 = ctx.s * ctx.s;
    const double y = ctx.y_trace_product;
    const double c = ctx.c_trace_product;
    const double first = 4.0 * 4.0 * n * n * c / (y * std::sqrt(2.0) * s2);
    const double inner = 4.0 * 4.0 * n * c / (y * std::sqrt(2.0) * s2);
    const double second = (4.0 * n * n * ctx.m_t * ctx.m_c / s2) * (1.0 + inner * eps * eps);
    return std::abs(base) * (first + second) * (eps * eps);
}

double mpc1_bound(const MulticlassLabeledData& data, const WeightVector& w, double eps) {
    check_lengths(data.size(), w.size());
    const CovarianceSet cs = covariance_set(data, w);
    const double base = mpc1(cs);  // throws DegenerateLabels when the denominator vanishes
    const MulticlassBoundContext ctx = constants_from(cs, data, w);
    require_eps_window(eps, std::min(ctx.s / 2.0, 1.0), "min(s/2, 1)");
    const auto n = static_cast<double>(ctx.n);
    const double s2 = ctx.s * ctx.s;
    const double y = ctx.y_sqrt_sum;
    const double c = ctx.c_sqrt_sum;
    const double first = 4.0 * 4.0 * n * c / (y * s2);
    const double inner = 4.0 * 4.0 * n * c / (y * s2);
    const double second = (4.0 * n * n * ctx.m_t * ctx.m_c / s2) * (1.0 + inner * eps * eps);
    return std::abs(base) * (first + second) * (eps * eps);
}

double mpc2_bound(const MulticlassLabeledData& data, const WeightVector& w, double eps) {
    check_lengths(data.size(), w.size());
    const CovarianceSet cs = covariance_set(data, w);
    const MulticlassBoundContext ctx = constants_from(cs, data, w);
    require_eps_window(eps, std::min(ctx.s / 2.0, 1.0), "min(s/2, 1)");
    const auto n = static_cast<double>(ctx.n);
    const auto k = static_cast<double>(data.num_classes());
    const double s2 = ctx.s * ctx.s;
    const double c = ctx.c_max;
    double prefactor = 0.0;
    for (std::size_t i = 0; i < data.num_classes(); ++i) {
        const double dev = std::sqrt(cs.r_tt(i, i) * cs.r_cc(i, i));
        if (dev > kDegenerateThreshold) {
            prefactor += std::abs(cs.r_tc(i, i) / (k * dev));
        }
    }
    const double lead = 4.0 * 4.0 * n * c / s2;
    const double bracket = lead + (4.0 * n * c / s2) * (1.0 + lead * eps * eps);
    return prefactor * bracket * (eps * eps);
}

namespace {

WeightVector perturb_weights(const WeightVector& w, double eps, Rng& rng) {
    std::vector<double> values(w.size());
    const double radius = eps * (1.0 - 1e-9);
    for (std::size_t i = 0; i < w.size(); ++i) {
        double v = w[i] + rng.uniform(-radius, radius);
        if (v <= 0.0) {
            v = w[i] * 1e-12;  // stays strictly positive and closer to w[i] than eps
        }
        values[i] = v;
    }
    return WeightVector(std::move(values));
}

template <typename MetricFn>
StabilityReport run_trials(double bound, double base, const WeightVector& w, double eps,
                           int trials, std::uint64_t seed, MetricFn&& metric_fn) {
    if (trials <= 0) {
        throw std::invalid_argument("trials must be positive, got " + std::to_string(trials));
    }
    StabilityReport report{bound, 0.0, trials, true, 0};
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t), 0));
        const WeightVector perturbed = perturb_weights(w, eps, rng);
        const double deviation = std::abs(metric_fn(perturbed) - base);
        report.empirical_max_deviation = std::max(report.empirical_max_deviation, deviation);
        if (deviation > bound) {
            ++report.violations;
        }
    }
    return report;
}

}  // namespace

StabilityReport verify_bound(const BinaryLabeledData& data, const WeightVector& w, double eps,
                             int trials, std::uint64_t seed) {
    const double bound = mcc_bound(data, w, eps);
    const double base = mcc(data, w);
    return run_trials(bound, base, w, eps, trials, seed,
                      [&](const WeightVector& pw) { return mcc(data, pw); });
}

StabilityReport verify_bound(Metric metric, const MulticlassLabeledData& data,
                             const WeightVector& w, double eps, int trials, std::uint64_t seed) {
    double bound = 0.0;
    double base = 0.0;
    switch (metric) {
        case Metric::kEcc:
            bound = ecc_bound(data, w, eps);
            base = ecc(covariance_set(data, w));
            break;
        case Metric::kMpc1:
            bound = mpc1_bound(data, w, eps);
            base = mpc1(covariance_set(data, w));
            break;
        case Metric::kMpc2:
            bound = mpc2_bound(data, w, eps);
            base = mpc2(covariance_set(data, w));
            break;
        case Metric::kMcc:
            throw std::invalid_argument("mcc runs against binary data; use the binary overload");
    }
    auto metric_fn = [&](const WeightVector& pw) {
        const CovarianceSet cs = covariance_set(data, pw);
        switch (metric) {
            case Metric::kEcc:
                return ecc(cs);
            case Metric::kMpc1:
                return mpc1(cs);
            default:
                return mpc2(cs);
        }
    };
    return run_trials(bound, base, w, eps, trials, seed, metric_fn);
}

}  // namespace wmetrics
