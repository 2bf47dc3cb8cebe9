// Acceptance gate: one self-contained check per shipping criterion, each
// printed as a single PASS/FAIL line with its key statistics and wall time.
// The process exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "wmetrics/binary_metrics.hpp"
#include "wmetrics/experiments.hpp"
#include "wmetrics/multiclass_metrics.hpp"
#include "wmetrics/rng.hpp"
#include "wmetrics/stability_bounds.hpp"
#include "wmetrics/types.hpp"

using namespace wmetrics;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int index, const char* name, bool pass, const std::string& stats, double seconds,
            double budget_seconds) {
    const bool in_budget = budget_seconds <= 0.0 || seconds < budget_seconds;
    const bool ok = pass && in_budget;
    std::string timing = budget_seconds > 0.0
                             ? (std::to_string(seconds).substr(0, 5) + "s of " +
                                std::to_string(static_cast<int>(budget_seconds)) + "s")
                             : (std::to_string(seconds).substr(0, 5) + "s");
    std::printf("C%02d %-34s %s (%s; %s)\n", index, name, ok ? "PASS" : "FAIL", stats.c_str(),
                timing.c_str());
    if (!ok) {
        ++g_failures;
    }
}

// Truth/prediction pair whose agreement rate is `match`, redrawn until both
// vectors are nonconstant.
testgen::BinaryInstance biased_binary(Rng& rng, size_t n, double match, double w_lo,
                                      double w_hi) {
    testgen::BinaryInstance inst;
    inst.weights = testgen::random_weights(rng, n, w_lo, w_hi, false);
    do {
        inst.truth.assign(n, 0);
        inst.pred.assign(n, 0);
        for (size_t i = 0; i < n; ++i) {
            inst.truth[i] = static_cast<int>(rng.below(2));
            inst.pred[i] = rng.uniform01() < match ? inst.truth[i] : 1 - inst.truth[i];
        }
    } while (testgen::constant(inst.truth) || testgen::constant(inst.pred));
    return inst;
}

double boundary_stat(const std::vector<double>& curve) {
    double head = 0.0, tail = 0.0;
    for (size_t i = 0; i < 26; ++i) {
        head += curve[i];
    }
    for (size_t i = 75; i <= 100; ++i) {
        tail += curve[i];
    }
    return (tail - head) / 26.0;
}

char buf[256];

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

void criterion1_range_law() {
    Timer timer;
    Rng rng(101);
    const int total = 100000;
    int in_range = 0;
    double worst = 0.0;
    for (int i = 0; i < total; ++i) {
        auto inst = testgen::random_binary_instance(rng, 4, 200, 1e-3, 1e4, true);
        const double m = mcc(BinaryLabeledData(inst.truth, inst.pred), WeightVector(inst.weights));
        worst = std::max(worst, std::abs(m));
        in_range += std::abs(m) <= 1.0;
    }
    report(1, "mcc range law", in_range == total,
           fmt("%.0f/100000 in [-1,1], max |mcc| %.6f", static_cast<double>(in_range), worst),
           timer.seconds(), 10.0);
}

void criterion2_integer_oracle() {
    Timer timer;
    Rng rng(202);
    const int total = 10000;
    int agree = 0;
    double worst = 0.0;
    for (int i = 0; i < total; ++i) {
        auto inst = testgen::random_binary_instance(rng, 4, 200, 1.0, 1.0, false);
        const double lib =
            mcc(BinaryLabeledData(inst.truth, inst.pred), WeightVector::ones(inst.truth.size()));
        const double oracle = testoracle::mcc_integer_counts(inst.truth, inst.pred);
        const double diff = std::abs(lib - oracle);
        worst = std::max(worst, diff);
        agree += diff <= 1e-12;
    }
    report(2, "unweighted integer-count oracle", agree == total,
           fmt("%.0f/10000 within 1e-12, max diff %.2e", static_cast<double>(agree), worst),
           timer.seconds(), 0.0);
}

void criterion3_binary_domination() {
    Timer timer;
    Rng rng(303);
    const int instances = 1000, trials = 100;
    long violations = 0;
    long done = 0;
    for (int i = 0; i < instances; ++i) {
        for (int attempt = 0; attempt < 200; ++attempt) {
            const size_t n = 9 + rng.below(52);
            const double match = rng.uniform(0.6, 0.9);
            auto inst = biased_binary(rng, n, match, 0.5, 2.0);
            BinaryLabeledData data(inst.truth, inst.pred);
            WeightVector w(inst.weights);
            auto ctx = binary_bound_context(data, w);
            if (ctx.small_m <= 0.0) {
                continue;
            }
            const double eps = rng.uniform(0.3, 0.9) * ctx.eps_max;
            auto rep = verify_bound(data, w, eps, trials, derive_seed(303, i, 1));
            violations += rep.violations;
            done += rep.trials;
            break;
        }
    }
    report(3, "bound domination (binary)", violations == 0 && done == instances * trials,
           fmt("%.0f violations in %.0f trials", static_cast<double>(violations),
               static_cast<double>(done)),
           timer.seconds(), 30.0);
}

void criterion4_multiclass_domination() {
    Timer timer;
    Rng rng(404);
    const int instances = 1000, trials = 100;
    long violations = 0;
    long done = 0;
    for (Metric metric : {Metric::kEcc, Metric::kMpc1, Metric::kMpc2}) {
        for (int i = 0; i < instances; ++i) {
            for (int attempt = 0; attempt < 200; ++attempt) {
                const size_t n = 9 + rng.below(28);
                const size_t k = 3 + rng.below(3);
                const double match = rng.uniform(0.85, 0.95);
                auto inst = testgen::random_multiclass_instance(rng, n, n, k, k, 0.5, 2.0, match);
                MulticlassLabeledData data(inst.truth, inst.pred, inst.k);
                WeightVector w(inst.weights);
                const double eps = rng.uniform(0.7, 0.95) * std::min(1.0, w.trace() / 2.0);
                try {
                    auto rep = verify_bound(metric, data, w, eps, trials,
                                            derive_seed(404, static_cast<std::uint64_t>(metric),
                                                        static_cast<std::uint64_t>(i)));
                    violations += rep.violations;
                    done += rep.trials;
                    break;
                } catch (const DegenerateLabels&) {
                    continue;
                }
            }
        }
    }
    report(4, "bound domination (multiclass)", violations == 0 && done == 3L * instances * trials,
           fmt("%.0f violations in %.0f trials", static_cast<double>(violations),
               static_cast<double>(done)),
           timer.seconds(), 30.0);
}

void criterion5_eps_scaling() {
    Timer timer;
    const double eps = std::ldexp(1.0, -100);

    BinaryLabeledData doc({1, 1, 1, 0, 0, 0}, {1, 1, 0, 0, 0, 1});
    WeightVector w6 = WeightVector::ones(6);
    const double binary_ratio = mcc_bound(doc, w6, eps / 2.0) / mcc_bound(doc, w6, eps);

    MulticlassLabeledData md({0, 1, 2, 0, 1, 2, 0, 1, 2}, {0, 1, 2, 1, 2, 0, 0, 1, 2}, 3);
    WeightVector w9 = WeightVector::ones(9);
    const double r_ecc = ecc_bound(md, w9, eps / 2.0) / ecc_bound(md, w9, eps);
    const double r_mpc1 = mpc1_bound(md, w9, eps / 2.0) / mpc1_bound(md, w9, eps);
    const double r_mpc2 = mpc2_bound(md, w9, eps / 2.0) / mpc2_bound(md, w9, eps);

    const bool pass = binary_ratio >= 0.5 && binary_ratio <= 0.52 && r_ecc >= 0.25 &&
                      r_ecc <= 0.26 && r_mpc1 >= 0.25 && r_mpc1 <= 0.26 && r_mpc2 >= 0.25 &&
                      r_mpc2 <= 0.26;
    std::string stats = fmt("binary %.4f in [0.5,0.52]; ", binary_ratio) +
                        fmt("ecc/mpc1/mpc2 %.4f/%.4f/%.4f in [0.25,0.26]", r_ecc, r_mpc1, r_mpc2);
    report(5, "eps halving ratios", pass, stats, timer.seconds(), 0.0);
}

void criterion6_flat_sweep() {
    Timer timer;
    SweepConfig config;  // n=150, p=p0=0.5, tercile weights, seed 0
    auto result = run_sweep(config);
    double max_mcc = 0.0, max_wmcc = 0.0;
    for (size_t i = 0; i < result.start_indices.size(); ++i) {
        max_mcc = std::max(max_mcc, std::abs(result.mean_curves[0][i]));
        max_wmcc = std::max(max_wmcc, std::abs(result.mean_curves[1][i]));
    }
    report(6, "flat sweep at p = 0.5", max_mcc <= 0.10 && max_wmcc <= 0.25,
           fmt("max |mcc| %.4f <= 0.10, max |wmcc| %.4f <= 0.25", max_mcc, max_wmcc),
           timer.seconds(), 60.0);
}

void criterion7_binary_boundary() {
    Timer timer;
    SweepConfig config;
    config.p = 1.0;
    auto high = run_sweep(config);
    config.p = 0.0;
    auto low = run_sweep(config);

    const double stat_high = boundary_stat(high.mean_curves[1]);
    const double stat_low = boundary_stat(low.mean_curves[1]);

    double flat_range = 0.0;
    for (const auto* sweep : {&high, &low}) {
        const auto& curve = sweep->mean_curves[0];
        const auto [lo, hi] = std::minmax_element(curve.begin(), curve.end());
        flat_range = std::max(flat_range, *hi - *lo);
    }

    report(7, "weighted boundary contrast", stat_high > 0.2 && stat_low < -0.2 && flat_range < 0.1,
           fmt("wmcc stat %+ .3f / %+ .3f, mcc range %.4f < 0.1", stat_high, stat_low, flat_range),
           timer.seconds(), 60.0);
}

void criterion8_multiclass_boundary() {
    Timer timer;
    SweepConfig config;
    config.k = 3;
    config.p = 1.0;
    auto high = run_sweep(config);
    config.p = 0.0;
    auto low = run_sweep(config);

    // Weighted curves sit at indices 1 (wecc), 3 (wmpc1), 5 (wmpc2).
    bool signs = true;
    double worst_high = 1e300, worst_low = -1e300;
    for (size_t idx : {size_t{1}, size_t{3}, size_t{5}}) {
        const double sh = boundary_stat(high.mean_curves[idx]);
        const double sl = boundary_stat(low.mean_curves[idx]);
        worst_high = std::min(worst_high, sh);
        worst_low = std::max(worst_low, sl);
        signs = signs && sh > 0.2 && sl < -0.2;
    }

    double spread = 0.0;
    for (const auto* sweep : {&high, &low}) {
        for (size_t i = 0; i < sweep->start_indices.size(); ++i) {
            const double a = sweep->mean_curves[1][i];
            const double b = sweep->mean_curves[3][i];
            const double c = sweep->mean_curves[5][i];
            spread = std::max(spread, std::max({a, b, c}) - std::min({a, b, c}));
        }
    }

    report(8, "multiclass boundary agreement", signs && spread < 0.05,
           fmt("weakest stats %+.3f / %+.3f, curve spread %.4f < 0.05", worst_high, worst_low,
               spread),
           timer.seconds(), 60.0);
}

void criterion9_form_equivalence() {
    Timer timer;
    Rng rng(909);
    int binary_ok = 0;
    double binary_worst = 0.0;
    const int total = 10000;
    for (int i = 0; i < total; ++i) {
        auto inst = testgen::random_binary_instance(rng, 4, 120, 1e-2, 1e2, true);
        const double lib =
            mcc(BinaryLabeledData(inst.truth, inst.pred), WeightVector(inst.weights));
        const double cells = testoracle::mcc_confusion_path(inst.truth, inst.pred, inst.weights);
        const double diff = std::abs(lib - cells);
        binary_worst = std::max(binary_worst, diff);
        binary_ok += diff <= 1e-9;
    }

    int multi_ok = 0;
    double multi_worst = 0.0;
    for (int i = 0; i < total; ++i) {
        auto inst = testgen::random_multiclass_instance(rng, 3, 40, 2, 5, 0.1, 10.0, -1.0);
        auto cs = covariance_set(MulticlassLabeledData(inst.truth, inst.pred, inst.k),
                                 WeightVector(inst.weights));
        auto cov = testoracle::covariance_matrix_path(inst.truth, inst.pred, inst.k,
                                                      inst.weights);
        double diff = 0.0;
        for (size_t a = 0; a < inst.k; ++a) {
            for (size_t b = 0; b < inst.k; ++b) {
                diff = std::max(diff, std::abs(cs.r_tt(a, b) - cov.at_tt(a, b)));
                diff = std::max(diff, std::abs(cs.r_tc(a, b) - cov.at_tc(a, b)));
                diff = std::max(diff, std::abs(cs.r_cc(a, b) - cov.at_cc(a, b)));
            }
            diff = std::max(diff, std::abs(cs.r_tc(a, a) -
                                           testoracle::rtc_diag_direct(
                                               inst.truth, inst.pred, static_cast<int>(a),
                                               inst.weights)));
        }
        multi_worst = std::max(multi_worst, diff);
        multi_ok += diff <= 1e-10;
    }

    report(9, "form equivalences", binary_ok == total && multi_ok == total,
           fmt("binary max diff %.2e <= 1e-9, covariance max diff %.2e <= 1e-10", binary_worst,
               multi_worst),
           timer.seconds(), 0.0);
}

void criterion10_invariances() {
    Timer timer;
    Rng rng(1010);
    const int total = 10000;
    int binary_ok = 0;
    double binary_worst = 0.0;
    for (int i = 0; i < total; ++i) {
        auto inst = testgen::random_binary_instance(rng, 4, 80, 0.5, 2.0, false);
        const size_t n = inst.truth.size();
        BinaryLabeledData data(inst.truth, inst.pred);
        WeightVector w(inst.weights);
        const double m = mcc(data, w);

        const double swapped = mcc(BinaryLabeledData(inst.pred, inst.truth), w);
        std::vector<int> flipped(n);
        for (size_t j = 0; j < n; ++j) {
            flipped[j] = 1 - inst.pred[j];
        }
        const double complemented = mcc(BinaryLabeledData(inst.truth, flipped), w);
        const double alpha = std::exp(rng.uniform(std::log(1e-3), std::log(1e3)));
        std::vector<double> scaled = inst.weights;
        for (double& x : scaled) {
            x *= alpha;
        }
        const double rescaled = mcc(data, WeightVector(scaled));

        const double diff = std::max({std::abs(swapped - m), std::abs(complemented + m),
                                      std::abs(rescaled - m)});
        binary_worst = std::max(binary_worst, diff);
        binary_ok += diff <= 1e-12;
    }

    int multi_ok = 0;
    double multi_worst = 0.0;
    for (int i = 0; i < total; ++i) {
        auto inst = testgen::random_multiclass_instance(rng, 3, 40, 2, 5, 0.5, 2.0, -1.0);
        MulticlassLabeledData data(inst.truth, inst.pred, inst.k);
        auto cs = covariance_set(data, WeightVector(inst.weights));
        const double alpha = std::exp(rng.uniform(std::log(1e-3), std::log(1e3)));
        std::vector<double> scaled = inst.weights;
        for (double& x : scaled) {
            x *= alpha;
        }
        auto cs2 = covariance_set(data, WeightVector(scaled));
        double diff = std::max(std::abs(ecc(cs2) - ecc(cs)), std::abs(mpc2(cs2) - mpc2(cs)));
        // With independently drawn labels the class supports can be disjoint,
        // in which case mpc1 refuses on both weight scales or the invariance
        // is broken.
        double m1 = 0.0;
        double m1_scaled = 0.0;
        bool refused = false;
        bool refused_scaled = false;
        try {
            m1 = mpc1(cs);
        } catch (const wmetrics::DegenerateLabels&) {
            refused = true;
        }
        try {
            m1_scaled = mpc1(cs2);
        } catch (const wmetrics::DegenerateLabels&) {
            refused_scaled = true;
        }
        if (refused != refused_scaled) {
            diff = 1.0;
        } else if (!refused) {
            diff = std::max(diff, std::abs(m1_scaled - m1));
        }
        multi_worst = std::max(multi_worst, diff);
        multi_ok += diff <= 1e-12;
    }

    report(10, "invariance suite", binary_ok == total && multi_ok == total,
           fmt("binary max diff %.2e, multiclass max diff %.2e, both <= 1e-12", binary_worst,
               multi_worst),
           timer.seconds(), 0.0);
}

}  // namespace

int main() {
    criterion1_range_law();
    criterion2_integer_oracle();
    criterion3_binary_domination();
    criterion4_multiclass_domination();
    criterion5_eps_scaling();
    criterion6_flat_sweep();
    criterion7_binary_boundary();
    criterion8_multiclass_boundary();
    criterion9_form_equivalence();
    criterion10_invariances();
    std::printf("%d/10 criteria passed\n", 10 - g_failures);
    return g_failures;
}
