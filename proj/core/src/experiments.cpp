#include "wmetrics/experiments.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "wmetrics/binary_metrics.hpp"
#include "wmetrics/multiclass_metrics.hpp"

namespace wmetrics {

namespace {

constexpr int kMaxRedrawsPerSample = 1000;

void check_proportion(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                    std::to_string(value));
    }
}

// Marks the first `match_count` entries of a partial shuffle of `positions`
// as matched. Uniform over subsets; consumes exactly match_count draws.
void choose_matches(std::vector<std::size_t>& positions, std::size_t match_count, Rng& rng) {
    for (std::size_t i = 0; i < match_count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(positions.size() - i));
        std::swap(positions[i], positions[j]);
    }
}

int mismatch_label(int truth_label, std::size_t k, Rng& rng) {
    if (k == 1) {
        return 1 - truth_label;
    }
    const auto r = static_cast<int>(rng.below(k - 1));
    return r >= truth_label ? r + 1 : r;
}

}  // namespace

void validate(const SweepConfig& config) {
    if (config.n == 0) {
        throw std::invalid_argument("n must be positive");
    }
    if (config.k != 1 && config.k < 3) {
        throw std::invalid_argument("k must be 1 (binary) or at least 3, got " +
                                    std::to_string(config.k));
    }
    check_proportion(config.p, "p");
    check_proportion(config.p0, "p0");
    if (config.segment_len == 0 || config.segment_len > config.n) {
        throw std::invalid_argument("segment_len must lie in [1, n], got " +
                                    std::to_string(config.segment_len));
    }
    if (config.samples == 0) {
        throw std::invalid_argument("samples must be positive");
    }
    std::size_t total = 0;
    for (const WeightSegment& seg : config.weight_pattern) {
        if (seg.weight <= 0.0) {
            throw std::invalid_argument("pattern weights must be positive, got " +
                                        std::to_string(seg.weight));
        }
        total += seg.count;
    }
    if (total != config.n) {
        throw std::invalid_argument("weight pattern covers " + std::to_string(total) +
                                    " observations but n is " + std::to_string(config.n));
    }
    if (config.fixed_truth) {
        if (config.fixed_truth->size() != config.n) {
            throw DimensionError("fixed_truth length " + std::to_string(config.fixed_truth->size()) +
                                 " does not match n = " + std::to_string(config.n));
        }
        const int limit = config.k == 1 ? 2 : static_cast<int>(config.k);
        for (int label : *config.fixed_truth) {
            if (label < 0 || label >= limit) {
                throw std::invalid_argument("fixed_truth label " + std::to_string(label) +
                                            " outside [0, " + std::to_string(limit) + ")");
            }
        }
    }
}

WeightVector expand_weight_pattern(const std::vector<WeightSegment>& pattern) {
    std::vector<double> weights;
    for (const WeightSegment& seg : pattern) {
        weights.insert(weights.end(), seg.count, seg.weight);
    }
    return WeightVector(std::move(weights));
}

std::vector<int> generate_truth(std::size_t n, std::size_t k, Rng& rng) {
    const std::uint64_t classes = k == 1 ? 2 : k;
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = static_cast<int>(rng.below(classes));
    }
    return labels;
}

std::vector<int> generate_prediction(std::span<const int> truth, std::size_t k, double p,
                                     double p0, std::size_t start, std::size_t segment_len,
                                     Rng& rng) {
    const std::size_t n = truth.size();
    check_proportion(p, "p");
    check_proportion(p0, "p0");
    if (segment_len == 0 || segment_len > n) {
        throw std::out_of_range("segment_len must lie in [1, n], got " +
                                std::to_string(segment_len));
    }
    if (start < 1 || start > n - segment_len + 1) {
        throw std::out_of_range("segment start " + std::to_string(start) +
                                " outside [1, " + std::to_string(n - segment_len + 1) + "]");
    }

    std::vector<std::size_t> inside(segment_len);
    std::iota(inside.begin(), inside.end(), start - 1);
    std::vector<std::size_t> outside;
    outside.reserve(n - segment_len);
    for (std::size_t i = 0; i < start - 1; ++i) {
        outside.push_back(i);
    }
    for (std::size_t i = start - 1 + segment_len; i < n; ++i) {
        outside.push_back(i);
    }

    const auto match_in = static_cast<std::size_t>(
        std::llround(p * static_cast<double>(segment_len)));
    const auto match_out = static_cast<std::size_t>(
        std::llround(p0 * static_cast<double>(n - segment_len)));
    choose_matches(inside, match_in, rng);
    choose_matches(outside, match_out, rng);

    std::vector<int> prediction(n);
    auto fill = [&](const std::vector<std::size_t>& positions, std::size_t match_count) {
        for (std::size_t i = 0; i < positions.size(); ++i) {
            const std::size_t pos = positions[i];
            prediction[pos] = i < match_count ? truth[pos] : mismatch_label(truth[pos], k, rng);
        }
    };
    fill(inside, match_in);
    fill(outside, match_out);
    return prediction;
}

SweepResult run_sweep(const SweepConfig& config) {
    validate(config);
    const bool binary = config.k == 1;
    const WeightVector pattern = expand_weight_pattern(config.weight_pattern);
    const WeightVector unit = WeightVector::ones(config.n);
    const std::size_t num_starts = config.n - config.segment_len + 1;

    SweepResult result;
    result.start_indices.resize(num_starts);
    std::iota(result.start_indices.begin(), result.start_indices.end(), 1);
    result.metric_names = binary
                              ? std::vector<std::string>{"mcc", "wmcc"}
                              : std::vector<std::string>{"ecc", "wecc", "mpc1", "wmpc1",
                                                         "mpc2", "wmpc2"};
    result.mean_curves.assign(result.metric_names.size(),
                              std::vector<double>(num_starts, 0.0));

    std::vector<double> values(result.metric_names.size());
    for (std::size_t si = 0; si < num_starts; ++si) {
        const std::size_t start = si + 1;
        std::vector<double> sums(result.metric_names.size(), 0.0);
        for (std::size_t sample = 0; sample < config.samples; ++sample) {
            Rng rng(derive_seed(config.seed, start, sample));
            bool drawn = false;
            for (int attempt = 0; attempt < kMaxRedrawsPerSample && !drawn; ++attempt) {
                std::vector<int> truth =
                    config.fixed_truth ? *config.fixed_truth : generate_truth(config.n, config.k, rng);
                std::vector<int> prediction = generate_prediction(
                    truth, config.k, config.p, config.p0, start, config.segment_len, rng);
                try {
                    if (binary) {
                        const BinaryLabeledData data(std::move(truth), std::move(prediction));
                        values[0] = mcc(data, unit);
                        values[1] = mcc(data, pattern);
                    } else {
                        const MulticlassLabeledData data(std::move(truth), std::move(prediction),
                                                         config.k);
                        const CovarianceSet plain = covariance_set(data, unit);
                        const CovarianceSet weighted = covariance_set(data, pattern);
                        values[0] = ecc(plain);
                        values[1] = ecc(weighted);
                        values[2] = mpc1(plain);
                        values[3] = mpc1(weighted);
                        values[4] = mpc2(plain);
                        values[5] = mpc2(weighted);
                    }
                    drawn = true;
                } catch (const DegenerateLabels&) {
                    ++result.degenerate_redraws;
                }
            }
            if (!drawn) {
                throw DegenerateLabels("could not draw a nondegenerate sample in " +
                                       std::to_string(kMaxRedrawsPerSample) + " attempts");
            }
            for (std::size_t m = 0; m < values.size(); ++m) {
                sums[m] += values[m];
            }
        }
        for (std::size_t m = 0; m < sums.size(); ++m) {
            result.mean_curves[m][si] = sums[m] / static_cast<double>(config.samples);
        }
    }
    return result;
}

}  // namespace wmetrics
