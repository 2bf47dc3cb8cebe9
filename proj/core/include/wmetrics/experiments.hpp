#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wmetrics/rng.hpp"
#include "wmetrics/types.hpp"

namespace wmetrics {

// A run of `count` observations sharing one weight.
struct WeightSegment {
    std::size_t count;
    double weight;
};

// Configuration for the moving-segment agreement sweep: a prediction matches
// the truth on an exact share p of a sliding segment and on an exact share p0
// of everything outside it, and the mean metric value is traced as the
// segment start moves across the observation range.
struct SweepConfig {
    std::size_t n = 150;
    std::size_t k = 1;  // 1 for binary labels, otherwise the class count (>= 3)
    double p = 0.5;
    double p0 = 0.5;
    std::size_t segment_len = 50;
    std::size_t samples = 100;
    std::vector<WeightSegment> weight_pattern{{50, 1.0}, {50, 100.0}, {50, 10000.0}};
    std::uint64_t seed = 0;
    // When set, every sample reuses this truth vector instead of drawing one.
    std::optional<std::vector<int>> fixed_truth;
};

// Mean metric curves over the sample draws, one value per segment start.
// metric_names and mean_curves are parallel; start_indices is 1-based.
struct SweepResult {
    std::vector<int> start_indices;
    std::vector<std::string> metric_names;
    std::vector<std::vector<double>> mean_curves;
    long degenerate_redraws = 0;
};

// Throws std::invalid_argument (or DimensionError) naming the offending field.
void validate(const SweepConfig& config);

// Expands (count, weight) runs into a concrete weight vector.
WeightVector expand_weight_pattern(const std::vector<WeightSegment>& pattern);

// Uniform iid labels: bits when k == 1, class indices in [0, k) otherwise.
std::vector<int> generate_truth(std::size_t n, std::size_t k, Rng& rng);

// Prediction that matches `truth` on exactly round(p * segment_len) positions
// inside the segment [start, start + segment_len) (1-based start) and exactly
// round(p0 * (n - segment_len)) positions outside it, the matched positions
// chosen uniformly without replacement. Mismatches flip the bit when k == 1
// and otherwise draw uniformly among the other k - 1 classes.
std::vector<int> generate_prediction(std::span<const int> truth, std::size_t k, double p,
                                     double p0, std::size_t start, std::size_t segment_len,
                                     Rng& rng);

// Runs the full sweep. Every (start, sample) cell draws from its own seeded
// stream, so results are bit-identical for identical configs regardless of
// evaluation order. Samples that hit a degenerate-label error are redrawn
// (and counted in degenerate_redraws) so the sample count stays exact.
SweepResult run_sweep(const SweepConfig& config);

}  // namespace wmetrics
