#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string_view>
#include <vector>

#include "csv.hpp"
#include "wmetrics/binary_metrics.hpp"
#include "wmetrics/experiments.hpp"
#include "wmetrics/multiclass_metrics.hpp"
#include "wmetrics/rng.hpp"
#include "wmetrics/stability_bounds.hpp"
#include "wmetrics/types.hpp"

namespace wmetrics::cli {
namespace {

constexpr int kComputeDigits = 12;
constexpr int kSweepDigits = 9;
constexpr int kMaxInstanceAttempts = 1000;

void print_value(std::ostream& out, std::string_view name, double value) {
  out << name << ',' << format_decimal(value, kComputeDigits) << '\n';
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << '\n';
  return kExitUsage;
}

std::vector<WeightSegment> parse_weight_pattern(std::string_view text) {
  std::vector<WeightSegment> pattern;
  size_t begin = 0;
  while (begin <= text.size()) {
    size_t comma = text.find(',', begin);
    std::string_view item = comma == std::string_view::npos
                                ? text.substr(begin)
                                : text.substr(begin, comma - begin);
    size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("expected count:weight, got '" + std::string(item) + "'");
    }
    std::string_view count_text = item.substr(0, colon);
    std::string_view weight_text = item.substr(colon + 1);
    WeightSegment segment{};
    auto [cp, cec] =
        std::from_chars(count_text.data(), count_text.data() + count_text.size(), segment.count);
    if (cec != std::errc{} || cp != count_text.data() + count_text.size() || segment.count == 0) {
      throw std::invalid_argument("count is not a positive integer: '" +
                                  std::string(count_text) + "'");
    }
    auto [wp, wec] = std::from_chars(weight_text.data(), weight_text.data() + weight_text.size(),
                                     segment.weight);
    if (wec != std::errc{} || wp != weight_text.data() + weight_text.size() ||
        !std::isfinite(segment.weight) || segment.weight <= 0.0) {
      throw std::invalid_argument("weight is not a positive number: '" +
                                  std::string(weight_text) + "'");
    }
    pattern.push_back(segment);
    if (comma == std::string_view::npos) {
      break;
    }
    begin = comma + 1;
  }
  if (pattern.empty()) {
    throw std::invalid_argument("empty pattern");
  }
  return pattern;
}

int emit_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << "start_index";
  for (const auto& name : result.metric_names) {
    out << ',' << name;
  }
  out << '\n';
  for (size_t row = 0; row < result.start_indices.size(); ++row) {
    out << result.start_indices[row];
    for (const auto& curve : result.mean_curves) {
      out << ',' << format_decimal(curve[row], kSweepDigits);
    }
    out << '\n';
  }
  out.flush();
  return out.good() ? kExitOk : kExitUsage;
}

}  // namespace

std::uint64_t default_seed() {
  const char* text = std::getenv("WMETRICS_SEED");
  if (text == nullptr) {
    return 1;
  }
  std::string_view view(text);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(view.data(), view.data() + view.size(), value);
  if (ec != std::errc{} || ptr != view.data() + view.size()) {
    return 1;
  }
  return value;
}

int cmd_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.mode != "binary" && opts.mode != "multi") {
    return usage_error(err, "--mode must be 'binary' or 'multi'");
  }
  std::ifstream file(opts.input_path);
  if (!file) {
    return usage_error(err, "cannot open '" + opts.input_path + "'");
  }
  LabeledCsv csv;
  try {
    csv = parse_labeled_csv(file);
  } catch (const CsvParseError& e) {
    return usage_error(err, opts.input_path + ": " + e.what());
  }

  const size_t n = csv.records.size();
  std::vector<int> truth(n);
  std::vector<int> prediction(n);
  std::vector<double> weights(n);
  for (size_t i = 0; i < n; ++i) {
    truth[i] = csv.records[i].truth;
    prediction[i] = csv.records[i].prediction;
    weights[i] = csv.records[i].weight;
  }

  try {
    if (opts.mode == "binary") {
      for (size_t i = 0; i < n; ++i) {
        if ((truth[i] != 0 && truth[i] != 1) || (prediction[i] != 0 && prediction[i] != 1)) {
          return usage_error(err, "binary mode requires class indices in {0,1}");
        }
      }
      BinaryLabeledData data(truth, prediction);
      const double plain = mcc(data, WeightVector::ones(n));
      const double weighted = mcc(data, WeightVector(weights));
      print_value(out, "MCC", plain);
      print_value(out, "WMCC", weighted);
      return kExitOk;
    }

    int max_label = 0;
    for (size_t i = 0; i < n; ++i) {
      if (truth[i] < 0 || prediction[i] < 0) {
        return usage_error(err, "class indices must be non-negative");
      }
      max_label = std::max({max_label, truth[i], prediction[i]});
    }
    int k = opts.num_classes;
    if (k == 0) {
      k = std::max(max_label + 1, 2);
    } else if (max_label >= k) {
      return usage_error(err, "class index " + std::to_string(max_label) +
                                  " is outside the declared class count " + std::to_string(k));
    }
    MulticlassLabeledData data(truth, prediction, static_cast<size_t>(k));
    const CovarianceSet plain = covariance_set(data, WeightVector::ones(n));
    const CovarianceSet weighted = covariance_set(data, WeightVector(weights));
    print_value(out, "ECC", ecc(plain));
    print_value(out, "WECC", ecc(weighted));
    print_value(out, "MPC1", mpc1(plain));
    print_value(out, "WMPC1", mpc1(weighted));
    print_value(out, "MPC2", mpc2(plain));
    print_value(out, "WMPC2", mpc2(weighted));
    return kExitOk;
  } catch (const DegenerateLabels& e) {
    err << "error: degenerate labels: " << e.what() << '\n';
    return kExitDegenerateData;
  } catch (const std::invalid_argument& e) {
    return usage_error(err, e.what());
  }
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.n == 0) {
    return usage_error(err, "--n must be positive");
  }
  if (opts.k != 1 && opts.k < 3) {
    return usage_error(err, "--k must be 1 (binary) or at least 3");
  }
  if (opts.p < 0.0 || opts.p > 1.0 || !std::isfinite(opts.p)) {
    return usage_error(err, "--p must lie in [0, 1]");
  }
  if (opts.p0 < 0.0 || opts.p0 > 1.0 || !std::isfinite(opts.p0)) {
    return usage_error(err, "--p0 must lie in [0, 1]");
  }
  if (opts.samples == 0) {
    return usage_error(err, "--samples must be positive");
  }

  SweepConfig config;
  config.n = opts.n;
  config.k = opts.k;
  config.p = opts.p;
  config.p0 = opts.p0;
  config.samples = opts.samples;
  config.seed = opts.seed;

  config.segment_len = opts.segment_len != 0 ? opts.segment_len : opts.n / 3;
  if (config.segment_len == 0 || config.segment_len > opts.n) {
    return usage_error(err, "--segment-len must lie in 1..n (default is n/3)");
  }

  if (opts.weights.empty()) {
    const size_t third = opts.n / 3;
    if (third == 0) {
      return usage_error(err, "--weights: the default pattern splits n into thirds and needs "
                              "--n >= 3; pass --weights explicitly");
    }
    config.weight_pattern = {{third, 1.0}, {third, 100.0}, {opts.n - 2 * third, 10000.0}};
  } else {
    try {
      config.weight_pattern = parse_weight_pattern(opts.weights);
    } catch (const std::invalid_argument& e) {
      return usage_error(err, std::string("--weights: ") + e.what());
    }
    size_t total = 0;
    for (const auto& segment : config.weight_pattern) {
      total += segment.count;
    }
    if (total != opts.n) {
      return usage_error(err, "--weights: counts sum to " + std::to_string(total) +
                                  ", expected --n = " + std::to_string(opts.n));
    }
  }

  SweepResult result;
  try {
    result = run_sweep(config);
  } catch (const std::invalid_argument& e) {
    return usage_error(err, e.what());
  }

  if (opts.out.empty()) {
    return emit_sweep_csv(result, out);
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) {
    return usage_error(err, "cannot open '" + opts.out + "' for writing");
  }
  int code = emit_sweep_csv(result, file);
  if (code != kExitOk) {
    return usage_error(err, "failed writing '" + opts.out + "'");
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  const bool binary = opts.metric == "mcc";
  Metric metric = Metric::kMcc;
  if (opts.metric == "ecc") {
    metric = Metric::kEcc;
  } else if (opts.metric == "mpc1") {
    metric = Metric::kMpc1;
  } else if (opts.metric == "mpc2") {
    metric = Metric::kMpc2;
  } else if (!binary) {
    return usage_error(err, "--metric must be one of mcc, ecc, mpc1, mpc2");
  }
  if (opts.n < 2) {
    return usage_error(err, "--n must be at least 2");
  }
  if (!binary && opts.k < 2) {
    return usage_error(err, "--k must be at least 2");
  }
  if (opts.trials <= 0) {
    return usage_error(err, "--trials must be positive");
  }
  if (!std::isfinite(opts.eps) || opts.eps < 0.0) {
    return usage_error(err, "--eps must be a positive number");
  }

  const size_t classes = binary ? 2 : opts.k;
  std::string last_reason = "no instance generated";
  for (int attempt = 0; attempt < kMaxInstanceAttempts; ++attempt) {
    Rng gen(derive_seed(opts.seed, 0x5eed, static_cast<std::uint64_t>(attempt)));
    std::vector<int> truth(opts.n);
    std::vector<int> prediction(opts.n);
    std::vector<double> weights(opts.n);
    for (size_t i = 0; i < opts.n; ++i) {
      weights[i] = gen.uniform(0.5, 2.0);
      truth[i] = static_cast<int>(gen.below(classes));
      if (gen.uniform01() < 0.75) {
        prediction[i] = truth[i];
      } else {
        auto other = gen.below(classes - 1);
        prediction[i] = static_cast<int>(other >= static_cast<size_t>(truth[i]) ? other + 1
                                                                                : other);
      }
    }
    WeightVector w(weights);
    try {
      StabilityReport report;
      double eps = opts.eps;
      if (binary) {
        BinaryLabeledData data(truth, prediction);
        if (eps == 0.0) {
          eps = 0.45 * binary_bound_context(data, w).eps_max;
        }
        report = verify_bound(data, w, eps, opts.trials, opts.seed);
      } else {
        MulticlassLabeledData data(truth, prediction, classes);
        if (eps == 0.0) {
          eps = 0.45 * std::min(1.0, w.trace() / 2.0);
        }
        report = verify_bound(metric, data, w, eps, opts.trials, opts.seed);
      }
      out << "metric," << opts.metric << '\n';
      print_value(out, "eps", eps);
      print_value(out, "theoretical_bound", report.theoretical_bound);
      print_value(out, "empirical_max_deviation", report.empirical_max_deviation);
      out << "trials," << report.trials << '\n';
      out << "violations," << report.violations << '\n';
      out << "preconditions_ok," << (report.preconditions_ok ? "true" : "false") << '\n';
      return report.violations == 0 ? kExitOk : kExitBoundViolation;
    } catch (const PreconditionViolated& e) {
      last_reason = e.what();
    } catch (const DegenerateLabels& e) {
      last_reason = e.what();
    }
  }
  err << "error: could not satisfy preconditions after "
      << std::to_string(kMaxInstanceAttempts) << " attempts: " << last_reason << '\n';
  return kExitUsage;
}

}  // namespace wmetrics::cli
