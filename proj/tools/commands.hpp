#ifndef WMETRICS_TOOLS_COMMANDS_HPP
#define WMETRICS_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace wmetrics::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDegenerateData = 2;
inline constexpr int kExitBoundViolation = 3;

// Seed used when no --seed flag is given: the WMETRICS_SEED environment
// variable if it parses as an unsigned integer, otherwise 1.
std::uint64_t default_seed();

struct ComputeOptions {
  std::string input_path;
  std::string mode;     // "binary" or "multi"
  int num_classes = 0;  // multi mode: declared class count; 0 infers from data
};

struct SweepOptions {
  std::size_t n = 150;
  std::size_t k = 1;  // 1 for binary, otherwise class count >= 3
  double p = 0.5;
  double p0 = 0.5;
  std::size_t segment_len = 0;  // 0: n / 3
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::string weights;  // "count:weight,..."; empty: thirds at 1, 100, 10000
  std::string out;      // output path; empty: stdout
};

struct VerifyOptions {
  std::string metric;  // mcc | ecc | mpc1 | mpc2
  std::size_t n = 50;
  std::size_t k = 3;  // class count for the multiclass metrics
  double eps = 0.0;   // 0: pick 45% of the largest admissible radius
  int trials = 1000;
  std::uint64_t seed = 1;
};

// Each command writes its report to `out`, diagnostics to `err`, and returns
// one of the kExit* codes above.
int cmd_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace wmetrics::cli

#endif
