#ifndef WMETRICS_TOOLS_CSV_HPP
#define WMETRICS_TOOLS_CSV_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace wmetrics::cli {

// Thrown on malformed input; the message carries a 1-based line number.
class CsvParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LabeledCsvRecord {
  int truth = 0;
  int prediction = 0;
  double weight = 1.0;
};

struct LabeledCsv {
  std::vector<LabeledCsvRecord> records;
  bool has_weight_column = false;
};

// Reads a labeled-data CSV. The header must be exactly
// `truth,prediction` or `truth,prediction,weight`. Blank lines and lines
// starting with '#' are skipped. Weights, when present, must be positive.
LabeledCsv parse_labeled_csv(std::istream& in);

// Shortest round-trippable decimal rendering at the given precision.
// Always contains a decimal point or exponent, so integral values come out
// as "1.0" rather than "1".
std::string format_decimal(double value, int significant_digits);

}  // namespace wmetrics::cli

#endif
