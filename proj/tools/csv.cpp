#include "csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <string_view>

namespace wmetrics::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t begin = 0;
  while (true) {
    size_t comma = line.find(',', begin);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(begin)));
      break;
    }
    fields.push_back(trim(line.substr(begin, comma - begin)));
    begin = comma + 1;
  }
  return fields;
}

[[noreturn]] void fail(size_t line_number, const std::string& what) {
  throw CsvParseError("line " + std::to_string(line_number) + ": " + what);
}

int parse_int(std::string_view field, size_t line_number, const char* name) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    fail(line_number, std::string(name) + " is not an integer: '" + std::string(field) + "'");
  }
  return value;
}

double parse_weight(std::string_view field, size_t line_number) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    fail(line_number, "weight is not a number: '" + std::string(field) + "'");
  }
  if (!std::isfinite(value) || value <= 0.0) {
    fail(line_number, "weight must be positive and finite: '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

LabeledCsv parse_labeled_csv(std::istream& in) {
  LabeledCsv out;
  std::string line;
  size_t line_number = 0;
  bool saw_header = false;
  size_t expected_fields = 0;

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') {
      continue;
    }
    if (!saw_header) {
      auto fields = split_fields(view);
      if (fields.size() == 2 && fields[0] == "truth" && fields[1] == "prediction") {
        out.has_weight_column = false;
      } else if (fields.size() == 3 && fields[0] == "truth" && fields[1] == "prediction" &&
                 fields[2] == "weight") {
        out.has_weight_column = true;
      } else {
        fail(line_number,
             "header must be 'truth,prediction' or 'truth,prediction,weight'");
      }
      expected_fields = fields.size();
      saw_header = true;
      continue;
    }
    auto fields = split_fields(view);
    if (fields.size() != expected_fields) {
      fail(line_number, "expected " + std::to_string(expected_fields) + " fields, got " +
                            std::to_string(fields.size()));
    }
    LabeledCsvRecord record;
    record.truth = parse_int(fields[0], line_number, "truth");
    record.prediction = parse_int(fields[1], line_number, "prediction");
    if (out.has_weight_column) {
      record.weight = parse_weight(fields[2], line_number);
    }
    out.records.push_back(record);
  }

  if (!saw_header) {
    throw CsvParseError("line 1: missing header 'truth,prediction[,weight]'");
  }
  if (out.records.empty()) {
    fail(line_number + 1, "no data rows");
  }
  return out;
}

std::string format_decimal(double value, int significant_digits) {
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                              std::chars_format::general, significant_digits);
  std::string out(buffer, result.ptr);
  if (out.find('.') == std::string::npos && out.find('e') == std::string::npos &&
      out.find("inf") == std::string::npos && out.find("nan") == std::string::npos) {
    out += ".0";
  }
  return out;
}

}  // namespace wmetrics::cli
