#pragma once

// One line of CLI output and its JSON/CSV/LaTeX renderings.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace soncoup::cli {

struct OutputRecord {
  std::vector<int> labels;   // six labels, or three for threej2
  std::optional<long> n;     // empty in symbolic mode
  std::string quantity;      // I, threej2, sixj, sixj2, calpha
  nlohmann::json value;      // serialized rational function, rational or signed root
  std::string factored;      // display string
  std::string latex;         // not part of the JSON form
  std::string num, den;      // ';'-joined coefficients, CSV only

  std::string mode_string() const { return n ? std::to_string(*n) : "symbolic"; }

  friend bool operator==(const OutputRecord& a, const OutputRecord& b) {
    return a.labels == b.labels && a.n == b.n && a.quantity == b.quantity && a.value == b.value &&
           a.factored == b.factored;
  }
};

nlohmann::json to_json(const OutputRecord& r);
/// Throws std::invalid_argument on a malformed record.
OutputRecord record_from_json(const nlohmann::json& j);

std::string csv_header();
std::string to_csv(const OutputRecord& r);
/// One tabular row: labels & value \\ .
std::string to_latex_row(const OutputRecord& r);

} // namespace soncoup::cli
