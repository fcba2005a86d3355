#include "output_record.hpp"

#include <stdexcept>

namespace soncoup::cli {

nlohmann::json to_json(const OutputRecord& r) {
  nlohmann::json mode = r.n ? nlohmann::json(*r.n) : nlohmann::json("symbolic");
  return {{"labels", r.labels}, {"mode", mode}, {"quantity", r.quantity}, {"value", r.value},
          {"factored", r.factored}};
}

OutputRecord record_from_json(const nlohmann::json& j) {
  try {
    OutputRecord r;
    r.labels = j.at("labels").get<std::vector<int>>();
    const auto& mode = j.at("mode");
    if (mode.is_string()) {
      if (mode.get<std::string>() != "symbolic") throw std::invalid_argument("mode must be \"symbolic\" or an integer");
    } else {
      r.n = mode.get<long>();
    }
    r.quantity = j.at("quantity").get<std::string>();
    r.value = j.at("value");
    r.factored = j.at("factored").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed output record: ") + e.what());
  }
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string label_string(const std::vector<int>& labels) {
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i == 3 ? "|" : (i ? "," : "")) + std::to_string(labels[i]);
  return s;
}

} // namespace

std::string csv_header() { return "l1,l2,l3,l4,l5,l6,mode,quantity,value,num,den"; }

std::string to_csv(const OutputRecord& r) {
  std::string s;
  for (std::size_t i = 0; i < 6; ++i) s += (i < r.labels.size() ? std::to_string(r.labels[i]) : "") + ",";
  s += r.mode_string() + "," + r.quantity + "," + csv_field(r.factored) + "," + csv_field(r.num) + "," +
       csv_field(r.den);
  return s;
}

std::string to_latex_row(const OutputRecord& r) {
  return "$(" + label_string(r.labels) + ")$ & $" + r.latex + "$ \\\\";
}

} // namespace soncoup::cli
