#include "nagata/report.hpp"

#include <algorithm>

namespace nagata {

nlohmann::json to_json(const Verdict& v) {
  return {{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}};
}

nlohmann::json to_json(const std::vector<Verdict>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

bool all_pass(const std::vector<Verdict>& vs) {
  return std::all_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.pass; });
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace nagata
