#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace nagata {

/// A named pass/fail check. Failed verdicts are results, not errors.
struct Verdict {
  std::string name;
  bool pass = true;
  std::string detail;
};

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const std::vector<Verdict>& vs);
bool all_pass(const std::vector<Verdict>& vs);

/// Quote a CSV field when it contains a separator, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace nagata
