#ifndef SOLVCERT_FIXTURES_HPP
#define SOLVCERT_FIXTURES_HPP

#include <string>
#include <vector>

#include "solvcert/fixtures_data.hpp"
#include "solvcert/report.hpp"

namespace solvcert {

/// Built-in fixtures whose name contains `filter` (all when empty).
inline std::vector<FixtureFile> find_fixtures(const std::string& filter = "") {
  std::vector<FixtureFile> out;
  for (const auto& f : kFixtureFiles)
    if (filter.empty() || f.name.find(filter) != std::string_view::npos) out.push_back(f);
  return out;
}

inline const FixtureFile* fixture_by_name(const std::string& name) {
  for (const auto& f : kFixtureFiles)
    if (f.name == name) return &f;
  return nullptr;
}

struct FixtureOutcome {
  std::string name;
  std::string verdict;
  std::string rules;
  std::string oracle;     // "solvable", "not_solvable" or "skipped"
  std::string agreement;  // cross-check status, or "skipped"
  Json document;
};

inline FixtureOutcome run_fixture(const FixtureFile& f, const RunOptions& opt = {}) {
  FixtureOutcome o;
  o.name = std::string(f.name);
  o.document = run_source(parse_source(std::string(f.text)), opt);
  const auto& doc = o.document;
  o.verdict = doc["verdict"]["status"].get<std::string>();
  for (const auto& r : doc["rules"]) o.rules += (o.rules.empty() ? "" : ",") + r["tag"].get<std::string>();
  if (o.rules.empty()) o.rules = "-";
  if (doc["oracle"].is_null()) {
    o.oracle = o.agreement = "skipped";
  } else {
    o.oracle = doc["oracle"]["solvable"].get<bool>() ? "solvable" : "not_solvable";
    o.agreement = doc["oracle"]["cross_check"]["status"].get<std::string>();
  }
  return o;
}

}  // namespace solvcert

#endif  // SOLVCERT_FIXTURES_HPP
