#include "diffext/report.hpp"

#include <algorithm>

namespace diffext {

int Report::passed() const {
  int n = 0;
  for (const auto& c : cases) n += c.pass ? 1 : 0;
  return n;
}

int Report::failed() const { return static_cast<int>(cases.size()) - passed(); }

void Report::sort_cases() {
  std::sort(cases.begin(), cases.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
}

nlohmann::ordered_json report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["config"] = {{"samples", r.config.samples}, {"seed", r.config.seed},
                 {"degree_cap", r.config.degree_cap}, {"rep", r.config.rep},
                 {"d1", r.config.d1}, {"d2", r.config.d2}};
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : r.cases) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    j["cases"].push_back(std::move(jc));
  }
  j["passed"] = r.passed();
  j["failed"] = r.failed();
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string report_text(const Report& r) {
  std::string out = "suite " + r.suite + ": " + std::to_string(r.passed()) + "/" +
                    std::to_string(r.cases.size()) + " passed (" + std::to_string(r.elapsed_ms) +
                    " ms)\n";
  for (const auto& c : r.cases) {
    out += std::string("  [") + (c.pass ? "PASS" : "FAIL") + "] " + c.name;
    if (!c.witness.empty()) out += "\n         witness: " + c.witness;
    out += "\n";
  }
  return out;
}

}  // namespace diffext
