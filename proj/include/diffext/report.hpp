#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace diffext {

struct RunConfig {
  int samples = 50;
  std::uint64_t seed = 0;
  int degree_cap = 3;
  std::string rep = "natural";
  std::string d1 = "p1";
  std::string d2 = "p2";
  std::string output = "text";
  bool serial = false;  // force the single-thread path
};

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when passing
};

struct Report {
  std::string suite;
  RunConfig config;
  std::vector<CaseResult> cases;  // sorted by name
  std::int64_t elapsed_ms = 0;

  int passed() const;
  int failed() const;
  void sort_cases();
};

nlohmann::ordered_json report_json(const Report& r);
std::string report_text(const Report& r);

}  // namespace diffext
