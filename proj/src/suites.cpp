#include "diffext/suites.hpp"

#include <chrono>

#include "diffext/errors.hpp"
#include "diffext/groups.hpp"
#include "diffext/parallel.hpp"
#include "diffext/parse.hpp"
#include "suite_harness.hpp"

namespace diffext {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "field",      "cohomology", "cocycle1",      "alpha",
      "extension",  "commutator", "linearization", "char2",
  };
  return names;
}

bool is_suite_name(const std::string& name) {
  if (name == "all") return true;
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

void validate_config(const RunConfig& cfg) {
  if (cfg.samples < 1) throw Error("samples must be at least 1");
  if (cfg.degree_cap < 1) throw Error("degree cap must be at least 1");
  rep_by_name(cfg.rep);
  parse_derivation(cfg.d1, kNumVars);
  parse_derivation(cfg.d2, kNumVars);
  if (cfg.output != "text" && cfg.output != "json")
    throw Error("output must be 'text' or 'json', got '" + cfg.output + "'");
}

Report run_suite(const std::string& name, const RunConfig& cfg) {
  validate_config(cfg);
  par::set_enabled(!cfg.serial);
  auto start = std::chrono::steady_clock::now();
  SuiteRun s(name, cfg);
  if (name == "field")
    suite_field(s);
  else if (name == "cohomology")
    suite_cohomology(s);
  else if (name == "cocycle1")
    suite_cocycle1(s);
  else if (name == "alpha")
    suite_alpha(s);
  else if (name == "extension")
    suite_extension(s);
  else if (name == "commutator")
    suite_commutator(s);
  else if (name == "linearization")
    suite_linearization(s);
  else if (name == "char2")
    suite_char2(s);
  else
    throw Error("unknown suite: " + name);
  Report r = s.finish();
  auto end = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  return r;
}

std::vector<Report> run_all(const RunConfig& cfg) {
  std::vector<Report> out;
  out.reserve(suite_names().size());
  for (const auto& n : suite_names()) out.push_back(run_suite(n, cfg));
  return out;
}

}  // namespace diffext
