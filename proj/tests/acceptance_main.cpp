// Acceptance gate: one line per criterion, nonzero exit if any fails.
// argv[1] must be the path to the verification CLI binary.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <diffext/report.hpp>
#include <diffext/suites.hpp>

using diffext::Report;
using diffext::RunConfig;
using diffext::run_suite;

namespace {

int failures = 0;

void line(int criterion, bool pass, const std::string& what) {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL")
            << "  " << what << "\n";
  if (!pass) ++failures;
}

bool case_passes(const Report& r, const std::string& name) {
  for (const auto& c : r.cases)
    if (c.name == name) return c.pass;
  return false;
}

bool has_case(const Report& r, const std::string& name) {
  for (const auto& c : r.cases)
    if (c.name == name) return true;
  return false;
}

bool all_pass(const Report& r, const std::vector<std::string>& names) {
  if (r.failed() != 0) return false;
  for (const auto& n : names)
    if (!case_passes(r, n)) return false;
  return true;
}

struct ExecResult {
  int exit_code = -1;
  std::string out;
  std::int64_t elapsed_ms = 0;
};

ExecResult run_command(const std::string& cmd) {
  ExecResult res;
  auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.out.append(buf.data(), n);
  int status = pclose(pipe);
  auto stop = std::chrono::steady_clock::now();
  res.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
          .count();
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

// drop the timing lines so two runs can be compared byte for byte
std::string strip_elapsed(const std::string& s) {
  std::istringstream in(s);
  std::string out, ln;
  while (std::getline(in, ln)) {
    if (ln.find("\"elapsed_ms\"") != std::string::npos) continue;
    out += ln;
    out += '\n';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli-binary>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const RunConfig defaults;  // samples=50, seed=0, partials, natural

  {
    Report r = run_suite("field", defaults);
    bool ok = all_pass(r, {"leibniz_product_rule", "partials_commute",
                           "canonical_form_routes"}) &&
              r.elapsed_ms < 5000;
    line(1, ok,
         "field operations: product rule, commuting partials, canonical "
         "normalization on seeded samples in under 5s");
  }
  {
    Report r = run_suite("cohomology", defaults);
    bool ok = all_pass(
        r, {"dd_zero_trivial_arity0", "dd_zero_trivial_arity1",
            "dd_zero_conjugation_arity0", "dd_zero_conjugation_arity1",
            "z1_homomorphism_characterization"});
    line(2, ok,
         "bar differential squares to zero on both modules and degree-one "
         "cocycles with trivial coefficients are exactly homomorphisms");
  }
  {
    Report r = run_suite("cocycle1", defaults);
    bool ok = all_pass(r, {"cocycle_identity_natural",
                           "cocycle_identity_adjoint", "cocycle_at_identity"});
    line(3, ok,
         "derivation cocycle satisfies the twisted identity in both "
         "representations and vanishes at the identity");
  }
  {
    Report r = run_suite("alpha", defaults);
    bool ok = all_pass(r, {"two_forms_agree"});
    line(4, ok,
         "both formulas for the pairing two-cocycle agree on sampled pairs");
  }
  {
    Report r = run_suite("alpha", defaults);
    bool ok = all_pass(r, {"torus_closed_form_generic", "torus_fixed_values"});
    line(5, ok,
         "torus values match the closed form, including the fixed values for "
         "both representations");
  }
  {
    Report generic = run_suite("commutator", defaults);
    RunConfig dependent = defaults;
    dependent.d2 = "t2,0";  // a multiple of d1
    Report degen = run_suite("commutator", dependent);
    bool ok = all_pass(generic,
                       {"commutator_fixed_values", "nonsplit_witness_present",
                        "torus_commutator_closed_form"}) &&
              all_pass(degen, {"degenerate_derivations_commutators_vanish",
                               "nonsplit_witness_absent"}) &&
              !has_case(degen, "nonsplit_witness_present");
    line(6, ok,
         "commutator of the standard torus lifts is a nonzero central "
         "element, and collapses when the derivations are dependent");
  }
  {
    Report r = run_suite("extension", defaults);
    bool ok = all_pass(
        r, {"associativity", "identity_laws", "inverse_laws", "centrality"});
    line(7, ok,
         "extension group law is associative with correct identity, inverses, "
         "and central kernel");
  }
  {
    Report r = run_suite("linearization", defaults);
    bool ok = all_pass(r, {"duality_invariance", "membership_p_g",
                           "membership_p_g_times_p_t", "key_identity",
                           "key_identity_fixed_torus", "p_t_additivity"});
    line(8, ok,
         "linearized model: pairing invariance, section membership, the "
         "p_h p_g = p_hg p_t identity with the cocycle parameter, and "
         "one-parameter kernel");
  }
  {
    Report r = run_suite("char2", defaults);
    bool ok = all_pass(r, {"rho_homomorphism", "central_unipotent_commutes",
                           "square_class_invariance", "rho_mutation_caught"});
    line(9, ok,
         "characteristic-two representation is multiplicative, its unipotent "
         "part is central and square-class invariant, and the perturbed map "
         "is rejected");
  }
  {
    const std::string quoted = "\"" + cli + "\"";
    ExecResult text_run = run_command(quoted + " verify all");
    ExecResult a = run_command(quoted + " verify all --output json");
    ExecResult b = run_command(quoted + " verify all --output json");
    bool ok = text_run.exit_code == 0 && a.exit_code == 0 && b.exit_code == 0;
    ok = ok && text_run.elapsed_ms < 60000 && a.elapsed_ms < 60000;
    ok = ok && strip_elapsed(a.out) == strip_elapsed(b.out) && !a.out.empty();
    if (ok) {
      // the payload must be a clean array covering every suite
      nlohmann::json j = nlohmann::json::parse(a.out, nullptr, false);
      ok = !j.is_discarded() && j.is_array() &&
           j.size() == diffext::suite_names().size();
      if (ok)
        for (const auto& rep : j) ok = ok && rep["failed"] == 0;
    }
    line(10, ok,
         "full verification run exits cleanly in under a minute with "
         "byte-identical reports across repeat runs");
  }

  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria satisfied\n";
  return 0;
}
