#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffext/groups.hpp"
#include "diffext/parallel.hpp"
#include "diffext/parse.hpp"
#include "diffext/report.hpp"
#include "diffext/rng.hpp"

namespace diffext {

// Accumulates case results for one suite. Sample inputs are generated
// serially from a per-case stream; property evaluation may run in parallel,
// with the lowest failing index reported, so results do not depend on
// scheduling or on the parallel/serial switch.
class SuiteRun {
 public:
  SuiteRun(std::string suite, const RunConfig& cfg) : suite_(std::move(suite)), cfg_(cfg) {}

  const RunConfig& cfg() const { return cfg_; }
  const std::string& suite() const { return suite_; }

  Rng rng(const std::string& case_name) const {
    return case_rng(cfg_.seed, suite_ + "/" + case_name);
  }

  // Scale a baseline sample count by --samples relative to the default 50.
  int scaled(int base) const {
    long long v = static_cast<long long>(base) * cfg_.samples / 50;
    return static_cast<int>(std::max(1LL, v));
  }

  void check(const std::string& name, const std::function<std::optional<std::string>()>& body) {
    CaseResult r{name, false, ""};
    try {
      std::optional<std::string> w = body();
      r.pass = !w.has_value();
      if (w) r.witness = *w;
    } catch (const std::exception& e) {
      r.witness = std::string("exception: ") + e.what();
    }
    cases_.push_back(std::move(r));
  }

  void sweep(const std::string& name, std::size_t count,
             const std::function<std::optional<std::string>(std::size_t)>& prop) {
    check(name, [&]() -> std::optional<std::string> {
      std::vector<std::optional<std::string>> slots(count);
      par::for_each_index(count, [&](std::size_t i) {
        try {
          slots[i] = prop(i);
        } catch (const std::exception& e) {
          slots[i] = std::string("exception: ") + e.what();
        }
      });
      for (std::size_t i = 0; i < count; ++i)
        if (slots[i]) return "sample " + std::to_string(i) + ": " + *slots[i];
      return std::nullopt;
    });
  }

  Report finish() {
    Report r;
    r.suite = suite_;
    r.config = cfg_;
    r.cases = std::move(cases_);
    r.sort_cases();
    return r;
  }

 private:
  std::string suite_;
  RunConfig cfg_;
  std::vector<CaseResult> cases_;
};

// The rational suites all work over a fixed two-variable field.
inline constexpr int kNumVars = 2;

// The derivation pair and representation a run is configured with.
struct QCtx {
  DerivationQ d1;
  DerivationQ d2;
  const Representation* rep = nullptr;
};

inline QCtx q_context(const RunConfig& cfg) {
  return QCtx{parse_derivation(cfg.d1, kNumVars), parse_derivation(cfg.d2, kNumVars),
              &rep_by_name(cfg.rep)};
}

// Group elements already pushed through the representation, so their size
// matches the coefficient modules built on top of it.
inline std::vector<GroupElement> rep_samples(const Representation& rep, std::uint64_t seed,
                                             int count, int degree_cap) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(count));
  for (const GroupElement& g : sample_sl2(seed, count, degree_cap, kNumVars))
    out.push_back(apply_rep(rep, g));
  return out;
}

void suite_field(SuiteRun& s);
void suite_cohomology(SuiteRun& s);
void suite_cocycle1(SuiteRun& s);
void suite_alpha(SuiteRun& s);
void suite_extension(SuiteRun& s);
void suite_commutator(SuiteRun& s);
void suite_linearization(SuiteRun& s);
void suite_char2(SuiteRun& s);

}  // namespace diffext
