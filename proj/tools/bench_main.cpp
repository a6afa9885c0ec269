#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "diffext/parallel.hpp"
#include "diffext/report.hpp"
#include "diffext/suites.hpp"

namespace {

nlohmann::ordered_json stripped(const diffext::Report& r) {
  nlohmann::ordered_json j = diffext::report_json(r);
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

// Times every suite on the single-thread path and on the parallel path, and
// fails if the two produce different reports.
int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel timing for the verification suites"};
  diffext::RunConfig cfg;
  cfg.samples = 100;
  app.add_option("--samples", cfg.samples, "baseline sample count per case (default 100)");
  app.add_option("--seed", cfg.seed, "master seed (default 0)");
  app.add_option("--degree-cap", cfg.degree_cap, "degree cap for random inputs (default 3)");
  app.add_option("--rep", cfg.rep, "representation: natural or adjoint");
  CLI11_PARSE(app, argc, argv);

  std::cout << "workers available: " << diffext::par::worker_count() << "\n";
  bool ok = true;
  std::int64_t total_serial = 0, total_parallel = 0;
  for (const std::string& name : diffext::suite_names()) {
    diffext::RunConfig serial_cfg = cfg;
    serial_cfg.serial = true;
    diffext::Report rs = diffext::run_suite(name, serial_cfg);

    diffext::RunConfig par_cfg = cfg;
    par_cfg.serial = false;
    diffext::Report rp = diffext::run_suite(name, par_cfg);

    bool same = stripped(rs) == stripped(rp);
    ok = ok && same && rs.failed() == 0;
    total_serial += rs.elapsed_ms;
    total_parallel += rp.elapsed_ms;
    double speedup = rp.elapsed_ms > 0 ? static_cast<double>(rs.elapsed_ms) /
                                             static_cast<double>(rp.elapsed_ms)
                                       : 0.0;
    std::cout << name << ": serial " << rs.elapsed_ms << " ms, parallel " << rp.elapsed_ms
              << " ms (x" << speedup << ")" << (same ? "" : "  REPORTS DIFFER") << "\n";
  }
  std::cout << "total: serial " << total_serial << " ms, parallel " << total_parallel << " ms\n";
  return ok ? 0 : 1;
}
