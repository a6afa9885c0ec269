#include "diffext/cli.hpp"

#include <iostream>

#include <CLI11.hpp>

#include "diffext/errors.hpp"
#include "diffext/report.hpp"
#include "diffext/suites.hpp"

namespace diffext {

namespace {

std::string suite_list() {
  std::string out;
  for (const auto& n : suite_names()) out += n + ", ";
  return out + "all";
}

int emit(const std::vector<Report>& reports, const std::string& output) {
  bool all_pass = true;
  for (const Report& r : reports) all_pass = all_pass && r.failed() == 0;
  if (output == "json") {
    if (reports.size() == 1) {
      std::cout << report_json(reports[0]).dump(2) << "\n";
    } else {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const Report& r : reports) arr.push_back(report_json(r));
      std::cout << arr.dump(2) << "\n";
    }
  } else {
    int passed = 0, total = 0;
    for (const Report& r : reports) {
      std::cout << report_text(r);
      passed += r.passed();
      total += static_cast<int>(r.cases.size());
    }
    if (reports.size() > 1)
      std::cout << "total: " << passed << "/" << total << " cases passed\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact verification of central extensions of differential matrix groups"};
  app.name("diffext");
  app.require_subcommand(1);

  std::string suite;
  RunConfig cfg;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "one of: " + suite_list())->required();
  verify->add_option("--samples", cfg.samples, "baseline sample count per case (default 50)");
  verify->add_option("--seed", cfg.seed, "master seed (default 0)");
  verify->add_option("--degree-cap", cfg.degree_cap, "degree cap for random inputs (default 3)");
  verify->add_option("--rep", cfg.rep, "representation: natural or adjoint");
  verify->add_option("--d1", cfg.d1, "first derivation: p<k> or comma-separated coefficients");
  verify->add_option("--d2", cfg.d2, "second derivation, same grammar");
  verify->add_option("--output", cfg.output, "report format: text or json");
  verify->add_flag("--serial", cfg.serial, "disable the parallel evaluation path");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("diffext");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help lands here
      (void)app.exit(e);
      return 0;
    }
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  if (!is_suite_name(suite)) {
    std::cerr << "unknown suite: " << suite << "\nvalid suites: " << suite_list() << "\n";
    return 2;
  }
  try {
    validate_config(cfg);
  } catch (const std::exception& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  }

  try {
    std::vector<Report> reports;
    if (suite == "all") {
      reports = run_all(cfg);
    } else {
      reports.push_back(run_suite(suite, cfg));
    }
    return emit(reports, cfg.output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace diffext
