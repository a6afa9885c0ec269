#pragma once

#include <string>
#include <vector>

#include "diffext/report.hpp"

namespace diffext {

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Throws ParseError / Error on malformed derivation specs, representation
// names, or output selectors. The CLI calls this before running anything.
void validate_config(const RunConfig& cfg);

Report run_suite(const std::string& name, const RunConfig& cfg);
std::vector<Report> run_all(const RunConfig& cfg);

}  // namespace diffext
