#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "numbrix/enumerate.hpp"

namespace numbrix {

struct SuiteInfo {
    std::string name;
    std::string summary;
    int default_max;       // largest board parameter checked by default
    bool long_running;     // needs --allow-long on the command line
};

const std::vector<SuiteInfo>& suite_catalog();
const SuiteInfo* find_suite(std::string_view name);

// Runs a named verification suite, writing one PASS/FAIL line per check to
// `out`. Returns true when every check passed. Throws DomainError for an
// unknown suite name.
bool run_suite(std::string_view name, std::optional<int> max, const SearchOptions& options, std::ostream& out);

}  // namespace numbrix
