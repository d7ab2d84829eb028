#pragma once

// Cross-pipeline identities run by `lcl verify` and reported as data.

#include <json.hpp>
#include <string>
#include <vector>

namespace lcl {

std::vector<std::string> verify_scopes();
// {"scope", "warnings": [...], "results": [{"name", "pass", "detail"}], "passed", "failed"}
nlohmann::json verify_suite(const std::string& scope);

} // namespace lcl
