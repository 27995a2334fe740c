#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "jungdesing/field.hpp"

namespace jd::cli {

enum Exit { kOk = 0, kInputError = 1, kVerifyError = 2 };

// Runs one command line (without the program name).  Reports go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json tower_json(const Tower& t);

}  // namespace jd::cli
