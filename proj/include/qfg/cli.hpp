#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qfg::cli {

inline constexpr const char* kVersion = "0.3.0";

enum ExitCode { Computed = 0, InputError = 2, Inconclusive = 3 };

/// args excludes the program name. Writes the report to `out`, diagnostics
/// to `err`, and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Leaf rows (path, scalar JSON) of a report; the text rendering prints
/// exactly these rows.
std::vector<std::pair<std::string, std::string>> flatten(const nlohmann::json& j);
std::string renderText(const nlohmann::json& report);
std::vector<std::pair<std::string, std::string>> parseText(const std::string& text);

}  // namespace qfg::cli
