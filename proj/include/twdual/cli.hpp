#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace twdual::cli {

struct Check {
    std::string name;
    bool pass;
};

/// Everything a JSON-emitting command prints.
struct OutputEnvelope {
    std::string command;
    nlohmann::json input_echo = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    std::vector<Check> checks;

    static constexpr const char *schema_version = "1";
};

/// Canonical JSON: sorted keys, compact, newline-terminated.
std::string emit_json(const OutputEnvelope &envelope);

/// Runs one command. Exit codes: 0 success, 1 usage or input error, 2 when a
/// requested check fails.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace twdual::cli
