#pragma once

#include <optional>
#include <string>

#include "twb/serialize.hpp"

namespace twb::cli {

enum class Format { Json, Csv };

struct RunOptions {
    std::optional<Format> format;  // overrides the config's "format"
    unsigned jobs = 1;
};

struct RunResult {
    int exit_code = 0;   // 0 ok, 1 a check failed, 2 configuration error
    std::string output;  // the document written to --out or stdout
    std::string diagnostics;
    std::optional<std::string> out_path;  // the config's "output", if any
};

/// Runs one command described by a JSON config. Never throws for bad
/// configs; those yield exit code 2 and a diagnostic naming the key.
RunResult run(const io::json& config, const RunOptions& options);
RunResult run_text(const std::string& config_text, const RunOptions& options);

}  // namespace twb::cli
