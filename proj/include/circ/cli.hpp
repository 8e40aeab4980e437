#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "circ/zn.hpp"

namespace circ::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_disagreement = 3,
    exit_refusal = 4,
};

struct RunConfig {
    Int oracle_cutoff = 12;
    std::size_t solving_set_cache_limit = 10000;
    unsigned workers = 1;
    std::string output_format = "json";  // json | csv | text
    std::uint64_t seed = 12345;
};

/// key=value lines mirroring RunConfig; '#' starts a comment. Throws
/// std::invalid_argument on unknown keys or bad values.
RunConfig parse_config(const std::string& text, RunConfig base = {});

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circ::cli
