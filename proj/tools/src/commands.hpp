#pragma once

#include <string>
#include <vector>

#include "record_writer.hpp"
#include "run_config.hpp"

namespace factlab::cli {

/// Column list for a subcommand (frozen; echoed in --help).
const std::vector<std::string>& schema(const std::string& subcommand,
                                       int theorem = 1);

/// Runs a subcommand, writing its rows in canonical order (the threaded
/// Erdős scan streams in completion order unless --sort is given).
/// Returns whether every assertion-class check held.
bool run_command(const RunConfig& cfg, RecordWriter& writer);

}  // namespace factlab::cli
