#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "factlab/census.hpp"
#include "factlab/theorem_params.hpp"
#include "record_writer.hpp"

namespace factlab::cli {

/// Bad flags or values; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;

  // Output and execution.
  std::string format = "csv";
  std::string output;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool sort = false;
  std::uint64_t budget = kDefaultWorkBudget;
  bool wall_time = true;

  // Primes: either --p or --range lo:hi.
  std::optional<std::uint64_t> p;
  std::string range;

  // Polynomial selection.
  std::vector<int> js{3, 5, 7};
  std::vector<int> ks;
  std::string pairs = "all";

  // Progression: explicit, --interval lo:hi, or --random-progressions n.
  std::optional<std::uint64_t> start, step, length;
  std::string interval;
  std::uint64_t random_progressions = 0;

  // Windows and sizes.
  std::optional<std::uint64_t> L, N, M;

  // Exponential sums.
  std::optional<std::uint64_t> b1, b2;
  std::uint64_t samples = 10;

  // Theorem calculators.
  int theorem = 1;
  RegimeConstants constants;

  // Representations.
  std::vector<std::string> targets;
  std::optional<int> k_count;
  std::optional<std::uint64_t> B;
  std::string method = "search";

  // Census checkpoints.
  std::string checkpoint_file;
  std::uint64_t checkpoint_every = 0;
  bool resume = false;

  Format output_format() const {
    return format == "json" ? Format::kJson : Format::kCsv;
  }
};

}  // namespace factlab::cli
