#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace icds::cli {

enum ExitCode : int {
  kOk = 0,
  kSemanticFailure = 1,  // inequivalent structures, fuzz failures
  kInputError = 2,       // parse, validation, usage
  kNotTotal = 3,
};

struct FuzzOptions {
  std::size_t n_props = 2;
  std::size_t n_worlds = 4;
  std::uint64_t iters = 100;
  std::uint64_t seed = 0;
};

struct FuzzSummary {
  std::uint64_t passed = 0;
  std::uint64_t total = 0;
  std::vector<std::string> failures;  // one line per failing check
};

// Two checks per seed in [seed, seed + iters): a random IC structure through
// ic_to_ds (total and equivalent) plus its round trip, and a random total DS
// structure through ds_to_ic plus its round trip.
FuzzSummary run_fuzz(const FuzzOptions& opts);

// Entry point for the icds tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace icds::cli
