#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace zck::cli {

enum class Command { Verify, Present, Fiber, Export };

struct RunConfig {
  Command command = Command::Verify;
  std::optional<std::string> quiver_path;
  std::optional<std::string> kappa;  // "1,-2;-2,1", vertices named 1..n
  std::string dim;                   // "v=2,w=1"
  std::string side = "local";        // local | coulomb
  std::optional<std::string> format;  // json | text | m2 | singular; per-command default
  std::string base = "poly";          // poly | field, CAS export only
  std::uint64_t seed = 0;
  std::optional<std::string> point;  // "v:1=0,v:2=1/2"
  unsigned threads = 1;
};

enum ExitCode : int { kOk = 0, kParseError = 1, kIdentityFailure = 2, kNotQuiverType = 3 };

/// Report on `out`, diagnostics on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Worker count: ZCK_THREADS when set and positive, else hardware concurrency.
unsigned threads_from_env();

}  // namespace zck::cli
