#ifndef HESSPAVE_CLI_HPP
#define HESSPAVE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hesspave::cli {

struct RunConfig {
  char type_label = 'A';
  int rank = 2;
  std::string element = "regular-nilpotent";  // | nilpotent-levi | semisimple
                                              // | regular | general
  std::string levi;        // comma-separated 1-based indices; "" = empty set
  std::string levi_inner;  // general only; subset of levi
  std::string hessenberg = "borel";  // full | borel | function:... | negroots:...
  std::string output = "table";      // json | csv | table
  bool sweep = false;
  bool verify = false;
  long long max_weyl = 1'000'000;
};

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitVerify = 4;

/// Parse "1,3" into 0-based indices; throws std::invalid_argument.
std::vector<int> parse_levi(const std::string& s, int rank);

/// Runs one configuration, data to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hesspave::cli

#endif
