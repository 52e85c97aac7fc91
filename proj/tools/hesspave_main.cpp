#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "hesspave/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Affine paving data for Hessenberg varieties"};

  hesspave::cli::RunConfig cfg;
  std::string type = "A";
  app.add_option("--type", type, "Root system type: A, B, C, D, E, F, G")
      ->required();
  app.add_option("--rank", cfg.rank, "Rank of the root system")->required();
  app.add_option("--element", cfg.element,
                 "Element kind: regular-nilpotent | nilpotent-levi | "
                 "semisimple | regular | general")
      ->required();
  app.add_option("--levi", cfg.levi,
                 "Comma-separated 1-based simple indices of Delta_M "
                 "(Bourbaki numbering); empty = empty set");
  app.add_option("--levi-n", cfg.levi_inner,
                 "Delta_m' for --element general; subset of --levi");
  app.add_option("--hessenberg", cfg.hessenberg,
                 "full | borel | function:h1,h2,... | negroots:-a1,-a2,...");
  app.add_option("--output", cfg.output, "json | csv | table");
  app.add_flag("--sweep-hessenberg", cfg.sweep,
               "Run over every Hessenberg space of this root system");
  app.add_flag("--verify", cfg.verify, "Cross-check each report with the oracle");
  app.add_option("--max-weyl", cfg.max_weyl, "Weyl group enumeration guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : hesspave::cli::kExitParse;
  }

  if (type.size() != 1 || type[0] < 'A' || type[0] > 'G') {
    std::cerr << "error: --type must be a single letter A..G\n";
    return hesspave::cli::kExitParse;
  }
  cfg.type_label = type[0];
  if (app.count("--max-weyl") == 0)
    if (const char* env = std::getenv("HESSPAVE_MAX_WEYL"))
      cfg.max_weyl = std::atoll(env);

  return hesspave::cli::run(cfg, std::cout, std::cerr);
}
