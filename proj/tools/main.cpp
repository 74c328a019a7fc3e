// qlab: verify the gap-free / smallest-part identity chain coefficient by coefficient.

#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "qlab/cli.hpp"

int main(int argc, char** argv) {
  using namespace qlab::cli;

  CLI::App app{"Exact q-series checks for gap-free partitions and smallest parts of distinct partitions"};
  app.require_subcommand(0, 1);

  RunConfig config;
  config.jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "markdown";
  std::size_t table_max = 0;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "csv, json or markdown")
        ->check(CLI::IsMember({"csv", "json", "markdown"}));
  };

  auto* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("--checks", config.checks, "comma-separated check names, or all")
      ->delimiter(',');
  verify->add_option("--order", config.max_order, "univariate truncation order");
  verify->add_option("--zdeg", config.zdeg, "z-degree bound for bivariate checks");
  verify->add_option("--qorder", config.qorder, "q truncation order for bivariate checks");
  verify->add_option("--cap", config.limits.all_parts, "enumeration cap for all partitions");
  verify->add_option("--distinct-cap", config.limits.distinct_parts,
                     "enumeration cap for distinct partitions");
  verify->add_option("--m-max", config.finite_m_max, "largest m for the finite identities");
  verify->add_option("--jobs", config.jobs, "worker threads");
  add_format(verify);

  auto* table = app.add_subcommand("table", "print a(n) from the series next to both oracles");
  table->add_option("--max", table_max, "largest n")->required();
  table->add_option("--cap", config.limits.all_parts, "enumeration cap for all partitions");
  table->add_option("--distinct-cap", config.limits.distinct_parts,
                    "enumeration cap for distinct partitions");
  add_format(table);

  std::string bfile;
  auto* oeis = app.add_subcommand("oeis", "compare the series with a local OEIS b-file");
  oeis->add_option("--bfile", bfile, "path to the b-file")->required();
  oeis->add_option("--order", config.max_order, "truncation order of the series");
  add_format(oeis);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  config.format = *parse_format(format);
  if (*verify) return cmd_verify(config, std::cout, std::cerr);
  if (*table) return cmd_table(config, table_max, std::cout, std::cerr);
  if (*oeis) {
    config.bfile_path = bfile;
    return cmd_oeis(config, std::cout, std::cerr);
  }
  print_catalog(std::cout);
  return kExitOk;
}
