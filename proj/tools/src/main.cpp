#include <iostream>

#include <CLI11.hpp>

#include "zck/cli.hpp"

int main(int argc, char** argv) {
  using zck::cli::Command;
  zck::cli::RunConfig config;
  config.threads = zck::cli::threads_from_env();

  CLI::App app{"Coulomb branches and local spaces of quivers"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    auto* q = sub->add_option("--quiver", config.quiver_path, "quiver file");
    auto* k = sub->add_option("--kappa", config.kappa, "symmetric matrix, rows split by ';'");
    q->excludes(k);
    sub->add_option("--dim", config.dim, "dimension vector id=n,id=n")->required();
    sub->add_option("--format", config.format, "json | text | m2 | singular");
    sub->add_option("--seed", config.seed, "seed for random points");
  };

  auto* verify = app.add_subcommand("verify", "check the structure-constant identity on all pairs");
  add_common(verify);
  auto* present = app.add_subcommand("present", "list generators and relations of one side");
  add_common(present);
  present->add_option("--side", config.side, "local | coulomb");
  auto* fiber = app.add_subcommand("fiber", "specialize the local relations at a point and compare with Segre");
  add_common(fiber);
  fiber->add_option("--side", config.side, "local | coulomb");
  fiber->add_option("--point", config.point, "id:slot=value,...; a seeded regular point when omitted");
  auto* exp = app.add_subcommand("export", "emit Macaulay2, Singular or JSON input");
  add_common(exp);
  exp->add_option("--side", config.side, "local | coulomb");
  exp->add_option("--base", config.base, "poly | field");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : zck::cli::kParseError;
  }
  if (verify->parsed()) config.command = Command::Verify;
  if (present->parsed()) config.command = Command::Present;
  if (fiber->parsed()) config.command = Command::Fiber;
  if (exp->parsed()) config.command = Command::Export;
  return zck::cli::run(config, std::cout, std::cerr);
}
