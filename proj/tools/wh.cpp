#include <iostream>
#include <optional>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "wh/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"wh: verification engine for weak Hopf algebras of groupoid type"};
  app.set_version_flag("--version", std::string(wh::engine_version()));
  app.require_subcommand(1);

  std::string file, claim, name;
  std::optional<std::string> json_out, out_path;

  auto* validate = app.add_subcommand("validate", "check the groupoid, B, KG, KG* and the action");
  validate->add_option("file", file, "instance JSON, or builtin:<name>")->required();

  auto* verify = app.add_subcommand("verify", "run claim verifiers");
  verify->add_option("file", file, "instance JSON, or builtin:<name>")->required();
  verify->add_option("--claim", claim, "claim id or 'all'")->required();
  verify->add_option("--json", json_out, "write the JSON report here");

  auto* builtin = app.add_subcommand("builtin", "emit a built-in instance");
  builtin->add_option("name", name, "z2-trivial, z3-trivial, i2-swap, ex2.8, ex2.8-gf2")->required();
  builtin->add_option("--out", out_path, "output file (default stdout)");

  auto* hopf = app.add_subcommand("hopf-check", "weak Hopf axioms of KG and KG*, or of an explicit structure");
  hopf->add_option("file", file, "instance or weak_hopf JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : wh::kExitError;
  }

  wh::CommandIO io{std::cout, std::cerr, wh::color_enabled(isatty(STDOUT_FILENO) != 0)};
  if (*validate) return wh::cmd_validate(file, io);
  if (*verify) return wh::cmd_verify(file, claim, json_out, io);
  if (*builtin) return wh::cmd_builtin(name, out_path, io);
  if (*hopf) return wh::cmd_hopf_check(file, io);
  return wh::kExitError;
}
