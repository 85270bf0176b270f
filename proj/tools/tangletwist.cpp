// tangletwist: link-diagram class checks, invariants, and crossing-to-tangle
// twisting from the command line.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tangletwist/cli.hpp"

namespace {

bool parse_range(const std::string& text, int& lo, int& hi) {
  auto dots = text.find("..");
  if (dots == std::string::npos) return false;
  try {
    lo = std::stoi(text.substr(0, dots));
    hi = std::stoi(text.substr(dots + 2));
  } catch (...) {
    return false;
  }
  return lo <= hi;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tangletwist: twisting link diagrams by blocks of rational tangles"};
  app.require_subcommand(1);
  tangletwist::RunConfig cfg;
  std::string range_text;

  auto add_io = [&](CLI::App* sub, bool many_inputs) {
    if (many_inputs)
      sub->add_option("input", cfg.inputs, "PD file path or catalog key")->required();
    else
      sub->add_option("input", cfg.inputs, "PD file path or catalog key")->expected(1)->required();
    sub->add_option("--emit", cfg.emit, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* check = app.add_subcommand("check", "class checks: adequate/homogeneous/alternative/positive");
  add_io(check, true);

  CLI::App* inv = app.add_subcommand("invariants", "determinant, Kauffman bracket, extreme powers");
  add_io(inv, true);

  CLI::App* twist = app.add_subcommand("twist", "replace a crossing by a block of rational tangles");
  add_io(twist, false);
  twist->add_option("--crossing", cfg.crossing, "target crossing id (0-based)");
  twist->add_option("--block", cfg.block_text, "block grammar, e.g. \"S([2],[1,1])\"")->required();
  twist->add_flag("--oriented", cfg.oriented, "require an extending orientation");

  CLI::App* family = app.add_subcommand("family", "instantiate a pattern over a range and twist");
  add_io(family, false);
  family->add_option("--crossing", cfg.crossing, "target crossing id (0-based)");
  family->add_option("--pattern", cfg.pattern, "block grammar with one '?' hole")->required();
  family->add_option("--range", range_text, "inclusive range a..b")->required();
  family->add_flag("--oriented", cfg.oriented, "require an extending orientation");

  CLI::App* verify = app.add_subcommand("verify", "randomized oracle suites");
  verify->add_option("suite", cfg.verify_suite, "det-lemma | bracket-prop")->required();
  verify->add_option("--trials", cfg.trials, "number of trials")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "master seed");
  verify->add_option("--max-crossings", cfg.max_crossings, "block size limit");
  verify->add_option("--emit", cfg.emit, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* catalog = app.add_subcommand("catalog", "list shipped diagrams");
  catalog->add_option("--emit", cfg.emit, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) cfg.command = "check";
  if (inv->parsed()) cfg.command = "invariants";
  if (twist->parsed()) cfg.command = "twist";
  if (family->parsed()) {
    cfg.command = "family";
    cfg.emit = "json";  // family emission is JSON lines only
    if (!parse_range(range_text, cfg.range_lo, cfg.range_hi)) {
      std::cerr << "error: --range expects a..b with a <= b\n";
      return tangletwist::exit_input;
    }
  }
  if (verify->parsed()) cfg.command = "verify";
  if (catalog->parsed()) cfg.command = "catalog";

  return tangletwist::run(cfg, std::cout, std::cerr);
}
