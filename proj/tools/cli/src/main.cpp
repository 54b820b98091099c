#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "valueset_cli/app.hpp"

using namespace valueset;
using namespace valueset::cli;

int main(int argc, char** argv) {
  CLI::App app{"Value-set cardinality of polynomials over finite fields"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.workers = default_workers();
  std::string format = "json", method = "direct", nk = "histogram", output;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Seed for randomized choices (VALUESET_SEED overrides)");
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", output, "Write the report here instead of stdout");
  };
  auto counting = [&](CLI::App* sub) {
    sub->add_option("file", cfg.inputs, "Polynomial file ('-' for stdin)")->required();
    sub->add_option("--method", method)->check(CLI::IsMember({"direct", "codomain", "symmetric"}));
    sub->add_option("--nk", nk)->check(CLI::IsMember({"histogram", "brute", "hypersurface"}));
    common(sub);
  };

  counting(app.add_subcommand("count", "Compute |V_f|"));
  counting(app.add_subcommand("permtest", "Test whether f permutes F_q"));

  auto* chr = app.add_subcommand("char", "Quadratic-character pattern coverage");
  chr->add_option("mode", cfg.mode)->required()->check(CLI::IsMember({"coverage", "onto"}));
  chr->add_option("--p", cfg.p)->required();
  chr->add_option("--t", cfg.t)->required();
  common(chr);

  auto* red = app.add_subcommand("reduce", "Run a hardness reduction against its oracle");
  red->add_option("kind", cfg.mode)->required()->check(CLI::IsMember({"ssp-decide", "ssp-count", "sat3"}));
  red->add_option("file", cfg.inputs)->required();
  red->add_option("--prime", cfg.prime)->check(CLI::IsMember({"smallest", "random"}));
  common(red);

  auto* ver = app.add_subcommand("verify", "Run property suites");
  ver->add_option("suite", cfg.mode)->required()->check(
      CLI::IsMember({"identities", "methods", "reductions", "all"}));
  common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code::kInput;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (const char* env = std::getenv("VALUESET_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: VALUESET_SEED is not an unsigned integer\n";
      return exit_code::kInput;
    }
  }
  cfg.format = format == "text" ? Format::Text : Format::Json;
  cfg.method = method == "codomain" ? CountMethod::Codomain
               : method == "symmetric" ? CountMethod::Symmetric
                                       : CountMethod::Direct;
  cfg.nk_source = nk == "brute" ? NkSource::Brute : nk == "hypersurface" ? NkSource::Hypersurface : NkSource::Histogram;
  if (!output.empty()) cfg.output = output;
  return run(cfg, std::cout, std::cerr);
}
