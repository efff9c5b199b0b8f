#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  using namespace spw::cli;
  RunConfig cfg;
  if (const char* dir = std::getenv("SPW_OUTPUT_DIR")) cfg.output_path = dir;

  CLI::App app{"Weil representation and rank experiments over small finite fields"};
  app.require_subcommand(1, 1);
  app.option_defaults()->always_capture_default();
  app.add_option("--q", cfg.q, "odd prime power")->check(CLI::Range(3, 1024));
  app.add_option("--n", cfg.n, "half the symplectic dimension")->check(CLI::Range(1, 6));
  app.add_option("--k", cfg.k, "dimension of the orthogonal space (eta)");
  app.add_option("--beta-type", cfg.beta_type, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  app.add_option("--a", cfg.central_char_a, "central character parameter in 1..q-1");
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--threads", cfg.thread_count, "accepted and recorded; runs single threaded");
  app.add_option("--limit", cfg.enumeration_limit, "largest group to enumerate");
  app.add_option("--samples", cfg.samples, "sampled pairs for the weil checks");
  app.add_option("--format", cfg.output_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", cfg.output_path, "output directory (default $SPW_OUTPUT_DIR, else stdout)");

  for (const char* name : {"forms", "heisenberg", "weil", "rank-table", "eta", "ore", "all"}) app.add_subcommand(name)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  return run(app.get_subcommands().front()->get_name(), cfg);
}
