#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace gammacalc;

int main(int argc, char** argv) {
  CLI::App app{"gammacalc: f-, h- and gamma-polynomials of flag simplicial complexes"};
  app.require_subcommand(0, 1);

  cli::Options opt;
  std::optional<std::size_t> max_faces;
  bool seed = false;
  app.add_option("--tol", opt.tol, "Numeric tolerance for root comparisons")->capture_default_str();
  app.add_flag("--ghs", opt.ghs, "Verify generalized homology sphere property (slow)");
  app.add_option("--max-faces", max_faces, "Refuse complexes with more faces than this");
  app.add_flag("--seed-complexes", seed, "Print the test corpus as JSON");

  std::string input, out_path;
  long long m = 0, h1 = 0, h2 = 0;
  std::size_t terms = 10;

  auto* inv = app.add_subcommand("invariants", "f, h, gamma and structural checks of a complex");
  inv->add_option("input", input, "Builder JSON, complex JSON, or a file containing either")->required();

  auto* roots = app.add_subcommand("roots", "Real-root analysis of a polynomial or of h of a complex");
  roots->add_option("input", input, "Coefficient array (low degree first), builder JSON, or file")->required();

  auto* paper = app.add_subcommand("paper", "Build and verify the flag 5-sphere with non-real h-roots");
  paper->add_option("m", m, "Number of extra subdivisions")->required();

  auto* realize = app.add_subcommand("realize", "Flag 3-sphere with h = 1 + h1 t + h2 t^2 + h1 t^3 + t^4");
  realize->add_option("h1", h1)->required();
  realize->add_option("h2", h2)->required();
  realize->add_option("--out", out_path, "Write the JSON to this file");

  auto* region = app.add_subcommand("region", "Region classification grid for degree-4 h-polynomials (CSV)");
  region->add_option("h1_max", h1)->required();
  region->add_option("h2_max", h2)->required();
  region->add_option("--out", out_path, "Write the CSV to this file");

  auto* growth = app.add_subcommand("growth", "Growth series of the right-angled Coxeter group of a flag complex");
  growth->add_option("input", input)->required();
  growth->add_option("-N,--terms", terms, "Highest power in the expansion")->capture_default_str();

  auto* cd = app.add_subcommand("cdindex", "ab-index and cd-index of a poset, or of the face poset of a complex");
  cd->add_option("input", input, "Poset JSON, builder JSON, or file")->required();

  auto* seed_cmd = app.add_subcommand("seed-complexes", "Print the test corpus as JSON");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  const auto result = cli::run_guarded([&]() -> cli::Outcome {
    opt.max_faces = max_faces ? *max_faces : cli::max_faces_from_env(opt.max_faces);
    if (seed || *seed_cmd) return cli::cmd_seed_complexes();
    if (*inv) return cli::cmd_invariants(input, opt);
    if (*roots) return cli::cmd_roots(input, opt);
    if (*paper) return cli::cmd_paper(m, opt);
    if (*realize) return cli::cmd_realize(h1, h2, opt);
    if (*region) return cli::cmd_region(h1, h2);
    if (*growth) return cli::cmd_growth(input, terms, opt);
    if (*cd) return cli::cmd_cdindex(input, opt);
    return {cli::kInputError, "", app.help()};
  });

  if (!out_path.empty() && !result.out.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return cli::kInputError;
    }
    file << result.out;
  } else {
    std::cout << result.out;
  }
  std::cerr << result.err;
  return result.code;
}
