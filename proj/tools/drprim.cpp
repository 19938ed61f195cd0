#include "drprim/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Primitive ideals of Deaconu-Renault groupoid algebras of finite systems"};
  app.require_subcommand(1);
  app.fallthrough();

  drprim::CliOptions options;
  std::string output;
  app.add_option("--tolerance", options.tolerance, "Residual tolerance for operator identities")->capture_default_str();
  app.add_option("--trials", options.trials, "Random trials per battery")->capture_default_str();
  app.add_option("--seed", options.seed, "Seed for the battery")->capture_default_str();
  app.add_option("--max-invariant-subsets", options.max_invariant_subsets,
                 "Enumerate invariant subsets up to this many points")
      ->capture_default_str();
  app.add_option("--sigma-bound-retries", options.sigma_bound_retries, "Doublings of the sigma_min search bound")
      ->capture_default_str();
  app.add_option("--output", output, "Write the report to this file instead of stdout");

  std::string file, point, angle, first, second;
  std::vector<std::string> reps;

  auto* validate = app.add_subcommand("validate", "Check a system file");
  validate->add_option("system", file)->required();
  auto* analyze = app.add_subcommand("analyze", "Full catalogue report");
  analyze->add_option("system", file)->required();
  auto* classify = app.add_subcommand("classify", "Label of pi_{x,theta}");
  classify->add_option("system", file)->required();
  classify->add_option("point", point)->required();
  classify->add_option("angle", angle, "Rational angle, e.g. 1/6 or 1/4,1/3")->required();
  auto* equiv = app.add_subcommand("equiv", "Compare two labels given as point:angle");
  equiv->add_option("system", file)->required();
  equiv->add_option("first", first)->required();
  equiv->add_option("second", second)->required();
  auto* witness = app.add_subcommand("witness", "Function killed by the second representation only");
  witness->add_option("system", file)->required();
  witness->add_option("first", first)->required();
  witness->add_option("second", second)->required();
  auto* battery = app.add_subcommand("battery", "Run the operator identity battery");
  battery->add_option("system", file)->required();
  auto* graph = app.add_subcommand("graph", "Catalogue of a graph path space");
  graph->add_option("graph", file)->required();
  graph->add_option("representatives", reps, "Paths as prefix:cycle, e.g. g,f:e");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ofstream file_out;
  if (!output.empty()) {
    file_out.open(output);
    if (!file_out) {
      std::cerr << "cannot write '" << output << "'\n";
      return 2;
    }
  }
  std::ostream& out = output.empty() ? std::cout : file_out;
  auto& err = std::cerr;

  if (*validate) return drprim::cmd_validate(file, options, out, err);
  if (*analyze) return drprim::cmd_analyze(file, options, out, err);
  if (*classify) return drprim::cmd_classify(file, point, angle, options, out, err);
  if (*equiv) return drprim::cmd_equiv(file, first, second, options, out, err);
  if (*witness) return drprim::cmd_witness(file, first, second, options, out, err);
  if (*battery) return drprim::cmd_battery(file, options, out, err);
  return drprim::cmd_graph(file, reps, out, err);
}
