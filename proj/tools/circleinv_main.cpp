#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

int main(int argc, char** argv) {
  CLI::App app{
      "circleinv: combinatorial presentations of symplectic non-Hamiltonian circle actions on "
      "4-manifolds; validation, invariants, and isomorphism decisions"};
  app.require_subcommand(1);

  cli::Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--search-budget", opt.search_budget,
                 "R/L word-length bound for orbit witness searches")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string file_a, file_b, model_args;

  auto* validate = app.add_subcommand("validate", "check a presentation document");
  validate->add_option("file", file_a, "presentation document (- for stdin)")->required();

  auto* invariants = app.add_subcommand("invariants", "report the full invariant tuple");
  invariants->add_option("file", file_a, "presentation document (- for stdin)")->required();

  auto* compare = app.add_subcommand("compare", "three-valued isomorphism decision");
  compare->add_option("file_a", file_a, "first presentation")->required();
  compare->add_option("file_b", file_b, "second presentation")->required();

  auto* model = app.add_subcommand(
      "model", "build the canonical model presentation from an invariant tuple");
  model->add_option("args", model_args, "JSON invariants (- for stdin)")->required();

  std::string catalog_name;
  std::vector<std::string> catalog_params;
  auto* catalog = app.add_subcommand("catalog", "emit a built-in example presentation");
  catalog->add_option("name", catalog_name, "t2xs2 | t2xt2 | kodaira-thurston | t4-family")
      ->required();
  catalog->add_option("params", catalog_params,
                      "key=value parameters (k, l, A, B, tau as needed)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cli::cmd_validate(file_a, opt, std::cout, std::cerr);
    if (invariants->parsed()) return cli::cmd_invariants(file_a, opt, std::cout, std::cerr);
    if (compare->parsed()) return cli::cmd_compare(file_a, file_b, opt, std::cout, std::cerr);
    if (model->parsed()) return cli::cmd_model(model_args, opt, std::cout, std::cerr);
    if (catalog->parsed()) {
      std::map<std::string, std::string> params;
      for (const auto& kv : catalog_params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
          std::cerr << "catalog parameters must be key=value, got: " << kv << "\n";
          return cli::kParseError;
        }
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      return cli::cmd_catalog(catalog_name, params, opt, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kParseError;
  }
  return 0;
}
