#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "freedom/cli.hpp"

int main(int argc, char** argv) {
  using freedom::cli::ExitCode;
  using freedom::cli::Format;

  freedom::cli::RunConfig config;
  CLI::App app{"Freedom (nonspecificity) measures for interval probability assignments"};
  app.set_help_flag("-h,--help", "Print this help message and exit");

  std::string format = "json";
  std::size_t index = 0;
  double q = 0.0, eps = 0.0;

  app.add_option("command", config.command,
                 "validate | measure | verify | subsets | sensitivity | crosstab | region")
      ->required();
  app.add_option("input", config.input_path, "Assignment or cross-table JSON file")->required();
  app.add_option("--samples", config.samples, "Monte-Carlo sample count")->capture_default_str();
  app.add_option("--seed", config.seed, "Monte-Carlo seed")->capture_default_str();
  auto* q_opt = app.add_option("--q", q, "Remaining mass for the conditional measure, in (0,1]");
  auto* index_opt = app.add_option("--index", index, "Option to perturb (one-based)");
  app.add_option("--delta", config.delta, "Perturbation size for sensitivity")
      ->capture_default_str();
  auto* eps_opt = app.add_option("--eps", eps, "Imposition size for sensitivity, in (0,1)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_flag("--force-cap", config.force_cap,
               "Allow closed-form evaluation beyond 24 options");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::usage);
  }

  config.format = format == "csv" ? Format::csv : Format::json;
  if (*q_opt) config.q = q;
  if (*index_opt) config.index = index;
  if (*eps_opt) config.eps = eps;

  return static_cast<int>(freedom::cli::run(config, std::cout, std::cerr));
}
