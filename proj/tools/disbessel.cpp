#include "disbessel/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace disbessel;
  CLI::App app{"Discrete Bessel functions on a circular grid"};

  std::string command;
  int j = 0;
  std::string precision = "working";
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 1;
  std::string input;

  app.add_option("command", command, "table | verify | compare | transform | det | plot")
      ->required()
      ->check(CLI::IsMember({"table", "verify", "compare", "transform", "det", "plot"}));
  app.add_option("--j", j, "half-size of the grid, N = 2j+1")->required()->check(CLI::NonNegativeNumber);
  app.add_option("--precision", precision, "working | extended")
      ->check(CLI::IsMember({"working", "extended"}));
  app.add_option("--out", out, "output file (directory for compare)");
  app.add_option("--format", format, "csv | svg")->check(CLI::IsMember({"csv", "svg"}));
  app.add_option("--seed", seed, "seed for sampled identity tuples");
  app.add_option("--input", input, "headerless single-column signal (transform)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  cli::RunConfig config;
  config.command = *cli::parse_command(command);
  config.j = j;
  config.precision = precision == "extended" ? Precision::extended : Precision::working;
  if (!out.empty()) config.output_path = out;
  config.format = format == "svg" ? cli::Format::svg : cli::Format::csv;
  config.seed = seed;
  if (!input.empty()) config.input_path = input;
  return cli::run(config, std::cout);
}
