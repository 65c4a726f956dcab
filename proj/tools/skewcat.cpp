#include "CLI11.hpp"
#include "skewcat/cli/commands.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  using namespace skewcat;
  CLI::App app{"Exact verification of crossed group categories"};
  app.require_subcommand(1);

  std::string input, output;
  cli::CommandOptions opt;
  std::string zeta;
  for (const auto& name : cli::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", input, "instance JSON")->required();
    sub->add_option("--output", output, "report path (default stdout)");
    sub->add_option("--zeta", zeta, "primitive root of unity override");
    sub->add_option("--search-budget", opt.search_budget, "iso and density search budget");
    sub->add_option("--seed", opt.seed, "seed for sampled objects");
    sub->add_option("--samples", opt.samples, "generated El objects per section");
    sub->add_flag("--timings", opt.timings, "include wall-clock timings");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  if (!zeta.empty()) opt.zeta = zeta;

  cli::CommandResult res;
  try {
    res = cli::run_command(cmd, read_json_file(input), opt);
  } catch (const std::exception& e) {
    res = cli::error_result(cmd, e.what(), 2);
  }
  const std::string text = res.report.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << output << "\n";
      return 2;
    }
    f << text;
  }
  if (res.exit_code == 2 && res.report.contains("error")) std::cerr << res.report["error"].get<std::string>() << "\n";
  return res.exit_code;
}
