#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zjetcli/engine.hpp"

int main(int argc, char** argv) {
  CLI::App app{"zjet: exact calculus on graded formal domains"};
  app.get_formatter()->column_width(30);

  std::string format = "text";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  int cap_override = -1;
  auto* cap_opt = app.add_option("--cap-override", cap_override,
                                 "Replace the cap of every ring declaration");
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for the `check all` command")
      ->capture_default_str();
  std::string input;
  app.add_option("script", input, "Script file (default: standard input)");

  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (input.empty() || input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "error: cannot open '" << input << "'\n";
      return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  zjetcli::Options opt;
  opt.format = format;
  if (cap_opt->count() > 0) opt.cap_override = cap_override;
  opt.seed = seed;

  const zjetcli::RunResult result = zjetcli::run_script(text, opt);
  if (format == "json")
    std::cout << zjetcli::render_json(result.reports);
  else
    std::cout << zjetcli::render_text(result.reports);
  return result.exit_code;
}
