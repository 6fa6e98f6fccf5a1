// Command-line front end: one JSON job in, one JSON report out.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "iwasawa/cli.hpp"

namespace {

bool read_all(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic and Iwasawa-algebra computations on JSON jobs"};
  app.require_subcommand(1, 1);

  std::string input = "-";
  std::string output = "-";
  std::optional<int> precision;
  std::optional<int> tdegree;
  std::optional<std::uint64_t> seed;

  for (const auto& info : iwasawa::cli::commands()) {
    std::string help = "operations:";
    for (const auto& op : info.operations) help += " " + op;
    auto* sub = app.add_subcommand(info.name, help);
    sub->add_option("-i,--input", input, "input JSON file ('-' for stdin)");
    sub->add_option("-o,--output", output, "report file ('-' for stdout)");
    sub->add_option("--precision", precision, "override the p-adic precision N")->check(CLI::PositiveNumber);
    sub->add_option("--tdegree", tdegree, "override the T-truncation degree D")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", seed, "seed for randomized checks");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : iwasawa::cli::kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::string text;
  if (!read_all(input, text)) {
    std::cerr << "cannot read " << input << "\n";
    return iwasawa::cli::kInputError;
  }

  const iwasawa::cli::Options options{precision, tdegree, seed};
  const auto result = iwasawa::cli::run(command, text, options, input == "-" ? "stdin" : input);

  if (output == "-") {
    std::cout << result.report;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << output << "\n";
      return iwasawa::cli::kInputError;
    }
    out << result.report;
  }
  if (result.exit_code == iwasawa::cli::kInputError || result.exit_code == iwasawa::cli::kPrecisionAmbiguous) {
    std::cerr << result.report;
  }
  return result.exit_code;
}
