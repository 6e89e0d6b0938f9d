// frobcount: pseudo-prime systems, intersection compatibility and Frobenius
// splittings over F_p[x_1..x_n].
//
//   frobcount <command> [--input FILE] [--format text|json] [--n N] [--p P]
//             [--e E] [--max-members K] [--include-zero-ideal BOOL]
//
// Exit status: 0 when every check passes, 1 when a violation or negative
// verdict was found, 2 on input or capability errors.

#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "frobcount/cli/dispatch.hpp"
#include "frobcount/errors.hpp"

namespace {

unsigned worker_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("FROBCOUNT_THREADS");
  if (!env || !*env) return hw;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) {
    std::cerr << "frobcount: ignoring FROBCOUNT_THREADS='" << env << "'\n";
    return hw;
  }
  return std::min<unsigned>(hw, static_cast<unsigned>(v));
}

}  // namespace

int main(int argc, char** argv) {
  using namespace frobcount::cli;

  CLI::App app{"Bounds on intersection compatible systems and Frobenius compatible ideals"};
  std::string command, input_path, format = "text";
  std::size_t n = 0, max_members = 0;
  std::uint64_t p = 0;
  unsigned e = 0;
  bool include_zero = true;

  std::string commands;
  for (const auto& c : command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", command, "one of: " + commands)->required();
  app.add_option("--input", input_path, "input document (INI-like or JSON)");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  auto* n_opt = app.add_option("--n", n, "number of variables for verify-bound");
  auto* p_opt = app.add_option("--p", p, "characteristic for verify-bound");
  auto* e_opt = app.add_option("--e", e, "Frobenius iterate for uniform");
  auto* k_opt = app.add_option("--max-members", max_members, "closure lattice member cap");
  auto* z_opt = app.add_option("--include-zero-ideal", include_zero,
                               "count the zero ideal among compatible ideals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  CommandOptions options;
  if (*n_opt) options.n = n;
  if (*p_opt) options.p = p;
  if (*e_opt) options.e = e;
  if (*k_opt) options.max_members = max_members;
  if (*z_opt) options.include_zero_ideal = include_zero;
  options.threads = worker_cap();

  ReportDocument report;
  std::optional<InputDocument> doc;
  try {
    if (!input_path.empty()) doc = parse_input_file(input_path);
    report = dispatch(command, doc, options);
  } catch (const frobcount::Error& err) {
    report = input_error_report(command, err.what(), options);
  }

  std::cout << (format == "json" ? emit_json(report) : emit_text(report));
  if (!report.error.empty()) std::cerr << "frobcount: " << report.error << "\n";
  return exit_code(report.outcome);
}
