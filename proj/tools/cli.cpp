#include "cli.hpp"

#include <CLI11.hpp>

#include "coreideal/report.hpp"

namespace coreideal::cli {

int exit_code_for(std::exception_ptr error) {
  try {
    std::rethrow_exception(error);
  } catch (const TheoremViolation&) {
    return 2;
  } catch (const GenericityFailure&) {
    return 3;
  } catch (...) {
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact reductions, K_n, L_n and cores of ideals in quotients of GF(p^e)[x]"};
  app.name("coreideal");
  app.set_version_flag("--version", "coreideal 0.1.0");

  std::string command;
  std::string spec_path;
  CommandOptions opts;
  std::optional<std::uint32_t> field_ext;
  bool as_json = false;

  app.add_option("command", command, "core | kn | ln | adjoint | rednum | s | check-chain | "
                                     "check-conjecture | check-stabilization")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("spec", spec_path, "ring and ideal spec file")->required();
  app.add_option("--ideal", opts.ideal, "name of the ideal I in the spec file")
      ->capture_default_str();
  app.add_option("--n", opts.n, "power n (default: s)");
  app.add_option("--seed", opts.seed, "master seed");
  app.add_option("--repeats", opts.repeats, "independent repetitions per general quantity");
  app.add_option("--window", opts.window, "stability window for the core");
  app.add_option("--t-max", opts.t_max, "bound on general elements summed for K_n");
  app.add_option("--n-max", opts.n_max, "bound for reduction-number searches");
  app.add_option("--J", opts.j, "generators of a reduction J, comma separated");
  app.add_option("--field-ext", field_ext, "override the extension degree e");
  app.add_option("--method", opts.method, "kn: general | binomial | bruteforce")
      ->capture_default_str();
  app.add_option("--sandwich", opts.sandwich,
                 "core: number of reductions checked against the colon bounds (0 = all)")
      ->capture_default_str();
  app.add_flag("--json", as_json, "emit the report as JSON");

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);  // CLI11 wants reversed
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\nRun with --help for more information.\n";
    return 1;
  }

  try {
    const SpecFile spec = load_spec(spec_path, field_ext);
    const CommandReport report = run_command(command, spec, opts);
    if (as_json) {
      out << to_json(report).dump(2) << "\n";
    } else {
      out << format_text(report);
    }
    return 0;
  } catch (...) {
    const auto error = std::current_exception();
    const int code = exit_code_for(error);
    const char* prefix = code == 2 ? "theorem violation: " : code == 3 ? "genericity failure: " : "error: ";
    try {
      std::rethrow_exception(error);
    } catch (const std::exception& e) {
      err << prefix << e.what() << "\n";
    } catch (...) {
      err << prefix << "unknown\n";
    }
    return code;
  }
}

}  // namespace coreideal::cli
