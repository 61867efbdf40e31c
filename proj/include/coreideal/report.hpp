#ifndef COREIDEAL_REPORT_HPP
#define COREIDEAL_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coreideal/core_engine.hpp"
#include "coreideal/spec_file.hpp"

namespace coreideal {

/// Command names accepted by run_command.
const std::vector<std::string>& command_names();

/// Flags shared by every command. Unset values fall back to the spec file's
/// options, then to the library defaults.
struct CommandOptions {
  std::string ideal = "I";
  std::optional<unsigned> n;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> repeats;
  std::optional<unsigned> window;
  std::optional<unsigned> t_max;
  std::optional<unsigned> n_max;
  std::optional<std::string> j;   // generators of a user-supplied J
  std::string method = "general"; // kn only: general | binomial | bruteforce
  unsigned sandwich = 1;          // core only: reductions sandwich-checked (0 = all)
};

struct CommandReport {
  std::string command;
  std::string ring;
  std::string ideal;
  std::uint64_t seed = 0;
  std::uint64_t field_size = 0;
  /// Result ideals as reduced-basis strings, in output order.
  std::vector<std::pair<std::string, std::vector<std::string>>> results;
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
  GenericityLog log;
  double timing_ms = 0;
};

/// The general-element knobs after merging flags over spec options.
GeneralElementConfig resolve_config(const SpecFile& spec, const CommandOptions& opts);

/// Runs one command. Errors propagate (ParseError, AlgebraError,
/// TheoremViolation, GenericityFailure).
CommandReport run_command(const std::string& command, const SpecFile& spec,
                          const CommandOptions& opts);

/// Human-readable form: deterministic for a fixed spec, flags and seed.
std::string format_text(const CommandReport& report);

/// Structured form with keys ring, ideal, command, seed, field_size, results,
/// verdicts, genericity_log, timing_ms.
nlohmann::ordered_json to_json(const CommandReport& report);

}  // namespace coreideal

#endif  // COREIDEAL_REPORT_HPP
