#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcs/types.hpp"

namespace lcs::cli {

enum class Command { Riccati, Evolve, Circle, Compare, Figure1, Figure2, Figure3, IdentityCheck };

const char* to_string(Command c);

/// Everything a run needs. Defaults follow the one-mode spin-boson figures
/// (omega 2, g 1) and the modulated oscillator bath (gamma 1, a 1, big_gamma 8).
struct RunConfig {
  Command command = Command::Evolve;
  std::string model = "su2";
  double omega = 2.0;
  double g = 1.0;
  double delta = 0.0;
  double nbar = 0.0;
  double gamma = 1.0;
  double a = 1.0;
  double big_gamma = 8.0;
  int truncation = 64;
  double t_end = 10.0;
  double tol = 1e-10;
  int n_out = 201;
  std::string out;
  Complex zeta0{0.5, 0.0};
  double threshold = 1e-6;
  int m = 0;

  Algebra algebra() const { return model == "su11" ? Algebra::SU11 : Algebra::SU2; }
};

/// Bad flag, key or value. `key()` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Reads `key = value` lines ('#' starts a comment) from `file` when given, then
/// applies command-line flags on top. The first positional argument is the
/// command; `--config PATH` in `args` names the file as well.
RunConfig parse_config(const std::vector<std::string>& args,
                       const std::optional<std::filesystem::path>& file = std::nullopt);

/// Rejects non-finite or out-of-range values; throws ConfigError.
void validate(const RunConfig& cfg);

/// One `key = value` line per field, in the config-file grammar.
void echo(std::ostream& os, const RunConfig& cfg);

}  // namespace lcs::cli
