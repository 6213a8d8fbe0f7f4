#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "lcs/csv.hpp"

namespace lcs::cli {
namespace {

constexpr const char* kKeys[] = {"model", "omega",     "g",     "delta",      "nbar",
                                 "gamma", "a",         "big_gamma", "truncation", "t_end",
                                 "tol",   "n_out",     "out",   "zeta0",      "threshold",
                                 "m",     "command"};

struct CommandName {
  const char* name;
  Command command;
};
constexpr CommandName kCommands[] = {
    {"riccati", Command::Riccati},   {"evolve", Command::Evolve},
    {"circle", Command::Circle},     {"compare", Command::Compare},
    {"figure1", Command::Figure1},   {"figure2", Command::Figure2},
    {"figure3", Command::Figure3},   {"identity-check", Command::IdentityCheck}};

std::string normalize(std::string key) {
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end) {
    throw ConfigError(key, "cannot parse '" + text + "' as a number for key '" + key + "'");
  }
  return v;
}

int to_int(const std::string& key, const std::string& text) {
  int v = 0;
  const char* end = text.data() + text.size();
  const auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end) {
    throw ConfigError(key, "cannot parse '" + text + "' as an integer for key '" + key + "'");
  }
  return v;
}

Command to_command(const std::string& text) {
  for (const auto& c : kCommands)
    if (text == c.name) return c.command;
  throw ConfigError("command", "unknown command '" + text + "'");
}

void assign(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "model") {
    if (value != "su2" && value != "su11") {
      throw ConfigError(key, "key 'model' must be su2 or su11, got '" + value + "'");
    }
    cfg.model = value;
  } else if (key == "omega") {
    cfg.omega = to_double(key, value);
  } else if (key == "g") {
    cfg.g = to_double(key, value);
  } else if (key == "delta") {
    cfg.delta = to_double(key, value);
  } else if (key == "nbar") {
    cfg.nbar = to_double(key, value);
  } else if (key == "gamma") {
    cfg.gamma = to_double(key, value);
  } else if (key == "a") {
    cfg.a = to_double(key, value);
  } else if (key == "big_gamma") {
    cfg.big_gamma = to_double(key, value);
  } else if (key == "truncation") {
    cfg.truncation = to_int(key, value);
  } else if (key == "t_end") {
    cfg.t_end = to_double(key, value);
  } else if (key == "tol") {
    cfg.tol = to_double(key, value);
  } else if (key == "n_out") {
    cfg.n_out = to_int(key, value);
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "zeta0") {
    const auto comma = value.find(',');
    if (comma == std::string::npos) {
      cfg.zeta0 = {to_double(key, trim(value)), 0.0};
    } else {
      cfg.zeta0 = {to_double(key, trim(value.substr(0, comma))),
                   to_double(key, trim(value.substr(comma + 1)))};
    }
  } else if (key == "threshold") {
    cfg.threshold = to_double(key, value);
  } else if (key == "m") {
    cfg.m = to_int(key, value);
  } else if (key == "command") {
    cfg.command = to_command(value);
  } else {
    throw ConfigError(key, "unknown key '" + key + "'");
  }
}

std::vector<std::pair<std::string, std::string>> read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open config file '" + path.string() + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config", path.string() + ":" + std::to_string(lineno) +
                                      ": expected 'key = value'");
    }
    out.emplace_back(normalize(trim(line.substr(0, eq))), trim(line.substr(eq + 1)));
  }
  return out;
}

}  // namespace

const char* to_string(Command c) {
  for (const auto& e : kCommands)
    if (e.command == c) return e.name;
  return "?";
}

RunConfig parse_config(const std::vector<std::string>& args,
                       const std::optional<std::filesystem::path>& file) {
  CLI::App app{"lcs"};
  app.allow_extras();
  std::map<std::string, std::string> flags;
  std::string config_path;
  std::vector<std::string> positional;
  for (const char* key : kKeys) {
    if (std::string(key) == "command") continue;
    std::string names = "--" + std::string(key);
    const std::string dashed = [&] {
      std::string s = key;
      std::replace(s.begin(), s.end(), '_', '-');
      return s;
    }();
    if (dashed != key) names += ",--" + dashed;
    app.add_option(names, flags[key])->allow_extra_args(false);
  }
  app.add_option("--config", config_path);
  app.add_option("command", positional);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw ConfigError("args", e.what());
  }
  for (const std::string& extra : app.remaining()) {
    const std::string key = normalize(extra.substr(extra.find_first_not_of('-')));
    throw ConfigError(key, "unknown key '" + key + "'");
  }

  RunConfig cfg;
  bool have_command = false;
  std::optional<std::filesystem::path> path = file;
  if (!config_path.empty()) path = config_path;
  if (path) {
    for (const auto& [key, value] : read_file(*path)) {
      assign(cfg, key, value);
      if (key == "command") have_command = true;
    }
  }
  for (const auto& [key, value] : flags) {
    if (app.count("--" + key) > 0) assign(cfg, key, value);
  }
  if (positional.size() > 1) {
    throw ConfigError("command", "expected one command, got '" + positional[1] + "' as well");
  }
  if (!positional.empty()) {
    cfg.command = to_command(positional.front());
    have_command = true;
  }
  if (!have_command) throw ConfigError("command", "missing command");
  if (cfg.out.empty()) throw ConfigError("out", "missing required key 'out'");
  validate(cfg);
  return cfg;
}

void validate(const RunConfig& cfg) {
  auto finite = [](const char* key, double v) {
    if (!std::isfinite(v)) throw ConfigError(key, std::string("key '") + key + "' must be finite");
  };
  auto positive = [&](const char* key, double v) {
    finite(key, v);
    if (!(v > 0.0)) throw ConfigError(key, std::string("key '") + key + "' must be positive");
  };
  auto non_negative = [&](const char* key, double v) {
    finite(key, v);
    if (v < 0.0) throw ConfigError(key, std::string("key '") + key + "' must be >= 0");
  };
  finite("omega", cfg.omega);
  finite("g", cfg.g);
  finite("delta", cfg.delta);
  finite("a", cfg.a);
  finite("big_gamma", cfg.big_gamma);
  non_negative("nbar", cfg.nbar);
  non_negative("gamma", cfg.gamma);
  positive("t_end", cfg.t_end);
  positive("tol", cfg.tol);
  positive("threshold", cfg.threshold);
  finite("zeta0", cfg.zeta0.real());
  finite("zeta0", cfg.zeta0.imag());
  if (cfg.truncation < 2) throw ConfigError("truncation", "key 'truncation' must be >= 2");
  if (cfg.n_out < 2) throw ConfigError("n_out", "key 'n_out' must be >= 2");
  if (cfg.m < 0) throw ConfigError("m", "key 'm' must be >= 0");
  if (cfg.model == "su11") {
    if (!(std::abs(cfg.zeta0) < 1.0)) {
      throw ConfigError("zeta0", "key 'zeta0' must satisfy |zeta0| < 1 for model su11");
    }
    if (cfg.m >= cfg.truncation) {
      throw ConfigError("m", "key 'm' must be below the truncation");
    }
  }
}

void echo(std::ostream& os, const RunConfig& c) {
  os << "command = " << to_string(c.command) << '\n'
     << "model = " << c.model << '\n'
     << "omega = " << csv::format(c.omega) << '\n'
     << "g = " << csv::format(c.g) << '\n'
     << "delta = " << csv::format(c.delta) << '\n'
     << "nbar = " << csv::format(c.nbar) << '\n'
     << "gamma = " << csv::format(c.gamma) << '\n'
     << "a = " << csv::format(c.a) << '\n'
     << "big_gamma = " << csv::format(c.big_gamma) << '\n'
     << "truncation = " << c.truncation << '\n'
     << "t_end = " << csv::format(c.t_end) << '\n'
     << "tol = " << csv::format(c.tol) << '\n'
     << "n_out = " << c.n_out << '\n'
     << "out = " << c.out << '\n'
     << "zeta0 = " << csv::format(c.zeta0.real()) << ',' << csv::format(c.zeta0.imag()) << '\n'
     << "threshold = " << csv::format(c.threshold) << '\n'
     << "m = " << c.m << '\n';
}

}  // namespace lcs::cli
