#include "opamech/config.hpp"

#include <charconv>
#include <fstream>

namespace opamech {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& key, const std::string& raw) {
  double value = 0.0;
  const char* begin = raw.data();
  const char* end = raw.data() + raw.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("key '" + key + "': cannot parse '" + raw + "' as a number");
  }
  return value;
}

int parse_int(const std::string& key, const std::string& raw) {
  int value = 0;
  const char* begin = raw.data();
  const char* end = raw.data() + raw.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("key '" + key + "': cannot parse '" + raw + "' as an integer");
  }
  return value;
}

}  // namespace

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");

  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value', got '" +
                        stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    }
    if (value.empty()) {
      throw ConfigError("key '" + key + "': empty value");
    }
    if (!kv.emplace(key, value).second) {
      throw ConfigError("duplicate key '" + key + "'");
    }
  }
  return kv;
}

RunConfig assemble_config(const std::map<std::string, std::string>& kv) {
  RunConfig cfg;
  auto leftover = kv;

  auto take = [&leftover](const std::string& key) -> std::optional<std::string> {
    const auto it = leftover.find(key);
    if (it == leftover.end()) return std::nullopt;
    std::string v = it->second;
    leftover.erase(it);
    return v;
  };

  // Base parameters: every key required, exactly one of delta_eff / delta0.
  auto require_double = [&](const char* key) {
    const auto raw = take(key);
    if (!raw) throw ConfigError(std::string("missing required key '") + key + "'");
    return parse_double(key, *raw);
  };
  cfg.params.kappa = require_double("kappa");
  cfg.params.gamma_m = require_double("gamma_m");
  cfg.params.g = require_double("g");
  cfg.params.lambda_hop = require_double("lambda_hop");
  cfg.params.drive_E = require_double("drive_E");
  cfg.params.opa_gain = require_double("opa_gain");
  cfg.params.opa_phase = require_double("opa_phase");
  cfg.params.n_a = require_double("n_a");
  cfg.params.n_m = require_double("n_m");

  const auto delta_eff = take("delta_eff");
  const auto delta0 = take("delta0");
  if (delta_eff && delta0) {
    throw ConfigError("keys 'delta_eff' and 'delta0' are mutually exclusive");
  }
  if (!delta_eff && !delta0) {
    throw ConfigError("exactly one of 'delta_eff' or 'delta0' is required");
  }
  if (delta_eff) {
    cfg.params.detuning_mode = DetuningMode::EffectiveDelta;
    cfg.params.detuning = parse_double("delta_eff", *delta_eff);
  } else {
    cfg.params.detuning_mode = DetuningMode::BareDelta0;
    cfg.params.detuning = parse_double("delta0", *delta0);
  }
  cfg.params = validate(cfg.params);

  // Optional sweep axes.
  for (int n = 1; n <= 2; ++n) {
    const std::string prefix = "axis" + std::to_string(n) + "_";
    const auto param = take(prefix + "param");
    const auto start = take(prefix + "start");
    const auto stop = take(prefix + "stop");
    const auto count = take(prefix + "count");
    const bool any = param || start || stop || count;
    if (!any) continue;
    if (!(param && start && stop && count)) {
      throw ConfigError("axis" + std::to_string(n) +
                        " needs all of _param, _start, _stop, _count");
    }
    if (n == 2 && cfg.axes.empty()) {
      throw ConfigError("axis2 given without axis1");
    }
    AxisSpec ax;
    ax.param = *param;
    ax.start = parse_double(prefix + "start", *start);
    ax.stop = parse_double(prefix + "stop", *stop);
    ax.count = parse_int(prefix + "count", *count);
    cfg.axes.push_back(ax);
  }

  if (const auto conv = take("convention")) {
    if (*conv == "ln2eta") cfg.convention = NegativityConvention::LnTwoEta;
    else if (*conv == "lneta") cfg.convention = NegativityConvention::LnEta;
    else throw ConfigError("key 'convention': expected ln2eta or lneta, got '" + *conv + "'");
  }
  if (const auto threads = take("threads")) {
    cfg.threads = parse_int("threads", *threads);
    if (cfg.threads < 1) throw ConfigError("key 'threads': must be >= 1");
  }
  if (const auto out = take("out")) cfg.out_csv = *out;
  if (const auto svg = take("svg")) cfg.out_svg = *svg;

  if (!leftover.empty()) {
    throw ConfigError("unknown key '" + leftover.begin()->first + "'");
  }
  return cfg;
}

}  // namespace opamech
