#pragma once

#include <map>
#include <string>

#include "opamech/sweep.hpp"

namespace opamech {

/// Fully assembled run configuration for the command-line tool.
struct RunConfig {
  PhysicalParams params;
  std::vector<AxisSpec> axes;  ///< empty, one, or two
  NegativityConvention convention = NegativityConvention::LnTwoEta;
  std::string out_csv;
  std::string out_svg;
  int threads = 1;
};

/// Ordered key -> raw-value map from a flat `key = value` file ('#' starts a
/// comment). Duplicate or unparseable lines raise ConfigError naming the
/// offending key.
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// Parse a raw key/value map (file contents merged with command-line
/// overrides) into a RunConfig. Enforces the schema: exactly one of
/// delta_eff / delta0, numeric fields parse completely, axis specs are
/// complete, convention is "ln2eta" or "lneta". Throws ConfigError.
RunConfig assemble_config(const std::map<std::string, std::string>& kv);

}  // namespace opamech
