#pragma once

// JSON input files and report serialization for the gbds tool.

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gbds/reconstruction.hpp"
#include "gbds/report.hpp"
#include "gbds/system.hpp"

namespace gbds::cli {

/// Malformed input. The message starts with "origin:line:column:" for JSON
/// syntax errors and "origin: field:" for semantic ones.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);

/// {"atoms": [...], "labels": [...], "actions": {label: {atom: [atoms]}},
///  "ideals": {label: [atoms]}, "unital": true}
/// Omitted atoms map to ∅; omitted ideals default to the range ideal.
System parse_system(std::string_view text, const std::string& origin);
System load_system(const std::string& path);

/// {"points": [...], "generators": [{"label", "V", "V_inv", "rho": [[from, to]]}]}
FinitePartialAction parse_action(std::string_view text, const std::string& origin);
FinitePartialAction load_action(const std::string& path);

/// SystemFile form of a system; parse_system reads it back unchanged.
nlohmann::ordered_json system_to_json(const System& sys);

nlohmann::ordered_json to_json(const Report& r);

}  // namespace gbds::cli
