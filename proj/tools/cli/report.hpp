#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace satfrac::cli {

/// Result of one non-streaming command. `lines` is the human rendering of
/// `payload`; both are built from the same values by each command.
struct Report {
  explicit Report(std::string name) : command(std::move(name)) {}

  std::string command;
  bool ok = true;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  std::vector<std::string> lines;
  std::vector<std::string> diagnostics;
};

/// {"command":..,"status":"ok"|"fail","payload":{..},"diagnostics":[..]}
std::string render_json(const Report& report);
/// One line per entry of `lines`.
std::string render_text(const Report& report);

}  // namespace satfrac::cli
