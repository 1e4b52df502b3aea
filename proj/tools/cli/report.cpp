#include "cli/report.hpp"

namespace satfrac::cli {

std::string render_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["command"] = report.command;
  doc["status"] = report.ok ? "ok" : "fail";
  doc["payload"] = report.payload;
  doc["diagnostics"] = report.diagnostics;
  return doc.dump() + "\n";
}

std::string render_text(const Report& report) {
  std::string out;
  for (const std::string& line : report.lines) out += line + "\n";
  return out;
}

}  // namespace satfrac::cli
