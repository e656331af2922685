#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zjetcli/parser.hpp"

namespace zjetcli {

struct Options {
  std::string format = "text";            // "text" | "json"
  std::optional<int> cap_override;        // replaces cap= in ring statements
  std::uint64_t seed = 0;                 // for `check all`
};

/// One executed statement: canonical echo, status, and an ordered list of
/// payload fields (values may be multi-line). Identical scripts render to
/// byte-identical reports.
struct Report {
  std::string echo;
  int line = 0;
  std::string status;  // "ok" | "error"
  std::vector<std::pair<std::string, std::string>> fields;
  std::string error;   // diagnostics, only when status == "error"
};

struct RunResult {
  std::vector<Report> reports;
  int exit_code = 0;  // 0 ok, 1 script error, 2 kernel error
};

/// Parses and executes a script. A failing statement produces an error
/// report (with no partial payload) and aborts the remainder.
RunResult run_script(const std::string& text, const Options& opt);

std::string render_text(const std::vector<Report>& reports);
std::string render_json(const std::vector<Report>& reports);

}  // namespace zjetcli
