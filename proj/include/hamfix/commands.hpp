#pragma once

// Request/report layer shared by the C API and the command-line tool.  A
// request is a flat JSON object; the report carries JSON and a text rendering.

#include <string>

#include "hamfix/io.hpp"

namespace hamfix {

struct Report {
  io::Json data;
  std::string text;
  bool ok = true;  // false only for selfcheck failures
};

/// command: orbit | toric | ring | bound | ls | novikov | selfcheck
Report run_command(const std::string& command, const io::Json& request);

struct SelfcheckRow {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  bool counted = true;  // informational rows do not affect the verdict
};

std::vector<SelfcheckRow> run_selfcheck();

}  // namespace hamfix
