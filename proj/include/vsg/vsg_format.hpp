#pragma once

#include <string>
#include <vector>

#include "vsg/gauss_code.hpp"

namespace vsg {

struct VsgDocument {
  std::string name = "diagram";
  GaussCode code;
  bool operator==(const VsgDocument&) const = default;
};

struct ParseDiagnostic {
  int line = 0;  // 1-based; 0 for document-level problems
  std::string message;
};

struct ParseResult {
  bool ok = false;
  VsgDocument doc;
  std::vector<ParseDiagnostic> errors;
};

// Text format, one directive per line; '#' starts a comment, blank lines skip.
//   graph <name>
//   vertices <v> <v> ...
//   edge <id>: <tail> -> <head> : <passage> <passage> ...
//   rot <vertex>: <end> <end> ...
// A passage is (O|U)<crossing><+|->, e.g. O3+ or U12-. An end is <edge>.out
// (tail end) or <edge>.in (head end). The two passages of a crossing must
// agree in sign. Rotation lines are optional; when any appears, every vertex
// needs one.
ParseResult parse_vsg(const std::string& text);

// Canonical form: graph line, one vertices line, edge lines in stored order,
// then rot lines. parse_vsg(serialize_vsg(d)) reproduces d exactly.
std::string serialize_vsg(const VsgDocument& doc);

// Reads and parses a file; file errors come back as a line-0 diagnostic.
ParseResult parse_vsg_file(const std::string& path);

}  // namespace vsg
