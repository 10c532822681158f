#pragma once

// Command line driver, kept in the library so tests can call it in-process.
//
// Exit codes: 0 success, 2 schema or input error, 3 mathematical
// inconsistency (or a warning under --strict), 4 non-unique coefficients
// without --allow-nonunique.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ewm/io.hpp"

namespace ewm::cli {

inline constexpr std::string_view kVersion = "1.0.0";

struct RunOptions {
  bool strict = false;
  bool allow_nonunique = false;
};

struct Evaluation {
  io::OutputDocument doc;
  int exit_code = 0;
};

Evaluation evaluate(std::string_view input_text, io::Mode mode, const RunOptions& opts);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ewm::cli
