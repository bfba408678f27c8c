#pragma once

#include "maniplex/core.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace maniplex::cli {

inline constexpr int kSuccess = 0;
inline constexpr int kFailure = 1;     // a check failed or the input is not what the command needs
inline constexpr int kInputError = 2;  // unreadable input, bad JSON, bad arguments

struct Options {
  std::string input;
  std::string output;
  int rank = 4;
  std::size_t facet = 0;
  Flag base = 0;
  bool full = false;
  bool no_extremes = false;
  bool verify = false;
  bool timing = false;
  int b = 1;
  int c = 0;
  std::string name;
  std::string format = "json";
};

int cmd_check(const Options& o, std::ostream& out, std::ostream& err);
int cmd_gen_torus(const Options& o, std::ostream& out, std::ostream& err);
int cmd_gen_platonic(const Options& o, std::ostream& out, std::ostream& err);
int cmd_build_b(const Options& o, std::ostream& out, std::ostream& err);
int cmd_find_theta(const Options& o, std::ostream& out, std::ostream& err);
int cmd_build_bstar(const Options& o, std::ostream& out, std::ostream& err);
int cmd_extend(const Options& o, std::ostream& out, std::ostream& err);
int cmd_verdict(const Options& o, std::ostream& out, std::ostream& err);
int cmd_counterexample(const Options& o, std::ostream& out, std::ostream& err);
int cmd_export(const Options& o, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

/// Parses argv (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace maniplex::cli
