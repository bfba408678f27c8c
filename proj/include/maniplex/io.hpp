#pragma once

// JSON documents for maniplexes, posets and voltage assignments, plus DOT
// renderings of flag graphs and Hasse diagrams.

#include "maniplex/core.hpp"
#include "maniplex/poset.hpp"
#include "maniplex/voltage.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace maniplex {

/// Unreadable file, malformed JSON or a document of the wrong shape.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Maniplex document as read, before the tables are known to be total.
struct RawManiplex {
  int rank = 0;
  std::vector<std::vector<std::int64_t>> perms;
};

nlohmann::json to_json(const Maniplex& m);  // {"rank", "flags", "perms"}
RawManiplex raw_maniplex_from_json(const nlohmann::json& j);
/// Throws ParseError for a wrong shape and StructuralError for tables that
/// are not total on the flags.
Maniplex maniplex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RankedPoset& p);  // {"rank", "faces": [{label, rank}], "hasse"}
RankedPoset poset_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VoltageAssignment& z);  // {"edges": [[flag, colour], ...]}
VoltageAssignment voltage_from_json(const Maniplex& base, const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Flag graph with one undirected edge per adjacency; colours 0..3 are red,
/// green, blue, orange and the palette cycles after that.
std::string to_dot(const Maniplex& m);

/// Hasse diagram with one cluster per rank.
std::string to_hasse_dot(const RankedPoset& p, bool include_extremes = true);

} // namespace maniplex
