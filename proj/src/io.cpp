#include "maniplex/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace maniplex {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

} // namespace

json to_json(const Maniplex& m) {
  return json{{"rank", m.rank()}, {"flags", m.flag_count()}, {"perms", m.perms()}};
}

RawManiplex raw_maniplex_from_json(const json& j) {
  RawManiplex raw;
  raw.rank = static_cast<int>(integer(field(j, "rank"), "rank"));
  const json& perms = field(j, "perms");
  if (!perms.is_array()) throw ParseError("\"perms\" must be an array");
  for (const json& row : perms) {
    if (!row.is_array()) throw ParseError("each permutation must be an array");
    std::vector<std::int64_t> p;
    for (const json& v : row) p.push_back(integer(v, "permutation entry"));
    raw.perms.push_back(std::move(p));
  }
  if (j.contains("flags")) {
    std::int64_t flags = integer(j.at("flags"), "flags");
    for (const auto& p : raw.perms)
      if (static_cast<std::int64_t>(p.size()) != flags)
        throw ParseError("permutation length differs from \"flags\"");
  }
  return raw;
}

Maniplex maniplex_from_json(const json& j) {
  RawManiplex raw = raw_maniplex_from_json(j);
  ValidationReport report = validate(raw.rank, raw.perms);
  if (!report.structurally_sound()) throw StructuralError(report.structural.front().message);
  std::vector<std::vector<Flag>> tables;
  for (const auto& p : raw.perms) tables.emplace_back(p.begin(), p.end());
  return Maniplex(raw.rank, std::move(tables));
}

json to_json(const RankedPoset& p) {
  json faces = json::array();
  for (int f = 0; f < static_cast<int>(p.size()); ++f)
    faces.push_back({{"label", p.label(f)}, {"rank", p.face_rank(f)}});
  return json{{"rank", p.rank()}, {"faces", faces}, {"hasse", p.hasse()}};
}

RankedPoset poset_from_json(const json& j) {
  int rank = static_cast<int>(integer(field(j, "rank"), "rank"));
  std::vector<int> ranks;
  std::vector<std::string> labels;
  const json& faces = field(j, "faces");
  if (!faces.is_array()) throw ParseError("\"faces\" must be an array");
  for (const json& f : faces) {
    const json& label = field(f, "label");
    if (!label.is_string()) throw ParseError("face labels must be strings");
    labels.push_back(label.get<std::string>());
    ranks.push_back(static_cast<int>(integer(field(f, "rank"), "face rank")));
  }
  std::vector<std::pair<int, int>> hasse;
  const json& edges = field(j, "hasse");
  if (!edges.is_array()) throw ParseError("\"hasse\" must be an array");
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ParseError("Hasse edges are [lower, upper] pairs");
    hasse.push_back({static_cast<int>(integer(e[0], "face index")),
                     static_cast<int>(integer(e[1], "face index"))});
  }
  return RankedPoset(rank, std::move(ranks), std::move(labels), std::move(hasse));
}

json to_json(const VoltageAssignment& z) {
  json edges = json::array();
  for (const Edge& e : z.nontrivial()) edges.push_back({e.lower, e.colour});
  return json{{"edges", edges}};
}

VoltageAssignment voltage_from_json(const Maniplex& base, const json& j) {
  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<Edge> list;
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ParseError("voltage edges are [flag, colour] pairs");
    std::int64_t f = integer(e[0], "flag"), c = integer(e[1], "colour");
    if (f < 0 || c < 0) throw ParseError("negative flag or colour");
    list.push_back({static_cast<Flag>(f), static_cast<int>(c)});
  }
  return VoltageAssignment(base, list);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
  if (!out) throw ParseError("write failed for " + path.string());
}

std::string to_dot(const Maniplex& m) {
  static constexpr std::array<const char*, 4> palette{"red", "green", "blue", "orange"};
  std::ostringstream out;
  out << "graph maniplex {\n  node [shape=point];\n";
  for (Flag f = 0; f < m.flag_count(); ++f) out << "  " << f << ";\n";
  for (int i = 0; i < m.rank(); ++i)
    for (Flag f = 0; f < m.flag_count(); ++f) {
      Flag g = m.adj(i, f);
      if (f < g)
        out << "  " << f << " -- " << g << " [color=" << palette[i % palette.size()]
            << ", label=\"" << i << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

std::string to_hasse_dot(const RankedPoset& p, bool include_extremes) {
  auto shown = [&](int face) {
    return include_extremes || (face != p.minimum() && face != p.maximum());
  };
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int r = -1; r <= p.rank(); ++r) {
    if (!include_extremes && (r == -1 || r == p.rank())) continue;
    out << "  subgraph cluster_rank" << (r < 0 ? "m1" : std::to_string(r)) << " {\n"
        << "    label=\"rank " << r << "\";\n    rank=same;\n";
    for (int face : p.faces_of_rank(r)) out << "    n" << face << " [label=" << json(p.label(face)).dump() << "];\n";
    out << "  }\n";
  }
  for (auto [lo, hi] : p.hasse())
    if (shown(lo) && shown(hi)) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace maniplex
