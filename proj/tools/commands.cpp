#include "commands.hpp"

#include "maniplex/certificate.hpp"
#include "maniplex/corpus.hpp"
#include "maniplex/coset.hpp"
#include "maniplex/counterexample.hpp"
#include "maniplex/coxeter.hpp"
#include "maniplex/extension.hpp"
#include "maniplex/io.hpp"
#include "maniplex/poset.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace maniplex::cli {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

class SemanticError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

std::string read_bytes(const std::string& path) {
  if (path.empty()) throw ParseError("an input file is required (-i)");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_bytes(const std::string& bytes, const std::string& path) {
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

struct Input {
  Maniplex m;
  std::string digest;
};

Input load_maniplex(const std::string& path) {
  std::string bytes = read_bytes(path);
  Maniplex m = maniplex_from_json(parse_bytes(bytes, path));
  if (!validate(m).ok) throw SemanticError(path + " is not a valid maniplex");
  return {std::move(m), sha256_hex(bytes)};
}

json document(const std::string& command, const std::string& digest, const Certificate& cert,
              const Options& o, Clock::time_point start) {
  json doc{{"artifact", "maniplex"},
           {"version", kVersion},
           {"command", command},
           {"input_digest", digest},
           {"checks", cert.to_json()},
           {"pass", cert.all_pass()}};
  if (o.timing)
    doc["timing_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return doc;
}

/// Without -o: one JSON object keyed by file name on stdout. With -o: files
/// in that directory.
void emit(const Options& o, std::ostream& out, const std::vector<std::pair<std::string, json>>& files) {
  if (o.output.empty()) {
    json all = json::object();
    for (const auto& [name, doc] : files) all[name] = doc;
    out << all.dump(2) << "\n";
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(o.output, ec);
  if (ec) throw ParseError("cannot create " + o.output + ": " + ec.message());
  for (const auto& [name, doc] : files) {
    auto path = std::filesystem::path(o.output) / name;
    write_text_file(path, doc.dump(2) + "\n");
    out << path.string() << "\n";
  }
}

void emit_text(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty())
    out << text;
  else
    write_text_file(o.output, text);
}

json report_json(const ValidationReport& r) {
  json structural = json::array();
  for (const auto& s : r.structural)
    structural.push_back({{"colour", s.colour}, {"flag", s.flag}, {"value", s.value}, {"message", s.message}});
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"axiom", to_string(v.axiom)},
                          {"colour", v.colour},
                          {"other_colour", v.other_colour},
                          {"flag", v.flag}});
  return {{"ok", r.ok}, {"structural", structural}, {"violations", violations}};
}

json pair_json(const std::optional<std::pair<Flag, Flag>>& p) {
  return p ? json{p->first, p->second} : json();
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CertificationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

} // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::string bytes = read_bytes(o.input);
    RawManiplex raw = raw_maniplex_from_json(parse_bytes(bytes, o.input));
    ValidationReport r = validate(raw.rank, raw.perms);
    json doc = report_json(r);
    doc["input_digest"] = sha256_hex(bytes);
    out << doc.dump(2) << "\n";
    return r.ok ? kSuccess : kFailure;
  });
}

int cmd_gen_torus(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    emit_text(o, out, to_json(torus_44(o.b, o.c)).dump() + "\n");
    return kSuccess;
  });
}

int cmd_gen_platonic(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    emit_text(o, out, to_json(platonic(o.name)).dump() + "\n");
    return kSuccess;
  });
}

int cmd_build_b(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto start = Clock::now();
    Maniplex b = coset_graph(coset_enumerate(p_presentation()));
    Certificate cert = check_B(b);
    json m = to_json(b);
    json doc = document("build-b", sha256_hex(m.dump()), cert, o, start);
    doc["flags"] = b.flag_count();
    if (cert.all_pass()) doc["face_vector"] = pos_of(b).face_vector();
    emit(o, out, {{"b.json", m}, {"b.certificate.json", doc}});
    return cert.all_pass() ? kSuccess : kFailure;
  });
}

int cmd_find_theta(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto start = Clock::now();
    Maniplex b;
    std::string digest;
    if (o.input.empty()) {
      b = build_B();
      digest = sha256_hex(to_json(b).dump());
    } else {
      Input in = load_maniplex(o.input);
      b = std::move(in.m);
      digest = std::move(in.digest);
    }
    if (b.rank() != 4) throw SemanticError("find-theta needs a 4-maniplex");
    ThetaSet theta = find_theta(b);
    EThetaSet e = build_E_theta(b, theta);
    Certificate cert = check_A_conditions(b, theta);
    cert.add("etheta.size", e.edges.size() == 4 * theta.theta.size(), e.edges.size());
    BConditionReport bc = verify_B_conditions(b, theta, e);
    cert.append(bc.checks);

    json shifted = json::object();
    for (const auto& [key, sup] : std::vector<std::pair<std::string, std::vector<int>>>{
             {"0", {0}}, {"3", {3}}, {"02", {0, 2}}, {"31", {3, 1}}})
      shifted[key] = theta.shifted(b, sup);
    json primed = json::array();
    for (const auto& [face, p] : bc.primed)
      primed.push_back({{"rank", face.rank}, {"face", face.component}, {"primed", p}});
    json doc = document("find-theta", digest, cert, o, start);
    doc["primed"] = primed;
    emit(o, out,
         {{"theta.json", {{"theta", theta.theta}, {"shifted", shifted}}},
          {"theta.voltage.json", to_json(e.voltage(b))},
          {"theta.certificate.json", doc}});
    return cert.all_pass() ? kSuccess : kFailure;
  });
}

int cmd_build_bstar(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto start = Clock::now();
    BStar s = build_B_star();
    json m = to_json(s.b_star);
    json doc = document("build-bstar", sha256_hex(to_json(s.b).dump()), s.certificate, o, start);
    FaithfulnessResult faith = is_faithful(s.b_star);
    doc["flags"] = s.b_star.flag_count();
    doc["faithful"] = faith.faithful;
    doc["polytopal"] = s.certificate.find("polytopal")->pass;
    doc["witness"] = {s.witness.first, s.witness.second};
    doc["poset_iso"] = s.poset_iso;
    emit(o, out,
         {{"bstar.json", m}, {"bstar.voltage.json", to_json(s.voltage)}, {"bstar.certificate.json", doc}});
    return kSuccess;
  });
}

int cmd_extend(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto start = Clock::now();
    Input in = load_maniplex(o.input);
    FaceId facet = facet_by_index(in.m, o.facet);
    if (!o.verify) {
      emit(o, out, {{"extension.json", to_json(extend(in.m, facet))}});
      return kSuccess;
    }
    ExtensionResult r = verify_extension(in.m, facet);
    json doc = document("extend", in.digest, r.certificate, o, start);
    doc["flags"] = r.extension.flag_count();
    doc["rank"] = r.extension.rank();
    doc["facet"] = {facet.rank, facet.component};
    doc["faithful"] = r.faithful;
    doc["base_polytopal"] = r.base_polytopal;
    emit(o, out, {{"extension.json", to_json(r.extension)}, {"extension.certificate.json", doc}});
    return r.certificate.all_pass() ? kSuccess : kFailure;
  });
}

int cmd_verdict(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Input in = load_maniplex(o.input);
    if (o.base >= in.m.flag_count()) throw SemanticError("base flag out of range");
    Verdict v = verdict(in.m, o.base);
    json doc{{"input_digest", in.digest},
             {"base", o.base},
             {"sparse", v.sparse},
             {"semisparse", v.semisparse},
             {"unfaithful_pair", pair_json(v.unfaithful_pair)},
             {"chain_stabilizer_gap",
              v.chain_stabilizer_gap ? json(v.chain_stabilizer_gap->to_string()) : json()},
             {"polytope",
              {{"ok", v.polytope.ok},
               {"failed", to_string(v.polytope.failed)},
               {"witness", v.polytope.witness},
               {"detail", v.polytope.detail}}},
             {"double_coset_poset", to_json(v.double_coset_poset)}};
    out << doc.dump(2) << "\n";
    return kSuccess;
  });
}

int cmd_counterexample(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto start = Clock::now();
    if (o.rank < 4) throw SemanticError("counterexamples start at rank 4");
    std::vector<std::pair<std::string, json>> files;

    BStar s = build_B_star();
    Verdict v4 = verdict(s.b_star, 0);
    json doc = document("counterexample", sha256_hex(to_json(s.b).dump()), s.certificate, o, start);
    doc["rank"] = 4;
    doc["flags"] = s.b_star.flag_count();
    doc["witness"] = {s.witness.first, s.witness.second};
    doc["sparse"] = v4.sparse;
    doc["semisparse"] = v4.semisparse;
    files.push_back({"rank4.json", to_json(s.b_star)});
    files.push_back({"rank4.certificate.json", doc});

    Maniplex m = s.b_star;
    for (int r = 5; r <= o.rank; ++r) {
      bool connectivity = o.full || r <= 5;
      json previous = to_json(m);
      ExtensionResult x = verify_extension(m, facet_by_index(m, 0), {connectivity});
      json d = document("counterexample", sha256_hex(previous.dump()), x.certificate, o, start);
      d["rank"] = r;
      d["flags"] = x.extension.flag_count();
      d["faithful"] = x.faithful;
      d["strong_flag_connectivity_checked"] = connectivity;
      if (connectivity) {
        Verdict v = verdict(x.extension, 0);
        d["sparse"] = v.sparse;
        d["semisparse"] = v.semisparse;
      }
      files.push_back({"rank" + std::to_string(r) + ".json", to_json(x.extension)});
      files.push_back({"rank" + std::to_string(r) + ".certificate.json", d});
      if (auto failure = x.certificate.first_failure()) {
        emit(o, out, files);
        err << "error: rank " << r << " failed " << failure->name << "\n";
        return kFailure;
      }
      m = std::move(x.extension);
    }
    emit(o, out, files);
    return kSuccess;
  });
}

int cmd_export(const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Input in = load_maniplex(o.input);
    if (o.format == "dot")
      emit_text(o, out, to_dot(in.m));
    else if (o.format == "hasse-dot")
      emit_text(o, out, to_hasse_dot(pos_of(in.m), !o.no_extremes));
    else if (o.format == "json")
      emit_text(o, out, to_json(pos_of(in.m)).dump(2) + "\n");
    else
      throw ParseError("unknown format " + o.format);
    return kSuccess;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Maniplex toolkit: flag graphs, face posets, covers and extensions"};
  app.name("maniplex");
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto input = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-i,--input", o.input, "maniplex JSON file");
    if (required) opt->required();
  };
  auto output = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("-o,--output", o.output, what);
  };
  auto timing = [&](CLI::App* sub) { sub->add_flag("--timing", o.timing, "record wall time"); };

  std::function<int()> action;

  auto* check = app.add_subcommand("check", "validate the maniplex axioms");
  input(check, true);
  check->callback([&] { action = [&] { return cmd_check(o, out, err); }; });

  auto* gen = app.add_subcommand("gen", "generate a corpus maniplex");
  gen->require_subcommand(1);
  auto* torus = gen->add_subcommand("torus", "the toroidal map {4,4}_(b,c)");
  torus->add_option("--b", o.b, "first lattice coordinate")->required();
  torus->add_option("--c", o.c, "second lattice coordinate")->required();
  output(torus, "output file");
  torus->callback([&] { action = [&] { return cmd_gen_torus(o, out, err); }; });
  auto* plat = gen->add_subcommand("platonic", "cube, hemicube, octahedron, hemioctahedron or square");
  plat->add_option("--name", o.name, "polytope name")->required();
  output(plat, "output file");
  plat->callback([&] { action = [&] { return cmd_gen_platonic(o, out, err); }; });

  auto* build_b = app.add_subcommand("build-b", "enumerate and certify the 96-flag polytope");
  output(build_b, "output directory");
  timing(build_b);
  build_b->callback([&] { action = [&] { return cmd_build_b(o, out, err); }; });

  auto* theta = app.add_subcommand("find-theta", "search the distinguished flag set");
  input(theta, false);
  output(theta, "output directory");
  timing(theta);
  theta->callback([&] { action = [&] { return cmd_find_theta(o, out, err); }; });

  auto* bstar = app.add_subcommand("build-bstar", "build and certify the unfaithful double cover");
  output(bstar, "output directory");
  timing(bstar);
  bstar->callback([&] { action = [&] { return cmd_build_bstar(o, out, err); }; });

  auto* ext = app.add_subcommand("extend", "colour-coded extension over a marked facet");
  input(ext, true);
  ext->add_option("--facet", o.facet, "facet index in ascending id order");
  ext->add_flag("--verify", o.verify, "certify the extension");
  output(ext, "output directory");
  timing(ext);
  ext->callback([&] { action = [&] { return cmd_extend(o, out, err); }; });

  auto* verd = app.add_subcommand("verdict", "sparse / semisparse verdict for the base stabilizer");
  input(verd, true);
  verd->add_option("--base", o.base, "base flag");
  verd->callback([&] { action = [&] { return cmd_verdict(o, out, err); }; });

  auto* cex = app.add_subcommand("counterexample", "certified counterexamples up to a rank");
  cex->add_option("--rank", o.rank, "target rank (>= 4)")->check(CLI::Range(4, 32));
  cex->add_flag("--full", o.full, "check strong flag connectivity above rank 5");
  output(cex, "output directory");
  timing(cex);
  cex->callback([&] { action = [&] { return cmd_counterexample(o, out, err); }; });

  auto* exp = app.add_subcommand("export", "render a maniplex");
  input(exp, true);
  exp->add_option("--format", o.format, "dot, hasse-dot or json")
      ->check(CLI::IsMember({"dot", "hasse-dot", "json"}));
  exp->add_flag("--no-extremes", o.no_extremes, "omit the least and greatest faces");
  output(exp, "output file");
  exp->callback([&] { action = [&] { return cmd_export(o, out, err); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return action ? action() : kInputError;
}

} // namespace maniplex::cli
