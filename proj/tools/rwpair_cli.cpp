#include "rwpair/catalog.hpp"
#include "rwpair/errors.hpp"
#include "rwpair/io.hpp"
#include "rwpair/weight.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace rwpair;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;

struct LoadedPair {
  std::string label;
  PairPtr pair;
  std::optional<Matrix> omega;
};

LoadedPair load_pair(const std::string& source) {
  if (std::filesystem::exists(source)) {
    PairFile f = pair_file_from_json(read_json_file(source));
    return {source, f.pair, f.omega};
  }
  const auto names = catalog_names();
  if (std::find(names.begin(), names.end(), source) != names.end()) {
    CatalogEntry e = catalog_entry(source);
    return {source, e.pair, e.omega.matrix()};
  }
  throw InputError("", "no such file or catalog entry: " + source);
}

SymplecticForm require_symplectic(const LoadedPair& lp) {
  if (!lp.omega) throw InputError("/omega", "pair has no symplectic form");
  const SymplecticReport r = check_symplectic(*lp.pair, *lp.omega);
  if (!r.ok()) throw MathError("omega is not a symplectic form on the pair");
  return SymplecticForm(lp.pair, *lp.omega);
}

Connection standard_connection(const LoadedPair& lp, const SymplecticForm& w, std::optional<std::uint64_t> seed) {
  if (seed) {
    std::mt19937_64 rng(*seed);
    return make_symplectic(make_torsion_free(random_extend_action_connection(lp.pair, rng)), w);
  }
  return make_symplectic(make_torsion_free(extend_action_connection(lp.pair)), w);
}

Connection load_or_build_connection(const LoadedPair& lp, const SymplecticForm& w, const std::string& path,
                                    std::optional<std::uint64_t> seed) {
  if (path.empty()) return standard_connection(lp, w, seed);
  Connection c = connection_from_json(lp.pair, read_json_file(path));
  if (!c.extends_action()) throw MathError("connection does not extend the action of h");
  if (!c.torsion_free() || !c.is_symplectic(w))
    std::cerr << "warning: connection is not symplectic; weight classes are unaffected\n";
  return c;
}

Json witness_json(const std::vector<int>& w) { return w.empty() ? Json(nullptr) : Json(w); }

template <std::size_t N>
Json witness_json(const std::optional<std::array<int, N>>& w) {
  return w ? Json(*w) : Json(nullptr);
}

Json check_json(const Check& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"witness", witness_json(c.witness)}, {"detail", c.detail}};
}

struct Output {
  std::string path;
  bool json = false;

  // Writes the document to the output file, or to stdout with --json.
  void emit(const Json& doc, const std::vector<std::string>& summary) const {
    if (!path.empty()) {
      std::ofstream out(path);
      if (!out) throw InputError("", "cannot write " + path);
      out << doc.dump(2) << '\n';
    }
    if (json) {
      std::cout << doc.dump(2) << '\n';
    } else {
      for (const auto& line : summary) std::cout << line << '\n';
    }
  }
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_validate(const std::string& source, const Output& out) {
  const LoadedPair lp = load_pair(source);
  const PairReport pr = validate_pair(*lp.pair);
  Json doc = {{"pair", {check_json(pr.antisymmetry), check_json(pr.jacobi), check_json(pr.closure)}}};
  std::vector<std::string> lines;
  for (const Check* c : {&pr.antisymmetry, &pr.jacobi, &pr.closure}) {
    std::string line = c->name + ": " + (c->passed ? "pass" : "FAIL");
    if (!c->witness.empty()) {
      line += " at";
      for (int i : c->witness) line += " " + std::to_string(i);
    }
    lines.push_back(line);
  }
  bool ok = pr.ok();
  if (lp.omega) {
    const SymplecticReport sr = check_symplectic(*lp.pair, *lp.omega);
    doc["symplectic"] = {{"antisymmetric", sr.antisymmetric},
                         {"even_dimension", sr.even_dimension},
                         {"nondegenerate", sr.nondegenerate},
                         {"closed", sr.closed},
                         {"determinant", scalar_to_json(sr.determinant)},
                         {"antisymmetry_witness", witness_json(sr.antisymmetry_witness)},
                         {"closedness_witness", witness_json(sr.closedness_witness)}};
    if (sr.kernel_witness) {
      Json k = Json::array();
      for (const Scalar& s : *sr.kernel_witness) k.push_back(scalar_to_json(s));
      doc["symplectic"]["kernel_witness"] = k;
    }
    lines.push_back(std::string("symplectic form: ") + (sr.ok() ? "pass" : "FAIL"));
    ok = ok && sr.ok();
  }
  doc["ok"] = ok;
  out.emit(doc, lines);
  return ok ? kOk : kMathFailure;
}

int cmd_connection(const std::string& source, bool torsion_free, bool symplectic, std::optional<std::uint64_t> seed,
                   const Output& out) {
  const LoadedPair lp = load_pair(source);
  Connection c;
  if (seed) {
    std::mt19937_64 rng(*seed);
    c = random_extend_action_connection(lp.pair, rng);
  } else {
    c = extend_action_connection(lp.pair);
  }
  if (torsion_free || symplectic) c = make_torsion_free(c);
  std::vector<std::string> lines{"extends action: true", std::string("torsion-free: ") + yes_no(c.torsion_free())};
  if (symplectic) {
    const SymplecticForm w = require_symplectic(lp);
    c = make_symplectic(c, w);
    lines.push_back(std::string("symplectic: ") + yes_no(c.is_symplectic(w)));
  }
  Json doc = connection_to_json(c);
  if (out.path.empty() && !out.json) lines.push_back(doc.dump());
  out.emit(doc, lines);
  return kOk;
}

int cmd_atiyah(const std::string& source, const std::string& connection_path, const Output& out) {
  const LoadedPair lp = load_pair(source);
  const Connection c = connection_path.empty() ? extend_action_connection(lp.pair)
                                               : connection_from_json(lp.pair, read_json_file(connection_path));
  const CochainForm r = atiyah_cocycle(c);
  const ModuleRep rep = atiyah_module(c);
  const bool closed = ce_differential(rep, r).is_zero();
  const bool vanishes = closed && is_coboundary(rep, r).has_value();
  const bool compatible = compatible_connection(lp.pair).has_value();
  Json doc = {{"cocycle", cochain_to_json(r)},
              {"closed", closed},
              {"class_vanishes", vanishes},
              {"compatible_connection_exists", compatible}};
  out.emit(doc, {std::string("cocycle closed: ") + yes_no(closed), std::string("class vanishes: ") + yes_no(vanishes),
                 std::string("compatible connection exists: ") + yes_no(compatible)});
  return closed && vanishes == compatible ? kOk : kMathFailure;
}

Json trivalent_report(const Connection& c, const SymplecticForm& w, const TrivalentDiagram& d) {
  const WeightClass wc = weight_class(c, w, d);
  Json doc = weight_class_to_json(wc);
  doc["diagram"] = diagram_to_json(d);
  doc["order"] = d.order();
  doc["relations"] = {{"closed", ce_differential(ModuleRep(c.pair()), wc.cocycle).is_zero()},
                      {"as", check_AS(c, w, d)}};
  return doc;
}

std::string weight_line(const std::string& name, const Json& report) {
  return name + ": H^" + std::to_string(2 * report["order"].get<int>()) + " dim " +
         std::to_string(report["cohomology_dim"].get<int>()) + ", class " +
         report["class_coordinates"].dump() + (report["class_vanishes"].get<bool>() ? " (zero)" : "");
}

bool relations_pass(const Json& report) {
  for (const auto& [k, v] : report["relations"].items())
    if (!v.get<bool>()) return false;
  return true;
}

int cmd_weight(const std::string& source, const std::string& diagram_path, std::optional<int> order,
               const std::string& connection_path, std::optional<std::uint64_t> seed, const Output& out) {
  const LoadedPair lp = load_pair(source);
  const SymplecticForm w = require_symplectic(lp);
  const Connection c = load_or_build_connection(lp, w, connection_path, seed);
  std::vector<TrivalentDiagram> diagrams;
  if (!diagram_path.empty()) {
    diagrams.push_back(diagram_from_json(read_json_file(diagram_path)));
    if (order && diagrams.front().order() != *order)
      throw InputError("/vertices", "diagram order differs from --k");
  } else if (order) {
    diagrams = enumerate_trivalent(*order);
  } else {
    throw InputError("", "give a diagram file or --k");
  }
  Json reports = Json::array();
  std::vector<std::string> lines;
  bool ok = true;
  for (std::size_t t = 0; t < diagrams.size(); ++t) {
    Json r = trivalent_report(c, w, diagrams[t]);
    ok = ok && relations_pass(r);
    lines.push_back(weight_line("diagram " + std::to_string(t), r));
    reports.push_back(std::move(r));
  }
  out.emit(diagrams.size() == 1 ? reports[0] : Json{{"weights", reports}}, lines);
  return ok ? kOk : kMathFailure;
}

int cmd_chord(const std::string& source, const std::string& chord_path, const std::string& module_path,
              const std::string& module_connection_path, int origin, const Output& out) {
  const LoadedPair lp = load_pair(source);
  const SymplecticForm w = require_symplectic(lp);
  const ChordDiagram cd = chord_from_json(read_json_file(chord_path));
  Connection ce;
  if (module_path.empty()) {
    if (!module_connection_path.empty()) throw InputError("", "--module-connection needs --module");
    ce = standard_connection(lp, w, std::nullopt);
  } else {
    const ModuleRep e = module_from_json(lp.pair, read_json_file(module_path));
    ce = module_connection_path.empty() ? extend_action_connection(e)
                                        : connection_from_json(e, read_json_file(module_connection_path));
  }
  if (cd.points > 0 && (origin < 0 || origin >= cd.points)) throw InputError("", "--origin outside the circle");
  const ModuleRep triv(lp.pair);
  WeightClass wc;
  wc.cocycle = chord_weight(ce, w, cd, origin);
  wc.cohomology = cohomology(triv, wc.cocycle.degree());
  wc.coordinates = class_coordinates(triv, wc.cohomology, wc.cocycle);
  Json doc = weight_class_to_json(wc);
  doc["chords"] = chord_to_json(cd);
  doc["order"] = cd.order();
  doc["origin"] = origin;
  doc["relations"] = {{"closed", ce_differential(triv, wc.cocycle).is_zero()}};
  out.emit(doc, {weight_line("chord diagram", doc)});
  return relations_pass(doc) ? kOk : kMathFailure;
}

int cmd_check(const std::string& source, const std::string& relation, int order, const std::string& connection_path,
              std::optional<std::uint64_t> seed, const Output& out) {
  const LoadedPair lp = load_pair(source);
  const SymplecticForm w = require_symplectic(lp);
  const Connection c = load_or_build_connection(lp, w, connection_path, seed);
  Json results = Json::array();
  std::vector<std::string> lines;
  bool all = true;
  auto record = [&](Json entry, bool pass, const std::string& label) {
    entry["pass"] = pass;
    all = all && pass;
    results.push_back(std::move(entry));
    lines.push_back(label + ": " + (pass ? "pass" : "FAIL"));
  };
  if (relation == "as" || relation == "ihx") {
    const auto diagrams = enumerate_trivalent(order);
    for (std::size_t t = 0; t < diagrams.size(); ++t) {
      const TrivalentDiagram& d = diagrams[t];
      if (relation == "as") {
        record({{"diagram", t}}, check_AS(c, w, d), "diagram " + std::to_string(t));
        continue;
      }
      for (int e = 0; e < d.num_edges(); ++e) {
        if (d.flag_vertex[d.edges[e][0]] == d.flag_vertex[d.edges[e][1]]) continue;
        record({{"diagram", t}, {"edge", e}}, check_IHX(c, w, d, e),
               "diagram " + std::to_string(t) + " edge " + std::to_string(e));
      }
    }
  } else if (relation == "4t") {
    const auto quads = four_t_quadruples(order);
    for (std::size_t t = 0; t < quads.size(); ++t)
      record({{"quadruple", t}, {"base", quads[t].base}, {"moving", quads[t].moving_chord}, {"fixed", quads[t].fixed_chord}},
             check_4T(c, w, quads[t]), "quadruple " + std::to_string(t));
  } else {
    const auto chords = enumerate_chord(order);
    for (std::size_t t = 0; t < chords.size(); ++t) {
      if (!has_isolated_chord(chords[t])) continue;
      record({{"chords", chord_to_json(chords[t])}}, check_1T(c, w, chords[t]), "chord diagram " + std::to_string(t));
    }
  }
  lines.push_back(std::string("all pass: ") + yes_no(all));
  out.emit({{"relation", relation}, {"order", order}, {"results", results}, {"all_pass", all}}, lines);
  return all ? kOk : kMathFailure;
}

int cmd_examples(bool list, const std::string& emit, const Output& out) {
  if (list == !emit.empty()) throw InputError("", "use exactly one of --list and --emit");
  if (list) {
    Json doc = Json::array();
    std::vector<std::string> lines;
    for (const CatalogEntry& e : catalog()) {
      doc.push_back({{"name", e.name}, {"dim", e.pair->dim()}, {"sub_dim", e.pair->sub_dim()}, {"note", e.note}});
      lines.push_back(e.name + "  dim " + std::to_string(e.pair->dim()) + ", h " + std::to_string(e.pair->sub_dim()) +
                      "  " + e.note);
    }
    out.emit(doc, lines);
    return kOk;
  }
  const auto names = catalog_names();
  if (std::find(names.begin(), names.end(), emit) == names.end())
    throw InputError("", "unknown catalog entry: " + emit);
  const CatalogEntry e = catalog_entry(emit);
  const Json doc = pair_file_to_json(*e.pair, e.omega.matrix());
  out.emit(doc, {doc.dump(2)});
  return kOk;
}

int cmd_cohomology(const std::string& source, std::optional<int> degree, const std::string& coefficients,
                   const Output& out) {
  const LoadedPair lp = load_pair(source);
  const ModuleRep rep = coefficients == "trivial" ? ModuleRep(lp.pair)
                        : coefficients == "quotient" ? quotient_rep(lp.pair)
                                                     : quotient_rep(lp.pair).dual();
  const int m = lp.pair->sub_dim();
  if (degree && (*degree < 0 || *degree > m)) throw InputError("", "--degree outside [0, dim h]");
  Json doc = Json::array();
  std::vector<std::string> lines;
  for (int k = degree.value_or(0); k <= degree.value_or(m); ++k) {
    const CohomologyInfo info = cohomology(rep, k);
    doc.push_back({{"degree", k},
                   {"cochains", info.cochain_dim},
                   {"cocycles", info.cocycle_dim},
                   {"coboundaries", info.coboundary_dim},
                   {"dim", info.dim}});
    lines.push_back("H^" + std::to_string(k) + ": " + std::to_string(info.dim) + "  (cochains " +
                    std::to_string(info.cochain_dim) + ", cocycles " + std::to_string(info.cocycle_dim) +
                    ", coboundaries " + std::to_string(info.coboundary_dim) + ")");
  }
  out.emit(doc, lines);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weight systems of symplectic Lie pairs"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::optional<std::uint64_t> seed;
  app.add_option("-o,--output", out.path, "Write the JSON result to this file");
  app.add_flag("--json", out.json, "Print the JSON result instead of a summary");
  app.add_option("--seed", seed, "Seed for randomized connections");

  std::string pair_source, connection_path, diagram_path, chord_path, module_path, module_connection_path;
  std::string relation, emit, coefficients = "trivial";
  std::optional<int> order, degree;
  bool torsion_free = false, symplectic = false, list = false;
  int origin = 0, check_order = 2;
  const char* pair_help = "Pair JSON file or catalog name";

  auto* validate = app.add_subcommand("validate", "Check the Lie pair axioms and the symplectic form");
  validate->add_option("pair", pair_source, pair_help)->required();

  auto* connection = app.add_subcommand("connection", "Build a connection extending the action of h");
  connection->add_option("pair", pair_source, pair_help)->required();
  connection->add_flag("--torsion-free", torsion_free, "Remove the torsion");
  connection->add_flag("--symplectic", symplectic, "Make omega parallel (implies --torsion-free)");

  auto* atiyah = app.add_subcommand("atiyah", "Atiyah cocycle and whether its class vanishes");
  atiyah->add_option("pair", pair_source, pair_help)->required();
  atiyah->add_option("--connection", connection_path, "Connection JSON file");

  auto* weight = app.add_subcommand("weight", "Weight class of trivalent diagrams");
  weight->add_option("pair", pair_source, pair_help)->required();
  weight->add_option("diagram", diagram_path, "Diagram JSON file");
  weight->add_option("-k,--k", order, "Order; without a diagram file, all diagrams of this order");
  weight->add_option("--connection", connection_path, "Connection JSON file");

  auto* chord = app.add_subcommand("chord", "Weight class of a chord diagram");
  chord->add_option("pair", pair_source, pair_help)->required();
  chord->add_option("chords", chord_path, "Chord diagram JSON file")->required();
  chord->add_option("--module", module_path, "Module JSON file (default: the quotient)");
  chord->add_option("--module-connection", module_connection_path, "Connection on the module");
  chord->add_option("--origin", origin, "Gap of the circle used as the origin");

  auto* check = app.add_subcommand("check", "Check a relation on all diagrams of an order");
  check->add_option("pair", pair_source, pair_help)->required();
  check->add_option("--relation", relation, "as, ihx, 4t or 1t")
      ->required()
      ->check(CLI::IsMember({"as", "ihx", "4t", "1t"}));
  check->add_option("--order", check_order, "Diagram order")->check(CLI::Range(0, 3));
  check->add_option("--connection", connection_path, "Connection JSON file");

  auto* examples = app.add_subcommand("examples", "Built-in symplectic pairs");
  examples->add_flag("--list", list, "List the catalog");
  examples->add_option("--emit", emit, "Print the pair JSON of a catalog entry");

  auto* cohom = app.add_subcommand("cohomology", "Dimensions of H^k(h, M)");
  cohom->add_option("pair", pair_source, pair_help)->required();
  cohom->add_option("--degree", degree, "Single degree (default: all)");
  cohom->add_option("--coefficients", coefficients, "trivial, quotient or dual")
      ->check(CLI::IsMember({"trivial", "quotient", "dual"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return cmd_validate(pair_source, out);
    if (*connection) return cmd_connection(pair_source, torsion_free, symplectic, seed, out);
    if (*atiyah) return cmd_atiyah(pair_source, connection_path, out);
    if (*weight) return cmd_weight(pair_source, diagram_path, order, connection_path, seed, out);
    if (*chord) return cmd_chord(pair_source, chord_path, module_path, module_connection_path, origin, out);
    if (*check) return cmd_check(pair_source, relation, check_order, connection_path, seed, out);
    if (*examples) return cmd_examples(list, emit, out);
    if (*cohom) return cmd_cohomology(pair_source, degree, coefficients, out);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const MathError& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kMathFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
