#include "support.hpp"
#include "rwpair/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace testing;

namespace {

std::string error_pointer(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.pointer();
  }
  return "<no error>";
}

Json small_pair() {
  return Json::parse(R"({"dim": 2, "sub_dim": 1,
                         "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "1/2"}}]})");
}

}  // namespace

TEST_CASE("scalars are written as reduced rational strings") {
  Scalar six_fourths(6, 4);
  six_fourths.canonicalize();
  CHECK(scalar_to_json(six_fourths) == "3/2");
  CHECK(scalar_to_json(Scalar(-3)) == "-3");
  CHECK(scalar_from_json("-10/4") == Scalar(-5, 2));
  CHECK(scalar_from_json(7) == Scalar(7));
  CHECK(error_pointer([] { scalar_from_json("1/0", "/x"); }) == "/x");
  CHECK(error_pointer([] { scalar_from_json(0.5, "/y"); }) == "/y");
  std::mt19937_64 rng(71);
  for (int t = 0; t < 50; ++t) {
    const Scalar s = random_scalar(rng, 50, 17);
    CHECK(scalar_from_json(scalar_to_json(s)) == s);
  }
}

TEST_CASE("catalog pairs and forms round trip") {
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    const Json j = pair_file_to_json(*e.pair, e.omega.matrix());
    const PairFile back = pair_file_from_json(Json::parse(j.dump()));
    CHECK(*back.pair == *e.pair);
    REQUIRE(back.omega.has_value());
    CHECK(*back.omega == e.omega.matrix());
    CHECK(omega_from_json(omega_to_json(e.omega.matrix())) == e.omega.matrix());
  }
}

TEST_CASE("non-antisymmetric structure constants survive a round trip") {
  StructureConstants g(3);
  g.set_bracket(0, 1, 2, Scalar(1));
  g.set_bracket(0, 2, 1, Scalar(-2, 3));
  g.set_raw(1, 0, 2, Scalar(5));
  g.set_raw(2, 2, 0, Scalar(1, 7));
  const LiePair p(g, 1);
  const LiePair back = pair_from_json(pair_to_json(p));
  CHECK(back == p);
  CHECK(back.c(1, 0, 2) == 5);
  CHECK(back.c(0, 1, 2) == 1);
}

TEST_CASE("connections and modules round trip") {
  std::mt19937_64 rng(72);
  const CatalogEntry e = catalog_entry("sl3-min");
  const Connection c = random_extend_action_connection(e.pair, rng);
  const Json cj = connection_to_json(c);
  // gamma is indexed [i][in][out].
  CHECK(scalar_from_json(cj["gamma"][5][1][3]) == c.op(5)(3, 1));
  CHECK(connection_from_json(e.pair, cj) == c);

  const ModuleRep q = quotient_rep(e.pair);
  const ModuleRep back = module_from_json(e.pair, module_to_json(q));
  REQUIRE(back.dim() == q.dim());
  for (int a = 0; a < e.pair->sub_dim(); ++a) CHECK(back.matrix(a) == q.matrix(a));
  const Connection ce = random_extend_action_connection(back, rng);
  CHECK(connection_from_json(back, connection_to_json(ce)) == ce);
}

TEST_CASE("diagrams round trip") {
  for (const TrivalentDiagram& d : enumerate_trivalent(2)) CHECK(diagram_from_json(diagram_to_json(d)) == d);
  for (const ChordDiagram& c : enumerate_chord(3)) CHECK(chord_from_json(chord_to_json(c)) == c);
}

TEST_CASE("cochains round trip") {
  std::mt19937_64 rng(73);
  CochainForm f(4, 2, {2, 3});
  for (const FormIndex& idx : increasing_tuples(4, 2)) f.add(idx, random_tensor(rng, {2, 3}));
  CHECK(cochain_from_json(cochain_to_json(f)) == f);
  const CochainForm zero(3, 1, {});
  CHECK(cochain_from_json(cochain_to_json(zero)) == zero);
}

TEST_CASE("weight class output records the class") {
  std::mt19937_64 rng(74);
  const CatalogEntry e = catalog_entry("sl3-min");
  const WeightClass w = weight_class(random_symplectic(e, rng), e.omega, theta_diagram());
  const Json j = weight_class_to_json(w);
  CHECK(cochain_from_json(j["cocycle"]) == w.cocycle);
  CHECK(j["cohomology_dim"] == 0);
  CHECK(j["class_vanishes"] == true);
}

TEST_CASE("malformed input reports the offending location") {
  CHECK(error_pointer([] { pair_from_json(Json::parse(R"({"dim": 2, "brackets": []})")); }) == "/sub_dim");
  CHECK(error_pointer([] { pair_from_json(Json::parse(R"({"dim": 2, "sub_dim": 3, "brackets": []})")); }) ==
        "/sub_dim");
  CHECK(error_pointer([] {
          pair_from_json(Json::parse(R"({"dim": 2, "sub_dim": 1,
                                         "brackets": [{"i": 0, "j": 1, "coeffs": {"7": "1"}}]})"));
        }) == "/brackets/0/coeffs/7");
  CHECK(error_pointer([] {
          pair_from_json(Json::parse(R"({"dim": 2, "sub_dim": 1,
                                         "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "x"}}]})"));
        }) == "/brackets/0/coeffs/1");
  CHECK(error_pointer([] {
          Json j = small_pair();
          j["omega"] = Json::parse(R"([["0", "1"]])");
          pair_file_from_json(j);
        }) == "/omega");

  const PairPtr p = std::make_shared<const LiePair>(pair_from_json(small_pair()));
  CHECK(error_pointer([&] { connection_from_json(p, Json::parse(R"({"gamma": [[["0"]]]})")); }) == "/gamma");
  CHECK(error_pointer([&] { module_from_json(p, Json::parse(R"({"dim": 1, "action": []})")); }) == "/action");

  CHECK(error_pointer([] {
          diagram_from_json(Json::parse(R"({"vertices": 2, "flag_vertex": [0,0,0,1,1,1],
                                            "edges": [[0,3],[1,4],[2,9]], "cyclic": [[0,1,2],[3,4,5]]})"));
        }) == "/edges/2/1");
  // Structurally valid JSON that is not a diagram is reported at the root.
  CHECK(error_pointer([] {
          diagram_from_json(Json::parse(R"({"vertices": 2, "flag_vertex": [0,0,0,1,1,1],
                                            "edges": [[0,3],[1,4],[2,4]], "cyclic": [[0,1,2],[3,4,5]]})"));
        }) == "");
  CHECK(error_pointer([] { chord_from_json(Json::parse(R"({"points": 4, "chords": [[0,1]]})")); }) == "");
  CHECK(error_pointer([] {
          cochain_from_json(Json::parse(R"({"dim_h": 3, "degree": 2, "value_shape": [],
                                            "components": [{"index": [1, 0], "entries": []}]})"));
        }) == "/components/0/index");
}

TEST_CASE("files are read and parse errors are reported") {
  const std::string path = "rwpair_io_test.json";
  {
    std::ofstream out(path);
    out << small_pair().dump();
  }
  CHECK(pair_from_json(read_json_file(path)).dim() == 2);
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(read_json_file(path), InputError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_json_file("does/not/exist.json"), InputError);
}
