// Writes the fixture corpus and its manifest into the directory given as the only argument.

#include <filesystem>
#include <iostream>

#include "antiflex/fixtures.hpp"
#include "antiflex/io/json_io.hpp"

namespace fs = std::filesystem;
using namespace antiflex;
using Q = Rational;
using json = nlohmann::json;

namespace {

Bimodule<Q> bad_a1() {
  Matrix<Q> l(1, 1), r(1, 1);
  l(0, 0) = Q(1);
  r(0, 0) = Q(2);
  return Bimodule<Q>(fixtures::a1(), 1, {l}, {r});
}

Tensor2<Q> z2_r() {
  Tensor2<Q> r(2, 2);
  r << Q(1), Q(2), Q(-1), Q(0);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus DIR\n";
    return 2;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir);
  const auto put = [&](const std::string& file, const json& j) { io::write_file(dir / file, j); };

  put("A1.json", io::algebra_to_json(fixtures::a1()));
  put("Z2.json", io::algebra_to_json(fixtures::z2()));
  put("AF2.json", io::algebra_to_json(fixtures::af2()));
  put("W2.json", io::algebra_to_json(fixtures::w2()));
  put("W2_dual.json", io::algebra_to_json(fixtures::w2_dual()));

  put("B1.json", io::bimodule_to_json(fixtures::b1(), "A1.json"));
  put("bad_A1.json", io::bimodule_to_json(bad_a1(), "A1.json"));
  put("AF2_regular.json", io::bimodule_to_json(regular_bimodule(fixtures::af2()), "AF2.json"));
  put("D1_pre_bimodule.json", io::bimodule_to_json(pre_bimodule(fixtures::d1()), "A1.json"));

  const Algebra<Q> af2 = fixtures::af2(), z2 = fixtures::z2();
  std::vector<Matrix<Q>> zero_a(2, Matrix<Q>::Zero(2, 2));
  put("AF2_Z2_zero.json", io::matched_pair_to_json(MatchedPairSpec<Q>{af2, z2, zero_a, zero_a, zero_a, zero_a}));
  put("W2_standard.json", io::matched_pair_to_json(standard_matched_pair(fixtures::w2(), fixtures::w2_dual())));
  put("AF2_AF2_standard.json", io::matched_pair_to_json(standard_matched_pair(af2, af2)));
  put("W2_manin.json", io::manin_triple_to_json(standard_manin_triple(fixtures::w2(), fixtures::w2_dual())));

  put("delta1.json", io::comultiplication_to_json(fixtures::delta1()));
  put("delta_zero2.json", io::comultiplication_to_json(Comultiplication<Q>(2)));
  put("AF2_coboundary.json", io::comultiplication_to_json(coboundary_delta(af2, fixtures::af2_r())));
  put("r_star.json", io::rtensor_to_json(fixtures::r_star()));
  put("AF2_r.json", io::rtensor_to_json(fixtures::af2_r()));
  put("Z2_r.json", io::rtensor_to_json(z2_r()));
  put("D1.json", io::pre_algebra_to_json(fixtures::d1()));
  put("P1.json", io::pre_algebra_to_json(fixtures::p1()));
  put("id1.json", io::linear_op_to_json(Matrix<Q>::Identity(1, 1)));
  put("id2.json", io::linear_op_to_json(Matrix<Q>::Identity(2, 2)));
  put("omega_W2.json", io::form_to_json(omega_correspondence(fixtures::w2(), fixtures::r_star()).first));

  const auto axioms = [](bool af, bool fl, bool as) {
    return json{{"anti-flexible", af}, {"flexible", fl}, {"associative", as}};
  };
  json m;
  m["algebras"] = {
      {{"name", "A1"}, {"file", "A1.json"}, {"expect", axioms(true, true, true)}},
      {{"name", "Z2"}, {"file", "Z2.json"}, {"expect", axioms(true, true, true)}},
      {{"name", "AF2"}, {"file", "AF2.json"}, {"expect", axioms(true, false, false)}},
      {{"name", "W2"}, {"file", "W2.json"}, {"expect", axioms(true, true, true)}},
      {{"name", "W2*"}, {"file", "W2_dual.json"}, {"expect", axioms(true, true, true)}},
  };
  m["bimodules"] = {
      {{"name", "B1"}, {"file", "B1.json"}, {"expect", true}},
      {{"name", "bad_A1"}, {"file", "bad_A1.json"}, {"expect", false}},
      {{"name", "AF2 regular"}, {"file", "AF2_regular.json"}, {"expect", true}},
      {{"name", "D1 pre-bimodule"}, {"file", "D1_pre_bimodule.json"}, {"expect", true}},
  };
  m["matched_pairs"] = {
      {{"name", "AF2, Z2 with zero actions"}, {"file", "AF2_Z2_zero.json"}, {"expect", true}},
      {{"name", "W2, W2* standard"}, {"file", "W2_standard.json"}, {"expect", true}, {"standard", true}},
      {{"name", "AF2, AF2 standard"}, {"file", "AF2_AF2_standard.json"}, {"expect", false}, {"standard", true}},
  };
  m["manin_triples"] = {{{"name", "W2 double"}, {"file", "W2_manin.json"}, {"expect", true}}};
  m["bialgebras"] = {
      {{"name", "W2, delta1"}, {"algebra", "W2.json"}, {"delta", "delta1.json"}, {"expect", true}},
      {{"name", "AF2, zero"}, {"algebra", "AF2.json"}, {"delta", "delta_zero2.json"}, {"expect", true}},
      {{"name", "AF2, coboundary of AF2_r"}, {"algebra", "AF2.json"}, {"delta", "AF2_coboundary.json"},
       {"expect", false}},
  };
  m["r_tensors"] = {
      {{"name", "W2, r_star"}, {"algebra", "W2.json"}, {"r", "r_star.json"}},
      {{"name", "AF2, AF2_r"}, {"algebra", "AF2.json"}, {"r", "AF2_r.json"}},
      {{"name", "Z2, Z2_r"}, {"algebra", "Z2.json"}, {"r", "Z2_r.json"}},
  };
  m["o_operators"] = {
      {{"name", "identity on D1 pre-bimodule"}, {"operator", "id1.json"}, {"bimodule", "D1_pre_bimodule.json"},
       {"expect", true}},
      {{"name", "identity on AF2 regular"}, {"operator", "id2.json"}, {"bimodule", "AF2_regular.json"},
       {"expect", false}},
  };
  m["pre_algebras"] = {
      {{"name", "D1"}, {"file", "D1.json"}, {"expect", true}, {"dendriform", true}},
      {{"name", "P1"}, {"file", "P1.json"}, {"expect", true}},
  };
  m["forms"] = {{{"name", "W2, omega"}, {"algebra", "W2.json"}, {"omega", "omega_W2.json"}}};
  put("manifest.json", m);
  return 0;
}
