#include <deque>
#include <functional>
#include <string>

#include "antiflex/cli.hpp"

namespace antiflex::cli {

namespace fs = std::filesystem;
using Q = Rational;

namespace {

// One scoreboard line per equivalence; failures become witnesses naming the case.
class Board {
 public:
  Section& line(const std::string& name) {
    sections_.push_back(Section{name, "pass", 0, false, {}});
    return sections_.back();
  }
  static void violate(Section& s, std::string what) {
    s.status = "fail";
    ++s.violations;
    s.witnesses.push_back(WitnessRecord{std::move(what), {}, {}, nullptr});
  }
  static void expect(Section& s, bool ok, const std::string& what) {
    if (!ok) violate(s, what);
  }
  std::vector<Section> take() { return {sections_.begin(), sections_.end()}; }

 private:
  std::deque<Section> sections_;
};

struct Corpus {
  fs::path dir;
  json manifest;

  json doc(const json& entry, const char* key) const { return io::read_file(dir / entry.at(key).get<std::string>()); }
  std::string name(const json& entry) const { return entry.at("name").get<std::string>(); }
  const json& list(const char* key) const {
    static const json empty = json::array();
    return manifest.contains(key) ? manifest[key] : empty;
  }
};

bool passes(const CheckReport<Q>& r) { return r.passed(); }

}  // namespace

Report corpus_verify(const fs::path& dir, std::size_t max_witnesses) {
  (void)max_witnesses;
  if (!fs::is_directory(dir)) throw InputError("corpus directory " + dir.string() + " does not exist");
  if (!fs::exists(dir / "manifest.json")) throw InputError("no manifest.json in " + dir.string());
  Corpus c{dir, io::read_file(dir / "manifest.json")};
  std::size_t entries = 0;
  for (const auto& [key, value] : c.manifest.items())
    if (value.is_array()) entries += value.size();
  if (entries == 0) throw InputError("corpus manifest lists no fixtures");

  Report report{"", "check", "corpus", {}, {}, {}, nullptr, "", 0};
  Board board;

  // ---- algebras ----
  {
    auto& verdicts = board.line("axiom verdicts match manifest");
    auto& assoc = board.line("associative implies anti-flexible and flexible");
    auto& lie = board.line("anti-flexible algebras are Lie-admissible");
    for (const auto& e : c.list("algebras")) {
      const Algebra<Q> a = io::algebra_from_json(c.doc(e, "file"));
      const bool af = passes(check_axiom(a, Axiom::AntiFlexible, 1));
      const bool fl = passes(check_axiom(a, Axiom::Flexible, 1));
      const bool as = passes(check_axiom(a, Axiom::Associative, 1));
      const json& ex = e.at("expect");
      for (const auto& [axiom, got] : {std::pair{"anti-flexible", af}, {"flexible", fl}, {"associative", as}})
        if (ex.contains(axiom)) Board::expect(verdicts, ex[axiom].get<bool>() == got, c.name(e) + ": " + axiom);
      if (as) Board::expect(assoc, af && fl, c.name(e));
      if (af) Board::expect(lie, passes(check_lie_algebra(commutator_algebra(a), 1)), c.name(e));
    }
  }

  // ---- bimodules ----
  {
    auto& verdicts = board.line("bimodule verdicts match manifest");
    auto& semi = board.line("bimodule iff semidirect product anti-flexible");
    auto& dual = board.line("dual bimodule, double dual and Lie representation");
    for (const auto& e : c.list("bimodules")) {
      const Bimodule<Q> bm = io::bimodule_from_json(c.doc(e, "file"), c.dir);
      const bool ok = passes(check_bimodule(bm, 1));
      Board::expect(verdicts, e.at("expect").get<bool>() == ok, c.name(e));
      if (passes(check_axiom(bm.base(), Axiom::AntiFlexible, 1)))
        Board::expect(semi, ok == passes(check_axiom(semidirect_product(bm.base(), bm), Axiom::AntiFlexible, 1)),
                      c.name(e));
      if (ok) {
        const Bimodule<Q> d = dual_bimodule(bm);
        Board::expect(dual, dual_bimodule(d) == bm, c.name(e) + ": double dual");
        Board::expect(dual, passes(check_lie_representation(bm, 1)), c.name(e) + ": representation");
      }
    }
  }

  // ---- matched pairs ----
  {
    auto& verdicts = board.line("matched pair verdicts match manifest");
    auto& dbl = board.line("matched pair iff double anti-flexible");
    for (const auto& e : c.list("matched_pairs")) {
      const MatchedPairSpec<Q> mp = io::matched_pair_from_json(c.doc(e, "file"), c.dir);
      const bool ok = passes(check_matched_pair(mp, 1));
      Board::expect(verdicts, e.at("expect").get<bool>() == ok, c.name(e));
      Board::expect(dbl, ok == passes(check_axiom(build_double(mp), Axiom::AntiFlexible, 1)), c.name(e));
      if (e.value("standard", false)) {
        Board::expect(dbl, same(standard_matched_pair(mp.a, mp.b).l_a, mp.l_a), c.name(e) + ": not standard");
        Board::expect(dbl, ok == passes(check_dual_matched_conditions(mp.a, mp.b, 1)), c.name(e) + ": dual conditions");
      }
    }
  }

  // ---- Manin triples ----
  {
    auto& verdicts = board.line("Manin triple verdicts match manifest");
    auto& round = board.line("Manin triples standardize to an isomorphic standard triple");
    for (const auto& e : c.list("manin_triples")) {
      const ManinTripleSpec<Q> mt = io::manin_triple_from_json(c.doc(e, "file"), c.dir);
      const bool ok = passes(check_manin_triple(mt, 1));
      Board::expect(verdicts, e.at("expect").get<bool>() == ok, c.name(e));
      if (!ok) continue;
      const StandardForm<Q> sf = standardize_manin(mt);
      const auto [d, form] = build_standard_manin(sf.plus, sf.dual);
      Board::expect(round, change_basis(mt.big, sf.embedding) == d, c.name(e) + ": product");
      Board::expect(round, same(Matrix<Q>(sf.embedding.transpose() * mt.form.matrix() * sf.embedding), form.matrix()),
                    c.name(e) + ": form");
    }
  }

  // ---- bialgebras: the three verdicts are reported separately, then compared ----
  {
    auto& codual = board.line("co-anti-flexibility iff dual product anti-flexible");
    auto& bi = board.line("bialgebra verdicts match manifest");
    auto& manin = board.line("standard Manin triple verdicts match manifest");
    auto& matched = board.line("standard matched pair verdicts match manifest");
    auto& agree = board.line("bialgebra, Manin triple and matched pair agree");
    auto& dual = board.line("dual bialgebra is involutive; induced Lie bialgebra holds");
    for (const auto& e : c.list("bialgebras")) {
      const Algebra<Q> a = io::algebra_from_json(c.doc(e, "algebra"));
      const Comultiplication<Q> d = io::comultiplication_from_json(c.doc(e, "delta"));
      if (d.dim() != a.dim()) throw InputError(c.name(e) + ": comultiplication dimension mismatch");
      const Algebra<Q> astar = dual_product(d);
      bool zero = true;
      for (const auto& t : e_delta_residual(d)) zero = zero && t.is_zero();
      Board::expect(codual, zero == passes(check_axiom(astar, Axiom::AntiFlexible, 1)), c.name(e));
      const bool expect = e.at("expect").get<bool>();
      const bool v1 = passes(check_bialgebra(a, d, 1));
      const bool v2 = passes(check_manin_triple(standard_manin_triple(a, astar), 1));
      const bool v3 = passes(check_matched_pair(standard_matched_pair(a, astar), 1));
      Board::expect(bi, v1 == expect, c.name(e));
      Board::expect(manin, v2 == expect, c.name(e));
      Board::expect(matched, v3 == expect, c.name(e));
      Board::expect(agree, v1 == v2 && v2 == v3, c.name(e));
      if (!v1) {
        report.notes.push_back(c.name(e) + ": not a bialgebra; dual and Lie checks skipped");
        continue;
      }
      const auto [a2, g2] = dual_bialgebra(a, d);
      const auto [a3, g3] = dual_bialgebra(a2, g2);
      Board::expect(dual, a3 == a && g3 == d, c.name(e) + ": double dual");
      Board::expect(dual, passes(induced_lie_bialgebra(a, d, 1)), c.name(e) + ": Lie bialgebra");
    }
  }

  // ---- r-tensors ----
  {
    auto& cob = board.line("cocommutator conditions iff coboundary bialgebra");
    auto& sigma = board.line("flip of the coboundary equals the sigma formula");
    auto& crit = board.line("tensor, operator-form and cyclic criteria agree");
    auto& perm = board.line("N, P, Q are permutations of M");
    auto& inv = board.line("nondegenerate skew solutions are invertible O-operators");
    for (const auto& e : c.list("r_tensors")) {
      const Algebra<Q> a = io::algebra_from_json(c.doc(e, "algebra"));
      const Tensor2<Q> r = io::rtensor_from_json(c.doc(e, "r"));
      if (r.rows() != a.dim()) throw InputError(c.name(e) + ": r dimension mismatch");
      const Comultiplication<Q> d = coboundary_delta(a, r);
      Board::expect(cob, passes(check_cocommutator_conditions(a, r, 1)) == passes(check_bialgebra(a, d, 1)),
                    c.name(e));
      Board::expect(sigma, flipped(d) == sigma_coboundary_delta(a, r), c.name(e));
      const MNPQ<Q> t = mnpq(a, r);
      Board::expect(perm, t.n == -perm3(t.m, Perm3::S13) && t.p == perm3(t.m, Perm3::S12) &&
                              t.q == -perm3(t.m, Perm3::S12S13),
                    c.name(e));
      if (!is_skew_symmetric(r)) continue;
      const bool zero = afybe_residual(a, r).is_zero();
      Board::expect(crit, zero == passes(operator_form_residual(a, r, 1)), c.name(e) + ": operator form");
      Board::expect(crit, zero == t.m.is_zero(), c.name(e) + ": M");
      if (!is_invertible(r)) continue;
      Board::expect(crit, zero == passes(omega_correspondence(a, r, 1).second), c.name(e) + ": cyclic");
      if (!zero || !passes(check_axiom(a, Axiom::AntiFlexible, 1))) continue;
      const Bimodule<Q> coreg = dual_bimodule(regular_bimodule(a));
      const Matrix<Q> rho = tensor2_as_map(r);
      Board::expect(inv, passes(check_o_operator(rho, coreg, 1)), c.name(e));
      Board::expect(inv, associated_algebra(pre_from_invertible_o(a, rho, coreg)) == a, c.name(e) + ": sum");
    }
  }

  // ---- O-operators ----
  {
    auto& verdicts = board.line("O-operator verdicts match manifest");
    auto& sol = board.line("O-operator iff T - σT solves the equation");
    for (const auto& e : c.list("o_operators")) {
      const Matrix<Q> t = io::linear_op_from_json(c.doc(e, "operator"));
      const Bimodule<Q> bm = io::bimodule_from_json(c.doc(e, "bimodule"), c.dir);
      const bool ok = passes(check_o_operator(t, bm, 1));
      Board::expect(verdicts, e.at("expect").get<bool>() == ok, c.name(e));
      const auto [w, r] = solution_from_o_operator(t, bm);
      Board::expect(sol, ok == afybe_residual(w, r).is_zero(), c.name(e));
    }
  }

  // ---- pre-anti-flexible algebras ----
  {
    auto& verdicts = board.line("pre-anti-flexible verdicts match manifest");
    auto& sum = board.line("sum product is anti-flexible (associative when dendriform)");
    auto& canon = board.line("canonical solution equals the identity O-operator solution");
    for (const auto& e : c.list("pre_algebras")) {
      const PreAlgebra<Q> p = io::pre_algebra_from_json(c.doc(e, "file"));
      const auto res = check_pre_anti_flexible(p, 1);
      Board::expect(verdicts, e.at("expect").get<bool>() == res.identities.passed(), c.name(e));
      if (e.contains("dendriform"))
        Board::expect(verdicts, e["dendriform"].get<bool>() == res.dendriform.passed(), c.name(e) + ": dendriform");
      if (!res.identities.passed()) continue;
      const Algebra<Q> a = associated_algebra(p);
      Board::expect(sum, passes(check_axiom(a, Axiom::AntiFlexible, 1)), c.name(e));
      if (res.dendriform.passed()) Board::expect(sum, passes(check_axiom(a, Axiom::Associative, 1)), c.name(e));
      const auto [w1, r1] = canonical_solution(p);
      const Matrix<Q> id = Matrix<Q>::Identity(p.dim(), p.dim());
      const auto [w2, r2] = solution_from_o_operator(id, pre_bimodule(p));
      Board::expect(canon, w1 == w2 && same(r1, r2), c.name(e));
      Board::expect(canon, pre_from_o_operator(id, pre_bimodule(p)) == p, c.name(e) + ": pre-structure round trip");
    }
  }

  // ---- forms ----
  {
    auto& round = board.line("pre-structure from a cyclic form sums to the algebra");
    for (const auto& e : c.list("forms")) {
      const Algebra<Q> a = io::algebra_from_json(c.doc(e, "algebra"));
      const BilinearForm<Q> omega = io::form_from_json(c.doc(e, "omega"));
      const PreAlgebra<Q> p = pre_from_omega(a, omega);
      Board::expect(round, associated_algebra(p) == a && check_pre_anti_flexible(p, 1).identities.passed(),
                    c.name(e));
    }
  }

  report.sections = board.take();
  settle(report);
  return report;
}

}  // namespace antiflex::cli
