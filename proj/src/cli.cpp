#include "antiflex/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>

namespace antiflex::cli {

namespace fs = std::filesystem;
using Q = Rational;

namespace {

struct Options {
  std::size_t max_witnesses = kDefaultMaxWitnesses;
  bool json_output = false;
  bool quiet = false;
};

// A build that fails its own postcondition; carries the witnesses that show it.
struct PostconditionFailure {
  Section section;
};

struct Loaded {
  json doc;
  fs::path dir;
};

Loaded load(const std::string& path) { return {io::read_file(path), fs::path(path).parent_path()}; }

Section section(std::string name, const CheckReport<Q>& r, const std::vector<std::string>& names) {
  return make_section(std::move(name), r, uniform_labels(names));
}

Section failed_section(std::string name, std::string relation) {
  return Section{std::move(name), "fail", 1, false, {WitnessRecord{std::move(relation), {}, {}, nullptr}}};
}

void require(const CheckReport<Q>& r, const std::string& name, const std::vector<std::string>& names = {}) {
  if (!r.passed()) throw PostconditionFailure{section(name, r, names)};
}

// Writes artifacts only after every postcondition has passed.
void emit_artifacts(Report& report, const std::vector<std::string>& outputs, std::vector<json> docs) {
  if (outputs.empty()) {
    report.artifacts = docs.size() == 1 ? docs.front() : json(docs);
    return;
  }
  if (outputs.size() != docs.size())
    throw InputError("this build produces " + std::to_string(docs.size()) + " output(s), -o gave " +
                     std::to_string(outputs.size()));
  for (std::size_t i = 0; i < docs.size(); ++i) io::write_file(outputs[i], docs[i]);
  report.outputs = outputs;
}

std::string plain(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + plain(j[i]);
    return s + "]";
  }
  return j.dump();
}

void print_human(const Report& r, std::ostream& out) {
  std::string status = r.status;
  std::transform(status.begin(), status.end(), status.begin(), ::toupper);
  out << r.verb << ' ' << r.target << ": " << status;
  if (r.status == "error") out << " (" << r.message << ')';
  out << '\n';
  for (const auto& s : r.sections) {
    out << "  " << s.name << ": " << s.status;
    if (s.status != "pass") out << " (" << s.violations << " violation" << (s.violations == 1 ? "" : "s") << ')';
    if (s.short_circuited) out << " [hypothesis failed; later stages skipped]";
    out << '\n';
    for (const auto& w : s.witnesses) {
      out << "    " << w.relation;
      if (!w.indices.empty()) {
        out << " at (";
        for (std::size_t i = 0; i < w.indices.size(); ++i) {
          if (i) out << ',';
          if (i < w.labels.size()) out << w.labels[i];
          else out << w.indices[i];
        }
        out << ')';
      }
      const std::string res = plain(w.residual);
      if (!res.empty()) out << ": " << res;
      out << '\n';
    }
  }
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
  for (const auto& o : r.outputs) out << "  wrote " << o << '\n';
  if (r.artifacts.is_null()) return;
  if (r.verb == "check") out << "  computed: " << r.artifacts.dump() << '\n';
  else out << r.artifacts.dump(2) << '\n';
}

std::optional<Axiom> parse_axiom(const std::string& s) {
  if (s == "anti-flexible") return Axiom::AntiFlexible;
  if (s == "flexible") return Axiom::Flexible;
  if (s == "associative") return Axiom::Associative;
  return std::nullopt;
}

// Labels for matched-pair witnesses depend on which space each index ranges over.
Labeler matched_labels(const MatchedPairSpec<Q>& mp) {
  const auto& an = mp.a.basis_names();
  const auto& bn = mp.b.basis_names();
  return [an, bn](const Witness<Q>& w) {
    const auto ends_with = [&](const std::string& suffix) {
      return w.relation.size() >= suffix.size() &&
             w.relation.compare(w.relation.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    std::vector<const std::vector<std::string>*> spaces;
    if (w.relation == "action-compat-1" || w.relation == "action-compat-3") spaces = {&an, &an, &bn};
    else if (w.relation == "action-compat-2" || w.relation == "action-compat-4") spaces = {&an, &bn, &bn};
    else if (ends_with("(A)") || ends_with("(lA,rA)")) spaces.assign(w.indices.size(), &an);
    else spaces.assign(w.indices.size(), &bn);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < w.indices.size() && i < spaces.size(); ++i) {
      const auto& names = *spaces[i];
      const auto k = static_cast<std::size_t>(w.indices[i]);
      if (k >= names.size()) return std::vector<std::string>{};
      out.push_back(names[k]);
    }
    return out;
  };
}

// ---- check verbs ----

Report check_algebra(const std::string& path, const std::vector<std::string>& axioms, const Options& o) {
  const Algebra<Q> a = io::algebra_from_json(load(path).doc);
  Report r{"", "check", "algebra", {}, {}, {}, nullptr, "", 0};
  for (const auto& name : axioms) {
    if (name == "lie-admissible") {
      r.sections.push_back(section("lie-admissible", check_lie_algebra(commutator_algebra(a), o.max_witnesses),
                                   a.basis_names()));
      continue;
    }
    const auto axiom = parse_axiom(name);
    if (!axiom) throw InputError("unknown axiom '" + name + "'");
    r.sections.push_back(section(name, check_axiom(a, *axiom, o.max_witnesses), a.basis_names()));
  }
  return r;
}

Report check_bimodule_cmd(const std::string& path, bool lie, const Options& o) {
  const Loaded in = load(path);
  const Bimodule<Q> bm = io::bimodule_from_json(in.doc, in.dir);
  Report r{"", "check", "bimodule", {}, {}, {}, nullptr, "", 0};
  r.sections.push_back(section("bimodule", check_bimodule(bm, o.max_witnesses), bm.base().basis_names()));
  if (lie)
    r.sections.push_back(section("lie representation", check_lie_representation(bm, o.max_witnesses),
                                 bm.base().basis_names()));
  return r;
}

Report check_matched_cmd(const std::string& path, const Options& o) {
  const Loaded in = load(path);
  const MatchedPairSpec<Q> mp = io::matched_pair_from_json(in.doc, in.dir);
  Report r{"", "check", "matched-pair", {}, {}, {}, nullptr, "", 0};
  const auto report = check_matched_pair(mp, o.max_witnesses);
  r.sections.push_back(make_section("matched pair", report, matched_labels(mp)));
  const Algebra<Q> d = build_double(mp);
  const auto dr = check_axiom(d, Axiom::AntiFlexible, o.max_witnesses);
  r.sections.push_back(section("double anti-flexible", dr, d.basis_names()));
  if (report.passed() != dr.passed()) r.notes.push_back("ANOMALY: matched-pair verdict differs from the double");
  return r;
}

Report check_manin_cmd(const std::string& path, const Options& o) {
  const Loaded in = load(path);
  const ManinTripleSpec<Q> mt = io::manin_triple_from_json(in.doc, in.dir);
  Report r{"", "check", "manin-triple", {}, {}, {}, nullptr, "", 0};
  r.sections.push_back(section("manin triple", check_manin_triple(mt, o.max_witnesses), mt.big.basis_names()));
  return r;
}

Report check_bialgebra_cmd(const std::string& apath, const std::string& dpath, bool lie, const Options& o) {
  const Algebra<Q> a = io::algebra_from_json(load(apath).doc);
  const Comultiplication<Q> d = io::comultiplication_from_json(load(dpath).doc);
  Report r{"", "check", "bialgebra", {}, {}, {}, nullptr, "", 0};
  const auto report = check_bialgebra(a, d, o.max_witnesses);
  r.sections.push_back(section("bialgebra", report, a.basis_names()));
  if (lie) {
    if (report.passed())
      r.sections.push_back(section("induced Lie bialgebra", induced_lie_bialgebra(a, d, o.max_witnesses),
                                   a.basis_names()));
    else
      r.notes.push_back("induced Lie bialgebra not checked: input is not a bialgebra");
  }
  return r;
}

Report check_afybe_cmd(const std::string& apath, const std::string& rpath, bool op_form, bool omega,
                       const Options& o) {
  const Algebra<Q> a = io::algebra_from_json(load(apath).doc);
  const Tensor2<Q> t = io::rtensor_from_json(load(rpath).doc);
  if (t.rows() != a.dim()) throw InputError("r-tensor dimension does not match algebra");
  Report r{"", "check", "afybe", {}, {}, {}, nullptr, "", 0};
  const auto res = check_afybe(a, t, o.max_witnesses);
  r.sections.push_back(section("afybe", res, a.basis_names()));
  if (op_form) {
    const auto of = operator_form_residual(a, t, o.max_witnesses);
    r.sections.push_back(section("operator form", of, a.basis_names()));
    if (of.passed() != res.passed()) r.notes.push_back("ANOMALY: operator form disagrees with the tensor residual");
  }
  if (omega) {
    const auto [form, cyc] = omega_correspondence(a, t, o.max_witnesses);
    r.sections.push_back(section("cyclic omega", cyc, a.basis_names()));
    r.artifacts = io::form_to_json(form);
    if (cyc.passed() != res.passed()) r.notes.push_back("ANOMALY: cyclic identity disagrees with the tensor residual");
  }
  return r;
}

Report check_pre_cmd(const std::string& path, const Options& o) {
  const PreAlgebra<Q> p = io::pre_algebra_from_json(load(path).doc);
  Report r{"", "check", "pre-anti-flexible", {}, {}, {}, nullptr, "", 0};
  const auto res = check_pre_anti_flexible(p, o.max_witnesses);
  r.sections.push_back(section("pre-anti-flexible", res.identities, {}));
  r.notes.push_back(std::string("dendriform: ") + (res.dendriform.passed() ? "yes" : "no"));
  return r;
}

Report check_o_cmd(const std::string& tpath, const std::string& bpath, const Options& o) {
  const Matrix<Q> t = io::linear_op_from_json(load(tpath).doc);
  const Loaded in = load(bpath);
  const Bimodule<Q> bm = io::bimodule_from_json(in.doc, in.dir);
  Report r{"", "check", "o-operator", {}, {}, {}, nullptr, "", 0};
  r.sections.push_back(section("O-operator", check_o_operator(t, bm, o.max_witnesses), {}));
  return r;
}

Report check_rb_cmd(const std::string& apath, const std::string& tpath, const Options& o) {
  const Algebra<Q> a = io::algebra_from_json(load(apath).doc);
  const Matrix<Q> t = io::linear_op_from_json(load(tpath).doc);
  Report r{"", "check", "rota-baxter", {}, {}, {}, nullptr, "", 0};
  r.sections.push_back(section("Rota-Baxter", check_rota_baxter(a, t, o.max_witnesses), a.basis_names()));
  return r;
}

// ---- build verbs ----

Report build_semidirect(const std::string& path, const std::vector<std::string>& outs, const Options& o) {
  const Loaded in = load(path);
  const Bimodule<Q> bm = io::bimodule_from_json(in.doc, in.dir);
  Report r{"", "build", "semidirect", {}, {}, {}, nullptr, "", 0};
  const Algebra<Q> w = semidirect_product(bm.base(), bm);
  const auto af = check_axiom(w, Axiom::AntiFlexible, o.max_witnesses);
  require(af, "semidirect product anti-flexible", w.basis_names());
  r.sections.push_back(section("semidirect product anti-flexible", af, w.basis_names()));
  emit_artifacts(r, outs, {io::algebra_to_json(w)});
  return r;
}

Report build_double_cmd(const std::string& path, const std::vector<std::string>& outs, const Options& o) {
  const Loaded in = load(path);
  const MatchedPairSpec<Q> mp = io::matched_pair_from_json(in.doc, in.dir);
  Report r{"", "build", "double", {}, {}, {}, nullptr, "", 0};
  const Algebra<Q> d = build_double(mp);
  const auto af = check_axiom(d, Axiom::AntiFlexible, o.max_witnesses);
  require(af, "double anti-flexible", d.basis_names());
  r.sections.push_back(section("double anti-flexible", af, d.basis_names()));
  emit_artifacts(r, outs, {io::algebra_to_json(d)});
  return r;
}

Report build_standard_manin_cmd(const std::string& apath, const std::string& spath,
                                const std::vector<std::string>& outs, const Options& o) {
  const Algebra<Q> a = io::algebra_from_json(load(apath).doc);
  const Algebra<Q> s = io::algebra_from_json(load(spath).doc);
  Report r{"", "build", "standard-manin", {}, {}, {}, nullptr, "", 0};
  const ManinTripleSpec<Q> mt = standard_manin_triple(a, s);
  const auto check = check_manin_triple(mt, o.max_witnesses);
  require(check, "manin triple");
  r.sections.push_back(section("manin triple", check, {}));
  emit_artifacts(r, outs, {io::manin_triple_to_json(mt)});
  return r;
}

Report build_coboundary_cmd(const std::string& apath, const std::string& rpath,
                            const std::vector<std::string>& outs, const Options& o) {
  const Algebra<Q> a = io::algebra_from_json(load(apath).doc);
  const Tensor2<Q> t = io::rtensor_from_json(load(rpath).doc);
  Report r{"", "build", "coboundary-delta", {}, {}, {}, nullptr, "", 0};
  const Comultiplication<Q> d = coboundary_delta(a, t);
  CheckReport<Q> sigma(o.max_witnesses);
  const Comultiplication<Q> sd = sigma_coboundary_delta(a, t);
  for (Index k = 0; k < a.dim(); ++k)
    sigma.expect_zero("flip matches sigma formula", {k}, Matrix<Q>(flip(d(k)) - sd(k)));
  require(sigma, "sigma formula", a.basis_names());
  r.sections.push_back(section("sigma formula", sigma, a.basis_names()));
  emit_artifacts(r, outs, {io::comultiplication_to_json(d)});
  return r;
}

Report build_dual_bialgebra_cmd(const std::string& apath, const std::string& dpath,
                                const std::vector<std::string>& outs, const Options& o) {
  const Algebra<Q> a = io::algebra_from_json(load(apath).doc);
  const Comultiplication<Q> d = io::comultiplication_from_json(load(dpath).doc);
  Report r{"", "build", "dual-bialgebra", {}, {}, {}, nullptr, "", 0};
  if (!check_bialgebra(a, d, 1).passed())
    throw PreconditionError("dual-bialgebra: input is not an anti-flexible bialgebra");
  const Algebra<Q> astar = dual_product(d);
  const Comultiplication<Q> gamma = comultiplication_from_product(a);
  const auto check = check_bialgebra(astar, gamma, o.max_witnesses);
  require(check, "dual bialgebra");
  r.sections.push_back(section("dual bialgebra", check, {}));
  emit_artifacts(r, outs, {io::algebra_to_json(astar), io::comultiplication_to_json(gamma)});
  return r;
}

Report build_solution_from_o_cmd(const std::string& tpath, const std::string& bpath,
                                 const std::vector<std::string>& outs, const Options& o) {
  const Matrix<Q> t = io::linear_op_from_json(load(tpath).doc);
  const Loaded in = load(bpath);
  const Bimodule<Q> bm = io::bimodule_from_json(in.doc, in.dir);
  Report r{"", "build", "solution-from-o", {}, {}, {}, nullptr, "", 0};
  const auto [w, rt] = solution_from_o_operator(t, bm);
  const auto is_o = check_o_operator(t, bm, o.max_witnesses);
  const auto res = check_afybe(w, rt, o.max_witnesses);
  if (is_o.passed() != res.passed() || !is_skew_symmetric(rt))
    throw PostconditionFailure{failed_section("equivalence", "O-operator verdict differs from AFYBE residual")};
  r.sections.push_back(section("O-operator", is_o, {}));
  r.sections.push_back(section("afybe", res, w.basis_names()));
  emit_artifacts(r, outs, {io::algebra_to_json(w), io::rtensor_to_json(rt)});
  return r;
}

Report build_canonical_cmd(const std::string& path, const std::vector<std::string>& outs, const Options& o) {
  const PreAlgebra<Q> p = io::pre_algebra_from_json(load(path).doc);
  Report r{"", "build", "canonical-solution", {}, {}, {}, nullptr, "", 0};
  if (!check_pre_anti_flexible(p, 1).identities.passed())
    throw PreconditionError("canonical-solution: input is not pre-anti-flexible");
  const Bimodule<Q> bm = pre_bimodule(p);
  const Algebra<Q> w = semidirect_product(bm.base(), dual_bimodule(bm));
  const Tensor2<Q> rt = canonical_tensor<Q>(p.dim());
  const auto res = check_afybe(w, rt, o.max_witnesses);
  require(res, "afybe");
  const auto bi = check_bialgebra(w, coboundary_delta(w, rt), o.max_witnesses);
  require(bi, "coboundary bialgebra");
  r.sections.push_back(section("afybe", res, {}));
  r.sections.push_back(section("coboundary bialgebra", bi, {}));
  emit_artifacts(r, outs, {io::algebra_to_json(w), io::rtensor_to_json(rt)});
  return r;
}

Report build_pre_from_omega_cmd(const std::string& apath, const std::string& fpath,
                                const std::vector<std::string>& outs, const Options& o) {
  const Algebra<Q> a = io::algebra_from_json(load(apath).doc);
  const BilinearForm<Q> omega = io::form_from_json(load(fpath).doc);
  Report r{"", "build", "pre-from-omega", {}, {}, {}, nullptr, "", 0};
  const PreAlgebra<Q> p = pre_from_omega(a, omega);
  const auto check = check_pre_anti_flexible(p, o.max_witnesses).identities;
  require(check, "pre-anti-flexible");
  r.sections.push_back(section("pre-anti-flexible", check, {}));
  r.notes.push_back("associated algebra equals the input table");
  emit_artifacts(r, outs, {io::pre_algebra_to_json(p)});
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks and constructions for anti-flexible algebras and their bialgebras", "antiflex"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_output, "Emit the report as one JSON document");
  app.add_flag("-q,--quiet", o.quiet, "Print nothing; rely on the exit code");
  app.add_option("--max-witnesses", o.max_witnesses, "Witnesses kept per check")->check(CLI::PositiveNumber);

  std::function<Report()> action;
  std::string target_name;
  std::vector<std::string> outs;
  // Positional arguments are collected per subcommand into named slots.
  std::map<std::string, std::string> files;
  std::vector<std::string> axioms;
  bool flag_a = false, flag_b = false;

  auto* check = app.add_subcommand("check", "Verify identities")->require_subcommand(1);
  auto* build = app.add_subcommand("build", "Run a construction and re-verify it")->require_subcommand(1);
  check->fallthrough();
  build->fallthrough();

  const auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                       std::vector<std::string> slots) {
    auto* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    for (const auto& slot : slots) s->add_option(slot, files[slot], slot)->required();
    return s;
  };
  const auto on = [&](CLI::App* s, std::function<Report()> f) {
    s->callback([&, s, f] {
      action = f;
      target_name = s->get_name();
    });
  };
  const auto F = [&](const char* k) { return files[k]; };

  auto* c_alg = sub(check, "algebra", "Axiom checks", {"algebra"});
  c_alg->add_option("--axiom", axioms, "anti-flexible, flexible, associative or lie-admissible");
  on(c_alg, [&] {
    return check_algebra(F("algebra"), axioms.empty() ? std::vector<std::string>{"anti-flexible"} : axioms, o);
  });
  auto* c_bm = sub(check, "bimodule", "Bimodule identities", {"bimodule"});
  c_bm->add_flag("--lie-representation", flag_a, "Also check that l - r is a representation");
  on(c_bm, [&] { return check_bimodule_cmd(F("bimodule"), flag_a, o); });
  on(sub(check, "matched-pair", "Matched pair identities", {"pair"}),
     [&] { return check_matched_cmd(F("pair"), o); });
  on(sub(check, "manin-triple", "Manin triple conditions", {"triple"}),
     [&] { return check_manin_cmd(F("triple"), o); });
  auto* c_bi = sub(check, "bialgebra", "Bialgebra conditions", {"algebra", "delta"});
  c_bi->add_flag("--lie", flag_a, "Also check the induced Lie bialgebra");
  on(c_bi, [&] { return check_bialgebra_cmd(F("algebra"), F("delta"), flag_a, o); });
  auto* c_yb = sub(check, "afybe", "Anti-flexible Yang-Baxter equation", {"algebra", "r"});
  c_yb->add_flag("--operator-form", flag_a, "Also check the operator form (skew r)");
  c_yb->add_flag("--omega", flag_b, "Also check the cyclic identity of the inverse form (skew nondegenerate r)");
  on(c_yb, [&] { return check_afybe_cmd(F("algebra"), F("r"), flag_a, flag_b, o); });
  on(sub(check, "pre-anti-flexible", "Pre-anti-flexible identities", {"pre"}),
     [&] { return check_pre_cmd(F("pre"), o); });
  on(sub(check, "o-operator", "O-operator identity", {"operator", "bimodule"}),
     [&] { return check_o_cmd(F("operator"), F("bimodule"), o); });
  on(sub(check, "rota-baxter", "Weight-zero Rota-Baxter identity", {"algebra", "operator"}),
     [&] { return check_rb_cmd(F("algebra"), F("operator"), o); });
  on(sub(check, "corpus", "Run every equivalence on a fixture corpus", {"dir"}),
     [&] { return corpus_verify(F("dir"), o.max_witnesses); });

  const auto bsub = [&](const std::string& name, const std::string& desc, std::vector<std::string> slots) {
    auto* s = sub(build, name, desc, std::move(slots));
    s->add_option("-o,--output", outs, "Output file(s)")->expected(1, 2);
    return s;
  };
  on(bsub("semidirect", "A ⋉ V from a bimodule", {"bimodule"}),
     [&] { return build_semidirect(F("bimodule"), outs, o); });
  on(bsub("double", "A ⋈ B from a matched pair", {"pair"}), [&] { return build_double_cmd(F("pair"), outs, o); });
  on(bsub("standard-manin", "Standard Manin triple on A ⊕ A*", {"algebra", "dual"}),
     [&] { return build_standard_manin_cmd(F("algebra"), F("dual"), outs, o); });
  on(bsub("coboundary-delta", "Coboundary-form comultiplication of r", {"algebra", "r"}),
     [&] { return build_coboundary_cmd(F("algebra"), F("r"), outs, o); });
  on(bsub("dual-bialgebra", "Dual bialgebra (A*, gamma)", {"algebra", "delta"}),
     [&] { return build_dual_bialgebra_cmd(F("algebra"), F("delta"), outs, o); });
  on(bsub("solution-from-o", "Skew solution T - σT from an O-operator", {"operator", "bimodule"}),
     [&] { return build_solution_from_o_cmd(F("operator"), F("bimodule"), outs, o); });
  on(bsub("canonical-solution", "Canonical solution from a pre-anti-flexible algebra", {"pre"}),
     [&] { return build_canonical_cmd(F("pre"), outs, o); });
  on(bsub("pre-from-omega", "Pre-anti-flexible structure from a cyclic skew form", {"algebra", "omega"}),
     [&] { return build_pre_from_omega_cmd(F("algebra"), F("omega"), outs, o); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const std::string verb = check->parsed() ? "check" : "build";
  const auto start = std::chrono::steady_clock::now();
  Report report;
  int code = 0;
  try {
    report = action();
    settle(report);
    code = report.status == "pass" ? 0 : 1;
  } catch (const PostconditionFailure& f) {
    report = Report{"fail", verb, target_name, {f.section}, {"postcondition failed; no output written"}, {}, nullptr, "", 0};
    code = 1;
  } catch (const InputError& e) {
    report = Report{"error", verb, target_name, {}, {}, {}, nullptr, std::string("input error: ") + e.what(), 0};
    code = 2;
  } catch (const PreconditionError& e) {
    report = Report{"error", verb, target_name, {}, {}, {}, nullptr, std::string("precondition: ") + e.what(), 0};
    code = 2;
  } catch (const json::exception& e) {
    report = Report{"error", verb, target_name, {}, {}, {}, nullptr, std::string("schema error: ") + e.what(), 0};
    code = 2;
  } catch (const fs::filesystem_error& e) {
    report = Report{"error", verb, target_name, {}, {}, {}, nullptr, std::string("file error: ") + e.what(), 0};
    code = 2;
  }
  report.verb = verb;
  report.target = target_name;
  report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.quiet) return code;
  if (o.json_output) {
    out << to_json(report).dump(2) << '\n';
  } else if (report.status == "error") {
    err << "error: " << report.message << '\n';
  } else {
    print_human(report, out);
  }
  return code;
}

}  // namespace antiflex::cli
