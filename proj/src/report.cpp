#include <utility>

#include "antiflex/cli.hpp"

namespace antiflex::cli {

namespace {

json witness_to_json(const WitnessRecord& w) {
  json out{{"relation", w.relation}, {"indices", w.indices}, {"residual", w.residual}};
  if (!w.labels.empty()) out["labels"] = w.labels;
  return out;
}

WitnessRecord witness_from_json(const json& j) {
  WitnessRecord w;
  w.relation = j.at("relation").get<std::string>();
  w.indices = j.at("indices").get<std::vector<long long>>();
  if (j.contains("labels")) w.labels = j["labels"].get<std::vector<std::string>>();
  w.residual = j.at("residual");
  return w;
}

}  // namespace

json to_json(const Report& r) {
  json sections = json::array();
  for (const auto& s : r.sections) {
    json ws = json::array();
    for (const auto& w : s.witnesses) ws.push_back(witness_to_json(w));
    sections.push_back({{"name", s.name},
                        {"status", s.status},
                        {"violations", s.violations},
                        {"short_circuited", s.short_circuited},
                        {"witnesses", ws}});
  }
  json out{{"status", r.status},     {"verb", r.verb},       {"target", r.target},
           {"sections", sections},   {"notes", r.notes},     {"outputs", r.outputs},
           {"timing_ms", r.timing_ms}};
  if (!r.artifacts.is_null()) out["artifacts"] = r.artifacts;
  if (!r.message.empty()) out["message"] = r.message;
  return out;
}

Report report_from_json(const json& j) {
  Report r;
  r.status = j.at("status").get<std::string>();
  r.verb = j.at("verb").get<std::string>();
  r.target = j.at("target").get<std::string>();
  for (const auto& s : j.at("sections")) {
    Section sec;
    sec.name = s.at("name").get<std::string>();
    sec.status = s.at("status").get<std::string>();
    sec.violations = s.at("violations").get<std::size_t>();
    sec.short_circuited = s.at("short_circuited").get<bool>();
    for (const auto& w : s.at("witnesses")) sec.witnesses.push_back(witness_from_json(w));
    r.sections.push_back(std::move(sec));
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.outputs = j.at("outputs").get<std::vector<std::string>>();
  if (j.contains("artifacts")) r.artifacts = j["artifacts"];
  if (j.contains("message")) r.message = j["message"].get<std::string>();
  r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

Labeler uniform_labels(std::vector<std::string> names) {
  return [names = std::move(names)](const Witness<Rational>& w) {
    std::vector<std::string> out;
    if (names.empty()) return out;
    for (Index i : w.indices) {
      if (i < 0 || i >= static_cast<Index>(names.size())) return std::vector<std::string>{};
      out.push_back(names[static_cast<std::size_t>(i)]);
    }
    return out;
  };
}

Section make_section(std::string name, const CheckReport<Rational>& report, const Labeler& labels) {
  Section s{std::move(name), report.passed() ? "pass" : "fail", report.violations(),
            report.short_circuited(), {}};
  for (const auto& w : report.witnesses()) {
    WitnessRecord rec{w.relation, {}, labels ? labels(w) : std::vector<std::string>{},
                      io::residual_to_json(w.residual)};
    for (Index i : w.indices) rec.indices.push_back(static_cast<long long>(i));
    s.witnesses.push_back(std::move(rec));
  }
  return s;
}

void settle(Report& report) {
  report.status = "pass";
  for (const auto& s : report.sections)
    if (s.status != "pass") report.status = "fail";
}

}  // namespace antiflex::cli
