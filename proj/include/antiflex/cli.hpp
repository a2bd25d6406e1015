#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "antiflex/io/json_io.hpp"

namespace antiflex::cli {

using io::json;

struct WitnessRecord {
  std::string relation;
  std::vector<long long> indices;   // 0-based
  std::vector<std::string> labels;  // basis names, empty when none are known
  json residual;

  friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

struct Section {
  std::string name;
  std::string status;  // "pass" or "fail"
  std::size_t violations = 0;
  bool short_circuited = false;
  std::vector<WitnessRecord> witnesses;

  friend bool operator==(const Section&, const Section&) = default;
};

struct Report {
  std::string status;  // "pass", "fail" or "error"
  std::string verb;
  std::string target;
  std::vector<Section> sections;
  std::vector<std::string> notes;
  std::vector<std::string> outputs;
  json artifacts;  // built objects when no output file was requested
  std::string message;
  double timing_ms = 0;

  friend bool operator==(const Report&, const Report&) = default;
};

json to_json(const Report& r);
Report report_from_json(const json& j);

/// Per-witness labels. Given a witness, returns a basis name for each index or nothing.
using Labeler = std::function<std::vector<std::string>(const Witness<Rational>&)>;
Labeler uniform_labels(std::vector<std::string> names);

Section make_section(std::string name, const CheckReport<Rational>& report, const Labeler& labels = {});

/// Sets report.status from its sections: fail if any section failed, else pass.
void settle(Report& report);

/// Loads the corpus manifest in dir and runs every cross-module equivalence on its contents.
/// Throws InputError when the directory or manifest is missing or empty.
Report corpus_verify(const std::filesystem::path& dir, std::size_t max_witnesses);

/// Runs one command; args exclude the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antiflex::cli
