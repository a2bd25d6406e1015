#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "antiflex/multilinear.hpp"

namespace antiflex {

inline constexpr std::size_t kDefaultMaxWitnesses = 10;

template <typename Scalar>
using Residual = std::variant<Vector<Scalar>, Matrix<Scalar>, Tensor3<Scalar>>;

/// One violated instance of an identity: the relation name, the basis indices
/// (0-based) at which it was evaluated, and the nonzero residual.
template <typename Scalar>
struct Witness {
  std::string relation;
  std::vector<Index> indices;
  Residual<Scalar> residual;
};

/// Outcome of an identity sweep. Counts every violation but keeps only the
/// first max_witnesses of them (at least one, so a failed report is never empty).
template <typename Scalar>
class CheckReport {
 public:
  explicit CheckReport(std::size_t max_witnesses = kDefaultMaxWitnesses)
      : max_witnesses_(max_witnesses == 0 ? 1 : max_witnesses) {}

  bool passed() const { return violations_ == 0; }
  explicit operator bool() const { return passed(); }

  std::size_t violations() const { return violations_; }
  std::size_t max_witnesses() const { return max_witnesses_; }
  const std::vector<Witness<Scalar>>& witnesses() const { return witnesses_; }

  /// Set when a hypothesis stage failed and the main identities were not evaluated.
  bool short_circuited() const { return short_circuited_; }
  void mark_short_circuited() { short_circuited_ = true; }

  void add(std::string relation, std::vector<Index> indices, Residual<Scalar> residual) {
    ++violations_;
    if (witnesses_.size() < max_witnesses_)
      witnesses_.push_back({std::move(relation), std::move(indices), std::move(residual)});
  }

  /// Records a residual only if it is nonzero.
  void expect_zero(std::string relation, std::vector<Index> indices, Vector<Scalar> residual) {
    if (!is_zero(residual)) add(std::move(relation), std::move(indices), std::move(residual));
  }
  void expect_zero(std::string relation, std::vector<Index> indices, Matrix<Scalar> residual) {
    if (!is_zero(residual)) add(std::move(relation), std::move(indices), std::move(residual));
  }
  void expect_zero(std::string relation, std::vector<Index> indices, Tensor3<Scalar> residual) {
    if (!residual.is_zero()) add(std::move(relation), std::move(indices), std::move(residual));
  }

  void merge(const CheckReport& other) {
    violations_ += other.violations_;
    for (const auto& w : other.witnesses_)
      if (witnesses_.size() < max_witnesses_) witnesses_.push_back(w);
    short_circuited_ = short_circuited_ || other.short_circuited_;
  }

  /// merge, appending suffix to each relation name.
  void merge(const CheckReport& other, const std::string& suffix) {
    violations_ += other.violations_;
    for (const auto& w : other.witnesses_)
      if (witnesses_.size() < max_witnesses_)
        witnesses_.push_back({w.relation + suffix, w.indices, w.residual});
    short_circuited_ = short_circuited_ || other.short_circuited_;
  }

  bool has_relation(const std::string& relation) const {
    for (const auto& w : witnesses_)
      if (w.relation == relation) return true;
    return false;
  }

 private:
  std::size_t max_witnesses_;
  std::size_t violations_ = 0;
  bool short_circuited_ = false;
  std::vector<Witness<Scalar>> witnesses_;
};

}  // namespace antiflex
