#pragma once

#include <crossbraid/scalar.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace crossbraid {

/// One violated identity, with enough data to redo it by hand.
struct Failure {
  std::string identity;               ///< e.g. "associativity", "bra1"
  std::vector<std::size_t> witness;   ///< basis indices / object indices
  std::string detail;                 ///< free-form (labels, objects)
  Vector lhs;
  Vector rhs;
};

struct Report {
  Report() = default;
  explicit Report(std::string subject_) : subject(std::move(subject_)) {}

  std::string subject;
  std::vector<std::string> checks;    ///< names of the identities evaluated
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
  bool failed(const std::string& identity) const;
  const Failure* first_failure(const std::string& identity) const;

  void merge(const Report& other);
  std::string summary() const;
};

}  // namespace crossbraid
