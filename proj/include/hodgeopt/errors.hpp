#pragma once

#include <stdexcept>
#include <string>

namespace hodgeopt {

/// Raised for inputs outside an operation's domain: dimension mismatches,
/// invalid multi-indices, grades that overflow the ambient space.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The constraint rows are linearly dependent.
class RankDeficientError : public std::runtime_error {
 public:
  RankDeficientError(const std::string& what, int rank, int rows)
      : std::runtime_error(what), rank_(rank), rows_(rows) {}

  int rank() const noexcept { return rank_; }
  int rows() const noexcept { return rows_; }

 private:
  int rank_;
  int rows_;
};

}  // namespace hodgeopt
