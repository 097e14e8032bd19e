#pragma once

#include <stdexcept>
#include <string>

namespace holeburn {

// A post-selected branch with (numerically) zero probability.
class EmptyBranchError : public std::runtime_error {
 public:
  explicit EmptyBranchError(const std::string& what) : std::runtime_error(what) {}
};

// Probability mass reached the edge of the truncated number basis.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// Fock-state schedule search could not reach the minimum fidelity.
class ScheduleSearchError : public std::runtime_error {
 public:
  explicit ScheduleSearchError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace holeburn
