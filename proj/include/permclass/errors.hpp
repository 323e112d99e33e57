#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permclass {

// Malformed input word, pattern or textual form.
class InvalidWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Index or parameter outside its permitted range (rank >= n!, n above a
// formula's domain, ...).
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// n above the engine-wide hard cap.
class CapError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A move whose occurrence no longer matches the host permutation.
class StaleOccurrence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input lacking a required prefix; position() is the first 1-based
// position that differs.
class PrefixError : public std::invalid_argument {
 public:
  PrefixError(const std::string& what, int position)
      : std::invalid_argument(what), position_(position) {}

  int position() const noexcept { return position_; }

 private:
  int position_;
};

// Projected memory use above the configured budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t projected, std::uint64_t budget)
      : std::runtime_error(what), projected_(projected), budget_(budget) {}

  std::uint64_t projected() const noexcept { return projected_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t projected_;
  std::uint64_t budget_;
};

}  // namespace permclass
