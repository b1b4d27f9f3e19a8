#pragma once

#include <stdexcept>
#include <string>

namespace truncweyl {

// Base of every error the library throws. Callers that only care about
// "bad input" vs. "mathematics disagreed" catch the two subclasses below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations: unsupported Cartan type, index out of range,
// inadmissible flag level, enumeration bound exceeded, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidType : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class FlagInadmissible : public InvalidArgument {
 public:
  FlagInadmissible(int level, int largest_part)
      : InvalidArgument("level " + std::to_string(level) +
                        " is below the largest part " +
                        std::to_string(largest_part)),
        level_(level),
        largest_part_(largest_part) {}
  int level() const { return level_; }
  int largest_part() const { return largest_part_; }

 private:
  int level_;
  int largest_part_;
};

class EnumerationBoundExceeded : public InvalidArgument {
 public:
  EnumerationBoundExceeded(const std::string& count, unsigned long bound)
      : InvalidArgument("enumeration needs " + count +
                        " tuples, bound is " + std::to_string(bound)),
        count_(count) {}
  const std::string& estimated_count() const { return count_; }

 private:
  std::string count_;
};

// Raised when two independent computations that must agree do not.
class IdentityFalsified : public Error {
 public:
  using Error::Error;
};

}  // namespace truncweyl
