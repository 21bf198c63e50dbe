#pragma once

#include <stdexcept>
#include <string>

namespace lcs {

/// Malformed presentation text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error("parse: " + std::to_string(line) + ":" + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Collection grew past the configured word-length bound.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error("resource-limit: " + what) {}
};

/// A word expected to lie in gamma_n has a nonzero lower-weight coordinate.
class NotInGamma : public std::runtime_error {
 public:
  NotInGamma(int n, int witness_index, int witness_weight)
      : std::runtime_error("not in gamma_" + std::to_string(n) + ": basic #" +
                           std::to_string(witness_index) + " of weight " +
                           std::to_string(witness_weight) + " has nonzero exponent"),
        witness_index_(witness_index),
        witness_weight_(witness_weight) {}
  int witness_index() const { return witness_index_; }
  int witness_weight() const { return witness_weight_; }

 private:
  int witness_index_;
  int witness_weight_;
};

/// A generator of a stage could not be reduced into gamma_n.
class InconsistentStage : public std::runtime_error {
 public:
  explicit InconsistentStage(const std::string& what)
      : std::runtime_error("inconsistent-stage: " + what) {}
};

/// normal_form_in_R met a residue outside the stage lattice at `weight`.
class ReductionFailure : public std::runtime_error {
 public:
  ReductionFailure(int weight, const std::string& what)
      : std::runtime_error("reduction: weight " + std::to_string(weight) + ": " + what),
        weight_(weight) {}
  int weight() const { return weight_; }

 private:
  int weight_;
};

/// Inputs outside the supported sizes (rank, relator count, weight).
class BoundsError : public std::invalid_argument {
 public:
  explicit BoundsError(const std::string& what) : std::invalid_argument("bounds: " + what) {}
};

}  // namespace lcs
