#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pancyclic {

using Vertex = std::int32_t;

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments or ids out of range.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A checkable precondition (degree bound, size bound, k range) does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A promised hypothesis (usually alpha(G) <= k) is contradicted by a concrete
// witness found during construction. `stage` names the step that found it.
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(std::string stage, const std::string& what,
                      std::vector<Vertex> witness = {})
      : Error(stage + ": " + what),
        stage_(std::move(stage)),
        witness_(std::move(witness)) {}

  const std::string& stage() const noexcept { return stage_; }
  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  std::string stage_;
  std::vector<Vertex> witness_;
};

// A seeded randomized stage exhausted its retry cap.
class RandomnessFailure : public Error {
 public:
  RandomnessFailure(std::string stage, std::uint64_t seed, int attempts)
      : Error(stage + ": no admissible sample after " + std::to_string(attempts) +
              " attempts (seed " + std::to_string(seed) + ")"),
        seed_(seed),
        attempts_(attempts) {}

  std::uint64_t seed() const noexcept { return seed_; }
  int attempts() const noexcept { return attempts_; }

 private:
  std::uint64_t seed_;
  int attempts_;
};

}  // namespace pancyclic
