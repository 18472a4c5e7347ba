#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace zf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 or edge-list input. `position` is a byte offset for
/// graph6 and a 1-based line number for edge lists / corpus streams.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg), position(position) {}
  std::size_t position;
};

/// An exact solver hit its configured search budget. Never a wrong answer.
struct BudgetError : Error {
  BudgetError() : Error("exceeded search budget") {}
};

struct ClawWitness {
  int center = -1;
  std::array<int, 3> leaves{-1, -1, -1};
};

/// The input graph violates the hypothesis of the requested procedure
/// (not connected, not claw-free, wrong degree range, ...).
struct HypothesisError : Error {
  explicit HypothesisError(const std::string& msg) : Error(msg) {}
  HypothesisError(const std::string& msg, ClawWitness claw)
      : Error(msg), claw(claw) {}
  std::optional<ClawWitness> claw;
};

/// A caller-supplied argument breaks an operation contract
/// (e.g. a set that is not a vertex cover, or not minimum).
struct ContractError : Error {
  using Error::Error;
};

/// An internal invariant of a constructive procedure failed. Signals a gap
/// between the implementation and the proof it follows; never expected on
/// valid input at corpus scale.
struct InvariantError : Error {
  using Error::Error;
};

}  // namespace zf
