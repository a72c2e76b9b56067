#pragma once

// Result types for checks that either hold or produce a counterexample.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace cfl {

// A yes/no answer; a failing answer carries the witness that refutes it.
template <class Witness>
struct Verdict {
  std::optional<Witness> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return Verdict{std::move(w)}; }

  bool holds() const { return !witness.has_value(); }
  explicit operator bool() const { return holds(); }
};

// Either a constructed value or the witness explaining why it cannot exist.
template <class T, class Witness>
class Outcome {
 public:
  Outcome(T value) : v_(std::move(value)) {}               // NOLINT(google-explicit-constructor)
  Outcome(Witness w) : v_(std::in_place_index<1>, std::move(w)) {}  // NOLINT(google-explicit-constructor)

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const {
    if (!ok()) throw std::logic_error("Outcome holds a witness, not a value");
    return std::get<0>(v_);
  }
  T& value() {
    if (!ok()) throw std::logic_error("Outcome holds a witness, not a value");
    return std::get<0>(v_);
  }
  const Witness& witness() const {
    if (ok()) throw std::logic_error("Outcome holds a value, not a witness");
    return std::get<1>(v_);
  }

 private:
  std::variant<T, Witness> v_;
};

// Input rejected on structural grounds; `what()` names the offending elements.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cfl
