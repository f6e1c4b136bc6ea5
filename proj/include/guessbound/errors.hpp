#pragma once

#include <stdexcept>
#include <string>

namespace guessbound {

enum class Errc {
  negative_mass,
  not_normalized,
  empty_alphabet,
  dimension_mismatch,
  budget_exceeded,
  nu_out_of_range,
  parse_error,
  validation_error,
};

// Single exception type for all recoverable input/usage errors; the code
// lets callers (and the CLI) map failures onto exit codes without string
// matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::negative_mass: return "NegativeMass";
    case Errc::not_normalized: return "NotNormalized";
    case Errc::empty_alphabet: return "EmptyAlphabet";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::nu_out_of_range: return "NuOutOfRange";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
  }
  return "Error";
}

}  // namespace guessbound
