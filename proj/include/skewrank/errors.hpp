#pragma once

#include <stdexcept>
#include <string>

namespace skewrank {

enum class errc {
  bad_field,
  not_associative,
  no_unit,
  algebra_mismatch,
  context_mismatch,
  not_semiprime,
  not_alpha_ideal,
  not_proper,
  non_unit_constant_term,
  zero_to_precision,
  precision_too_small,
  not_in_ideal,
  too_large,
  bad_input,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_field: return "BadField";
    case errc::not_associative: return "NotAssociative";
    case errc::no_unit: return "NoUnit";
    case errc::algebra_mismatch: return "AlgebraMismatch";
    case errc::context_mismatch: return "ContextMismatch";
    case errc::not_semiprime: return "NotSemiprime";
    case errc::not_alpha_ideal: return "NotAlphaIdeal";
    case errc::not_proper: return "NotProper";
    case errc::non_unit_constant_term: return "NonUnitConstantTerm";
    case errc::zero_to_precision: return "ZeroToPrecision";
    case errc::precision_too_small: return "PrecisionTooSmall";
    case errc::not_in_ideal: return "NotInIdeal";
    case errc::too_large: return "TooLarge";
    case errc::bad_input: return "BadInput";
  }
  return "Unknown";
}

class skew_error : public std::runtime_error {
 public:
  skew_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

  // Process exit code for the CLI: resource caps are 3, everything else
  // raised from user input or preconditions is 2.  Mathematical claim
  // failures never throw; they surface as failed report claims (exit 1).
  int exit_code() const { return code_ == errc::too_large ? 3 : 2; }

 private:
  errc code_;
};

}  // namespace skewrank
