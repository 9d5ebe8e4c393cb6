#pragma once

#include <stdexcept>
#include <string>

namespace gba {

enum class errc {
  non_prime,
  cap_exceeded,
  division_by_zero,
  spec_mismatch,
  wrong_characteristic,
  wrong_field_shape,
  not_closed,
  unknown_name,
  not_a_subgroup,
  length_mismatch,
  precondition_violated,
  no_solution_in_field,
  even_q,
  not_applicable,
  multiple_involution_classes,
  unknown_scenario,
  unsupported_format,
  parse_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_prime: return "NonPrime";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::spec_mismatch: return "SpecMismatch";
    case errc::wrong_characteristic: return "WrongCharacteristic";
    case errc::wrong_field_shape: return "WrongFieldShape";
    case errc::not_closed: return "NotClosed";
    case errc::unknown_name: return "UnknownName";
    case errc::not_a_subgroup: return "NotASubgroup";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::no_solution_in_field: return "NoSolutionInField";
    case errc::even_q: return "EvenQ";
    case errc::not_applicable: return "NotApplicable";
    case errc::multiple_involution_classes: return "MultipleInvolutionClasses";
    case errc::unknown_scenario: return "UnknownScenario";
    case errc::unsupported_format: return "UnsupportedFormat";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace gba
