#pragma once

#include <stdexcept>
#include <string>

namespace chernlab {

enum class Errc {
  division_by_zero,
  incompatible_field,
  unassigned_variable,
  resource_limit,
  infinite,
  not_finite_dimensional,
  not_symmetric,
  non_integral_coefficient,
  precision_exceeded,
  lambda_out_of_range,
  inexact_division,
  not_a_unit,
  not_a_character_table,
  negative_structure_constant,
  inconsistent_fusion,
  unknown_group,
  non_integral_multiplicity,
  no_matching_class,
  degree_ceiling,
  certificate_mismatch,
  schema_error,
  validation_error,
  usage_error,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::incompatible_field: return "IncompatibleField";
    case Errc::unassigned_variable: return "UnassignedVariable";
    case Errc::resource_limit: return "ResourceLimit";
    case Errc::infinite: return "Infinite";
    case Errc::not_finite_dimensional: return "NotFiniteDimensional";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::non_integral_coefficient: return "NonIntegralCoefficient";
    case Errc::precision_exceeded: return "PrecisionExceeded";
    case Errc::lambda_out_of_range: return "LambdaOutOfRange";
    case Errc::inexact_division: return "InexactDivision";
    case Errc::not_a_unit: return "NotAUnit";
    case Errc::not_a_character_table: return "NotACharacterTable";
    case Errc::negative_structure_constant: return "NegativeStructureConstant";
    case Errc::inconsistent_fusion: return "InconsistentFusion";
    case Errc::unknown_group: return "UnknownGroup";
    case Errc::non_integral_multiplicity: return "NonIntegralMultiplicity";
    case Errc::no_matching_class: return "NoMatchingClass";
    case Errc::degree_ceiling: return "DegreeCeiling";
    case Errc::certificate_mismatch: return "CertificateMismatch";
    case Errc::schema_error: return "SchemaError";
    case Errc::validation_error: return "ValidationError";
    case Errc::usage_error: return "UsageError";
    case Errc::parse_error: return "ParseError";
  }
  return "Error";
}

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), message_(what) {}
  Errc code() const noexcept { return code_; }
  /// The message without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

template <Errc C>
class ErrorOf : public Error {
 public:
  explicit ErrorOf(const std::string& what) : Error(C, what) {}
};

using DivisionByZero = ErrorOf<Errc::division_by_zero>;
using IncompatibleField = ErrorOf<Errc::incompatible_field>;
using UnassignedVariable = ErrorOf<Errc::unassigned_variable>;
using ResourceLimit = ErrorOf<Errc::resource_limit>;
using Infinite = ErrorOf<Errc::infinite>;
using NotFiniteDimensional = ErrorOf<Errc::not_finite_dimensional>;
using NotSymmetric = ErrorOf<Errc::not_symmetric>;
using NonIntegralCoefficient = ErrorOf<Errc::non_integral_coefficient>;
using PrecisionExceeded = ErrorOf<Errc::precision_exceeded>;
using LambdaOutOfRange = ErrorOf<Errc::lambda_out_of_range>;
using InexactDivision = ErrorOf<Errc::inexact_division>;
using NotAUnit = ErrorOf<Errc::not_a_unit>;
using NotACharacterTable = ErrorOf<Errc::not_a_character_table>;
using NegativeStructureConstant = ErrorOf<Errc::negative_structure_constant>;
using InconsistentFusion = ErrorOf<Errc::inconsistent_fusion>;
using UnknownGroup = ErrorOf<Errc::unknown_group>;
using NonIntegralMultiplicity = ErrorOf<Errc::non_integral_multiplicity>;
using NoMatchingClass = ErrorOf<Errc::no_matching_class>;
using DegreeCeiling = ErrorOf<Errc::degree_ceiling>;
using CertificateMismatch = ErrorOf<Errc::certificate_mismatch>;
using SchemaError = ErrorOf<Errc::schema_error>;
using ValidationError = ErrorOf<Errc::validation_error>;
using UsageError = ErrorOf<Errc::usage_error>;
using ParseError = ErrorOf<Errc::parse_error>;

}  // namespace chernlab
