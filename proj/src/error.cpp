#include "pimetric/error.hpp"

namespace pimetric
{

std::string_view errc_name(Errc code) noexcept
{
  switch (code) {
  case Errc::NotPrimePower: return "NotPrimePower";
  case Errc::DivisionByZero: return "DivisionByZero";
  case Errc::FieldMismatch: return "FieldMismatch";
  case Errc::InvalidPartition: return "InvalidPartition";
  case Errc::PartitionNotSorted: return "PartitionNotSorted";
  case Errc::SpaceMismatch: return "SpaceMismatch";
  case Errc::SpaceTooLarge: return "SpaceTooLarge";
  case Errc::ZeroCode: return "ZeroCode";
  case Errc::NotBijective: return "NotBijective";
  case Errc::NotASymmetry: return "NotASymmetry";
  case Errc::SeparabilityViolation: return "SeparabilityViolation";
  case Errc::NotAdmissible: return "NotAdmissible";
  case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
  case Errc::NotInvertible: return "NotInvertible";
  case Errc::Overflow: return "Overflow";
  case Errc::ParseError: return "ParseError";
  case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

} // namespace pimetric
