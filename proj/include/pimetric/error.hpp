#ifndef PIMETRIC_ERROR_HPP
#define PIMETRIC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pimetric
{

enum class Errc
{
  NotPrimePower,
  DivisionByZero,
  FieldMismatch,
  InvalidPartition,
  PartitionNotSorted,
  SpaceMismatch,
  SpaceTooLarge,
  ZeroCode,
  NotBijective,
  NotASymmetry,
  SeparabilityViolation,
  NotAdmissible,
  NotAnAutomorphism,
  NotInvertible,
  Overflow,
  ParseError,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error
{
public:
  Error(Errc code, std::string const &what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what),
      _code(code)
  {}

  Errc code() const noexcept { return _code; }

private:
  Errc _code;
};

} // namespace pimetric

#endif // PIMETRIC_ERROR_HPP
