#ifndef GAL_ERROR_HPP
#define GAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gal {

enum class Errc {
  DivisionByZeroPoly,
  DegreeTooLarge,
  AmbiguousDT,
  NoConsistentDT,
  NonSeparable,
  ExcludedParameter,
  EqualParams,
  DegenerateDenominator,
  NotD4,
  PrecisionExhausted,
  RhoCacheInvalid,
  ConfigEnumerationFailed,
  NotInD5Class,
  UnexpectedPattern,
  NoTableRow,
  DegreeCapExceeded,
  VerificationFailed,
  IllConditioned,
  BadInput,
};

const char* errc_name(Errc c);

class GalError : public std::runtime_error {
 public:
  GalError(Errc c, const std::string& detail)
      : std::runtime_error(std::string(errc_name(c)) + ": " + detail), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& detail) {
  throw GalError(c, detail);
}

}  // namespace gal

#endif
