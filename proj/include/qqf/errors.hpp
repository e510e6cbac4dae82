#ifndef QQF_ERRORS_HPP
#define QQF_ERRORS_HPP

#include "report.hpp"

#include <stdexcept>
#include <string>

namespace qqf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HomogeneityError : public Error { using Error::Error; };
class DimensionMismatch : public Error { using Error::Error; };
class SingularFormError : public Error { using Error::Error; };
class SingularEndomorphism : public Error { using Error::Error; };
class SymmetryError : public Error { using Error::Error; };
class IncompatibleProduct : public Error { using Error::Error; };
class NoCenterError : public Error { using Error::Error; };
class NoRationalEigenvalueError : public Error { using Error::Error; };
class DegeneratePairError : public Error { using Error::Error; };
class UnknownEntry : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

/// Raised when a constructor's hypotheses (or postconditions) fail; carries the report.
class HypothesisError : public Error {
 public:
  HypothesisError(const std::string& what, ValidationReport report)
      : Error(what + "\n" + report.str()), report_(std::move(report))
  {
  }
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace qqf

#endif  // QQF_ERRORS_HPP
