#pragma once

#include <stdexcept>
#include <string>

namespace cmtwist {

/// Base of every error raised by the library. `kind()` is the stable name
/// used in CLI diagnostics and JSON reports.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define CMTWIST_DEFINE_ERROR(Name)                                            \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string& what) : Error(#Name, what) {}            \
  }

CMTWIST_DEFINE_ERROR(ZeroInversion);
CMTWIST_DEFINE_ERROR(DualNotInvertible);
CMTWIST_DEFINE_ERROR(InvalidModulus);
CMTWIST_DEFINE_ERROR(ContextMismatch);
CMTWIST_DEFINE_ERROR(UnknownVariable);
CMTWIST_DEFINE_ERROR(NotHomogeneous);
CMTWIST_DEFINE_ERROR(NotACurve);
CMTWIST_DEFINE_ERROR(ZeroDivisorArg);
CMTWIST_DEFINE_ERROR(ChartMiss);
CMTWIST_DEFINE_ERROR(UnsupportedCase);
CMTWIST_DEFINE_ERROR(NotSingularAtP);
CMTWIST_DEFINE_ERROR(IrrationalData);
CMTWIST_DEFINE_ERROR(SingularMatrix);
CMTWIST_DEFINE_ERROR(ExcludedParameter);
CMTWIST_DEFINE_ERROR(AlignmentFailure);
CMTWIST_DEFINE_ERROR(BadRingHeader);
CMTWIST_DEFINE_ERROR(InexactDivision);

#undef CMTWIST_DEFINE_ERROR

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, int line, int column)
      : Error("SyntaxError", what + " at line " + std::to_string(line) +
                                 ", column " + std::to_string(column)),
        line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

} // namespace cmtwist
