#pragma once

#include <stdexcept>
#include <string>

namespace wenum {

enum class ErrorKind {
    MalformedInput,    // unparseable file or text
    DependentRows,     // generator rows not linearly independent
    NotSelfDual,       // G * G^T != 0 over F2
    SupportNotClosed,  // indicator support is not closed under addition
    WrongSupportSize,  // indicator support size is not 2^(n/2)
    OutOfRange,        // parameter outside its documented range
    ResourceLimit,     // request exceeds the enforced memory/size budget
    DivisionByZero,
    DesignViolation,   // intersection count came out non-integral
    InvalidCandidate,  // candidate distribution fails validation
    UnknownCode,       // not a bundled code name
    Io,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace wenum
