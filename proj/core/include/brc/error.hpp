#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brc {

enum class ErrorKind {
    Parameter,               // CodeParams constraints, malformed inputs, guards
    Validity,                // information string violates the validity rules
    Budget,                  // adversary action exceeds t or s
    DivisionByZero,          // inverse of zero; a k-mer collided with an evaluation point
    LocatorUnsolvable,       // rank-deficient or inconsistent locator system
    LocatorRootsIncomplete,  // locator has fewer roots than its degree
    ReconstructionFailed,    // k-mer set does not describe a single string of length m
    ChecksumConflict,        // two reads of one checksum slot disagree
    VerificationFailed,      // decoded message does not explain the fragments
    DecodeFailed,            // umbrella raised by decode(); see Error::cause()
    Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : Error(kind, kind, what) {}
    Error(ErrorKind kind, ErrorKind cause, const std::string& what)
        : std::runtime_error(what), kind_(kind), cause_(cause) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// For DecodeFailed, the stage error behind the failure; otherwise equal to kind().
    ErrorKind cause() const noexcept { return cause_; }

   private:
    ErrorKind kind_;
    ErrorKind cause_;
};

}  // namespace brc
