#include "brc/error.hpp"

namespace brc {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parameter: return "parameter";
        case ErrorKind::Validity: return "validity";
        case ErrorKind::Budget: return "budget";
        case ErrorKind::DivisionByZero: return "division-by-zero";
        case ErrorKind::LocatorUnsolvable: return "locator-unsolvable";
        case ErrorKind::LocatorRootsIncomplete: return "locator-roots-incomplete";
        case ErrorKind::ReconstructionFailed: return "reconstruction-failed";
        case ErrorKind::ChecksumConflict: return "checksum-conflict";
        case ErrorKind::VerificationFailed: return "verification-failed";
        case ErrorKind::DecodeFailed: return "decode-failed";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

}  // namespace brc
