#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brc::cli {

/// Process exit statuses.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,          // bad command line or unreadable/unwritable file
    kValidity = 2,       // information string is not valid
    kBudget = 3,         // adversary action exceeds t or s
    kDecodeFailed = 4,   // no candidate message explains the fragments
    kParameter = 5,      // parameter constraints or malformed input files
    kBudgetEvidence = 6, // fragments alone prove the budget was exceeded
    kFuzzFailure = 7,    // fuzz run saw a silent wrong answer or a margin violation
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brc::cli
