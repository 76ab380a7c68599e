#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "brc/bitstring.hpp"
#include "brc/channel.hpp"
#include "brc/params.hpp"

namespace brc {

/// Contents of a params file. Derived values (n, L, M, redundancy) are written for
/// readers' convenience and ignored on input.
struct ParamsFile {
    std::size_t m = 0;
    unsigned w = 0;
    std::size_t t = 0;
    std::size_t s = 0;
    std::optional<unsigned> run_length;
    std::optional<FieldModulus> modulus;
    std::optional<std::uint64_t> seed;

    CodeParams build() const;
};

/// Parse errors throw Error(Parameter); unreadable files throw Error(Io).
ParamsFile parse_params(const std::string& json_text);
std::string format_params(const CodeParams& params, std::optional<std::uint64_t> seed = std::nullopt);

/// First non-blank, non-'#' line as a bit string.
BitString parse_bitstring(std::istream& in);
/// One bit string per line; blank and '#' lines skipped.
FragmentMultiset parse_fragments(std::istream& in);
void write_fragments(std::ostream& out, const FragmentMultiset& fragments);

AdversaryAction parse_action(const std::string& json_text);
std::string format_action(const AdversaryAction& action);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace brc
