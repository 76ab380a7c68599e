#include "brc/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "brc/error.hpp"

namespace brc {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parameter, std::string(what) + ": " + e.what());
    }
}

template <class T>
T get_field(const json& j, const char* key, const char* what) {
    if (!j.contains(key)) throw Error(ErrorKind::Parameter, std::string(what) + ": missing \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parameter, std::string(what) + ": bad \"" + key + "\": " + e.what());
    }
}

template <class T>
std::optional<T> get_optional(const json& j, const char* key, const char* what) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return get_field<T>(j, key, what);
}

template <class T>
T get_unsigned(const json& j, const char* key, const char* what) {
    if (j.contains(key) && !j.at(key).is_number_unsigned())
        throw Error(ErrorKind::Parameter, std::string(what) + ": \"" + key + "\" must be a non-negative integer");
    return get_field<T>(j, key, what);
}

bool skip_line(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

std::string strip(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r");
    const auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1);
}

}  // namespace

CodeParams ParamsFile::build() const {
    ParamOptions options;
    options.run_length = run_length;
    options.modulus = modulus;
    return CodeParams::create(m, w, t, s, options);
}

ParamsFile parse_params(const std::string& json_text) {
    constexpr const char* what = "params file";
    const json j = parse_json(json_text, what);
    if (!j.is_object()) throw Error(ErrorKind::Parameter, "params file: expected a JSON object");
    ParamsFile p;
    p.m = get_unsigned<std::size_t>(j, "m", what);
    p.w = get_unsigned<unsigned>(j, "w", what);
    p.t = get_unsigned<std::size_t>(j, "t", what);
    p.s = get_unsigned<std::size_t>(j, "s", what);
    if (j.contains("a")) p.run_length = get_unsigned<unsigned>(j, "a", what);
    if (auto hex = get_optional<std::string>(j, "modulus", what)) p.modulus = FieldModulus::from_hex(*hex);
    if (j.contains("seed")) p.seed = get_unsigned<std::uint64_t>(j, "seed", what);
    return p;
}

std::string format_params(const CodeParams& params, std::optional<std::uint64_t> seed) {
    json j = json::object();
    j["m"] = params.m();
    j["w"] = params.w();
    j["t"] = params.t();
    j["s"] = params.s();
    j["a"] = params.book().run_length();
    j["modulus"] = params.field().modulus().to_hex();
    if (seed) j["seed"] = *seed;
    j["M"] = params.M();
    j["L"] = params.L();
    j["n"] = params.n();
    j["redundancy"] = params.redundancy();
    return j.dump(2) + "\n";
}

BitString parse_bitstring(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (skip_line(line)) continue;
        return BitString(strip(line));
    }
    throw Error(ErrorKind::Parameter, "no bit string found");
}

FragmentMultiset parse_fragments(std::istream& in) {
    FragmentMultiset out;
    std::string line;
    while (std::getline(in, line)) {
        if (skip_line(line)) continue;
        out.emplace_back(strip(line));
    }
    return out;
}

void write_fragments(std::ostream& out, const FragmentMultiset& fragments) {
    for (const auto& f : fragments) out << f.str() << '\n';
}

AdversaryAction parse_action(const std::string& json_text) {
    constexpr const char* what = "action file";
    const json j = parse_json(json_text, what);
    if (!j.is_object()) throw Error(ErrorKind::Parameter, "action file: expected a JSON object");
    AdversaryAction a;
    a.breaks = get_optional<std::vector<std::size_t>>(j, "breaks", what).value_or(std::vector<std::size_t>{});
    a.omitted = get_optional<std::vector<std::size_t>>(j, "omitted", what).value_or(std::vector<std::size_t>{});
    if (j.contains("shuffle_seed")) a.shuffle_seed = get_unsigned<std::uint64_t>(j, "shuffle_seed", what);
    return a;
}

std::string format_action(const AdversaryAction& action) {
    json j = json::object();
    j["breaks"] = action.breaks;
    j["omitted"] = action.omitted;
    j["shuffle_seed"] = action.shuffle_seed;
    return j.dump() + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(ErrorKind::Io, "cannot read " + path.string());
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
    out << contents;
    if (!out.flush()) throw Error(ErrorKind::Io, "cannot write " + path.string());
}

}  // namespace brc
