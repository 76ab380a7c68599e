#include "brc/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "brc/error.hpp"

namespace brc {

namespace {

using boost::multiprecision::cpp_int;

long double log2_exact(const cpp_int& x) {
    if (x <= 0) throw Error(ErrorKind::Parameter, "log2 of a non-positive integer");
    const std::size_t top = boost::multiprecision::msb(x);
    const std::size_t shift = top > 63 ? top - 63 : 0;
    const cpp_int head = x >> shift;
    return static_cast<long double>(shift) + std::log2(head.convert_to<long double>());
}

cpp_int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    cpp_int acc = 1;
    for (std::size_t i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t begin = 0;
    while (true) {
        const auto end = text.find(sep, begin);
        out.push_back(text.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin));
        if (end == std::string_view::npos) break;
        begin = end + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::size_t parse_count(std::string_view key, std::string_view text) {
    text = trim(text);
    std::size_t value = 0;
    std::size_t used = 0;
    try {
        value = std::stoull(std::string(text), &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size() || text.front() == '-')
        throw Error(ErrorKind::Parameter, "grid: bad value '" + std::string(text) + "' for " + std::string(key));
    return value;
}

std::string format_real(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6Lf", v);
    return buf;
}

}  // namespace

std::size_t lemma1_requirement(std::size_t t) noexcept { return (t + 1) / 2; }

long double lemma2_threshold(std::size_t n, std::size_t t, std::size_t s) {
    if (s >= n) throw Error(ErrorKind::Parameter, "distance threshold needs s < n");
    if (s < lemma1_requirement(t))
        throw Error(ErrorKind::Parameter, "s < ceil(t/2): the threshold does not apply in this regime; use "
                                          "lemma1_requirement for the distance condition");
    const long double mu = static_cast<long double>(t) / static_cast<long double>(n - s);
    return (mu * static_cast<long double>(n) - 2.0L) / (mu + 2.0L);
}

std::size_t theorem1_tprime(std::size_t t) noexcept {
    const std::size_t half = lemma1_requirement(t);
    return half == 0 ? 0 : (half - 1) / 2;
}

long double log2_binomial(std::size_t n, std::size_t k) { return log2_exact(binomial(n, k)); }

long double theorem1_lower_bound(std::size_t n, std::size_t t, std::size_t s) {
    if (s >= n) throw Error(ErrorKind::Parameter, "lower bound needs s < n");
    if (t == 0) return 0.0L;
    long double value = 0;
    if (s < lemma1_requirement(t)) {
        const std::size_t tp = theorem1_tprime(t);
        value = std::log2(static_cast<long double>(std::max<std::size_t>(s, 1))) + log2_binomial(n, tp) -
                std::log2(static_cast<long double>(n));
    } else {
        const long double theta = lemma2_threshold(n, t, s);
        if (theta < 0) return 0.0L;
        const auto radius = static_cast<std::size_t>(std::floor(theta));
        cpp_int volume = 0;
        for (std::size_t j = 0; j <= std::min(radius, n); ++j) volume += binomial(n, j);
        value = log2_exact(volume);
    }
    return std::max(value, 0.0L);
}

std::size_t construction_redundancy(std::size_t /*m*/, unsigned w, std::size_t t, std::size_t s) noexcept {
    const std::size_t M = w + 1;
    return (M + 1) + (3 * t * M + s) * (2 * M + 1);
}

long double corollary_ratio(std::size_t m, unsigned w, std::size_t t, std::size_t s) {
    const long double wl = w;
    const long double shape = static_cast<long double>(t) * wl * wl + static_cast<long double>(s) * wl;
    if (shape <= 0) throw Error(ErrorKind::Parameter, "corollary ratio undefined for t = s = 0");
    return static_cast<long double>(construction_redundancy(m, w, t, s)) / shape;
}

unsigned overlap_for(std::size_t m, long double c) {
    if (m < 2 || c <= 0) throw Error(ErrorKind::Parameter, "overlap needs m >= 2 and c > 0");
    return static_cast<unsigned>(std::ceil(c * std::log2(static_cast<long double>(m)) - 1e-9L));
}

std::string_view to_string(Regime regime) noexcept {
    return regime == Regime::SmallS ? "s<ceil(t/2)" : "s>=ceil(t/2)";
}

BoundReport bound_report(std::size_t n, std::size_t t, std::size_t s, std::optional<std::size_t> construction) {
    if (s >= n) throw Error(ErrorKind::Parameter, "bound report needs s < n");
    BoundReport r;
    r.n = n;
    r.t = t;
    r.s = s;
    r.regime = s < lemma1_requirement(t) ? Regime::SmallS : Regime::LargeS;
    r.mu = static_cast<long double>(t) / static_cast<long double>(n - s);
    r.lemma1_dmin = lemma1_requirement(t);
    if (r.regime == Regime::LargeS) r.lemma2_threshold = std::max(lemma2_threshold(n, t, s), 0.0L);
    r.tprime = theorem1_tprime(t);
    r.redundancy_lb = theorem1_lower_bound(n, t, s);
    r.construction_redundancy = construction;
    return r;
}

BoundsGrid parse_grid(std::string_view spec) {
    BoundsGrid grid;
    bool have_c = false;
    for (auto part : split(spec, ';')) {
        part = trim(part);
        if (part.empty()) continue;
        const auto eq = part.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorKind::Parameter, "grid: expected key=values, got '" + std::string(part) + "'");
        const auto key = trim(part.substr(0, eq));
        const auto values = split(part.substr(eq + 1), ',');
        if (key == "c") {
            if (values.size() != 1) throw Error(ErrorKind::Parameter, "grid: c takes one value");
            try {
                grid.c = std::stold(std::string(trim(values[0])));
            } catch (const std::exception&) {
                throw Error(ErrorKind::Parameter, "grid: bad value for c");
            }
            have_c = true;
            continue;
        }
        std::vector<std::size_t>* target = nullptr;
        if (key == "n") target = &grid.n;
        if (key == "m") target = &grid.m;
        if (key == "t") target = &grid.t;
        if (key == "s") target = &grid.s;
        if (key == "w") {
            for (auto v : values) grid.w.push_back(static_cast<unsigned>(parse_count(key, v)));
            continue;
        }
        if (!target) throw Error(ErrorKind::Parameter, "grid: unknown key '" + std::string(key) + "'");
        for (auto v : values) target->push_back(parse_count(key, v));
    }
    if (grid.n.empty() == grid.m.empty()) throw Error(ErrorKind::Parameter, "grid: give exactly one of n or m");
    if (!grid.n.empty() && (!grid.w.empty() || have_c))
        throw Error(ErrorKind::Parameter, "grid: w and c only apply together with m");
    if (!grid.w.empty() && grid.w.size() != 1 && grid.w.size() != grid.m.size())
        throw Error(ErrorKind::Parameter, "grid: give one w, or one w per m");
    if (grid.t.empty()) grid.t.push_back(0);
    if (grid.s.empty()) grid.s.push_back(0);
    return grid;
}

std::vector<BoundReport> evaluate_grid(const BoundsGrid& grid) {
    std::vector<BoundReport> rows;
    const bool by_m = !grid.m.empty();
    const auto& outer = by_m ? grid.m : grid.n;
    for (std::size_t i = 0; i < outer.size(); ++i) {
        for (auto t : grid.t) {
            for (auto s : grid.s) {
                if (!by_m) {
                    rows.push_back(bound_report(outer[i], t, s));
                    continue;
                }
                const std::size_t m = outer[i];
                const unsigned w = grid.w.empty()        ? overlap_for(m, grid.c)
                                   : grid.w.size() == 1 ? grid.w[0]
                                                        : grid.w[i];
                const std::size_t red = construction_redundancy(m, w, t, s);
                rows.push_back(bound_report(m + red, t, s, red));
            }
        }
    }
    return rows;
}

std::string bounds_csv(const std::vector<BoundReport>& rows) {
    std::ostringstream out;
    out << "n,t,s,regime,lemma1,lemma2_threshold,theorem1_lb,construction_redundancy\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.t << ',' << r.s << ',' << to_string(r.regime) << ',' << r.lemma1_dmin << ','
            << (r.lemma2_threshold ? format_real(*r.lemma2_threshold) : "NA") << ',' << format_real(r.redundancy_lb)
            << ',' << (r.construction_redundancy ? std::to_string(*r.construction_redundancy) : "NA") << '\n';
    }
    return out.str();
}

std::optional<FragmentMultiset> confusability_witness(const BitString& x, const BitString& y, Budget budget) {
    if (x.size() != y.size()) throw Error(ErrorKind::Parameter, "confusability compares strings of equal length");
    const auto a = enumerate_multisets(x, budget);
    const auto b = enumerate_multisets(y, budget);
    for (const auto& f : a)
        if (b.contains(f)) return f;
    return std::nullopt;
}

bool is_confusable(const BitString& x, const BitString& y, Budget budget) {
    return confusability_witness(x, y, budget).has_value();
}

}  // namespace brc
