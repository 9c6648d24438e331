#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bases.hpp"
#include "composition.hpp"
#include "equivalences.hpp"
#include "forest.hpp"
#include "fqsym.hpp"
#include "int_matrix.hpp"
#include "nsym.hpp"
#include "permutation.hpp"

namespace ncsf {

using json = nlohmann::json;

// ---- text ----

/// "a + 2 b - c" from (label, coefficient) pairs in the given order.
inline std::string render_terms(const std::vector<std::pair<std::string, BigInt>>& terms) {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [label, c] : terms) {
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (mag != 1) s += mag.str() + " ";
        s += label;
        first = false;
    }
    return s;
}

/// Lexicographic term order, symbol_I labels.
inline std::string render_expansion(const CompositionSum<>& x, const std::string& symbol) {
    std::vector<std::pair<std::string, BigInt>> terms;
    for (const auto& [c, coeff] : x) terms.emplace_back(symbol + "_" + compact(c), coeff);
    return render_terms(terms);
}

/// Terms in compositions_ordered order.
inline std::string render_expansion_ordered(const CompositionSum<>& x, const std::string& symbol) {
    std::vector<std::pair<Composition, BigInt>> sorted(x.begin(), x.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return LengthLexLess{}(a.first, b.first); });
    std::vector<std::pair<std::string, BigInt>> terms;
    for (const auto& [c, coeff] : sorted) terms.emplace_back(symbol + "_" + compact(c), coeff);
    return render_terms(terms);
}

inline std::string render_matrix(const IntMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? " " : "") << compact(m.labels()[i]);
    os << '\n';
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) os << (c ? " " : "") << m(r, c);
        os << '\n';
    }
    return os.str();
}

inline std::string render_matrix_csv(const IntMatrix& m) {
    std::ostringstream os;
    os << "row";
    for (const auto& l : m.labels()) os << ',' << compact(l);
    os << '\n';
    for (std::size_t r = 0; r < m.size(); ++r) {
        os << compact(m.labels()[r]);
        for (std::size_t c = 0; c < m.size(); ++c) os << ',' << m(r, c);
        os << '\n';
    }
    return os.str();
}

/// Row order of the printed expansion tables.
inline std::vector<Composition> table_rows(int n) {
    auto rows = compositions_lex(n);
    std::reverse(rows.begin(), rows.end());
    return rows;
}

/// Y-exponent order of the printed Z tables: longer first, then lexicographic.
inline std::vector<Composition> z_rows(const ZSeries& z) {
    std::vector<Composition> rows;
    for (const auto& [y, coeff] : z.coefficients) rows.push_back(y);
    std::stable_sort(rows.begin(), rows.end(), [](const Composition& a, const Composition& b) {
        if (a.length() != b.length()) return a.length() > b.length();
        return a < b;
    });
    return rows;
}

inline std::string y_label(const Composition& y) {
    return (y.length() == 1 ? "Y_" : "Y^") + compact(y);
}

inline std::string render_z(const ZSeries& z) {
    std::string s = "Z_" + std::to_string(z.degree) + " = ";
    bool first = true;
    for (const auto& y : z_rows(z)) {
        const auto& g = z.coefficients.at(y);
        std::vector<std::pair<std::string, BigInt>> terms;
        for (const auto& [p, c] : g.terms) terms.emplace_back("G_" + to_string(p), c);
        std::string body = render_terms(terms);
        if (terms.size() > 1) body = "(" + body + ")";
        s += (first ? "" : " + ") + body + " " + y_label(y);
        first = false;
    }
    return s + "\n";
}

// ---- JSON ----

inline json bigint_to_json(const BigInt& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return x.str();
}

inline BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

inline json expansion_to_json(const CompositionSum<>& x, const std::string& basis) {
    json terms = json::array();
    for (const auto& [c, coeff] : x) terms.push_back({{"index", c.parts()}, {"coeff", bigint_to_json(coeff)}});
    return {{"basis", basis}, {"terms", terms}};
}

inline CompositionSum<> expansion_from_json(const json& j) {
    CompositionSum<> out;
    for (const auto& t : j.at("terms")) out.add(Composition(t.at("index").get<std::vector<int>>()), bigint_from_json(t.at("coeff")));
    return out;
}

inline json matrix_to_json(const IntMatrix& m) {
    json labels = json::array();
    for (const auto& l : m.labels()) labels.push_back(l.parts());
    json entries = json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.size(); ++c) row.push_back(bigint_to_json(m(r, c)));
        entries.push_back(row);
    }
    const int n = m.size() ? m.labels().front().weight() : 0;
    return {{"schema", "ncsf.transition_matrix"}, {"version", 1}, {"n", n}, {"labels", labels}, {"entries", entries}};
}

inline IntMatrix matrix_from_json(const json& j) {
    if (j.at("schema") != "ncsf.transition_matrix" || j.at("version") != 1)
        throw std::invalid_argument("unsupported matrix schema");
    std::vector<Composition> labels;
    for (const auto& l : j.at("labels")) labels.emplace_back(l.get<std::vector<int>>());
    IntMatrix m(labels);
    const auto& entries = j.at("entries");
    if (entries.size() != m.size()) throw std::invalid_argument("matrix: wrong row count");
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (entries[r].size() != m.size()) throw std::invalid_argument("matrix: wrong column count");
        for (std::size_t c = 0; c < m.size(); ++c) m(r, c) = bigint_from_json(entries[r][c]);
    }
    return m;
}

inline json forest_to_json(const LabeledForest& f) {
    json parents = json::object();
    for (const auto& [v, p] : f.parent_map()) parents[std::to_string(v)] = p ? json(*p) : json(nullptr);
    return {{"text", f.to_parenthesized()}, {"parents", parents}};
}

inline LabeledForest forest_from_json(const json& j, Orientation o = Orientation::RootFirst) {
    std::map<int, std::optional<int>> parents;
    for (const auto& [k, v] : j.at("parents").items())
        parents[std::stoi(k)] = v.is_null() ? std::nullopt : std::optional<int>(v.get<int>());
    return LabeledForest::from_parent_map(parents, o);
}

inline json census_to_json(const Census& c) {
    json classes = json::array();
    for (const auto& k : c.classes)
        classes.push_back({{"min", to_string(k.minimum)}, {"size", bigint_to_json(k.size)}});
    return {{"n", c.n}, {"relation", c.relation}, {"count", c.count()}, {"classes", classes}};
}

inline Census census_from_json(const json& j) {
    Census c{j.at("n").get<int>(), j.at("relation").get<std::string>(), {}};
    for (const auto& k : j.at("classes"))
        c.classes.push_back({parse_permutation(k.at("min").get<std::string>()), bigint_from_json(k.at("size"))});
    return c;
}

inline std::string census_to_csv(const Census& c) {
    std::ostringstream os;
    os << "n,relation,class_min,size\n";
    for (const auto& k : c.classes) os << c.n << ',' << c.relation << ',' << to_string(k.minimum) << ',' << k.size << '\n';
    return os.str();
}

// ---- cache ----

/// NCSF_CACHE_DIR, else $XDG_CACHE_HOME/ncsf, else ~/.cache/ncsf.
inline std::filesystem::path default_cache_dir() {
    if (const char* d = std::getenv("NCSF_CACHE_DIR"); d && *d) return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "ncsf";
    if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "ncsf";
    return std::filesystem::temp_directory_path() / "ncsf";
}

inline std::filesystem::path cache_file(const std::filesystem::path& dir, int n) {
    return dir / ("transition_matrix_" + std::to_string(n) + ".json");
}

/// Loaded matrix, or nullopt when absent. Throws on unreadable or invalid content.
inline std::optional<IntMatrix> load_cached_matrix(const std::filesystem::path& dir, int n) {
    const auto file = cache_file(dir, n);
    if (!std::filesystem::exists(file)) return std::nullopt;
    std::ifstream in(file);
    json j = json::parse(in);
    IntMatrix m = matrix_from_json(j);
    if (j.at("n") != n || m.labels() != compositions_ordered(n) || !m.is_upper_unitriangular())
        throw std::invalid_argument("cached matrix does not match degree " + std::to_string(n));
    return m;
}

inline void store_cached_matrix(const std::filesystem::path& dir, const IntMatrix& m) {
    std::filesystem::create_directories(dir);
    const int n = m.labels().front().weight();
    const auto file = cache_file(dir, n);
    const auto tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << matrix_to_json(m).dump() << '\n';
    }
    std::filesystem::rename(tmp, file);
}

}  // namespace ncsf
