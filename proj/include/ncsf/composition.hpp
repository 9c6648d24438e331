#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncsf {

/// A composition of n: a finite sequence of positive parts summing to n.
///
/// Compositions are plain values compared lexicographically on their parts.
/// The empty composition has weight 0 and is the unit for concatenation.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("composition parts must be positive");
    }

    /// Composition of `n` whose descent set is `descents` (a subset of 1..n-1).
    static Composition from_descent_set(const std::set<int>& descents, int n) {
        std::vector<int> parts;
        int prev = 0;
        for (int d : descents) {
            if (d <= prev || d >= n) throw std::invalid_argument("descent out of range");
            parts.push_back(d - prev);
            prev = d;
        }
        if (n > 0) parts.push_back(n - prev);
        return Composition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    int back() const { return parts_.back(); }

    int weight() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    /// Partial sums s_1, s_1+s_2, ..., n (including n).
    std::vector<int> partial_sums() const {
        std::vector<int> out;
        int s = 0;
        for (int p : parts_) out.push_back(s += p);
        return out;
    }

    Composition concat(const Composition& other) const {
        std::vector<int> p = parts_;
        p.insert(p.end(), other.parts_.begin(), other.parts_.end());
        return Composition(std::move(p));
    }

    Composition append(int part) const {
        std::vector<int> p = parts_;
        p.push_back(part);
        return Composition(std::move(p));
    }

    /// Near-concatenation: the last part of *this merged with the first of `other`.
    Composition near_concat(const Composition& other) const {
        if (empty()) return other;
        if (other.empty()) return *this;
        std::vector<int> p = parts_;
        p.back() += other.parts_.front();
        p.insert(p.end(), other.parts_.begin() + 1, other.parts_.end());
        return Composition(std::move(p));
    }

    Composition reversed() const { return Composition(std::vector<int>(parts_.rbegin(), parts_.rend())); }

    auto operator<=>(const Composition&) const = default;
    bool operator==(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

/// {i_1, i_1+i_2, ..., i_1+...+i_{l-1}}
inline std::set<int> descent_set(const Composition& c) {
    std::set<int> d;
    auto sums = c.partial_sums();
    for (std::size_t i = 0; i + 1 < sums.size(); ++i) d.insert(sums[i]);
    return d;
}

/// The composition of the same weight whose descent set is the complement of
/// descent_set(c) in {1..n-1} (reverse of the conjugate).
inline Composition complement(const Composition& c) {
    const int n = c.weight();
    if (n == 0) return c;
    auto d = descent_set(c);
    std::set<int> comp;
    for (int i = 1; i < n; ++i)
        if (!d.count(i)) comp.insert(i);
    return Composition::from_descent_set(comp, n);
}

inline int maj(const Composition& c) {
    int s = 0;
    for (int d : descent_set(c)) s += d;
    return s;
}

/// The composition of k formed by the first k boxes of the ribbon of c.
inline Composition ribbon_prefix(const Composition& c, int k) {
    if (k < 0 || k > c.weight()) throw std::out_of_range("ribbon_prefix: k out of range");
    std::vector<int> parts;
    int remaining = k;
    for (int p : c.parts()) {
        if (remaining == 0) break;
        parts.push_back(std::min(p, remaining));
        remaining -= parts.back();
    }
    return Composition(std::move(parts));
}

/// The composition formed by the boxes of the ribbon of c after the first k.
inline Composition ribbon_suffix(const Composition& c, int k) {
    if (k < 0 || k > c.weight()) throw std::out_of_range("ribbon_suffix: k out of range");
    std::vector<int> parts;
    int skip = k;
    for (int p : c.parts()) {
        if (skip >= p) {
            skip -= p;
            continue;
        }
        parts.push_back(p - skip);
        skip = 0;
    }
    return Composition(std::move(parts));
}

/// All compositions of n in lexicographic order of their parts.
inline std::vector<Composition> compositions_lex(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

/// Order used for matrix rows and columns: by increasing length, then
/// lexicographically increasing.
struct LengthLexLess {
    bool operator()(const Composition& a, const Composition& b) const {
        if (a.length() != b.length()) return a.length() < b.length();
        return a < b;
    }
};

inline std::vector<Composition> compositions_ordered(int n) {
    auto all = compositions_lex(n);
    std::stable_sort(all.begin(), all.end(), LengthLexLess{});
    return all;
}

inline std::vector<Composition> compositions_of_length(int n, int length) {
    std::vector<Composition> out;
    for (auto& c : compositions_lex(n))
        if (static_cast<int>(c.length()) == length) out.push_back(c);
    return out;
}

/// Compact label: parts juxtaposed when all are single digits ("2111"),
/// comma-separated otherwise. The empty composition renders as "()".
inline std::string compact(const Composition& c) {
    if (c.empty()) return "()";
    bool small = std::all_of(c.parts().begin(), c.parts().end(), [](int p) { return p < 10; });
    std::string s;
    for (std::size_t i = 0; i < c.length(); ++i) {
        if (i && !small) s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

/// "1,3,3,2"; empty renders as "".
inline std::string comma_separated(const Composition& c) {
    std::string s;
    for (std::size_t i = 0; i < c.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

/// Parses "2,3,1" (also accepts "()" and "" for the empty composition).
inline Composition parse_composition(std::string_view text) {
    if (text.empty() || text == "()") return {};
    std::vector<int> parts;
    std::string tok;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
            throw std::invalid_argument("malformed composition literal: " + std::string(text));
        parts.push_back(std::stoi(tok));
    }
    return Composition(std::move(parts));
}

inline std::ostream& operator<<(std::ostream& os, const Composition& c) {
    return os << '(' << comma_separated(c) << ')';
}

}  // namespace ncsf
