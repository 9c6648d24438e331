#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "composition.hpp"

namespace ncsf {

/// A permutation of {1..n} in one-line notation. Positions are 0-based in the
/// API, values are 1-based.
class Permutation {
public:
    Permutation() = default;
    Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        std::vector<bool> seen(word_.size() + 1, false);
        for (int v : word_) {
            if (v < 1 || v > static_cast<int>(word_.size()) || seen[v])
                throw std::invalid_argument("not a permutation word");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(word_.size()); }
    int operator[](int pos) const { return word_[pos]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const {
        std::vector<int> inv(word_.size());
        for (int i = 0; i < size(); ++i) inv[word_[i] - 1] = i + 1;
        return Permutation(std::move(inv));
    }

    Permutation reversed() const { return Permutation(std::vector<int>(word_.rbegin(), word_.rend())); }

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

/// All permutations of n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do out.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// Calls f(word) for every permutation word of n without materializing the set.
template <typename F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do f(Permutation(w));
    while (std::next_permutation(w.begin(), w.end()));
}

/// Relabels a word of distinct integers by 1..n preserving relative order.
inline Permutation standardize(const std::vector<int>& word) {
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("standardize: repeated letter");
    std::vector<int> out(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
        out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), word[i]) - sorted.begin()) + 1;
    return Permutation(std::move(out));
}

/// Digit string for n <= 9, comma-separated otherwise. Empty renders as "()".
inline std::string to_string(const Permutation& p) {
    if (p.size() == 0) return "()";
    std::string s;
    for (int i = 0; i < p.size(); ++i) {
        if (i && p.size() > 9) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

inline Permutation parse_permutation(std::string_view text) {
    if (text.empty() || text == "()") return {};
    std::vector<int> w;
    if (text.find(',') == std::string_view::npos) {
        for (char ch : text) {
            if (ch < '1' || ch > '9') throw std::invalid_argument("malformed permutation literal: " + std::string(text));
            w.push_back(ch - '0');
        }
    } else {
        std::stringstream ss{std::string(text)};
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
                throw std::invalid_argument("malformed permutation literal: " + std::string(text));
            w.push_back(std::stoi(tok));
        }
    }
    return Permutation(std::move(w));
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }

inline int inversions(const Permutation& p) {
    int inv = 0;
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

inline int inversions(const std::vector<int>& word) {
    int inv = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++inv;
    return inv;
}

/// 0-based positions of the left-to-right maxima.
inline std::vector<int> ltr_maxima_positions(const Permutation& p) {
    std::vector<int> pos;
    int best = 0;
    for (int i = 0; i < p.size(); ++i)
        if (p[i] > best) {
            best = p[i];
            pos.push_back(i);
        }
    return pos;
}

/// Lengths of the factors of the increasing factorization into initially
/// dominated words. Each factor starts at a left-to-right maximum.
inline Composition saillance_composition(const Permutation& p) {
    std::vector<int> parts;
    int start = 0;
    int head = 0;
    for (int i = 0; i < p.size(); ++i) {
        if (i == 0) {
            head = p[0];
            continue;
        }
        if (p[i] > head) {  // ends the initially dominated factor
            parts.push_back(i - start);
            start = i;
            head = p[i];
        }
    }
    if (p.size() > 0) parts.push_back(p.size() - start);
    return Composition(std::move(parts));
}

/// Values i in 1..n-1 such that i+1 appears to the left of i.
inline std::set<int> recoil_set(const Permutation& p) {
    auto inv = p.inverse();
    std::set<int> r;
    for (int i = 1; i < p.size(); ++i)
        if (inv[i] < inv[i - 1]) r.insert(i);
    return r;
}

inline Composition recoil_composition(const Permutation& p) {
    return Composition::from_descent_set(recoil_set(p), p.size());
}

/// Positions i in 1..n-1 with p_i > p_{i+1}.
inline std::set<int> descent_set(const Permutation& p) {
    std::set<int> d;
    for (int i = 1; i < p.size(); ++i)
        if (p[i - 1] > p[i]) d.insert(i);
    return d;
}

/// Cycles of p, each starting at its smallest element, ordered by smallest element.
inline std::vector<std::vector<int>> cycles(const Permutation& p) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(p.size() + 1, false);
    for (int start = 1; start <= p.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        for (int v = start; !seen[v]; v = p[v - 1]) {
            seen[v] = true;
            cyc.push_back(v);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

/// Cycle lengths listed by increasing cycle maximum.
inline Composition ordered_cycle_type(const Permutation& p) {
    auto cs = cycles(p);
    std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) {
        return *std::max_element(a.begin(), a.end()) < *std::max_element(b.begin(), b.end());
    });
    std::vector<int> parts;
    for (const auto& c : cs) parts.push_back(static_cast<int>(c.size()));
    return Composition(std::move(parts));
}

/// Foata's first fundamental transformation: standard cycle form (cycles by
/// increasing minimum, minimum first) with the parentheses erased.
inline Permutation foata_first(const Permutation& p) {
    std::vector<int> w;
    for (const auto& c : cycles(p)) w.insert(w.end(), c.begin(), c.end());
    return Permutation(std::move(w));
}

inline int invc(const Permutation& p) { return inversions(foata_first(p)); }

/// Cycle lengths listed by decreasing cycle minimum. This is the grouping under
/// which invc is distributed by the tilde cycle-index coefficients.
inline Composition carlitz_cycle_type(const Permutation& p) {
    std::vector<int> parts;
    for (const auto& c : cycles(p)) parts.push_back(static_cast<int>(c.size()));
    std::reverse(parts.begin(), parts.end());
    return Composition(std::move(parts));
}

/// Values of the left-to-right minima, in order of appearance.
inline std::vector<int> ltr_minima_values(const Permutation& p) {
    std::vector<int> vals;
    for (int i = 0; i < p.size(); ++i)
        if (vals.empty() || p[i] < vals.back()) vals.push_back(p[i]);
    return vals;
}

/// 0-based positions of the left-to-right minima.
inline std::vector<int> ltr_minima_positions(const Permutation& p) {
    std::vector<int> pos;
    int best = p.size() + 1;
    for (int i = 0; i < p.size(); ++i)
        if (p[i] < best) {
            best = p[i];
            pos.push_back(i);
        }
    return pos;
}

/// All interleavings of two words (as a multiset; duplicates only when letters repeat).
inline std::vector<std::vector<int>> shuffle_words(const std::vector<int>& u, const std::vector<int>& v) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    cur.reserve(u.size() + v.size());
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == u.size() && j == v.size()) {
            out.push_back(cur);
            return;
        }
        if (i < u.size()) {
            cur.push_back(u[i]);
            self(self, i + 1, j);
            cur.pop_back();
        }
        if (j < v.size()) {
            cur.push_back(v[j]);
            self(self, i, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Shuffles of a with b shifted up by |a|.
inline std::vector<Permutation> shifted_shuffle(const Permutation& a, const Permutation& b) {
    std::vector<int> shifted = b.word();
    for (int& x : shifted) x += a.size();
    std::vector<Permutation> out;
    for (auto& w : shuffle_words(a.word(), shifted)) out.emplace_back(std::move(w));
    return out;
}

/// A deterministic permutation with the given saillance composition: block j
/// reads s_j, s_{j-1}+1, ..., s_j - 1.
inline Permutation canonical_representative(const Composition& c) {
    if (c.empty()) throw std::invalid_argument("canonical_representative: empty composition");
    std::vector<int> w;
    int prev = 0;
    for (int s : c.partial_sums()) {
        w.push_back(s);
        for (int v = prev + 1; v < s; ++v) w.push_back(v);
        prev = s;
    }
    return Permutation(std::move(w));
}

}  // namespace ncsf
