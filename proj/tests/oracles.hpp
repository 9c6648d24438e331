#pragma once

// Naive reference implementations. Nothing here calls into the library
// except for the value types it returns.

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <ncsf/composition.hpp>
#include <ncsf/forest.hpp>
#include <ncsf/permutation.hpp>

namespace oracle {

using Word = std::vector<int>;
using ncsf::Composition;

inline std::vector<Word> words(int n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Word> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline int inversions(const Word& w) {
    int c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
    return c;
}

inline Composition from_cut_points(std::vector<int> cuts, int n) {
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> parts;
    int prev = 0;
    for (int c : cuts) {
        parts.push_back(c - prev);
        prev = c;
    }
    parts.push_back(n - prev);
    return Composition(parts);
}

/// Peels initially dominated factors off the right end: the last factor
/// starts at the maximum of what remains.
inline Composition saillance(const Word& w) {
    std::vector<int> lengths;
    std::size_t end = w.size();
    while (end > 0) {
        const auto start = static_cast<std::size_t>(std::max_element(w.begin(), w.begin() + end) - w.begin());
        lengths.push_back(static_cast<int>(end - start));
        end = start;
    }
    std::reverse(lengths.begin(), lengths.end());
    return Composition(lengths);
}

/// i is a recoil when i+1 sits to the left of i.
inline Composition recoils(const Word& w) {
    const int n = static_cast<int>(w.size());
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) pos[w[i]] = i;
    std::vector<int> cuts;
    for (int i = 1; i < n; ++i)
        if (pos[i + 1] < pos[i]) cuts.push_back(i);
    return from_cut_points(cuts, n);
}

inline std::vector<Word> cycle_list(const Word& w) {
    std::vector<bool> seen(w.size() + 1);
    std::vector<Word> out;
    for (int s = 1; s <= static_cast<int>(w.size()); ++s) {
        if (seen[s]) continue;
        Word c;
        for (int x = s; !seen[x]; x = w[x - 1]) {
            seen[x] = true;
            c.push_back(x);
        }
        out.push_back(c);
    }
    return out;
}

inline Composition octype(const Word& w) {
    auto cs = cycle_list(w);
    std::sort(cs.begin(), cs.end(), [](const Word& a, const Word& b) {
        return *std::max_element(a.begin(), a.end()) < *std::max_element(b.begin(), b.end());
    });
    std::vector<int> parts;
    for (const auto& c : cs) parts.push_back(static_cast<int>(c.size()));
    return Composition(parts);
}

inline Composition min_desc_type(const Word& w) {
    auto cs = cycle_list(w);
    std::sort(cs.begin(), cs.end(), [](const Word& a, const Word& b) { return a.front() > b.front(); });
    std::vector<int> parts;
    for (const auto& c : cs) parts.push_back(static_cast<int>(c.size()));
    return Composition(parts);
}

/// cycle_list already starts every cycle at its minimum, in increasing order.
inline Word foata(const Word& w) {
    Word out;
    for (const auto& c : cycle_list(w)) out.insert(out.end(), c.begin(), c.end());
    return out;
}

/// Column heights of the ribbon diagram, left to right.
inline Composition ribbon_columns(const Composition& c) {
    std::map<int, int> height;
    int x = 0;
    for (std::size_t r = 0; r < c.length(); ++r) {
        for (int k = 0; k < c[r]; ++k) height[x + k] += 1;
        x += c[r] - 1;
    }
    std::vector<int> parts;
    for (const auto& [col, h] : height) parts.push_back(h);
    return Composition(parts);
}

inline Composition ribbon_transpose(const Composition& c) {
    auto p = ribbon_columns(c).parts();
    std::reverse(p.begin(), p.end());
    return Composition(p);
}

/// Interleavings of u and v by choosing the positions of u.
inline std::set<Word> shuffle(const Word& u, const Word& v) {
    const std::size_t n = u.size() + v.size();
    std::set<Word> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != u.size()) continue;
        Word w;
        std::size_t i = 0, j = 0;
        for (std::size_t k = 0; k < n; ++k) w.push_back((mask >> k) & 1 ? u[i++] : v[j++]);
        out.insert(w);
    }
    return out;
}

inline std::set<Word> shifted_shuffle(const Word& a, const Word& b) {
    Word shifted = b;
    for (int& x : shifted) x += static_cast<int>(a.size());
    return shuffle(a, shifted);
}

inline Composition descent_composition(const Word& w) {
    std::vector<int> cuts;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] > w[i]) cuts.push_back(static_cast<int>(i));
    return from_cut_points(cuts, static_cast<int>(w.size()));
}

/// Closure under replacing three adjacent letters whose pattern is one side
/// of a pair by the other side, on strings.
inline std::set<std::string> closure(const std::string& start, const std::vector<std::pair<std::string, std::string>>& pairs) {
    auto pattern = [](const std::string& t) {
        std::string p = "123";
        for (int i = 0; i < 3; ++i) {
            int rank = 1;
            for (int j = 0; j < 3; ++j) rank += t[j] < t[i];
            p[i] = static_cast<char>('0' + rank);
        }
        return p;
    };
    auto apply = [](const std::string& t, const std::string& to) {
        std::string sorted = t;
        std::sort(sorted.begin(), sorted.end());
        std::string out(3, ' ');
        for (int i = 0; i < 3; ++i) out[i] = sorted[to[i] - '1'];
        return out;
    };
    std::set<std::string> seen{start};
    std::deque<std::string> todo{start};
    while (!todo.empty()) {
        std::string w = todo.front();
        todo.pop_front();
        for (std::size_t i = 0; i + 3 <= w.size(); ++i) {
            const std::string t = w.substr(i, 3);
            const std::string p = pattern(t);
            for (const auto& [a, b] : pairs) {
                std::string to;
                if (p == a) to = b;
                else if (p == b) to = a;
                else continue;
                std::string next = w;
                next.replace(i, 3, apply(t, to));
                if (seen.insert(next).second) todo.push_back(next);
            }
        }
    }
    return seen;
}

inline std::string digits(const Word& w) {
    std::string s;
    for (int x : w) s += static_cast<char>('0' + x);
    return s;
}

/// Words on the forest's labels in which every node sits on the proper side
/// of each ancestor.
inline std::set<Word> linear_extensions(const ncsf::LabeledForest& f) {
    Word w = f.labels();
    std::set<Word> out;
    do {
        std::map<int, std::size_t> pos;
        for (std::size_t i = 0; i < w.size(); ++i) pos[w[i]] = i;
        bool ok = true;
        for (int v : w)
            for (int a : f.ancestors(v)) {
                const bool after = pos[v] > pos[a];
                if (after != (f.orientation() == ncsf::Orientation::RootFirst)) ok = false;
            }
        if (ok) out.insert(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace oracle
