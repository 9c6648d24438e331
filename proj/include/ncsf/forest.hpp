#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "composition.hpp"
#include "permutation.hpp"
#include "qpoly.hpp"

namespace ncsf {

/// Which end of a linear extension the roots sit at.
enum class Orientation {
    RootFirst,  ///< every node appears after its parent
    RootLast,   ///< every node appears before its parent
};

/// Rooted forest on distinct integer labels. Children are kept sorted by label.
class LabeledForest {
public:
    explicit LabeledForest(Orientation o = Orientation::RootFirst) : orientation_(o) {}

    /// Builds a forest from (node, parent) pairs in any order; rejects cycles
    /// and dangling parents.
    static LabeledForest from_parent_map(const std::map<int, std::optional<int>>& parents,
                                         Orientation o = Orientation::RootFirst) {
        LabeledForest f(o);
        std::set<int> placed;
        std::size_t before = 0;
        do {
            before = placed.size();
            for (const auto& [node, parent] : parents) {
                if (placed.count(node)) continue;
                if (parent && !parents.count(*parent)) throw std::invalid_argument("forest: dangling parent");
                if (!parent || placed.count(*parent)) {
                    f.add_node(node, parent);
                    placed.insert(node);
                }
            }
        } while (placed.size() != before);
        if (placed.size() != parents.size()) throw std::invalid_argument("forest: cycle in parent links");
        return f;
    }

    void add_node(int label, std::optional<int> parent = std::nullopt) {
        if (parent_.count(label)) throw std::invalid_argument("forest: duplicate label");
        if (parent && !parent_.count(*parent)) throw std::invalid_argument("forest: unknown parent");
        parent_[label] = parent;
        children_[label];
        if (parent) children_[*parent].insert(label);
    }

    Orientation orientation() const { return orientation_; }
    std::size_t size() const { return parent_.size(); }
    bool contains(int label) const { return parent_.count(label) != 0; }
    std::optional<int> parent(int label) const { return parent_.at(label); }
    const std::set<int>& children(int label) const { return children_.at(label); }
    const std::map<int, std::optional<int>>& parent_map() const { return parent_; }

    std::vector<int> labels() const {
        std::vector<int> out;
        for (const auto& [l, p] : parent_) out.push_back(l);
        return out;
    }

    std::vector<int> roots() const {
        std::vector<int> out;
        for (const auto& [l, p] : parent_)
            if (!p) out.push_back(l);
        return out;
    }

    std::vector<int> subtree(int label) const {
        std::vector<int> out{label};
        for (std::size_t i = 0; i < out.size(); ++i)
            for (int c : children_.at(out[i])) out.push_back(c);
        return out;
    }

    std::vector<int> ancestors(int label) const {
        std::vector<int> out;
        for (auto p = parent_.at(label); p; p = parent_.at(*p)) out.push_back(*p);
        return out;
    }

    int depth(int label) const { return static_cast<int>(ancestors(label).size()); }

    /// Unlabeled shape as a canonical string, e.g. "(()(()))".
    std::string shape() const {
        std::vector<std::string> parts;
        for (int r : roots()) parts.push_back(shape_of(r));
        std::sort(parts.begin(), parts.end());
        std::string s;
        for (auto& p : parts) s += p;
        return s;
    }

    /// "5(2(6 7 8 9(1)) 3 4)"; roots separated by spaces.
    std::string to_parenthesized() const {
        std::string s;
        for (int r : roots()) {
            if (!s.empty()) s += ' ';
            s += render(r);
        }
        return s;
    }

    bool operator==(const LabeledForest& o) const {
        return orientation_ == o.orientation_ && parent_ == o.parent_;
    }

    std::string shape_of(int v) const {
        std::vector<std::string> kids;
        for (int c : children_.at(v)) kids.push_back(shape_of(c));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (auto& k : kids) s += k;
        return s + ")";
    }

private:
    std::string render(int v) const {
        std::string s = std::to_string(v);
        const auto& kids = children_.at(v);
        if (kids.empty()) return s;
        s += '(';
        bool first = true;
        for (int c : kids) {
            if (!first) s += ' ';
            first = false;
            s += render(c);
        }
        return s + ')';
    }

    Orientation orientation_;
    std::map<int, std::optional<int>> parent_;
    std::map<int, std::set<int>> children_;
};

/// Parses the parenthesized format produced by to_parenthesized().
/// Node map a -> b preserving parents; siblings are paired by subtree shape,
/// then by label.
inline std::map<int, int> forest_isomorphism(const LabeledForest& a, const LabeledForest& b) {
    if (a.shape() != b.shape()) throw std::invalid_argument("forest_isomorphism: shapes differ");
    auto sorted = [](const LabeledForest& f, std::vector<int> nodes) {
        std::vector<std::pair<std::string, int>> keyed;
        for (int v : nodes) keyed.push_back({f.shape_of(v), v});
        std::sort(keyed.begin(), keyed.end());
        return keyed;
    };
    std::map<int, int> phi;
    auto match = [&](auto&& self, const std::vector<int>& xs, const std::vector<int>& ys) -> void {
        auto kx = sorted(a, xs), ky = sorted(b, ys);
        for (std::size_t i = 0; i < kx.size(); ++i) {
            phi[kx[i].second] = ky[i].second;
            const auto& cx = a.children(kx[i].second);
            const auto& cy = b.children(ky[i].second);
            self(self, std::vector<int>(cx.begin(), cx.end()), std::vector<int>(cy.begin(), cy.end()));
        }
    };
    match(match, a.roots(), b.roots());
    return phi;
}

inline LabeledForest parse_parenthesized(std::string_view text, Orientation o = Orientation::RootFirst) {
    LabeledForest f(o);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    auto read_label = [&]() -> int {
        std::size_t start = i;
        if (i < text.size() && text[i] == '-') ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw std::invalid_argument("forest: expected label");
        return std::stoi(std::string(text.substr(start, i - start)));
    };
    auto node = [&](auto&& self, std::optional<int> parent) -> void {
        int label = read_label();
        f.add_node(label, parent);
        if (i < text.size() && text[i] == '(') {
            ++i;
            skip_ws();
            while (i < text.size() && text[i] != ')') {
                self(self, label);
                skip_ws();
            }
            if (i >= text.size()) throw std::invalid_argument("forest: unbalanced parentheses");
            ++i;
        }
    };
    skip_ws();
    while (i < text.size()) {
        node(node, std::nullopt);
        skip_ws();
    }
    return f;
}

inline void require_standard_labels(const LabeledForest& f) {
    auto ls = f.labels();
    for (std::size_t i = 0; i < ls.size(); ++i)
        if (ls[i] != static_cast<int>(i) + 1) throw std::invalid_argument("forest labels must be exactly 1..n");
}

/// All linear extensions, in lexicographic order.
inline std::vector<Permutation> linear_extensions(const LabeledForest& f) {
    require_standard_labels(f);
    std::vector<std::vector<int>> words;
    std::vector<int> cur;
    std::set<int> available;
    for (int r : f.roots()) available.insert(r);
    auto rec = [&](auto&& self) -> void {
        if (available.empty()) {
            words.push_back(cur);
            return;
        }
        std::vector<int> snapshot(available.begin(), available.end());
        for (int v : snapshot) {
            available.erase(v);
            for (int c : f.children(v)) available.insert(c);
            cur.push_back(v);
            self(self);
            cur.pop_back();
            for (int c : f.children(v)) available.erase(c);
            available.insert(v);
        }
    };
    rec(rec);
    std::vector<Permutation> out;
    for (auto& w : words) {
        if (f.orientation() == Orientation::RootLast) std::reverse(w.begin(), w.end());
        out.emplace_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Lexicographically smallest linear extension (greedy smallest available).
inline Permutation min_linear_extension(const LabeledForest& f) {
    require_standard_labels(f);
    std::vector<int> w;
    std::set<int> available;
    if (f.orientation() == Orientation::RootFirst) {
        for (int r : f.roots()) available.insert(r);
        while (!available.empty()) {
            const int v = *available.begin();
            available.erase(available.begin());
            w.push_back(v);
            for (int c : f.children(v)) available.insert(c);
        }
    } else {
        std::map<int, std::size_t> pending;
        for (int v : f.labels()) {
            pending[v] = f.children(v).size();
            if (!pending[v]) available.insert(v);
        }
        while (!available.empty()) {
            const int v = *available.begin();
            available.erase(available.begin());
            w.push_back(v);
            if (auto p = f.parent(v); p && --pending[*p] == 0) available.insert(*p);
        }
    }
    return Permutation(std::move(w));
}

/// Hook of a node: size of its subtree.
inline std::map<int, int> hook_lengths(const LabeledForest& f) {
    std::map<int, int> h;
    for (int v : f.labels()) h[v] = static_cast<int>(f.subtree(v).size());
    return h;
}

/// n! / prod(hooks): the number of linear extensions.
inline BigInt hook_count(const LabeledForest& f) {
    BigInt num = factorial(static_cast<int>(f.size()));
    BigInt den = 1;
    for (const auto& [v, h] : hook_lengths(f)) den *= h;
    return num / den;
}

/// Every subtree's label set is an interval of consecutive integers.
inline bool is_recursive_labeling(const LabeledForest& f) {
    for (int v : f.labels()) {
        auto s = f.subtree(v);
        auto [lo, hi] = std::minmax_element(s.begin(), s.end());
        if (*hi - *lo + 1 != static_cast<int>(s.size())) return false;
    }
    return true;
}

/// Inversions every linear extension must have: ancestor/descendant pairs
/// whose forced order disagrees with label order.
inline int forced_inversions(const LabeledForest& f) {
    int count = 0;
    for (int v : f.labels())
        for (int a : f.ancestors(v)) {
            bool inverted = f.orientation() == Orientation::RootFirst ? a > v : v > a;
            if (inverted) ++count;
        }
    return count;
}

/// Brute-force sum over linear extensions of q^{inv}.
inline QPoly enumerate_q_count(const LabeledForest& f) {
    QPoly p;
    for (const auto& w : linear_extensions(f)) p += QPoly::monomial(inversions(w));
    return p;
}

struct QCount {
    QPoly polynomial;
    bool by_hook_formula;  ///< false when the labeling was not recursive and extensions were enumerated
};

/// Inversion-graded count of linear extensions. Recursive labelings use
/// q^{forced inversions} [n]_q! / prod [h_v]_q; others are enumerated.
inline QCount bw_q_count(const LabeledForest& f) {
    if (is_recursive_labeling(f)) {
        QPoly den = 1;
        for (const auto& [v, h] : hook_lengths(f)) den *= q_int(h);
        QPoly body = exact_div(q_factorial(static_cast<int>(f.size())), den);
        return {body.shifted(forced_inversions(f)), true};
    }
    return {enumerate_q_count(f), false};
}

/// The comb-shaped poset whose linear extensions are the inverses of the
/// permutations with saillance composition c. Block j (values s_{j-1}+1..s_j)
/// hangs below its head s_{j-1}+1, which also covers the previous head.
inline LabeledForest comb_poset(const Composition& c) {
    if (c.empty()) throw std::invalid_argument("comb_poset: empty composition");
    LabeledForest f(Orientation::RootLast);
    auto sums = c.partial_sums();
    // add from the root down: last head first
    for (std::size_t j = sums.size(); j-- > 0;) {
        const int start = j ? sums[j - 1] : 0;
        const int head = start + 1;
        if (j + 1 == sums.size())
            f.add_node(head);
        else
            f.add_node(head, sums[j] + 1);
        for (int v = start + 2; v <= sums[j]; ++v) f.add_node(v, head);
    }
    return f;
}

/// 2..i_1 1 . (i_1+2)..(i_1+i_2)(i_1+1) . ...
inline Permutation minimal_extension(const Composition& c) {
    if (c.empty()) throw std::invalid_argument("minimal_extension: empty composition");
    std::vector<int> w;
    int prev = 0;
    for (int s : c.partial_sums()) {
        for (int v = prev + 2; v <= s; ++v) w.push_back(v);
        w.push_back(prev + 1);
        prev = s;
    }
    return Permutation(std::move(w));
}

}  // namespace ncsf
