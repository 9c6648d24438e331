#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "composition.hpp"
#include "forest.hpp"
#include "permutation.hpp"

namespace ncsf {

using Pattern = std::array<int, 3>;

/// Equivalence generated by swapping a 3-pattern occurrence with its partner.
struct PatternRelation {
    std::string name;
    std::vector<std::pair<Pattern, Pattern>> pairs;

    /// cab = cba, abc = acb
    static PatternRelation eq1() { return {"eq1", {{{3, 1, 2}, {3, 2, 1}}, {{1, 2, 3}, {1, 3, 2}}}}; }
    /// bac = bca, abc = acb
    static PatternRelation eq2() { return {"eq2", {{{2, 1, 3}, {2, 3, 1}}, {{1, 2, 3}, {1, 3, 2}}}}; }
    /// 321 = 231, 312 = 132
    static PatternRelation mirror() { return {"mirror", {{{3, 2, 1}, {2, 3, 1}}, {{3, 1, 2}, {1, 3, 2}}}}; }

    static PatternRelation by_name(const std::string& name) {
        if (name == "eq1") return eq1();
        if (name == "eq2") return eq2();
        if (name == "mirror") return mirror();
        throw std::invalid_argument("unknown relation: " + name + " (expected eq1, eq2 or mirror)");
    }

    bool operator==(const PatternRelation&) const = default;
};

namespace detail {

inline std::uint64_t pack(const std::vector<int>& w) {
    if (w.size() > 15) throw std::out_of_range("pattern relations: words longer than 15 are not supported");
    std::uint64_t key = 0;
    for (int v : w) key = (key << 4) | static_cast<std::uint64_t>(v);
    return key;
}

inline Pattern pattern_of(int x, int y, int z) {
    return {1 + (x > y) + (x > z), 1 + (y > x) + (y > z), 1 + (z > x) + (z > y)};
}

/// Calls f(word) for every single replacement applied to w. Occurrences are
/// factors: three adjacent letters.
template <typename F>
void for_each_neighbor(const std::vector<int>& w, const PatternRelation& rel, F&& f) {
    std::vector<int> next = w;
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
        const Pattern p = pattern_of(w[i], w[i + 1], w[i + 2]);
        std::array<int, 3> sorted{w[i], w[i + 1], w[i + 2]};
        std::sort(sorted.begin(), sorted.end());
        for (const auto& [a, b] : rel.pairs) {
            const Pattern* target = p == a ? &b : (p == b ? &a : nullptr);
            if (!target) continue;
            for (std::size_t t = 0; t < 3; ++t) next[i + t] = sorted[static_cast<std::size_t>((*target)[t] - 1)];
            f(next);
            for (std::size_t t = 0; t < 3; ++t) next[i + t] = w[i + t];
        }
    }
}

inline std::vector<std::vector<int>> closure_words(const std::vector<int>& start, const PatternRelation& rel,
                                                   std::unordered_set<std::uint64_t>& seen) {
    std::vector<std::vector<int>> out{start};
    seen.insert(pack(start));
    for (std::size_t head = 0; head < out.size(); ++head) {
        const auto cur = out[head];
        for_each_neighbor(cur, rel, [&](const std::vector<int>& nb) {
            if (seen.insert(pack(nb)).second) out.push_back(nb);
        });
    }
    return out;
}

}  // namespace detail

/// Equivalence class of p, by breadth-first search over replacements.
inline std::set<Permutation> pattern_closure(const Permutation& p, const PatternRelation& rel) {
    std::unordered_set<std::uint64_t> seen;
    std::set<Permutation> out;
    for (auto& w : detail::closure_words(p.word(), rel, seen)) out.emplace(std::move(w));
    return out;
}

/// W-chain as 1-based positions.
inline std::vector<int> w_chain(const Permutation& p) {
    const int n = p.size();
    if (n < 1) throw std::invalid_argument("w_chain: empty permutation");
    const auto& w = p.word();
    const int pos1 = static_cast<int>(std::find(w.begin(), w.end(), 1) - w.begin());
    const int posn = static_cast<int>(std::find(w.begin(), w.end(), n) - w.begin());
    std::vector<int> chain{std::max(pos1, posn)};
    while (chain.back() > 0) {
        const int end = chain.back();
        const auto first = w.begin();
        const auto last = w.begin() + end;  // prefix before the current element
        const bool current_is_min = *std::min_element(first, last + 1) == w[static_cast<std::size_t>(end)];
        const auto other = current_is_min ? std::max_element(first, last) : std::min_element(first, last);
        chain.push_back(static_cast<int>(other - first));
    }
    std::reverse(chain.begin(), chain.end());
    for (int& s : chain) ++s;
    return chain;
}

/// Value symbol and position symbol of the same shape.
/// Children are unordered, so two forests alone can lose which Q node sits
/// on which P node (123 and 132 both give 1(2 3) twice); `position` keeps it.
struct InsertionPair {
    LabeledForest P;
    LabeledForest Q;
    std::map<int, int> position;  ///< P label -> Q label

    bool operator==(const InsertionPair&) const = default;

    /// P with each node written value:position.
    std::string joint() const {
        std::string s;
        auto rec = [&](auto&& self, int v) -> void {
            s += std::to_string(v) + ':' + std::to_string(position.at(v));
            const auto& kids = P.children(v);
            if (kids.empty()) return;
            s += '(';
            bool first = true;
            for (int c : kids) {
                if (!first) s += ' ';
                first = false;
                self(self, c);
            }
            s += ')';
        };
        for (int r : P.roots()) {
            if (!s.empty()) s += ' ';
            rec(rec, r);
        }
        return s;
    }
};

namespace detail {

/// chain: 1-based positions; attach(value) returns the chain index the
/// non-chain value hangs from.
template <typename Attach>
InsertionPair build_symbols(const Permutation& p, const std::vector<int>& chain, Attach&& attach) {
    std::map<int, std::optional<int>> pv, qv;
    std::set<int> on_chain;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const int pos = chain[i];
        on_chain.insert(pos);
        if (i == 0) {
            pv[p[pos - 1]] = std::nullopt;
            qv[pos] = std::nullopt;
        } else {
            pv[p[pos - 1]] = p[chain[i - 1] - 1];
            qv[pos] = chain[i - 1];
        }
    }
    for (int pos = 1; pos <= p.size(); ++pos) {
        if (on_chain.count(pos)) continue;
        const std::size_t i = attach(p[pos - 1]);
        pv[p[pos - 1]] = p[chain[i] - 1];
        qv[pos] = chain[i];
    }
    std::map<int, int> position;
    for (int pos = 1; pos <= p.size(); ++pos) position[p[pos - 1]] = pos;
    return {LabeledForest::from_parent_map(pv), LabeledForest::from_parent_map(qv), std::move(position)};
}

/// Index of the topmost chain element whose interval to the next one
/// contains v.
inline std::size_t interval_index(const std::vector<int>& chain_values, int v) {
    for (std::size_t i = 0; i + 1 < chain_values.size(); ++i) {
        const auto [lo, hi] = std::minmax(chain_values[i], chain_values[i + 1]);
        if (lo < v && v < hi) return i;
    }
    throw std::logic_error("W-chain interval not found");
}

/// Index of the topmost chain element smaller than v.
inline std::size_t smaller_index(const std::vector<int>& chain_values, int v) {
    for (std::size_t i = 0; i < chain_values.size(); ++i)
        if (chain_values[i] < v) return i;
    throw std::logic_error("no smaller chain element");
}

inline std::vector<int> values_at(const Permutation& p, const std::vector<int>& positions) {
    std::vector<int> out;
    for (int s : positions) out.push_back(p[s - 1]);
    return out;
}

}  // namespace detail

inline InsertionPair insert_eq1(const Permutation& p) {
    const auto chain = w_chain(p);
    const auto values = detail::values_at(p, chain);
    return detail::build_symbols(p, chain, [&](int v) { return detail::interval_index(values, v); });
}

inline InsertionPair insert_eq2(const Permutation& p) {
    if (p.size() < 1) throw std::invalid_argument("insert_eq2: empty permutation");
    std::vector<int> chain = ltr_minima_positions(p);
    for (int& s : chain) ++s;
    const auto values = detail::values_at(p, chain);
    return detail::build_symbols(p, chain, [&](int v) { return detail::smaller_index(values, v); });
}

inline LabeledForest insert_P(const Permutation& p) { return insert_eq1(p).P; }
inline LabeledForest insert_Q(const Permutation& p) { return insert_eq1(p).Q; }
inline LabeledForest insert_P2(const Permutation& p) { return insert_eq2(p).P; }
inline LabeledForest insert_Q2(const Permutation& p) { return insert_eq2(p).Q; }

/// Chain value sequences (top to bottom) of all W-sets of size n: S contains
/// 1 and n, bottom is 1 or n, and going up alternates remaining max and min.
inline std::vector<std::vector<int>> w_chains(int n) {
    if (n < 1) throw std::invalid_argument("w_chains: n must be positive");
    if (n == 1) return {{1}};
    std::vector<std::vector<int>> out;
    const int inner = n - 2;
    for (std::uint32_t mask = 0; mask < (1u << inner); ++mask) {
        std::vector<int> middle;
        for (int b = 0; b < inner; ++b)
            if (mask & (1u << b)) middle.push_back(b + 2);
        for (bool one_at_bottom : {true, false}) {
            std::vector<int> up{one_at_bottom ? 1 : n, one_at_bottom ? n : 1};
            std::size_t lo = 0, hi = middle.size();
            bool take_min = one_at_bottom;
            while (lo < hi) {
                up.push_back(take_min ? middle[lo++] : middle[--hi]);
                take_min = !take_min;
            }
            std::reverse(up.begin(), up.end());
            out.push_back(up);
        }
    }
    return out;
}

/// The value symbol of the class with the given W-chain values.
inline LabeledForest poset_from_w_chain(int n, const std::vector<int>& chain) {
    std::map<int, std::optional<int>> parents;
    for (std::size_t i = 0; i < chain.size(); ++i)
        parents[chain[i]] = i ? std::optional<int>(chain[i - 1]) : std::nullopt;
    for (int v = 1; v <= n; ++v)
        if (!parents.count(v)) parents[v] = chain[detail::interval_index(chain, v)];
    return LabeledForest::from_parent_map(parents);
}

/// The value symbol of the class with the given left-to-right minima values.
inline LabeledForest poset_from_lrm(int n, const std::vector<int>& chain) {
    std::map<int, std::optional<int>> parents;
    for (std::size_t i = 0; i < chain.size(); ++i)
        parents[chain[i]] = i ? std::optional<int>(chain[i - 1]) : std::nullopt;
    for (int v = 1; v <= n; ++v)
        if (!parents.count(v)) parents[v] = chain[detail::smaller_index(chain, v)];
    return LabeledForest::from_parent_map(parents);
}

enum class CensusMethod { BFS, Insertion };

struct ClassInfo {
    Permutation minimum;
    BigInt size;

    bool operator==(const ClassInfo&) const = default;
};

struct Census {
    int n = 0;
    std::string relation;
    std::vector<ClassInfo> classes;  ///< increasing by minimal element

    std::size_t count() const { return classes.size(); }

    std::multiset<BigInt> sizes() const {
        std::multiset<BigInt> s;
        for (const auto& c : classes) s.insert(c.size);
        return s;
    }
};

/// Classes of S_n. BFS works up to n = 8; the insertion path enumerates
/// chains and sizes classes by hook lengths, up to n = 12.
inline Census class_census(int n, const PatternRelation& rel, CensusMethod method = CensusMethod::BFS) {
    if (n < 1) throw std::invalid_argument("class_census: n must be positive");
    Census out{n, rel.name, {}};
    if (method == CensusMethod::BFS) {
        check_degree_bound("class_census (BFS)", n, 8);
        std::unordered_set<std::uint64_t> seen;
        for_each_permutation(n, [&](const Permutation& p) {
            if (seen.count(detail::pack(p.word()))) return;
            auto words = detail::closure_words(p.word(), rel, seen);
            out.classes.push_back({p, BigInt(words.size())});  // lexicographic sweep: p is the minimum
        });
        return out;
    }
    check_degree_bound("class_census (insertion)", n, 12);
    std::vector<LabeledForest> posets;
    if (rel.name == "eq1") {
        for (const auto& chain : w_chains(n)) {
            auto poset = poset_from_w_chain(n, chain);
            if (!(insert_P(min_linear_extension(poset)) == poset)) throw std::logic_error("W-chain does not round-trip");
            posets.push_back(std::move(poset));
        }
    } else if (rel.name == "eq2" || rel.name == "mirror") {
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> chain;
            for (int v = n; v >= 2; --v)
                if (mask & (1u << (v - 2))) chain.push_back(v);
            chain.push_back(1);
            auto poset = poset_from_lrm(n, chain);
            if (!(insert_P2(min_linear_extension(poset)) == poset)) throw std::logic_error("lrm chain does not round-trip");
            if (rel.name == "mirror") {  // reversed words: every node before its parent
                std::map<int, std::optional<int>> parents = poset.parent_map();
                poset = LabeledForest::from_parent_map(parents, Orientation::RootLast);
            }
            posets.push_back(std::move(poset));
        }
    } else {
        throw std::invalid_argument("class_census: no insertion path for relation " + rel.name);
    }
    for (const auto& poset : posets) out.classes.push_back({min_linear_extension(poset), hook_count(poset)});
    std::sort(out.classes.begin(), out.classes.end(),
              [](const ClassInfo& a, const ClassInfo& b) { return a.minimum < b.minimum; });
    return out;
}

/// Number of eq1 classes whose permutations begin with k, for k = 1..n.
inline std::map<int, BigInt> classes_by_first_letter(int n) {
    check_degree_bound("classes_by_first_letter", n, 12);
    std::map<int, BigInt> out;
    for (int k = 1; k <= n; ++k) out[k] = 0;
    for (const auto& chain : w_chains(n)) out[chain.front()] += 1;
    return out;
}

/// Normal form of the eq2 class: rewrite factors acb -> abc and bca -> bac
/// until neither occurs.
inline Permutation v_permutation(const Permutation& p) {
    std::vector<int> w = p.word();
    const std::size_t n = w.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 2 < n; ++i) {
            const Pattern pat = detail::pattern_of(w[i], w[i + 1], w[i + 2]);
            if (pat == Pattern{1, 3, 2} || pat == Pattern{2, 3, 1}) {
                std::swap(w[i + 1], w[i + 2]);
                changed = true;
            }
        }
    }
    return Permutation(std::move(w));
}

/// eq1 classes matched with eq2 classes of the same naked shape ("1 below n"
/// with "1 below 2"). A permutation moves to the class partner by carrying its
/// positions across a fixed isomorphism of the two posets, so Q is kept.
struct ClassBijection {
    std::map<Permutation, Permutation> classes;       ///< class minimum -> class minimum
    std::map<Permutation, Permutation> permutations;  ///< sigma -> tau
};

inline ClassBijection class_bijection(int n) {
    check_degree_bound("class_bijection", n, 10);
    if (n < 1) throw std::invalid_argument("class_bijection: n must be positive");
    using Key = std::pair<std::string, bool>;
    auto key_of = [](const LabeledForest& poset, int upper) {
        const auto parent = poset.parent(1);
        return Key{poset.shape(), parent && *parent == upper};
    };

    std::map<Key, LabeledForest> eq2_by_key;
    for_each_permutation(n, [&](const Permutation& p) {
        auto P2 = insert_eq2(p).P;
        auto [it, fresh] = eq2_by_key.emplace(key_of(P2, 2), P2);
        if (!fresh && !(it->second == P2)) throw std::logic_error("class_bijection: shape has more than one labeling of a kind");
    });

    ClassBijection out;
    std::map<std::string, std::pair<LabeledForest, std::map<int, int>>> matched;  // eq1 poset -> eq2 poset, node map
    for_each_permutation(n, [&](const Permutation& p) {
        auto ins = insert_eq1(p);
        const auto label = ins.P.to_parenthesized();
        auto it = matched.find(label);
        if (it == matched.end()) {
            auto target = eq2_by_key.find(key_of(ins.P, n));
            if (target == eq2_by_key.end()) throw std::logic_error("class_bijection: no eq2 poset of the same shape");
            it = matched.emplace(label, std::pair{target->second, forest_isomorphism(ins.P, target->second)}).first;
            out.classes[min_linear_extension(ins.P)] = min_linear_extension(target->second);
        }
        const auto& [P2, phi] = it->second;
        std::vector<int> w(static_cast<std::size_t>(n));
        for (const auto& [v, pos] : ins.position) w[static_cast<std::size_t>(pos - 1)] = phi.at(v);
        Permutation tau(std::move(w));
        auto back = insert_eq2(tau);
        if (!(back.P == P2) || !(back.Q == ins.Q)) throw std::logic_error("class_bijection: transported permutation left the class");
        out.permutations[p] = std::move(tau);
    });
    return out;
}

/// Checks that SC(s) = SC(t) exactly when s and t (or their inverses, with
/// `use_inverse`) are mirror-equivalent.
inline bool saillance_correspondence_check(int n, bool use_inverse = true) {
    check_degree_bound("saillance_correspondence_check", n, 8);
    if (n < 1) return true;
    const auto rel = PatternRelation::mirror();
    std::map<Permutation, std::size_t> class_id;
    std::size_t next_id = 0;
    for_each_permutation(n, [&](const Permutation& p) {
        if (class_id.count(p)) return;
        for (const auto& q : pattern_closure(p, rel)) class_id[q] = next_id;
        ++next_id;
    });
    std::map<Composition, std::size_t> sc_to_class;
    std::map<std::size_t, Composition> class_to_sc;
    bool ok = true;
    for_each_permutation(n, [&](const Permutation& p) {
        const Composition sc = saillance_composition(p);
        const std::size_t id = class_id.at(use_inverse ? p.inverse() : p);
        auto [a, fresh_a] = sc_to_class.emplace(sc, id);
        auto [b, fresh_b] = class_to_sc.emplace(id, sc);
        if (a->second != id || !(b->second == sc)) ok = false;
    });
    return ok;
}

}  // namespace ncsf
