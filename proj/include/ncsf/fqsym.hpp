#pragma once

#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "composition.hpp"
#include "linear_combination.hpp"
#include "permutation.hpp"

namespace ncsf {

/// F_sigma (fundamental) or G_sigma = F_{sigma^{-1}}.
enum class FQBasis { F, G };

using PermSum = LinearCombination<Permutation, BigInt>;
using PermPair = std::pair<Permutation, Permutation>;
using TensorSum = LinearCombination<PermPair, BigInt>;

struct FQSymElement {
    FQBasis basis = FQBasis::F;
    PermSum terms;

    static FQSymElement F(const Permutation& p) { return {FQBasis::F, PermSum(p)}; }
    static FQSymElement G(const Permutation& p) { return {FQBasis::G, PermSum(p)}; }
    static FQSymElement one(FQBasis b) { return {b, PermSum(Permutation{})}; }

    bool operator==(const FQSymElement&) const = default;
};

struct FQSymTensor {
    FQBasis basis = FQBasis::F;
    TensorSum terms;

    bool operator==(const FQSymTensor&) const = default;
};

/// Relabels every key by its inverse: the coefficient-preserving F <-> G change.
inline PermSum invert_keys(const PermSum& x) {
    return x.map_keys([](const Permutation& p) { return p.inverse(); });
}

inline FQSymElement to_basis(const FQSymElement& x, FQBasis b) {
    if (x.basis == b) return x;
    return {b, invert_keys(x.terms)};
}

namespace detail {

inline void require_same_basis(const FQSymElement& x, const FQSymElement& y) {
    if (x.basis != y.basis) throw std::invalid_argument("FQSym: operands on different bases");
}

enum class LastLetter { Any, Left, Right };

/// F_a F_b restricted by the origin of the last letter.
inline PermSum f_product(const PermSum& x, const PermSum& y, LastLetter rule) {
    PermSum out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            const BigInt c = ca * cb;
            for (const auto& g : shifted_shuffle(a, b)) {
                if (rule != LastLetter::Any) {
                    const bool from_left = g[g.size() - 1] <= a.size();
                    if (from_left != (rule == LastLetter::Left)) continue;
                }
                out.add(g, c);
            }
        }
    return out;
}

inline void require_nonempty(const FQSymElement& x) {
    for (const auto& [p, c] : x.terms)
        if (p.size() == 0) throw std::invalid_argument("half-product with an empty argument");
}

inline PermSum dispatch(const FQSymElement& x, const FQSymElement& y, LastLetter rule) {
    require_same_basis(x, y);
    if (x.basis == FQBasis::F) return f_product(x.terms, y.terms, rule);
    return invert_keys(f_product(invert_keys(x.terms), invert_keys(y.terms), rule));
}

}  // namespace detail

/// Product: shifted shuffle on the F basis, transported to G through inversion.
inline FQSymElement product(const FQSymElement& x, const FQSymElement& y) {
    return {x.basis, detail::dispatch(x, y, detail::LastLetter::Any)};
}

/// x < y: terms of xy whose last letter (F basis) comes from x.
inline FQSymElement half_left(const FQSymElement& x, const FQSymElement& y) {
    detail::require_nonempty(x);
    detail::require_nonempty(y);
    return {x.basis, detail::dispatch(x, y, detail::LastLetter::Left)};
}

/// x > y: terms of xy whose last letter (F basis) comes from y.
inline FQSymElement half_right(const FQSymElement& x, const FQSymElement& y) {
    detail::require_nonempty(x);
    detail::require_nonempty(y);
    return {x.basis, detail::dispatch(x, y, detail::LastLetter::Right)};
}

inline std::pair<FQSymElement, FQSymElement> half_products(const FQSymElement& x, const FQSymElement& y) {
    return {half_left(x, y), half_right(x, y)};
}

inline FQSymElement power(const FQSymElement& x, int k) {
    FQSymElement r = FQSymElement::one(x.basis);
    for (int i = 0; i < k; ++i) r = product(r, x);
    return r;
}

inline FQSymElement operator+(FQSymElement a, const FQSymElement& b) {
    detail::require_same_basis(a, b);
    a.terms += b.terms;
    return a;
}

inline FQSymElement operator-(FQSymElement a, const FQSymElement& b) {
    detail::require_same_basis(a, b);
    a.terms -= b.terms;
    return a;
}

/// Delta F_s = sum_i F_{std(s_1..s_i)} (x) F_{std(s_{i+1}..s_n)}
inline TensorSum coproduct_f_terms(const PermSum& x) {
    TensorSum out;
    for (const auto& [p, c] : x) {
        const auto& w = p.word();
        for (std::size_t i = 0; i <= w.size(); ++i) {
            std::vector<int> left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            std::vector<int> right(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
            out.add({standardize(left), standardize(right)}, c);
        }
    }
    return out;
}

inline TensorSum invert_tensor_keys(const TensorSum& t) {
    return t.map_keys([](const PermPair& p) { return PermPair{p.first.inverse(), p.second.inverse()}; });
}

inline FQSymTensor coproduct(const FQSymElement& x) {
    if (x.basis == FQBasis::F) return {FQBasis::F, coproduct_f_terms(x.terms)};
    return {FQBasis::G, invert_tensor_keys(coproduct_f_terms(invert_keys(x.terms)))};
}

/// (a (x) b)(c (x) d) = ac (x) bd
inline FQSymTensor tensor_product(const FQSymTensor& s, const FQSymTensor& t) {
    if (s.basis != t.basis) throw std::invalid_argument("FQSym: tensors on different bases");
    FQSymTensor out{s.basis, {}};
    for (const auto& [ab, c1] : s.terms)
        for (const auto& [cd, c2] : t.terms) {
            auto left = product({s.basis, PermSum(ab.first)}, {s.basis, PermSum(cd.first)});
            auto right = product({s.basis, PermSum(ab.second)}, {s.basis, PermSum(cd.second)});
            for (const auto& [l, cl] : left.terms)
                for (const auto& [r, cr] : right.terms) out.terms.add({l, r}, c1 * c2 * cl * cr);
        }
    return out;
}

/// (Delta (x) id) or (id (x) Delta) applied to a tensor, giving triples.
using PermTriple = std::tuple<Permutation, Permutation, Permutation>;
using TripleSum = LinearCombination<PermTriple, BigInt>;

inline TripleSum coproduct_left(const FQSymTensor& t) {
    TripleSum out;
    for (const auto& [ab, c] : t.terms) {
        auto d = coproduct({t.basis, PermSum(ab.first)});
        for (const auto& [xy, cd] : d.terms) out.add({xy.first, xy.second, ab.second}, c * cd);
    }
    return out;
}

inline TripleSum coproduct_right(const FQSymTensor& t) {
    TripleSum out;
    for (const auto& [ab, c] : t.terms) {
        auto d = coproduct({t.basis, PermSum(ab.second)});
        for (const auto& [xy, cd] : d.terms) out.add({ab.first, xy.first, xy.second}, c * cd);
    }
    return out;
}

/// <x, y> with F dual to G: x on F, y on G (either order).
inline BigInt pairing(const FQSymElement& x, const FQSymElement& y) {
    if (x.basis == y.basis) throw std::invalid_argument("pairing needs one F and one G operand");
    BigInt s = 0;
    for (const auto& [p, c] : x.terms) s += c * y.terms.coefficient(p);
    return s;
}

/// Permutations of n grouped by saillance composition.
inline std::map<Composition, std::vector<Permutation>> saillance_fibers(int n) {
    std::map<Composition, std::vector<Permutation>> fibers;
    if (n == 0) {
        fibers[Composition{}].push_back(Permutation{});
        return fibers;
    }
    for_each_permutation(n, [&](const Permutation& p) { fibers[saillance_composition(p)].push_back(p); });
    return fibers;
}

/// CC_I = sum of G_sigma over SC(sigma) = I.
inline FQSymElement cc(const Composition& c) {
    FQSymElement out{FQBasis::G, {}};
    if (c.empty()) return FQSymElement::one(FQBasis::G);
    for_each_permutation(c.weight(), [&](const Permutation& p) {
        if (saillance_composition(p) == c) out.terms.add(p, 1);
    });
    return out;
}

/// CC_I rebuilt from the dendriform identities:
/// CC_n = G_1 < G_1^{n-1}, CC_I = (...(CC_{i_1} > CC_{i_2}) > ...) > CC_{i_r}.
inline FQSymElement cc_from_dendriform(const Composition& c) {
    if (c.empty()) return FQSymElement::one(FQBasis::G);
    auto cc_single = [](int n) {
        const auto g1 = FQSymElement::G(Permutation{1});
        if (n == 1) return g1;
        return half_left(g1, power(g1, n - 1));
    };
    FQSymElement acc = cc_single(c[0]);
    for (std::size_t j = 1; j < c.length(); ++j) acc = half_right(acc, cc_single(c[j]));
    return acc;
}

/// Degree-n part of Z = sum_I CC_I Y^I, keyed by the Y-exponent I.
struct ZSeries {
    int degree = 0;
    std::map<Composition, FQSymElement> coefficients;

    bool operator==(const ZSeries&) const = default;
};

/// Z_n from Z = 1 + Z > C, i.e. Z_n = sum_k Z_{n-k} > CC_k Y_k with 1 > x = x.
inline ZSeries z_series(int n) {
    if (n < 0) throw std::invalid_argument("z_series: negative degree");
    std::vector<ZSeries> z(static_cast<std::size_t>(n) + 1);
    z[0] = {0, {{Composition{}, FQSymElement::one(FQBasis::G)}}};
    for (int m = 1; m <= n; ++m) {
        ZSeries cur{m, {}};
        for (int k = 1; k <= m; ++k) {
            const FQSymElement ck = cc(Composition{k});
            for (const auto& [y, coeff] : z[static_cast<std::size_t>(m - k)].coefficients) {
                FQSymElement term = (m == k) ? ck : half_right(coeff, ck);
                auto [it, inserted] = cur.coefficients.try_emplace(y.append(k), term);
                if (!inserted) it->second = it->second + term;
            }
        }
        z[static_cast<std::size_t>(m)] = std::move(cur);
    }
    return z[static_cast<std::size_t>(n)];
}

using CompositionTriple = std::tuple<Composition, Composition, Composition>;

/// Number of gamma in the shifted shuffle of fixed alpha, beta with SC(gamma) = I,
/// keyed by I.
inline std::map<Composition, BigInt> saillance_distribution(const Permutation& a, const Permutation& b) {
    std::map<Composition, BigInt> dist;
    for (const auto& g : shifted_shuffle(a, b)) dist[saillance_composition(g)] += 1;
    return dist;
}

inline Permutation fiber_representative(const Composition& c) {
    return c.empty() ? Permutation{} : canonical_representative(c);
}

/// a_I^{JK} in Delta CC_I = sum a_I^{JK} CC_J (x) CC_K for all I of weight n,
/// keyed (I, J, K). Counted with one representative per fiber.
inline std::map<CompositionTriple, BigInt> coalgebra_coefficients(int n, int degree_bound = 9) {
    check_degree_bound("coalgebra_coefficients", n, degree_bound);
    std::map<CompositionTriple, BigInt> out;
    for (int a = 0; a <= n; ++a)
        for (const auto& j : compositions_lex(a))
            for (const auto& k : compositions_lex(n - a))
                for (const auto& [i, count] : saillance_distribution(fiber_representative(j), fiber_representative(k)))
                    out[{i, j, k}] = count;
    return out;
}

/// Signed word sum  sum_{u_1 u_2 = u} (-1)^{|u_2|} u_1 sh (a (rev(u_2) sh v)).
using WordSum = LinearCombination<std::vector<int>, BigInt>;

inline WordSum shuffle_lemma_rhs(const std::vector<int>& u, int a, const std::vector<int>& v) {
    std::vector<int> whole = u;
    whole.push_back(a);
    whole.insert(whole.end(), v.begin(), v.end());
    (void)Permutation(whole);  // must be a permutation word
    WordSum out;
    for (std::size_t cut = 0; cut <= u.size(); ++cut) {
        std::vector<int> u1(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(cut));
        std::vector<int> u2_rev(u.rbegin(), u.rend() - static_cast<std::ptrdiff_t>(cut));
        const BigInt sign = ((u.size() - cut) % 2) ? -1 : 1;
        for (auto& inner : shuffle_words(u2_rev, v)) {
            inner.insert(inner.begin(), a);
            for (auto& w : shuffle_words(u1, inner)) out.add(w, sign);
        }
    }
    return out;
}

inline bool shuffle_lemma_check(const std::vector<int>& u, int a, const std::vector<int>& v) {
    std::vector<int> whole = u;
    whole.push_back(a);
    whole.insert(whole.end(), v.begin(), v.end());
    return shuffle_lemma_rhs(u, a, v) == WordSum(whole);
}

}  // namespace ncsf
