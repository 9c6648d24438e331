#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"
#include "composition.hpp"
#include "fqsym.hpp"
#include "int_matrix.hpp"
#include "nsym.hpp"
#include "permutation.hpp"

namespace ncsf {

enum class QSymBasis { Fundamental, U };

struct QSymElement {
    QSymBasis basis = QSymBasis::Fundamental;
    CompositionSum<> terms;

    bool operator==(const QSymElement&) const = default;
};

/// U_I = sum of F_{RC(sigma)} over SC(sigma) = complement(I).
inline QSymElement u_basis(const Composition& c) {
    if (c.empty()) throw std::invalid_argument("u_basis: empty composition");
    const Composition target = complement(c);
    QSymElement out;
    for_each_permutation(c.weight(), [&](const Permutation& p) {
        if (saillance_composition(p) == target) out.terms.add(recoil_composition(p), 1);
    });
    return out;
}

namespace detail {

struct MatrixMemo {
    std::mutex mutex;
    std::map<int, IntMatrix> forward;
    std::map<int, IntMatrix> inverse;
};

inline MatrixMemo& matrix_memo() {
    static MatrixMemo memo;
    return memo;
}

inline IntMatrix compute_transition_matrix(int n) {
    IntMatrix m(compositions_ordered(n));
    std::map<Composition, std::size_t> index;
    for (std::size_t i = 0; i < m.size(); ++i) index[m.labels()[i]] = i;
    for_each_permutation(n, [&](const Permutation& p) {
        const auto col = index.at(complement(saillance_composition(p)));
        const auto row = index.at(recoil_composition(p));
        m(row, col) += 1;
    });
    return m;
}

}  // namespace detail

/// M_n: column J holds the F-expansion of U_J; rows and columns in
/// compositions_ordered(n) order. Memoized per degree.
inline IntMatrix transition_matrix(int n) {
    if (n < 1) throw std::invalid_argument("transition_matrix: n must be positive");
    auto& memo = detail::matrix_memo();
    {
        std::lock_guard lock(memo.mutex);
        if (auto it = memo.forward.find(n); it != memo.forward.end()) return it->second;
    }
    IntMatrix m = detail::compute_transition_matrix(n);
    std::lock_guard lock(memo.mutex);
    return memo.forward.try_emplace(n, std::move(m)).first->second;
}

/// Seeds the per-degree memo with an externally loaded matrix (for example
/// from the on-disk cache). Rejects matrices with wrong labels or shape.
inline void seed_transition_matrix(int n, IntMatrix m) {
    if (m.labels() != compositions_ordered(n) || !m.is_upper_unitriangular())
        throw std::invalid_argument("seed_transition_matrix: not a valid M_n");
    auto& memo = detail::matrix_memo();
    std::lock_guard lock(memo.mutex);
    memo.forward.insert_or_assign(n, std::move(m));
    memo.inverse.erase(n);
}

inline void clear_transition_matrix_memo() {
    auto& memo = detail::matrix_memo();
    std::lock_guard lock(memo.mutex);
    memo.forward.clear();
    memo.inverse.clear();
}

inline IntMatrix transition_matrix_inverse(int n) {
    auto& memo = detail::matrix_memo();
    {
        std::lock_guard lock(memo.mutex);
        if (auto it = memo.inverse.find(n); it != memo.inverse.end()) return it->second;
    }
    IntMatrix inv = matrix_inverse(transition_matrix(n));
    std::lock_guard lock(memo.mutex);
    return memo.inverse.try_emplace(n, std::move(inv)).first->second;
}

/// F-expansion to U-expansion (F_I = sum_J (M^{-1})_{J,I} U_J) and back.
inline QSymElement to_qsym_basis(const QSymElement& x, QSymBasis target) {
    if (x.basis == target) return x;
    QSymElement out{target, {}};
    for (const auto& [c, coeff] : x.terms) {
        const int n = c.weight();
        if (target == QSymBasis::U) {
            const IntMatrix inv = transition_matrix_inverse(n);
            const auto col = inv.index_of(c);
            for (std::size_t r = 0; r < inv.size(); ++r)
                if (inv(r, col) != 0) out.terms.add(inv.labels()[r], coeff * inv(r, col));
        } else {
            const IntMatrix m = transition_matrix(n);
            const auto col = m.index_of(c);
            for (std::size_t r = 0; r < m.size(); ++r)
                if (m(r, col) != 0) out.terms.add(m.labels()[r], coeff * m(r, col));
        }
    }
    return out;
}

using CompositionPair = std::pair<Composition, Composition>;
using CompositionTensor = LinearCombination<CompositionPair, BigInt>;

/// Delta F_I = sum_k F_{I[k]} (x) F_{boxes after k}.
inline CompositionTensor qsym_coproduct_fundamental(const CompositionSum<>& x) {
    CompositionTensor out;
    for (const auto& [c, coeff] : x)
        for (int k = 0; k <= c.weight(); ++k) out.add({ribbon_prefix(c, k), ribbon_suffix(c, k)}, coeff);
    return out;
}

/// V_J = sum_I (M_n^{-1})_{J,I} R_I.
inline CompositionSum<> v_in_ribbon(const Composition& c) {
    const IntMatrix inv = transition_matrix_inverse(c.weight());
    const auto row = inv.index_of(c);
    CompositionSum<> out;
    for (std::size_t col = 0; col < inv.size(); ++col) out.add(inv.labels()[col], inv(row, col));
    return out;
}

/// R_I = sum_J (M_n)_{I,J} V_J.
inline CompositionSum<> ribbon_in_v(const Composition& c) {
    const IntMatrix m = transition_matrix(c.weight());
    const auto row = m.index_of(c);
    CompositionSum<> out;
    for (std::size_t col = 0; col < m.size(); ++col) out.add(m.labels()[col], m(row, col));
    return out;
}

/// Any NSym element expanded on the ribbon basis.
inline CompositionSum<> to_ribbon(const NSymElement<>& x) {
    CompositionSum<> out;
    for (const auto& [c, coeff] : x.terms) {
        switch (x.basis) {
            case NSymBasis::Ribbon: out.add(c, coeff); break;
            case NSymBasis::Elementary: out.add(elementary_in_ribbon(c), coeff); break;
            case NSymBasis::Complete: out.add(complete_to_ribbon(CompositionSum<>(c)), coeff); break;
            case NSymBasis::PowerSum: out.add(power_sum_in_ribbon(c), coeff); break;
            case NSymBasis::V:
                if (c.empty()) out.add(c, coeff);
                else out.add(v_in_ribbon(c), coeff);
                break;
            case NSymBasis::VPrime:
                if (c.empty()) out.add(c, coeff);
                else out.add(v_in_ribbon(complement(c)), coeff);
                break;
        }
    }
    return out;
}

/// Ribbon expansion re-expanded on `target` (all integral bases; the power
/// sums are not integral and are rejected).
inline NSymElement<> from_ribbon(const CompositionSum<>& x, NSymBasis target) {
    NSymElement<> out{target, {}};
    switch (target) {
        case NSymBasis::Ribbon: out.terms = x; break;
        case NSymBasis::Elementary: out.terms = ribbon_to_lambda(x); break;
        case NSymBasis::Complete: out.terms = ribbon_to_complete(x); break;
        case NSymBasis::PowerSum: throw std::invalid_argument("power-sum expansions are not integral");
        case NSymBasis::V:
        case NSymBasis::VPrime:
            for (const auto& [c, coeff] : x) {
                if (c.empty()) {
                    out.terms.add(c, coeff);
                    continue;
                }
                for (const auto& [v, cv] : ribbon_in_v(c))
                    out.terms.add(target == NSymBasis::V ? v : complement(v), coeff * cv);
            }
            break;
    }
    return out;
}

inline NSymElement<> convert(const NSymElement<>& x, NSymBasis target) {
    if (x.basis == target) return x;
    return from_ribbon(to_ribbon(x), target);
}

/// Psi_n = sum_{I |= n} (-1)^{l(I)-1} V_I
inline NSymElement<> psi_in_v(int n) {
    if (n < 1) throw std::invalid_argument("psi_in_v: n must be positive");
    NSymElement<> out{NSymBasis::V, {}};
    for (const auto& c : compositions_lex(n)) out.terms.add(c, BigInt(c.length() % 2 ? 1 : -1));
    return out;
}

/// The saillance-fiber span is an ideal of FQSym: for every pair of fibers
/// with total degree <= max_total_degree, every choice of representatives
/// gives the same saillance distribution over the shifted shuffle.
inline bool quotient_class_check(int max_total_degree) {
    std::vector<std::map<Composition, std::vector<Permutation>>> fibers;
    for (int d = 0; d < max_total_degree; ++d) fibers.push_back(saillance_fibers(d));
    for (int a = 1; a < max_total_degree; ++a)
        for (int b = 1; a + b <= max_total_degree; ++b)
            for (const auto& [i, alphas] : fibers[static_cast<std::size_t>(a)])
                for (const auto& [j, betas] : fibers[static_cast<std::size_t>(b)]) {
                    const auto reference = saillance_distribution(alphas.front(), betas.front());
                    for (const auto& alpha : alphas)
                        for (const auto& beta : betas)
                            if (saillance_distribution(alpha, beta) != reference) return false;
                }
    return true;
}

}  // namespace ncsf
