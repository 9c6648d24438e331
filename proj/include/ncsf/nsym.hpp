#pragma once

#include <set>
#include <vector>

#include "bigint.hpp"
#include "composition.hpp"
#include "linear_combination.hpp"

namespace ncsf {

/// Bases of noncommutative symmetric functions.
enum class NSymBasis {
    Ribbon,      ///< R_I
    Elementary,  ///< Lambda^I = Lambda_{i_1} ... Lambda_{i_r}, Lambda_k = R_{1^k}
    Complete,    ///< S^I
    PowerSum,    ///< Psi^I (power sums of the first kind)
    V,           ///< dual of the U basis of QSym
    VPrime,      ///< V'_I = V_{complement(I)}
};

inline const char* basis_symbol(NSymBasis b) {
    switch (b) {
        case NSymBasis::Ribbon: return "R";
        case NSymBasis::Elementary: return "L";
        case NSymBasis::Complete: return "S";
        case NSymBasis::PowerSum: return "Psi";
        case NSymBasis::V: return "V";
        case NSymBasis::VPrime: return "V'";
    }
    return "?";
}

template <typename Coeff = BigInt>
using CompositionSum = LinearCombination<Composition, Coeff>;

/// An element of NSym expanded on one of its bases.
template <typename Coeff = BigInt>
struct NSymElement {
    NSymBasis basis = NSymBasis::Ribbon;
    CompositionSum<Coeff> terms;

    bool operator==(const NSymElement&) const = default;
};

/// R_I R_J = R_{I.J} + R_{I|>J}
template <typename Coeff = BigInt>
CompositionSum<Coeff> ribbon_product(const Composition& a, const Composition& b) {
    CompositionSum<Coeff> out;
    if (a.empty() || b.empty()) {
        out.add(a.concat(b), Coeff(1));
        return out;
    }
    out.add(a.concat(b), Coeff(1));
    out.add(a.near_concat(b), Coeff(1));
    return out;
}

template <typename Coeff>
CompositionSum<Coeff> ribbon_multiply(const CompositionSum<Coeff>& x, const CompositionSum<Coeff>& y) {
    CompositionSum<Coeff> out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out.add(ribbon_product<Coeff>(a, b), ca * cb);
    return out;
}

/// Compositions J with descent_set(J) a subset of descent_set(c).
inline std::vector<Composition> coarsenings(const Composition& c) {
    const int n = c.weight();
    const auto des_set = descent_set(c);
    std::vector<int> des(des_set.begin(), des_set.end());
    std::vector<Composition> out;
    const std::size_t k = des.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::set<int> sub;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) sub.insert(des[i]);
        out.push_back(Composition::from_descent_set(sub, n));
    }
    return out;
}

/// S^I = sum over coarsenings J of R_J
template <typename Coeff = BigInt>
CompositionSum<Coeff> complete_to_ribbon(const CompositionSum<Coeff>& x) {
    CompositionSum<Coeff> out;
    for (const auto& [c, coeff] : x)
        for (const auto& j : coarsenings(c)) out.add(j, coeff);
    return out;
}

/// R_I = sum over coarsenings J of (-1)^{l(I)-l(J)} S^J
template <typename Coeff = BigInt>
CompositionSum<Coeff> ribbon_to_complete(const CompositionSum<Coeff>& x) {
    CompositionSum<Coeff> out;
    for (const auto& [c, coeff] : x)
        for (const auto& j : coarsenings(c)) {
            const bool odd = (c.length() - j.length()) % 2;
            out.add(j, odd ? Coeff(0) - coeff : coeff);
        }
    return out;
}

inline Composition ones(int k) { return Composition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

/// Lambda^J in the ribbon basis.
inline CompositionSum<> elementary_in_ribbon(const Composition& j) {
    CompositionSum<> out(Composition{});
    for (int part : j.parts()) out = ribbon_multiply(out, CompositionSum<>(ones(part)));
    return out;
}

inline CompositionSum<> lambda_to_ribbon(const CompositionSum<>& x) {
    CompositionSum<> out;
    for (const auto& [c, coeff] : x) out.add(elementary_in_ribbon(c), coeff);
    return out;
}

/// Ribbon expansion to Lambda expansion. Lambda^J = R_{complement(J)} plus
/// strictly longer ribbons, so the shortest remaining ribbon is always
/// eliminated by exactly one Lambda^J.
inline CompositionSum<> ribbon_to_lambda(CompositionSum<> x) {
    CompositionSum<> out;
    while (!x.empty()) {
        auto lead = x.begin();
        for (auto it = x.begin(); it != x.end(); ++it)
            if (it->first.length() < lead->first.length()) lead = it;
        const Composition key = lead->first;
        const BigInt coeff = lead->second;
        const Composition j = complement(key);
        out.add(j, coeff);
        x.add(elementary_in_ribbon(j), BigInt(-coeff));
    }
    return out;
}

/// Psi_n in ribbons from n S_n = S_{n-1} Psi_1 + ... + S_0 Psi_n.
inline CompositionSum<> psi_in_ribbon_recursive(int n) {
    std::vector<CompositionSum<>> psi(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        CompositionSum<> acc(Composition{m}, BigInt(m));
        for (int k = 1; k < m; ++k)
            acc -= ribbon_multiply(CompositionSum<>(Composition{m - k}), psi[static_cast<std::size_t>(k)]);
        psi[static_cast<std::size_t>(m)] = acc;
    }
    return psi[static_cast<std::size_t>(n)];
}

/// sum_{k=0}^{n-1} (-1)^k R_{1^k, n-k}
inline CompositionSum<> psi_in_ribbon_hooks(int n) {
    CompositionSum<> out;
    for (int k = 0; k < n; ++k) out.add(ones(k).append(n - k), BigInt(k % 2 ? -1 : 1));
    return out;
}

/// Psi^I in ribbons.
inline CompositionSum<> power_sum_in_ribbon(const Composition& c) {
    CompositionSum<> out(Composition{});
    for (int part : c.parts()) out = ribbon_multiply(out, psi_in_ribbon_recursive(part));
    return out;
}

}  // namespace ncsf
