#pragma once

#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "bigint.hpp"
#include "composition.hpp"
#include "fqsym.hpp"
#include "nsym.hpp"
#include "permutation.hpp"

namespace ncsf {

/// V'_I Lambda_k = sum_j C(k+j-1, k-1) V'_{I[n-j], k+j}
inline CompositionSum<> pieri_lambda(const Composition& c, int k) {
    if (k < 1) throw std::invalid_argument("pieri_lambda: k must be positive");
    const int n = c.weight();
    CompositionSum<> out;
    for (int j = 0; j <= n; ++j) out.add(ribbon_prefix(c, n - j).append(k + j), binomial(k + j - 1, k - 1));
    return out;
}

/// Closed-form structure constants of V'_I V'_J.
inline CompositionSum<> vprime_product(const Composition& a, const Composition& b) {
    if (a.empty()) return CompositionSum<>(b);
    if (b.empty()) return CompositionSum<>(a);
    const auto& is = a.parts();
    const auto& js = b.parts();
    const int p = static_cast<int>(js.size());

    auto tail_weight = [&](const Composition& tail) {
        BigInt w = 1;
        for (int i = 0; i < p && w != 0; ++i) w *= binomial(tail[static_cast<std::size_t>(i)] - 1, js[static_cast<std::size_t>(i)] - 1);
        return w;
    };

    CompositionSum<> out;
    const int total = a.weight() + b.weight();
    // r = 0: K has the length of J
    for (const auto& k : compositions_of_length(total, p)) out.add(k, tail_weight(k));
    // r > 0: K starts with i_1..i_{r-1}, then some k_r <= i_r
    int used = 0;
    for (std::size_t r = 1; r <= is.size(); ++r) {
        const Composition head(std::vector<int>(is.begin(), is.begin() + static_cast<std::ptrdiff_t>(r - 1)));
        for (int kr = 1; kr <= is[r - 1]; ++kr) {
            const int rest = total - used - kr;
            if (rest < p) break;
            for (const auto& tail : compositions_of_length(rest, p)) out.add(head.append(kr).concat(tail), tail_weight(tail));
        }
        used += is[r - 1];
    }
    return out;
}

/// SC-distribution of the shifted shuffle of canonical representatives.
inline CompositionSum<> vprime_product_oracle(const Composition& a, const Composition& b, int degree_bound = 9) {
    check_degree_bound("vprime_product_oracle", a.weight() + b.weight(), degree_bound);
    CompositionSum<> out;
    for (const auto& [k, count] : saillance_distribution(fiber_representative(a), fiber_representative(b))) out.add(k, count);
    return out;
}

inline CompositionSum<> complement_keys(const CompositionSum<>& x) {
    return x.map_keys([](const Composition& c) { return complement(c); });
}

/// V_I V_J through V'_{I'} V'_{J'} with complemented indices.
inline CompositionSum<> v_product(const Composition& a, const Composition& b) {
    return complement_keys(vprime_product(complement(a), complement(b)));
}

/// c-bar_{IJ}^K for all I |= m, J |= n.
struct StructureConstantTable {
    int m = 0;
    int n = 0;
    std::map<CompositionTriple, BigInt> entries;  // (I, J, K)

    bool mass_ok() const {
        std::map<std::pair<Composition, Composition>, BigInt> mass;
        for (const auto& [key, c] : entries) mass[{std::get<0>(key), std::get<1>(key)}] += c;
        for (const auto& [ij, total] : mass)
            if (total != binomial(m + n, m)) return false;
        return true;
    }
};

inline StructureConstantTable structure_constants(int m, int n) {
    StructureConstantTable t{m, n, {}};
    for (const auto& i : compositions_lex(m))
        for (const auto& j : compositions_lex(n))
            for (const auto& [k, c] : vprime_product(i, j)) t.entries[{i, j, k}] = c;
    return t;
}

/// Coefficients of V'_{I[n-k]} V'_k in V'_I = sum_k (-1)^{k-i_r} C(k-1, i_r-1) V'_{I[n-k]} V'_k.
inline std::map<std::pair<Composition, int>, BigInt> alternating_reconstruction(const Composition& c) {
    if (c.empty()) throw std::invalid_argument("alternating_reconstruction: empty composition");
    const int n = c.weight();
    const int last = c.parts().back();
    std::map<std::pair<Composition, int>, BigInt> out;
    for (int k = last; k <= n; ++k) {
        BigInt coeff = binomial(k - 1, last - 1);
        if ((k - last) % 2) coeff = -coeff;
        out[{ribbon_prefix(c, n - k), k}] = coeff;
    }
    return out;
}

/// Expands the reconstruction through the Pieri rule.
inline CompositionSum<> expand_reconstruction(const std::map<std::pair<Composition, int>, BigInt>& terms) {
    CompositionSum<> out;
    for (const auto& [key, coeff] : terms) out.add(pieri_lambda(key.first, key.second), coeff);
    return out;
}

}  // namespace ncsf
