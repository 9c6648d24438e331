#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"
#include "composition.hpp"
#include "nsym.hpp"
#include "qpoly.hpp"

namespace ncsf {

/// c_I = n! / (s_1 s_2 ... s_r), s_j the partial sums of I.
inline BigInt c_coefficient(const Composition& c) {
    if (c.empty()) throw std::invalid_argument("c_coefficient: empty composition");
    BigInt den = 1;
    for (int s : c.partial_sums()) den *= s;
    return factorial(c.weight()) / den;
}

/// [n]_q! / ([s_1]_q ... [s_r]_q)
inline QPoly c_q_tilde(const Composition& c) {
    if (c.empty()) throw std::invalid_argument("c_q_tilde: empty composition");
    QPoly den = 1;
    for (int s : c.partial_sums()) den *= q_int(s);
    return exact_div(q_factorial(c.weight()), den);
}

/// q^{maj(I)} [n]_q! / ([s_1]_q ... [s_r]_q)
inline QPoly c_q(const Composition& c) { return c_q_tilde(c).shifted(maj(c)); }

enum class ThetaVariant { Plain, Tilde };

/// Theta_n(q) = sum_k (-q)^k R_{1^k,n-k}; the tilde variant carries
/// (-1)^k q^{n-1-k} instead.
inline CompositionSum<QPoly> theta(int n, ThetaVariant variant = ThetaVariant::Plain) {
    if (n < 1) throw std::invalid_argument("theta: n must be positive");
    CompositionSum<QPoly> out;
    for (int k = 0; k < n; ++k) {
        const int e = variant == ThetaVariant::Plain ? k : n - 1 - k;
        out.add(ones(k).append(n - k), QPoly::monomial(e, k % 2 ? -1 : 1));
    }
    return out;
}

inline CompositionSum<QPoly> theta_tilde(int n) { return theta(n, ThetaVariant::Tilde); }

/// Theta^I = Theta_{i_1} ... Theta_{i_r} in the ribbon basis.
inline CompositionSum<QPoly> theta_product(const Composition& c, ThetaVariant variant) {
    CompositionSum<QPoly> out(Composition{}, QPoly(1));
    for (int part : c.parts()) out = ribbon_multiply(out, theta(part, variant));
    return out;
}

/// Coefficients of [n]_q! S_n on the products Theta^I.
struct CoefficientTable {
    int degree = 0;
    std::map<Composition, QPoly> table;

    /// Sum of all coefficients at q = 1.
    BigInt total_mass() const {
        BigInt s = 0;
        for (const auto& [c, p] : table) s += p.evaluate(1);
        return s;
    }

    bool operator==(const CoefficientTable&) const = default;
};

inline CoefficientTable c_q_table(int n, ThetaVariant variant) {
    CoefficientTable t{n, {}};
    for (const auto& c : compositions_lex(n)) t.table[c] = variant == ThetaVariant::Plain ? c_q(c) : c_q_tilde(c);
    return t;
}

/// Solves [n]_q! S_n = sum_I x_I Theta^I exactly.
///
/// Works on the complete basis, where Theta_m = [m]_q S_m + (longer terms)
/// and the product is concatenation; the system is triangular for refinement
/// with diagonal prod_j [i_j]_q, so each unknown is one exact division.
inline CoefficientTable expand_Sn_in_theta(int n, ThetaVariant variant, int degree_bound = 7) {
    if (n < 1) throw std::invalid_argument("expand_Sn_in_theta: n must be positive");
    check_degree_bound("expand_Sn_in_theta", n, degree_bound);

    std::vector<CompositionSum<QPoly>> theta_s(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) theta_s[static_cast<std::size_t>(m)] = ribbon_to_complete(theta(m, variant));

    auto theta_in_s = [&](const Composition& c) {
        CompositionSum<QPoly> out(Composition{}, QPoly(1));
        for (int part : c.parts()) {
            CompositionSum<QPoly> next;
            for (const auto& [a, ca] : out)
                for (const auto& [b, cb] : theta_s[static_cast<std::size_t>(part)]) next.add(a.concat(b), ca * cb);
            out = std::move(next);
        }
        return out;
    };

    auto order = compositions_ordered(n);
    std::map<Composition, CompositionSum<QPoly>> expansions;
    for (const auto& c : order) expansions.emplace(c, theta_in_s(c));

    CompositionSum<QPoly> residual(Composition{n}, q_factorial(n));
    CoefficientTable result{n, {}};
    for (const auto& k : order) {  // coarsest first
        const QPoly rhs = residual.coefficient(k);
        const QPoly diag = expansions.at(k).coefficient(k);
        const QPoly x = exact_div(rhs, diag);
        result.table[k] = x;
        if (!x.is_zero()) residual.add(expansions.at(k), QPoly(0) - x);
    }
    if (!residual.empty()) throw std::logic_error("expand_Sn_in_theta: nonzero residual");
    return result;
}

}  // namespace ncsf
