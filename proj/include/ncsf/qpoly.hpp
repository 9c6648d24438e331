#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bigint.hpp"

namespace ncsf {

/// Polynomial in one variable q with arbitrary-precision integer coefficients.
/// Sparse: only nonzero coefficients are stored.
class QPoly {
public:
    using map_type = std::map<int, BigInt>;

    QPoly() = default;
    QPoly(int c) : QPoly(BigInt(c)) {}  // NOLINT: integers embed as constants
    QPoly(const BigInt& c) {            // NOLINT
        if (c != 0) coeffs_[0] = c;
    }

    static QPoly monomial(int exponent, const BigInt& c = 1) {
        if (exponent < 0) throw std::invalid_argument("negative exponent");
        QPoly p;
        if (c != 0) p.coeffs_[exponent] = c;
        return p;
    }

    static QPoly q() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return is_zero() ? -1 : coeffs_.rbegin()->first; }
    int low_degree() const { return is_zero() ? -1 : coeffs_.begin()->first; }
    const map_type& coefficients() const { return coeffs_; }

    BigInt coefficient(int e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    BigInt leading_coefficient() const { return is_zero() ? BigInt(0) : coeffs_.rbegin()->second; }

    BigInt evaluate(const BigInt& x) const {
        BigInt r = 0;
        int e = degree();
        for (; e >= 0; --e) r = r * x + coefficient(e);
        return r;
    }

    /// q^exponent * p
    QPoly shifted(int exponent) const {
        QPoly r;
        for (const auto& [e, c] : coeffs_) {
            if (e + exponent < 0) throw std::invalid_argument("shift below degree 0");
            r.coeffs_[e + exponent] = c;
        }
        return r;
    }

    /// q^d * p(1/q); requires d >= degree().
    QPoly reflected(int d) const {
        QPoly r;
        for (const auto& [e, c] : coeffs_) {
            if (e > d) throw std::invalid_argument("reflection degree too small");
            r.coeffs_[d - e] = c;
        }
        return r;
    }

    /// p(-q)
    QPoly negated_variable() const {
        QPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e] = (e % 2) ? BigInt(-c) : c;
        return r;
    }

    QPoly& operator+=(const QPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator-(const QPoly& a) { return QPoly() - a; }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    bool operator==(const QPoly&) const = default;

    /// Quotient and remainder of Euclidean division over Q[q], requiring all
    /// quotient coefficients to be integers.
    friend std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den) {
        if (den.is_zero()) throw std::domain_error("QPoly division by zero");
        QPoly quot, rem = num;
        const int dd = den.degree();
        const BigInt lc = den.leading_coefficient();
        while (!rem.is_zero() && rem.degree() >= dd) {
            const int shift = rem.degree() - dd;
            const BigInt top = rem.leading_coefficient();
            if (top % lc != 0) throw std::domain_error("QPoly division leaves the integers");
            QPoly t = monomial(shift, top / lc);
            quot += t;
            rem -= t * den;
        }
        return {quot, rem};
    }

    /// Exact division; throws if `den` does not divide `num`.
    friend QPoly exact_div(const QPoly& num, const QPoly& den) {
        auto [q, r] = divmod(num, den);
        if (!r.is_zero()) throw std::domain_error("QPoly division is not exact");
        return q;
    }

    /// Descending powers: "q^17 + 3q^16 + ... + q^7".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [e, c] = *it;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first)
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            first = false;
            if (e == 0) {
                s += mag.str();
                continue;
            }
            if (mag != 1) s += mag.str();
            s += "q";
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    void add_term(int e, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    map_type coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

/// [n]_q = 1 + q + ... + q^{n-1}
inline QPoly q_int(int n) {
    if (n < 0) throw std::invalid_argument("q_int of negative integer");
    QPoly p;
    for (int e = 0; e < n; ++e) p += QPoly::monomial(e);
    return p;
}

/// [n]_q! = [1]_q [2]_q ... [n]_q
inline QPoly q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial of negative integer");
    QPoly p = 1;
    for (int k = 2; k <= n; ++k) p *= q_int(k);
    return p;
}

}  // namespace ncsf
