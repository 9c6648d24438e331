#pragma once

#include <functional>
#include <map>
#include <utility>

namespace ncsf {

/// Finite formal sum of keys with coefficients; zero coefficients are never stored.
///
/// Coeff must be a commutative ring type with a default constructor producing
/// zero (BigInt, QPoly).
template <typename Key, typename Coeff>
class LinearCombination {
public:
    using map_type = std::map<Key, Coeff>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;
    explicit LinearCombination(const Key& k, Coeff c = Coeff(1)) { add(k, std::move(c)); }

    void add(const Key& k, const Coeff& c) {
        if (c == Coeff{}) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == Coeff{}) terms_.erase(it);
        }
    }

    void add(const LinearCombination& other, const Coeff& scale = Coeff(1)) {
        for (const auto& [k, c] : other.terms_) add(k, c * scale);
    }

    Coeff coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    template <typename F>
    auto map_keys(F&& f) const {
        using K2 = std::decay_t<std::invoke_result_t<F, const Key&>>;
        LinearCombination<K2, Coeff> out;
        for (const auto& [k, c] : terms_) out.add(f(k), c);
        return out;
    }

    LinearCombination& operator+=(const LinearCombination& o) {
        add(o);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o) {
        add(o, Coeff(-1));
        return *this;
    }
    LinearCombination& operator*=(const Coeff& s) {
        if (s == Coeff{}) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(LinearCombination a, const Coeff& s) { return a *= s; }
    friend LinearCombination operator*(const Coeff& s, LinearCombination a) { return a *= s; }

    bool operator==(const LinearCombination&) const = default;

private:
    map_type terms_;
};

/// Bilinear extension of a product defined on basis keys.
template <typename Key, typename Coeff, typename BasisProduct>
LinearCombination<Key, Coeff> bilinear(const LinearCombination<Key, Coeff>& x,
                                       const LinearCombination<Key, Coeff>& y,
                                       BasisProduct&& basis_product) {
    LinearCombination<Key, Coeff> out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out.add(basis_product(a, b), ca * cb);
    return out;
}

}  // namespace ncsf
