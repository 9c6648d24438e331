#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"
#include "composition.hpp"

namespace ncsf {

/// Square integer matrix whose rows and columns share one ordered list of
/// composition labels.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::vector<Composition> labels)
        : labels_(std::move(labels)), entries_(labels_.size() * labels_.size()) {}

    static IntMatrix identity(std::vector<Composition> labels) {
        IntMatrix m(std::move(labels));
        for (std::size_t i = 0; i < m.size(); ++i) m(i, i) = 1;
        return m;
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<Composition>& labels() const { return labels_; }

    BigInt& operator()(std::size_t row, std::size_t col) { return entries_[row * size() + col]; }
    const BigInt& operator()(std::size_t row, std::size_t col) const { return entries_[row * size() + col]; }

    std::size_t index_of(const Composition& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return i;
        throw std::out_of_range("IntMatrix: unknown label");
    }

    const BigInt& at(const Composition& row, const Composition& col) const {
        return (*this)(index_of(row), index_of(col));
    }

    bool is_upper_unitriangular() const {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    IntMatrix transposed() const {
        IntMatrix t(labels_);
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.labels_ != b.labels_) throw std::invalid_argument("IntMatrix: label mismatch");
        IntMatrix c(a.labels_);
        const std::size_t n = a.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    bool operator==(const IntMatrix&) const = default;

private:
    std::vector<Composition> labels_;
    std::vector<BigInt> entries_;
};

/// Exact inverse of a unitriangular matrix by back-substitution, column by column.
/// Lower unitriangular input is handled through the transpose.
inline IntMatrix matrix_inverse(const IntMatrix& m) {
    if (!m.is_upper_unitriangular()) {
        if (m.transposed().is_upper_unitriangular()) return matrix_inverse(m.transposed()).transposed();
        throw std::invalid_argument("matrix_inverse: input is not unitriangular");
    }
    const std::size_t n = m.size();
    IntMatrix inv(m.labels());
    for (std::size_t col = 0; col < n; ++col) {
        // solve m * x = e_col from the bottom up
        for (std::size_t r = n; r-- > 0;) {
            BigInt v = (r == col) ? 1 : 0;
            for (std::size_t k = r + 1; k < n; ++k) v -= m(r, k) * inv(k, col);
            inv(r, col) = v;
        }
    }
    return inv;
}

}  // namespace ncsf
