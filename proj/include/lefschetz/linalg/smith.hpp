#pragma once

#include "lefschetz/linalg/rational.hpp"

#include <cstddef>
#include <vector>

namespace lefschetz::linalg {

/// Dense integer matrix used for coboundary operators.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    bool operator==(const IntegerMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r.
struct SmithForm {
    IntegerMatrix left;      // U
    IntegerMatrix diagonal;  // D
    IntegerMatrix right;     // V
    std::vector<Integer> invariant_factors;  // nonzero diagonal entries, all positive

    std::size_t rank() const noexcept { return invariant_factors.size(); }
};

SmithForm smith_normal_form(const IntegerMatrix& a);

/// Checks every defining property of a Smith form of `a`: the product
/// identity, unimodularity of U and V, diagonality and divisibility.
bool is_valid_smith_form(const IntegerMatrix& a, const SmithForm& form);

/// Determinant of a square integer matrix (fraction-free elimination).
Integer integer_determinant(const IntegerMatrix& a);

}  // namespace lefschetz::linalg
