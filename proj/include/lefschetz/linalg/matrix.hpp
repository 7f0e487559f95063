#pragma once

#include "lefschetz/linalg/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace lefschetz::linalg {

/// Dense matrix of exact rationals. The shape is fixed at construction;
/// entries are always stored in lowest terms (guaranteed by the GMP backend).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    /// Column vector.
    static RationalMatrix column(const std::vector<Rational>& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const;

    std::vector<Rational> column_entries(std::size_t c) const;
    std::vector<Rational> row_entries(std::size_t r) const;

    bool operator==(const RationalMatrix& other) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);

RationalMatrix transpose(const RationalMatrix& a);
RationalMatrix hstack(const RationalMatrix& left, const RationalMatrix& right);
RationalMatrix select_columns(const RationalMatrix& a, const std::vector<std::size_t>& columns);
RationalMatrix block(const RationalMatrix& a, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& columns);
/// Block-diagonal sum.
RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b);

/// Sum of diagonal entries. Rejects non-square input.
Rational trace(const RationalMatrix& m);

/// Reduced row echelon form computed with the leftmost available pivot in
/// every column, so the result and its pivot list are deterministic.
struct RowEchelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_columns;
};
RowEchelon row_echelon(const RationalMatrix& a);

std::size_t rank(const RationalMatrix& a);
Rational determinant(const RationalMatrix& a);
bool is_invertible(const RationalMatrix& a);
RationalMatrix inverse(const RationalMatrix& a);

/// Columns form a basis of the null space, one per free column of the RREF.
RationalMatrix kernel_basis(const RationalMatrix& a);
/// The pivot columns of `a` itself: a basis of its column space.
RationalMatrix column_space_basis(const RationalMatrix& a);

/// Solves a * x = b exactly when `a` has full column rank and b lies in its
/// column space. Throws PreconditionError otherwise.
RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b);

/// Given a basis `base` of a subspace W and vectors `candidates` spanning a
/// space containing W, picks (in order) the candidate columns that extend the
/// basis of W. Returns the indices taken.
std::vector<std::size_t> extend_basis(const RationalMatrix& base, const RationalMatrix& candidates);

/// Matrix of the endomorphism induced by `map` on the quotient V/W, where the
/// columns of `sub` span W and the columns of `complement` complete them to a
/// basis of V. `map` must preserve W.
RationalMatrix induced_on_quotient(const RationalMatrix& map, const RationalMatrix& sub,
                                   const RationalMatrix& complement);

/// Matrix of `map` restricted to the invariant subspace spanned by `basis`.
RationalMatrix restrict_to(const RationalMatrix& map, const RationalMatrix& basis);

}  // namespace lefschetz::linalg
