#include "lefschetz/linalg/matrix.hpp"

#include "lefschetz/linalg/error.hpp"

#include <sstream>
#include <utility>

namespace lefschetz::linalg {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        require(row.size() == cols_, "ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RationalMatrix RationalMatrix::column(const std::vector<Rational>& entries) {
    RationalMatrix m(entries.size(), 1);
    for (std::size_t r = 0; r < entries.size(); ++r) m(r, 0) = entries[r];
    return m;
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const {
    require(r < rows_ && c < cols_, "matrix index out of range");
    return (*this)(r, c);
}

std::vector<Rational> RationalMatrix::column_entries(std::size_t c) const {
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

std::vector<Rational> RationalMatrix::row_entries(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::string RationalMatrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        out << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << lefschetz::to_string((*this)(r, c));
        out << ']';
    }
    out << ']';
    return out.str();
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shape mismatch");
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference shape mismatch");
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

RationalMatrix operator-(const RationalMatrix& a) { return Rational(-1) * a; }

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    require(a.cols() == b.rows(), "matrix product shape mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& x = a(r, k);
            if (x == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (b(k, c) != 0) out(r, c) += x * b(k, c);
        }
    return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = s * a(r, c);
    return out;
}

RationalMatrix transpose(const RationalMatrix& a) {
    RationalMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
    return out;
}

RationalMatrix hstack(const RationalMatrix& left, const RationalMatrix& right) {
    if (left.cols() == 0) return right;
    if (right.cols() == 0) return left;
    require(left.rows() == right.rows(), "hstack row mismatch");
    RationalMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
        for (std::size_t c = 0; c < right.cols(); ++c) out(r, left.cols() + c) = right(r, c);
    }
    return out;
}

RationalMatrix select_columns(const RationalMatrix& a, const std::vector<std::size_t>& columns) {
    RationalMatrix out(a.rows(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        require(columns[j] < a.cols(), "column index out of range");
        for (std::size_t r = 0; r < a.rows(); ++r) out(r, j) = a(r, columns[j]);
    }
    return out;
}

RationalMatrix block(const RationalMatrix& a, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& columns) {
    RationalMatrix out(rows.size(), columns.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < columns.size(); ++j) out(i, j) = a.at(rows[i], columns[j]);
    return out;
}

RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
    return out;
}

Rational trace(const RationalMatrix& m) {
    require(m.is_square(), "trace of a non-square " + std::to_string(m.rows()) + "x" +
                               std::to_string(m.cols()) + " matrix");
    Rational sum = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, i);
    return sum;
}

RowEchelon row_echelon(const RationalMatrix& a) {
    RowEchelon result{a, {}};
    RationalMatrix& m = result.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t found = pivot_row;
        while (found < m.rows() && m(found, c) == 0) ++found;
        if (found == m.rows()) continue;
        if (found != pivot_row)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(found, k), m(pivot_row, k));
        Rational inv = Rational(1) / m(pivot_row, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(pivot_row, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m(r, c) == 0) continue;
            Rational factor = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(pivot_row, k);
        }
        result.pivot_columns.push_back(c);
        ++pivot_row;
    }
    return result;
}

std::size_t rank(const RationalMatrix& a) { return row_echelon(a).pivot_columns.size(); }

Rational determinant(const RationalMatrix& a) {
    require(a.is_square(), "determinant of a non-square matrix");
    RationalMatrix m = a;
    Rational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t found = c;
        while (found < n && m(found, c) == 0) ++found;
        if (found == n) return 0;
        if (found != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(found, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            Rational factor = m(r, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
        }
    }
    return det;
}

bool is_invertible(const RationalMatrix& a) { return a.is_square() && rank(a) == a.rows(); }

RationalMatrix inverse(const RationalMatrix& a) {
    require(a.is_square(), "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RowEchelon e = row_echelon(hstack(a, RationalMatrix::identity(n)));
    require(e.pivot_columns.size() >= n && e.pivot_columns[n - 1] == n - 1, "matrix is singular");
    RationalMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
    return out;
}

RationalMatrix kernel_basis(const RationalMatrix& a) {
    RowEchelon e = row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    RationalMatrix basis(a.cols(), free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
        basis(free[j], j) = 1;
        for (std::size_t i = 0; i < e.pivot_columns.size(); ++i)
            basis(e.pivot_columns[i], j) = -e.reduced(i, free[j]);
    }
    return basis;
}

RationalMatrix column_space_basis(const RationalMatrix& a) {
    return select_columns(a, row_echelon(a).pivot_columns);
}

RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b) {
    require(a.rows() == b.rows(), "solve: row mismatch");
    const std::size_t n = a.cols();
    RowEchelon e = row_echelon(hstack(a, b));
    // Full column rank of `a` means its columns are exactly the first n pivots.
    require(e.pivot_columns.size() >= n && (n == 0 || e.pivot_columns[n - 1] == n - 1),
            "solve: coefficient matrix lacks full column rank");
    require(e.pivot_columns.size() == n, "solve: right-hand side outside the column space");
    RationalMatrix x(n, b.cols());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = e.reduced(r, n + c);
    return x;
}

std::vector<std::size_t> extend_basis(const RationalMatrix& base, const RationalMatrix& candidates) {
    // Pivots of [base | candidates] past the base block select the extension.
    RowEchelon e = row_echelon(hstack(base, candidates));
    std::vector<std::size_t> taken;
    for (auto c : e.pivot_columns)
        if (c >= base.cols()) taken.push_back(c - base.cols());
    return taken;
}

RationalMatrix induced_on_quotient(const RationalMatrix& map, const RationalMatrix& sub,
                                   const RationalMatrix& complement) {
    RationalMatrix full = hstack(sub, complement);
    RationalMatrix coords = solve(full, map * complement);
    RationalMatrix out(complement.cols(), complement.cols());
    for (std::size_t r = 0; r < complement.cols(); ++r)
        for (std::size_t c = 0; c < complement.cols(); ++c) out(r, c) = coords(sub.cols() + r, c);
    return out;
}

RationalMatrix restrict_to(const RationalMatrix& map, const RationalMatrix& basis) {
    if (basis.cols() == 0) return RationalMatrix(0, 0);
    return solve(basis, map * basis);
}

}  // namespace lefschetz::linalg
