#include "lefschetz/linalg/smith.hpp"

#include "lefschetz/linalg/error.hpp"

#include <utility>

namespace lefschetz::linalg {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    require(a.cols() == b.rows(), "integer matrix product shape mismatch");
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(r, k) == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
        }
    return out;
}

namespace {

// Row and column operations applied simultaneously to the working matrix and
// to the accumulated transforms.
struct Reducer {
    IntegerMatrix a;
    IntegerMatrix u;
    IntegerMatrix v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    }
    // row[target] += factor * row[source]
    void add_row(std::size_t target, std::size_t source, const Integer& factor) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(target, c) += factor * a(source, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(target, c) += factor * u(source, c);
    }
    void add_col(std::size_t target, std::size_t source, const Integer& factor) {
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, target) += factor * a(r, source);
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, target) += factor * v(r, source);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
    }
};

// Floor-free quotient is fine here: remainders only need to shrink in |.|.
Integer quotient(const Integer& x, const Integer& y) { return x / y; }

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& input) {
    const std::size_t m = input.rows();
    const std::size_t n = input.cols();
    Reducer red{input, IntegerMatrix::identity(m), IntegerMatrix::identity(n)};
    IntegerMatrix& a = red.a;

    for (std::size_t t = 0; t < m && t < n; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = m, pc = n;
            for (std::size_t r = t; r < m; ++r)
                for (std::size_t c = t; c < n; ++c)
                    if (a(r, c) != 0 && (pr == m || abs(a(r, c)) < abs(a(pr, pc)))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == m) goto finished;
            red.swap_rows(t, pr);
            red.swap_cols(t, pc);

            bool dirty = false;
            for (std::size_t r = t + 1; r < m; ++r) {
                if (a(r, t) == 0) continue;
                red.add_row(r, t, -quotient(a(r, t), a(t, t)));
                if (a(r, t) != 0) dirty = true;
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (a(t, c) == 0) continue;
                red.add_col(c, t, -quotient(a(t, c), a(t, t)));
                if (a(t, c) != 0) dirty = true;
            }
            if (dirty) continue;

            // Pivot row and column are clear; enforce divisibility.
            bool divides_all = true;
            for (std::size_t r = t + 1; r < m && divides_all; ++r)
                for (std::size_t c = t + 1; c < n; ++c)
                    if (a(r, c) % a(t, t) != 0) {
                        red.add_row(t, r, Integer(1));
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (a(t, t) < 0) red.negate_row(t);
    }
finished:

    SmithForm form{std::move(red.u), std::move(red.a), std::move(red.v), {}};
    for (std::size_t i = 0; i < m && i < n; ++i)
        if (form.diagonal(i, i) != 0) form.invariant_factors.push_back(form.diagonal(i, i));

#ifdef LEFSCHETZ_CHECKED
    ensure(is_valid_smith_form(input, form), "Smith normal form failed its multiplication check");
#endif
    return form;
}

Integer integer_determinant(const IntegerMatrix& input) {
    require(input.rows() == input.cols(), "determinant of a non-square integer matrix");
    const std::size_t n = input.rows();
    if (n == 0) return 1;
    IntegerMatrix a = input;
    Integer sign = 1;
    Integer previous = 1;
    // Bareiss fraction-free elimination.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_valid_smith_form(const IntegerMatrix& a, const SmithForm& form) {
    if (!(form.left * a * form.right == form.diagonal)) return false;
    if (abs(integer_determinant(form.left)) != 1) return false;
    if (abs(integer_determinant(form.right)) != 1) return false;
    const IntegerMatrix& d = form.diagonal;
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
            if (r != c && d(r, c) != 0) return false;
    for (std::size_t i = 0; i + 1 < form.invariant_factors.size(); ++i)
        if (form.invariant_factors[i + 1] % form.invariant_factors[i] != 0) return false;
    // Nonzero entries must form a prefix of the diagonal.
    for (std::size_t i = 0; i < form.invariant_factors.size(); ++i)
        if (d(i, i) != form.invariant_factors[i] || d(i, i) <= 0) return false;
    return true;
}

}  // namespace lefschetz::linalg
