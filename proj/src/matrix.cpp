#include "twdual/matrix.hpp"

namespace twdual {

RatMatrix to_rational(const IntMatrix &m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j);
    return out;
}

IntMatrix to_integer(const RatMatrix &m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = to_integer(m(i, j));
    return out;
}

bool is_integral(const RatMatrix &m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_integer(m(i, j)))
                return false;
    return true;
}

RatMatrix rows_to_matrix(const std::vector<RatVector> &rows, std::size_t cols) {
    return RatMatrix::from_rows(rows, cols);
}

RatVector row_times(const RatVector &v, const RatMatrix &m) {
    ensure(v.size() == m.rows(), "row_times shape mismatch");
    RatVector out = zero_vector(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0)
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] += v[i] * m(i, j);
    }
    return out;
}

RatVector times_col(const RatMatrix &m, const RatVector &v) {
    ensure(v.size() == m.cols(), "times_col shape mismatch");
    RatVector out = zero_vector(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] += m(i, j) * v[j];
    return out;
}

Rational bilinear(const RatVector &u, const RatMatrix &m, const RatVector &v) {
    RatVector mv = times_col(m, v);
    ensure(u.size() == mv.size(), "bilinear shape mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        s += u[i] * mv[i];
    return s;
}

Rational determinant(RatMatrix m) {
    ensure(m.rows() == m.cols(), "determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0)
                continue;
            Rational f = -m(r, c) / m(c, c);
            m.add_row(r, c, f);
        }
    }
    return det;
}

Integer determinant(const IntMatrix &m) { return to_integer(determinant(to_rational(m))); }

RatMatrix inverse(const RatMatrix &m) {
    ensure(m.rows() == m.cols(), "inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            throw DomainError("singular matrix");
        a.swap_rows(p, c);
        inv.swap_rows(p, c);
        Rational pivot = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= pivot;
            inv(c, j) /= pivot;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0)
                continue;
            Rational f = -a(r, c);
            a.add_row(r, c, f);
            inv.add_row(r, c, f);
        }
    }
    return inv;
}

} // namespace twdual
