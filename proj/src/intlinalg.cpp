#include "lf/intlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace lf {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill)
    : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length does not match column count");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t i) const
{
    return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_};
}

std::vector<std::int64_t> IntMatrix::apply(const std::vector<std::int64_t>& x) const
{
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    std::vector<std::int64_t> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) && x[j]) y[i] = checked_add(y[i], checked_mul((*this)(i, j), x[j]));
    return y;
}

bool IntMatrix::is_identity() const
{
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y)
{
    if (x.cols() != y.rows()) throw std::invalid_argument("dimension mismatch in matrix product");
    IntMatrix r(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            std::int64_t a = x(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < y.cols(); ++j)
                if (y(k, j)) r(i, j) = checked_add(r(i, j), checked_mul(a, y(k, j)));
        }
    return r;
}

std::string to_string(const IntMatrix& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

std::int64_t determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    std::int64_t sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j))) / prev;
        prev = a(k, k);
    }
    return checked_mul(sign, a(n - 1, n - 1));
}

namespace {

// Elementary operations applied simultaneously to A and its transforms.
// Row ops act on u (left) and inversely on u_inv (columns); column ops on v / v_inv (rows).
struct SNFState {
    IntMatrix a, u, v, ui, vi;

    void swap_rows(std::size_t i, std::size_t k)
    {
        if (i == k) return;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(i, j), a(k, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(i, j), u(k, j));
        for (std::size_t j = 0; j < ui.rows(); ++j) std::swap(ui(j, i), ui(j, k));
    }
    void swap_cols(std::size_t i, std::size_t k)
    {
        if (i == k) return;
        for (std::size_t j = 0; j < a.rows(); ++j) std::swap(a(j, i), a(j, k));
        for (std::size_t j = 0; j < v.rows(); ++j) std::swap(v(j, i), v(j, k));
        for (std::size_t j = 0; j < vi.cols(); ++j) std::swap(vi(i, j), vi(k, j));
    }
    // row_i += q·row_k
    void add_row(std::size_t i, std::size_t k, std::int64_t q)
    {
        if (!q) return;
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = checked_add(a(i, j), checked_mul(q, a(k, j)));
        for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) = checked_add(u(i, j), checked_mul(q, u(k, j)));
        for (std::size_t j = 0; j < ui.rows(); ++j) ui(j, k) = checked_sub(ui(j, k), checked_mul(q, ui(j, i)));
    }
    // col_i += q·col_k
    void add_col(std::size_t i, std::size_t k, std::int64_t q)
    {
        if (!q) return;
        for (std::size_t j = 0; j < a.rows(); ++j) a(j, i) = checked_add(a(j, i), checked_mul(q, a(j, k)));
        for (std::size_t j = 0; j < v.rows(); ++j) v(j, i) = checked_add(v(j, i), checked_mul(q, v(j, k)));
        for (std::size_t j = 0; j < vi.cols(); ++j) vi(k, j) = checked_sub(vi(k, j), checked_mul(q, vi(i, j)));
    }
    void negate_row(std::size_t i)
    {
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = checked_mul(-1, a(i, j));
        for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) = checked_mul(-1, u(i, j));
        for (std::size_t j = 0; j < ui.rows(); ++j) ui(j, i) = checked_mul(-1, ui(j, i));
    }
};

}  // namespace

namespace {

// Quotient rounded to nearest, so the remainder is at most |d|/2 and the
// transforms grow as slowly as the elimination allows.
std::int64_t nearest_quotient(std::int64_t n, std::int64_t d)
{
    std::int64_t q = n / d, r = n % d;
    if (r != 0 && 2 * std::llabs(r) > std::llabs(d)) q += ((r < 0) == (d < 0)) ? 1 : -1;
    return q;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    SNFState st{m, IntMatrix::identity(rows), IntMatrix::identity(cols), IntMatrix::identity(rows),
                IntMatrix::identity(cols)};
    auto& a = st.a;
    std::vector<std::int64_t> d;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // smallest |entry| in the trailing block, lowest (row, col) on ties
            std::size_t pi = rows, pj = cols;
            std::int64_t best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    std::int64_t x = a(i, j);
                    if (x == 0) continue;
                    if (x == INT64_MIN) throw OverflowError("integer overflow in Smith normal form");
                    if (best == 0 || std::llabs(x) < best) best = std::llabs(x), pi = i, pj = j;
                }
            if (best == 0) goto finished;
            st.swap_rows(t, pi);
            st.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                st.add_row(i, t, -nearest_quotient(a(i, t), a(t, t)));
                if (a(i, t)) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                st.add_col(j, t, -nearest_quotient(a(t, j), a(t, t)));
                if (a(t, j)) clean = false;
            }
            if (!clean) continue;

            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t)) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            st.add_row(t, bad, 1);
        }
        if (a(t, t) < 0) st.negate_row(t);
        d.push_back(a(t, t));
    }
finished:
    return {d, st.u, st.v, st.ui, st.vi};
}

IntMatrix diagonal(const std::vector<std::int64_t>& d, std::size_t rows, std::size_t cols)
{
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < d.size() && i < rows && i < cols; ++i) m(i, i) = d[i];
    return m;
}

std::string AbelianGroupReport::to_string() const
{
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank) {
        os << "Z";
        if (free_rank > 1) os << '^' << free_rank;
        first = false;
    }
    for (auto t : torsion) {
        os << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    return os.str();
}

AbelianGroupReport cokernel(const IntMatrix& m)
{
    auto snf = smith_normal_form(m);
    AbelianGroupReport r;
    r.free_rank = m.cols() - snf.rank();
    for (auto x : snf.d)
        if (x > 1) r.torsion.push_back(x);
    return r;
}

bool preserves_form(const IntMatrix& m, const IntMatrix& j)
{
    if (m.rows() != m.cols() || j.rows() != j.cols() || m.rows() != j.rows())
        throw std::invalid_argument("preserves_form: dimension mismatch");
    return m.transpose() * j * m == j;
}

}  // namespace lf
