#include "polylab/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace polylab {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0))
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows)
{
    if (rows.empty())
        return {};
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

IntVector IntMatrix::column(std::size_t c) const
{
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntVector IntMatrix::operator*(std::span<const Int> v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("IntMatrix: shape mismatch in matrix-vector product");
    IntVector out(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            out[i] += (*this)(i, k) * v[k];
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

namespace {

// Fraction-free row echelon form in place. Row operations are applied to all
// columns, but pivots are searched only in the first `pivot_cols` columns.
// Returns the pivot columns; `sign` tracks row swaps.
std::vector<std::size_t> bareiss_echelon(IntMatrix& a, std::size_t pivot_cols, int& sign)
{
    std::vector<std::size_t> pivots;
    sign = 1;
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows())
            continue;
        if (p != r) {
            a.swap_rows(p, r);
            sign = -sign;
        }
        const Int pivot = a(r, c);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            const Int factor = a(i, c);
            for (std::size_t j = c + 1; j < a.cols(); ++j) {
                Int v = a(i, j) * pivot - factor * a(r, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(v);
            }
            a(i, c) = 0;
        }
        // Columns left of c in rows below r are already zero.
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Int det(const IntMatrix& m)
{
    if (!m.square())
        throw std::invalid_argument("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return Int(1);
    if (n == 1)
        return m(0, 0);
    if (n == 2)
        return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    IntMatrix a = m;
    int sign = 1;
    auto pivots = bareiss_echelon(a, n, sign);
    if (pivots.size() < n)
        return Int(0);
    Int d = a(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

std::size_t rank(const IntMatrix& m)
{
    IntMatrix a = m;
    int sign = 1;
    return bareiss_echelon(a, a.cols(), sign).size();
}

IntVector SmithForm::invariant_factors() const
{
    IntVector out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        if (D(i, i) != 0)
            out.push_back(D(i, i));
    return out;
}

SmithForm snf(const IntMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
        // row_dst -= q * row_src, mirrored on U
        for (std::size_t j = 0; j < cols; ++j)
            a(dst, j) -= q * a(src, j);
        for (std::size_t j = 0; j < rows; ++j)
            u(dst, j) -= q * u(src, j);
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < rows; ++i)
            a(i, dst) -= q * a(i, src);
        for (std::size_t i = 0; i < cols; ++i)
            v(i, dst) -= q * v(i, src);
    };

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a(i, j) != 0 && (pi == rows || abs(a(i, j)) < abs(a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows)
                goto done;
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0)
                    continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                row_axpy(i, t, q);
                if (a(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0)
                    continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                col_axpy(j, t, q);
                if (a(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // Enforce the divisibility chain on the trailing block.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            row_axpy(t, bad, Int(-1));
        }
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j)
                a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < rows; ++j)
                u(t, j) = -u(t, j);
        }
    }
done:
    return SmithForm{std::move(u), std::move(a), std::move(v)};
}

Int lattice_index(const IntMatrix& rows)
{
    SmithForm s = snf(rows);
    auto factors = s.invariant_factors();
    if (factors.size() != rows.rows())
        throw std::invalid_argument("lattice_index: rows are linearly dependent");
    Int prod = 1;
    for (const auto& f : factors)
        prod *= f;
    return prod;
}

LinearSolver::LinearSolver(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols())
{
    IntMatrix aug(rows_, cols_ + rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            aug(i, j) = m(i, j);
        aug(i, cols_ + i) = 1;
    }
    int sign = 1;
    pivots_ = bareiss_echelon(aug, cols_, sign);

    std::vector<RatVector> r(rows_, RatVector(cols_ + rows_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_ + rows_; ++j)
            r[i][j] = aug(i, j);

    // Normalize pivots and clear above them (Gauss-Jordan back pass).
    for (std::size_t k = pivots_.size(); k-- > 0;) {
        const std::size_t c = pivots_[k];
        const Rat inv = 1 / r[k][c];
        for (auto& x : r[k])
            x *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (r[i][c] == 0)
                continue;
            const Rat f = r[i][c];
            for (std::size_t j = 0; j < cols_ + rows_; ++j)
                r[i][j] -= f * r[k][j];
        }
    }
    transform_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        transform_[i].assign(r[i].begin() + static_cast<long>(cols_), r[i].end());
}

std::optional<RatVector> LinearSolver::solve(std::span<const Rat> b) const
{
    if (b.size() != rows_)
        throw std::invalid_argument("LinearSolver::solve: right-hand side has wrong length");
    RatVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < rows_; ++j)
            if (transform_[i][j] != 0 && b[j] != 0)
                acc += transform_[i][j] * b[j];
        y[i] = acc;
    }
    for (std::size_t i = pivots_.size(); i < rows_; ++i)
        if (y[i] != 0)
            return std::nullopt;
    RatVector x(cols_, Rat(0));
    for (std::size_t k = 0; k < pivots_.size(); ++k)
        x[pivots_[k]] = y[k];
    return x;
}

std::optional<RatVector> LinearSolver::solve(std::span<const Int> b) const
{
    RatVector rb = to_rational(b);
    return solve(rb);
}

std::optional<RatVector> solve_rational(const IntMatrix& m, std::span<const Rat> b)
{
    return LinearSolver(m).solve(b);
}

namespace {

// Rational RREF; returns rows and pivot columns.
std::pair<std::vector<RatVector>, std::vector<std::size_t>> rref(const IntMatrix& m)
{
    IntMatrix a = m;
    int sign = 1;
    auto pivots = bareiss_echelon(a, a.cols(), sign);
    std::vector<RatVector> r(pivots.size(), RatVector(a.cols()));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r[i][j] = a(i, j);
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t c = pivots[k];
        const Rat inv = 1 / r[k][c];
        for (auto& x : r[k])
            x *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (r[i][c] == 0)
                continue;
            const Rat f = r[i][c];
            for (std::size_t j = 0; j < a.cols(); ++j)
                r[i][j] -= f * r[k][j];
        }
    }
    return {std::move(r), std::move(pivots)};
}

}  // namespace

std::vector<IntVector> integer_kernel(const IntMatrix& m)
{
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        RatVector x(m.cols(), Rat(0));
        x[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            x[pivots[k]] = -r[k][f];
        Int l = 1;
        for (const auto& q : x)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        IntVector v(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rat s = x[j] * l;
            v[j] = s.get_num();
        }
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::size_t> pivot_columns(const IntMatrix& m)
{
    IntMatrix a = m;
    int sign = 1;
    return bareiss_echelon(a, a.cols(), sign);
}

}  // namespace polylab
