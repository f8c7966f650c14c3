#pragma once

#include "polylab/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace polylab {

/**
 * Dense row-major integer matrix. The shape is fixed at construction; only
 * entries can change.
 */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::span<const IntVector> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Int> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    IntVector column(std::size_t c) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVector operator*(std::span<const Int> v) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// Exact determinant via Bareiss fraction-free elimination.
Int det(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal with d1 | d2 | ...
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    /// Nonzero diagonal entries of D, in order.
    IntVector invariant_factors() const;
};

SmithForm snf(const IntMatrix& m);

/// Index of the lattice spanned by the rows of a full-row-rank matrix inside
/// its saturation, i.e. the gcd of its maximal minors (computed via SNF).
Int lattice_index(const IntMatrix& rows);

/**
 * Exact solver for M x = b that factors M once. Row reduction is done
 * fraction-free; individual solves are then a matrix-vector product plus a
 * consistency check on the zero rows.
 */
class LinearSolver {
public:
    explicit LinearSolver(const IntMatrix& m);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t unknowns() const { return cols_; }

    /// nullopt when the system is inconsistent. Free variables are set to 0.
    std::optional<RatVector> solve(std::span<const Rat> b) const;
    std::optional<RatVector> solve(std::span<const Int> b) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> pivots_;     // pivot column of each nonzero RREF row
    std::vector<RatVector> transform_;    // T with T * M = RREF(M)
};

std::optional<RatVector> solve_rational(const IntMatrix& m, std::span<const Rat> b);

/// Primitive integer basis of {x : M x = 0}, derived from the RREF.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// Pivot columns of RREF(M).
std::vector<std::size_t> pivot_columns(const IntMatrix& m);

}  // namespace polylab
