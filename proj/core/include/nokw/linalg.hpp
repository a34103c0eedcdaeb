#ifndef NOKW_LINALG_HPP
#define NOKW_LINALG_HPP

#include <cstddef>
#include <vector>

#include "nokw/rational.hpp"

namespace nokw {

/**
 * Dense matrix over exact rationals.
 *
 * Sizes stay tiny (weight-space dimensions at desk scale), so the class keeps
 * a flat row-major buffer and favours clarity over blocking tricks.  A matrix
 * with zero rows or columns is a valid object: linear maps into or out of a
 * zero-dimensional weight space occur naturally and behave like empty sums.
 */
class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const RatMat& other) const = default;

    /// Matrix-vector product M·x (x.size() == cols()).
    std::vector<Rat> apply(const std::vector<Rat>& x) const;

    RatMat operator*(const RatMat& rhs) const;
    RatMat operator-(const RatMat& rhs) const;
    RatMat scaled(const Rat& c) const;
    RatMat transposed() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// Rank of a matrix by exact Gaussian elimination (no tolerances anywhere).
std::size_t rank_exact(RatMat m);

/// For a symmetric matrix: true iff every leading principal minor is > 0,
/// i.e. the matrix is positive definite.  Decided by symmetric elimination:
/// the k-th leading minor is the product of the first k pivots.
bool leading_principal_minors_positive(const RatMat& sym);

/**
 * Greedy maximal independent subset of a positive semidefinite Gram matrix.
 *
 * Scans indices in order; keeps index k when its diagonal entry is still
 * nonzero in the running Schur complement, skips it otherwise.  For a PSD
 * matrix a zero diagonal entry forces the whole residual row to vanish (the
 * vector lies in the span of the kept ones), which is asserted; the kept
 * index set is therefore a basis of the column space and is the
 * lexicographically first such subset.
 */
std::vector<std::size_t> greedy_independent_subset(const RatMat& gram);

/// Solves A·x = b for square nonsingular A (partial pivoting on the first
/// nonzero entry).  Throws internal_error when A is singular.
std::vector<Rat> solve_linear(RatMat a, std::vector<Rat> b);

/**
 * Incremental span membership tester over Rat^dim.
 *
 * Maintains a fully reduced row-echelon basis of the vectors inserted so far;
 * `insert` returns true (and extends the basis) exactly when the vector is
 * independent of the previous ones.  This is the inner loop of the essential-
 * tuple scan, where vectors arrive one by one in a prescribed order.
 */
class SpanTester {
public:
    explicit SpanTester(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    bool contains(std::vector<Rat> v) const;
    bool insert(std::vector<Rat> v);

private:
    /// Reduces v by the current echelon rows in place; returns the pivot
    /// column of the residue, or dim_ when the residue is zero.
    std::size_t reduce(std::vector<Rat>& v) const;

    std::size_t dim_;
    std::vector<std::vector<Rat>> rows_; // pivot-normalized, mutually reduced
    std::vector<std::size_t> pivots_;    // pivot column per row, increasing insert order
};

} // namespace nokw

#endif // NOKW_LINALG_HPP
