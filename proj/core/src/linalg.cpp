#include "nokw/linalg.hpp"

#include "nokw/errors.hpp"

namespace nokw {

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Rat> RatMat::apply(const std::vector<Rat>& x) const {
    require_internal(x.size() == cols_, "matrix-vector size mismatch");
    std::vector<Rat> y(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rat& a = (*this)(i, j);
            if (a != 0 && x[j] != 0) acc += a * x[j];
        }
        y[i] = acc;
    }
    return y;
}

RatMat RatMat::operator*(const RatMat& rhs) const {
    require_internal(cols_ == rhs.rows_, "matrix product size mismatch");
    RatMat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rat& b = rhs(k, j);
                if (b != 0) out(i, j) += a * b;
            }
        }
    return out;
}

RatMat RatMat::operator-(const RatMat& rhs) const {
    require_internal(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix difference size mismatch");
    RatMat out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j) - rhs(i, j);
    return out;
}

RatMat RatMat::scaled(const Rat& c) const {
    RatMat out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j) * c;
    return out;
}

RatMat RatMat::transposed() const {
    RatMat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

std::size_t rank_exact(RatMat m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
        const Rat inv = Rat(1) / m(rank, col);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m(i, col) == 0) continue;
            const Rat factor = m(i, col) * inv;
            for (std::size_t j = col; j < cols; ++j) m(i, j) -= factor * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

bool leading_principal_minors_positive(const RatMat& sym) {
    require_internal(sym.rows() == sym.cols(), "positivity test needs a square matrix");
    RatMat w = sym;
    const std::size_t n = w.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (w(k, k) <= 0) return false;
        const Rat inv = Rat(1) / w(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w(i, k) == 0) continue;
            const Rat factor = w(i, k) * inv;
            for (std::size_t j = k + 1; j < n; ++j) w(i, j) -= factor * w(k, j);
        }
    }
    return true;
}

std::vector<std::size_t> greedy_independent_subset(const RatMat& gram) {
    require_internal(gram.rows() == gram.cols(), "Gram matrix must be square");
    RatMat w = gram;
    const std::size_t n = w.rows();
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < n; ++k) {
        if (w(k, k) == 0) {
            // A PSD matrix with zero diagonal entry has a zero row; anything
            // else means the input was not a genuine Gram matrix.
            for (std::size_t j = k + 1; j < n; ++j)
                require_internal(w(k, j) == 0,
                                 "Gram matrix is not positive semidefinite: zero diagonal with nonzero row");
            continue;
        }
        kept.push_back(k);
        const Rat inv = Rat(1) / w(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w(i, k) == 0) continue;
            const Rat factor = w(i, k) * inv;
            for (std::size_t j = k + 1; j < n; ++j) w(i, j) -= factor * w(k, j);
        }
    }
    return kept;
}

std::vector<Rat> solve_linear(RatMat a, std::vector<Rat> b) {
    const std::size_t n = a.rows();
    require_internal(a.cols() == n && b.size() == n, "solve_linear needs square A and matching b");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        require_internal(pivot < n, "solve_linear: singular matrix");
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            std::swap(b[pivot], b[col]);
        }
        const Rat inv = Rat(1) / a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            const Rat factor = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
            b[i] -= factor * b[col];
        }
    }
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t i = n; i-- > 0;) {
        Rat acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

std::size_t SpanTester::reduce(std::vector<Rat>& v) const {
    require_internal(v.size() == dim_, "SpanTester: vector dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = v[pivots_[r]];
        if (c == 0) continue;
        const Rat factor = c; // rows are pivot-normalized to 1
        const std::vector<Rat>& row = rows_[r];
        for (std::size_t j = 0; j < dim_; ++j)
            if (row[j] != 0) v[j] -= factor * row[j];
    }
    std::size_t pivot = 0;
    while (pivot < dim_ && v[pivot] == 0) ++pivot;
    return pivot;
}

bool SpanTester::contains(std::vector<Rat> v) const { return reduce(v) == dim_; }

bool SpanTester::insert(std::vector<Rat> v) {
    const std::size_t pivot = reduce(v);
    if (pivot == dim_) return false;
    const Rat inv = Rat(1) / v[pivot];
    for (auto& c : v) c *= inv;
    // Keep the basis fully reduced so later reductions touch each row once.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rat& c = rows_[r][pivot];
        if (c == 0) continue;
        const Rat factor = c;
        for (std::size_t j = 0; j < dim_; ++j)
            if (v[j] != 0) rows_[r][j] -= factor * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

} // namespace nokw
