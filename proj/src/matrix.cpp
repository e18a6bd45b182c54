#include "primsplit/matrix.hpp"

#include <stdexcept>

namespace primsplit {

namespace {
// Work threshold below which threading is pure overhead. Exact rational
// entries make each flop expensive, so the bar is low compared to floats.
constexpr std::size_t kParallelWork = 16384;
} // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
        for (long v : r) e_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::column(const Vec& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Vec Matrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const {
    Vec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Matrix Matrix::hcat(const Matrix& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("Matrix::hcat: row mismatch");
    Matrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) m.at(i, cols_ + j) = other.at(i, j);
    }
    return m;
}

Matrix Matrix::vcat(const Matrix& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("Matrix::vcat: column mismatch");
    Matrix m(rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = other.at(i, j);
    return m;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    Vec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix +: shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix -: shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = s * a.e_[i];
    return m;
}

// Threaded product. Each output row is independent, and rational addition is
// exactly associative, so the result is identical to mul_serial entry by entry.
Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix *: inner dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    const std::size_t work = a.rows_ * a.cols_ * b.cols_;
    const long nr = static_cast<long>(a.rows_);
#pragma omp parallel for schedule(static) if (work >= kParallelWork)
    for (long i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < b.cols_; ++j) {
            Rational acc;
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& av = a.at(static_cast<std::size_t>(i), k);
                if (av.is_zero()) continue;
                acc += av * b.at(k, j);
            }
            m.at(static_cast<std::size_t>(i), j) = acc;
        }
    }
    return m;
}

Matrix mul_serial(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul_serial: inner dimension mismatch");
    Matrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rational acc;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const Rational& av = a.at(i, k);
                if (av.is_zero()) continue;
                acc += av * b.at(k, j);
            }
            m.at(i, j) = acc;
        }
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

namespace {

// Gauss-Jordan elimination. Pivot = first row with a nonzero entry in the
// current column, scanning columns left to right; output is therefore a
// function of the input alone. The row updates for a fixed pivot touch
// disjoint rows, so they may run in any order (or threads) with identical
// results.
template <bool Threaded>
Echelon echelon_impl(Matrix m) {
    std::vector<std::size_t> pivots;
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t r = 0;
    const bool go_parallel = nr * nc >= kParallelWork;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && m.at(p, c).is_zero()) ++p;
        if (p == nr) continue;
        if (p != r)
            for (std::size_t j = c; j < nc; ++j) std::swap(m.at(r, j), m.at(p, j));
        const Rational inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < nc; ++j) m.at(r, j) *= inv;
        if constexpr (Threaded) {
            const long n = static_cast<long>(nr);
#pragma omp parallel for schedule(static) if (go_parallel)
            for (long i = 0; i < n; ++i) {
                const auto ui = static_cast<std::size_t>(i);
                if (ui == r || m.at(ui, c).is_zero()) continue;
                const Rational f = m.at(ui, c);
                for (std::size_t j = c; j < nc; ++j) m.at(ui, j) -= f * m.at(r, j);
            }
        } else {
            for (std::size_t i = 0; i < nr; ++i) {
                if (i == r || m.at(i, c).is_zero()) continue;
                const Rational f = m.at(i, c);
                for (std::size_t j = c; j < nc; ++j) m.at(i, j) -= f * m.at(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

} // namespace

Echelon reduced_row_echelon(Matrix m) { return echelon_impl<true>(std::move(m)); }
Echelon reduced_row_echelon_serial(Matrix m) { return echelon_impl<false>(std::move(m)); }

std::size_t rank(const Matrix& m) { return reduced_row_echelon(m).pivot_cols.size(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
    const Echelon ech = reduced_row_echelon(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        Vec v(nc);
        v[f] = Rational(1);
        for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i)
            v[ech.pivot_cols[i]] = -ech.reduced.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    const Echelon ech = reduced_row_echelon(m.hcat(Matrix::column(b)));
    const std::size_t nc = m.cols();
    for (std::size_t c : ech.pivot_cols)
        if (c == nc) return std::nullopt; // pivot in the rhs column: inconsistent
    Vec x(nc);
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i) x[ech.pivot_cols[i]] = ech.reduced.at(i, nc);
    return x;
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw std::invalid_argument("solve_matrix: shape mismatch");
    const std::size_t n = a.rows();
    const Echelon ech = reduced_row_echelon(a.hcat(b));
    // invertible A means pivots in exactly the first n columns, none in B
    if (ech.pivot_cols.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (ech.pivot_cols[i] != i) return std::nullopt;
    Matrix x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(i, j) = ech.reduced.at(i, n + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    return solve_matrix(m, Matrix::identity(m.rows()));
}

std::optional<std::size_t> nilpotency_index(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("nilpotency_index: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 0; // the empty matrix is the zero map
    Matrix p = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (p.is_zero()) return k;
        if (k < n) p = p * m;
    }
    return std::nullopt;
}

Matrix matrix_power(const Matrix& m, std::size_t k) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_power: matrix not square");
    Matrix acc = Matrix::identity(m.rows());
    Matrix base = m;
    while (k) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

std::size_t rank_of_columns(const Matrix& a, const Matrix& b) {
    if (a.cols() == 0) return rank(b);
    if (b.cols() == 0) return rank(a);
    return rank(a.hcat(b));
}

bool columns_contained_in(const Matrix& inner, const Matrix& outer) {
    if (inner.cols() == 0) return true;
    return rank_of_columns(outer, inner) == rank(outer);
}

} // namespace primsplit
