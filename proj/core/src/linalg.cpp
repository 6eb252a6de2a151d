#include "wildvf/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "wildvf/error.hpp"

namespace wildvf {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
    if (rows.empty()) return {};
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) {
            throw Error(ErrorCode::ShapeMismatch, "row " + std::to_string(i + 1) + " has length " +
                                                      std::to_string(rows[i].size()) + ", expected " +
                                                      std::to_string(m.cols_));
        }
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols, std::size_t rows) {
    RatMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

bool RatMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](const Rat& r) { return sgn(r) == 0; });
}

RatVector RatMatrix::row(std::size_t i) const {
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t j) const {
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void RatMatrix::set_column(std::size_t j, const RatVector& v) {
    if (v.size() != rows_) throw Error(ErrorCode::ShapeMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix sum");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::ShapeMismatch, "matrix difference");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "matrix product");
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rat& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

RatMatrix operator*(const Rat& c, RatMatrix a) {
    for (auto& x : a.data_) x *= c;
    return a;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
    if (a.cols_ != v.size()) throw Error(ErrorCode::ShapeMismatch, "matrix-vector product");
    RatVector out(a.rows_, Rat(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
    return out;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << format_rat((*this)(i, j));
        os << ']';
    }
    os << ']';
    return os.str();
}

Echelon rref(RatMatrix m) {
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Rat inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            const Rat f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank(); }

Rat determinant(const RatMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "determinant of non-square matrix");
    RatMatrix a = m;
    const std::size_t n = a.rows();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(a(i, c)) == 0) continue;
            const Rat f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (!m.is_square()) return std::nullopt;
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = rref(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

bool is_invertible(const RatMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

std::vector<RatVector> nullspace(const RatMatrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(m.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix power(const RatMatrix& m, unsigned k) {
    RatMatrix out = RatMatrix::identity(m.rows());
    for (unsigned i = 0; i < k; ++i) out = out * m;
    return out;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

bool is_zero(const RatVector& v) noexcept {
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return sgn(r) == 0; });
}

// ---------------------------------------------------------------------------

ColumnSolver::ColumnSolver(const RatMatrix& columns) : rows_(columns.rows()), cols_(columns.cols()) {
    RatMatrix aug(rows_, cols_ + rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = columns(i, j);
        aug(i, cols_ + i) = 1;
    }
    Echelon e = rref(std::move(aug));
    for (auto p : e.pivots) {
        if (p >= cols_) break;
        pivots_.push_back(p);
    }
    rank_ = pivots_.size();
    transform_ = RatMatrix(rows_, rows_);
    reduced_ = RatMatrix(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) reduced_(i, j) = e.reduced(i, j);
        for (std::size_t j = 0; j < rows_; ++j) transform_(i, j) = e.reduced(i, cols_ + j);
    }
}

std::optional<RatVector> ColumnSolver::solve(const RatVector& b) const {
    if (b.size() != rows_) throw Error(ErrorCode::ShapeMismatch, "right-hand side length");
    RatVector y = transform_ * b;
    for (std::size_t i = rank_; i < rows_; ++i)
        if (sgn(y[i]) != 0) return std::nullopt;
    RatVector x(cols_, Rat(0));
    for (std::size_t r = 0; r < rank_; ++r) x[pivots_[r]] = y[r];
    return x;
}

// ---------------------------------------------------------------------------

RatVector RowSpace::reduce(RatVector v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat f = v[pivots_[r]];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (sgn(rows_[r][j]) != 0) v[j] -= f * rows_[r][j];
    }
    return v;
}

bool RowSpace::contains(const RatVector& v) const { return is_zero(reduce(v)); }

bool RowSpace::insert(const RatVector& v) {
    if (v.size() != ambient_) throw Error(ErrorCode::ShapeMismatch, "vector length vs ambient dimension");
    RatVector w = reduce(v);
    auto lead = std::find_if(w.begin(), w.end(), [](const Rat& r) { return sgn(r) != 0; });
    if (lead == w.end()) return false;
    const std::size_t p = static_cast<std::size_t>(lead - w.begin());
    const Rat inv = 1 / w[p];
    for (auto& x : w) x *= inv;
    for (auto& row : rows_) {
        const Rat f = row[p];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) row[j] -= f * w[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(w));
    return true;
}

}  // namespace wildvf
