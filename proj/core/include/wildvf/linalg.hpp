#ifndef WILDVF_LINALG_HPP
#define WILDVF_LINALG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wildvf/rational.hpp"

namespace wildvf {

/// Dense exact matrix, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows);
    static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_zero() const noexcept;

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;
    RatVector column(std::size_t j) const;
    void set_column(std::size_t j, const RatVector& v);

    RatMatrix transpose() const;

    RatMatrix& operator+=(const RatMatrix& other);
    RatMatrix& operator-=(const RatMatrix& other);
    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rat& c, RatMatrix a);
    friend RatVector operator*(const RatMatrix& a, const RatVector& v);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// Reduced row-echelon form with the pivot column of each nonzero row.
struct Echelon {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);
Rat determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
bool is_invertible(const RatMatrix& m);

/// Basis of {x : m x = 0}: one vector per free column, with a 1 in that
/// column and 0 in the other free columns.
std::vector<RatVector> nullspace(const RatMatrix& m);

RatMatrix power(const RatMatrix& m, unsigned k);
RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

bool is_zero(const RatVector& v) noexcept;

/// Fixed set of column vectors; answers "is b a combination of them, and
/// with which coefficients" without refactoring per query.
class ColumnSolver {
public:
    explicit ColumnSolver(const RatMatrix& columns);

    bool independent() const noexcept { return rank_ == cols_; }
    std::size_t rank() const noexcept { return rank_; }
    std::optional<RatVector> solve(const RatVector& b) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t rank_ = 0;
    RatMatrix transform_;  // E with E * A = rref(A)
    RatMatrix reduced_;
    std::vector<std::size_t> pivots_;
};

/// Subspace of Q^n kept as a fully reduced row-echelon basis.
class RowSpace {
public:
    explicit RowSpace(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dimension() const noexcept { return rows_.size(); }
    const std::vector<RatVector>& basis() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Returns true when v was outside the span (and is now in it).
    bool insert(const RatVector& v);
    bool contains(const RatVector& v) const;
    RatVector reduce(RatVector v) const;

private:
    std::size_t ambient_;
    std::vector<RatVector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace wildvf

#endif
