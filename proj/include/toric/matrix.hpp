#pragma once

#include <optional>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

// Dense row-major matrices over Q and Z. All algorithms below are exact;
// nothing here ever touches floating point.

class QMat {
  public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    QVec row(int i) const;
    void set_row(int i, const QVec& v);

    static QMat from_rows(const std::vector<QVec>& rows, int cols);
    static QMat from_int_rows(const std::vector<IVec>& rows, int cols);

    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

class ZMat {
  public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    IVec row(int i) const;
    IVec col(int j) const;

    static ZMat from_rows(const std::vector<IVec>& rows, int cols);

    // Matrix-vector product A * x.
    IVec apply(const IVec& x) const;

    bool operator==(const ZMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

QMat matmul(const QMat& a, const QMat& b);

// Reduced row echelon form, in place semantics by value. Deterministic:
// for each column in order, the first row with a nonzero entry below the
// current pivot row becomes the pivot row. Pivot columns are reported in
// increasing order.
QMat rref(QMat m, std::vector<int>* pivot_cols = nullptr);

int rank(const QMat& m);

// Rank by fraction-free (Bareiss) elimination, pivoting on the smallest
// nonzero |entry| of the remaining submatrix.
int rank_fraction_free(ZMat m);

// Canonical basis (as rows) of the right kernel {x : M x = 0} over Q.
// The returned rows are in reduced row echelon form.
std::vector<QVec> q_kernel_basis(const QMat& m);

// Row-style Hermite normal form of the lattice spanned by the rows:
// zero rows dropped, pivots positive, entries above each pivot reduced
// into [0, pivot). Canonical for the row lattice.
std::vector<IVec> hnf_rows(std::vector<IVec> rows, int cols);

// Canonical lattice basis (as rows) of {x in Z^cols : M x = 0}. The
// result spans the full (saturated) integer kernel, not merely a finite
// index sublattice of it.
std::vector<IVec> z_kernel_basis(const ZMat& m);

// Solves A x = b for square A; std::nullopt when A is singular.
std::optional<QVec> solve_square(const QMat& a, const QVec& b);

// Least structured solve: returns some x with A x = b if the system is
// consistent, requiring the columns of A to be linearly independent.
std::optional<QVec> solve_independent_columns(const QMat& a, const QVec& b);

}  // namespace toric
