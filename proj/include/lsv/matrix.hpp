#pragma once

#include <optional>
#include <vector>

#include "lsv/rational.hpp"

namespace lsv {

// Dense matrix over the rationals. All eliminations are exact; rank is
// computed fraction-free (Bareiss) after clearing row denominators.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix from_columns(const std::vector<std::vector<Rational>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rational& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }
    Rational& at(int i, int j) {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const Matrix& o) const = default;

    Matrix transposed() const;
    Matrix operator*(const Matrix& o) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    std::vector<Rational> column(int j) const;
    std::vector<Rational> row(int i) const;
    void set_column(int j, const std::vector<Rational>& v);

    // Rows of `o` appended below this matrix (column counts must agree).
    Matrix stacked(const Matrix& o) const;
    // Columns of `o` appended to the right (row counts must agree).
    Matrix augmented(const Matrix& o) const;

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

// In-place Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<int> rref(Matrix& m);

// Exact rank by fraction-free elimination on the integer matrix obtained by
// clearing row denominators.
int exact_rank(const Matrix& m);

// Canonical basis of the right kernel: the unique basis whose row matrix is
// in reduced echelon form. Returned as column vectors.
std::vector<std::vector<Rational>> exact_kernel(const Matrix& m);

// One solution of A x = b, if consistent.
std::optional<std::vector<Rational>> solve(const Matrix& A,
                                           const std::vector<Rational>& b);

// ---- subspace helpers (subspaces are given by lists of spanning vectors) --

// Canonical spanning set: reduced echelon basis of the span (rows RREF'd,
// zero rows dropped), returned as vectors.
std::vector<std::vector<Rational>> canonical_span(
    const std::vector<std::vector<Rational>>& vectors, int dim);

// Basis of span(a) ∩ span(b).
std::vector<std::vector<Rational>> subspace_intersection(
    const std::vector<std::vector<Rational>>& a,
    const std::vector<std::vector<Rational>>& b, int dim);

// Extends `base` (assumed independent) by greedily taking vectors from
// `candidates` that grow the span; returns the chosen candidates.
std::vector<std::vector<Rational>> greedy_extend(
    const std::vector<std::vector<Rational>>& base,
    const std::vector<std::vector<Rational>>& candidates, int dim);

bool in_span(const std::vector<std::vector<Rational>>& basis,
             const std::vector<Rational>& v, int dim);

int span_dim(const std::vector<std::vector<Rational>>& vectors, int dim);

}  // namespace lsv
