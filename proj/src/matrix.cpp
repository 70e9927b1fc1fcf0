#include "lsv/matrix.hpp"

#include <algorithm>

namespace lsv {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (rows[static_cast<std::size_t>(i)].size() !=
            rows[0].size())
            throw DimensionMismatch("ragged rows");
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Rational>>& cols) {
    return from_rows(cols).transposed();
}

Matrix Matrix::transposed() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    Matrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw DimensionMismatch("matrix-vector shape");
    std::vector<Rational> out(static_cast<std::size_t>(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

std::vector<Rational> Matrix::column(int j) const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
}

std::vector<Rational> Matrix::row(int i) const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return out;
}

void Matrix::set_column(int j, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != rows_)
        throw DimensionMismatch("column has wrong length");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[static_cast<std::size_t>(i)];
}

Matrix Matrix::stacked(const Matrix& o) const {
    if (cols_ != o.cols_ && rows_ != 0 && o.rows_ != 0)
        throw DimensionMismatch("stacking matrices of different widths");
    if (rows_ == 0) return o;
    if (o.rows_ == 0) return *this;
    Matrix m(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
    return m;
}

Matrix Matrix::augmented(const Matrix& o) const {
    if (rows_ != o.rows_) throw DimensionMismatch("augmenting matrices of different heights");
    Matrix m(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        }
        Rational inv = m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) /= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int exact_rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // clear denominators row by row; row scaling preserves rank
    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        a[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) {
            mpq_class v = m.at(i, j) * Rational(l);
            a[static_cast<std::size_t>(i)].push_back(v.get_num());
        }
    }
    // Bareiss fraction-free elimination
    int rows = m.rows(), cols = m.cols();
    mpz_class prev(1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        for (int i = rank; i < rows; ++i) {
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(rank)]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class num =
                    a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] *
                        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] *
                        a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
                mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num;
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = 0;
        }
        prev = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> exact_kernel(const Matrix& m) {
    Matrix r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(m.cols()), Rational(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<std::size_t>(pivots[i])] = -r.at(static_cast<int>(i), f);
        basis.push_back(std::move(v));
    }
    // canonical form: reduced echelon basis of the kernel span
    return canonical_span(basis, m.cols());
}

std::optional<std::vector<Rational>> solve(const Matrix& A,
                                           const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != A.rows())
        throw DimensionMismatch("solve: right-hand side length");
    Matrix aug = A.augmented(Matrix::from_columns({b}));
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
    std::vector<Rational> x(static_cast<std::size_t>(A.cols()), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[static_cast<std::size_t>(pivots[i])] = aug.at(static_cast<int>(i), A.cols());
    return x;
}

std::vector<std::vector<Rational>> canonical_span(
    const std::vector<std::vector<Rational>>& vectors, int dim) {
    if (vectors.empty()) return {};
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != dim)
            throw DimensionMismatch("span vector has wrong length");
    }
    Matrix m = Matrix::from_rows(vectors);
    std::vector<int> pivots = rref(m);
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        out.push_back(m.row(static_cast<int>(i)));
    return out;
}

std::vector<std::vector<Rational>> subspace_intersection(
    const std::vector<std::vector<Rational>>& a,
    const std::vector<std::vector<Rational>>& b, int dim) {
    if (a.empty() || b.empty()) return {};
    // solve A x = B y; intersection vectors are A x
    Matrix A = Matrix::from_columns(a);
    Matrix B = Matrix::from_columns(b);
    Matrix negB(B.rows(), B.cols());
    for (int i = 0; i < B.rows(); ++i)
        for (int j = 0; j < B.cols(); ++j) negB.at(i, j) = -B.at(i, j);
    Matrix joint = A.augmented(negB);
    auto ker = exact_kernel(joint);
    std::vector<std::vector<Rational>> vecs;
    for (const auto& k : ker) {
        std::vector<Rational> x(k.begin(), k.begin() + A.cols());
        vecs.push_back(A.apply(x));
    }
    return canonical_span(vecs, dim);
}

std::vector<std::vector<Rational>> greedy_extend(
    const std::vector<std::vector<Rational>>& base,
    const std::vector<std::vector<Rational>>& candidates, int dim) {
    std::vector<std::vector<Rational>> current = base;
    std::vector<std::vector<Rational>> chosen;
    int r = span_dim(current, dim);
    for (const auto& c : candidates) {
        current.push_back(c);
        int r2 = span_dim(current, dim);
        if (r2 > r) {
            chosen.push_back(c);
            r = r2;
        } else {
            current.pop_back();
        }
    }
    return chosen;
}

bool in_span(const std::vector<std::vector<Rational>>& basis,
             const std::vector<Rational>& v, int dim) {
    bool zero = true;
    for (const auto& c : v) {
        if (c != 0) {
            zero = false;
            break;
        }
    }
    if (zero) return true;
    if (basis.empty()) return false;
    auto with = basis;
    with.push_back(v);
    return span_dim(with, dim) == span_dim(basis, dim);
}

int span_dim(const std::vector<std::vector<Rational>>& vectors, int dim) {
    if (vectors.empty()) return 0;
    (void)dim;
    return exact_rank(Matrix::from_rows(vectors));
}

}  // namespace lsv
