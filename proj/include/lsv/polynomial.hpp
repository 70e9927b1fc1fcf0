#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsv/multi_index.hpp"
#include "lsv/rational.hpp"

namespace lsv {

class Matrix;

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in the canonical monomial order and never store a zero
// coefficient, so equality of representations is equality of polynomials.
class Polynomial {
  public:
    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial variable(int nvars, int i);   // x_i, 0-based
    static Polynomial monomial(const MultiIndex& m, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    const std::map<MultiIndex, Rational>& terms() const { return terms_; }

    Rational coeff(const MultiIndex& m) const;
    void set_coeff(const MultiIndex& m, const Rational& c);
    void add_term(const MultiIndex& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    bool operator==(const Polynomial& o) const = default;

    Rational eval(const std::vector<Rational>& point) const;

    // Sum of the terms of total degree exactly d.
    Polynomial homogeneous_part(int d) const;
    bool is_homogeneous() const;

    // Drop all terms of total degree > maxdeg.
    Polynomial truncated(int maxdeg) const;

    Polynomial derivative(int var) const;

    // p(s_0(u), ..., s_{n-1}(u)); every s_i must share a variable count.
    // A non-negative truncation bound drops intermediate terms above it,
    // which is exact whenever only the truncated result is consumed.
    Polynomial substituted(const std::vector<Polynomial>& subs,
                           int truncate_deg = -1) const;

    // Gradient evaluated at a point.
    std::vector<Rational> gradient_at(const std::vector<Rational>& p) const;

    // Canonical human-readable form, parseable by parse_poly.
    std::string to_string() const;

  private:
    int nvars_;
    std::map<MultiIndex, Rational> terms_;
};

// q(t) = p(A t + b) where A has p.nvars() rows and b has p.nvars() entries;
// the result lives in as many variables as A has columns.
Polynomial compose_affine(const Polynomial& p, const Matrix& A,
                          const std::vector<Rational>& b);

// Restriction to a linear subspace: p composed with the linear map whose
// matrix columns are the given directions (b = 0).
Polynomial restrict_linear(const Polynomial& p, const Matrix& directions);

}  // namespace lsv
