#pragma once

#include <vector>

#include "lsv/graph_jet.hpp"

namespace lsv {

// Normal-space-valued homogeneous form of one degree, extracted from a jet.
struct FundamentalForm {
    int degree = 0;
    int n = 0;
    int a = 0;
    std::vector<Polynomial> components;  // a homogeneous polynomials in n vars

    // value on the diagonal: (F(v,..,v)) per normal direction
    std::vector<Rational> eval(const std::vector<Rational>& v) const;
};

// System of quadratic forms as symmetric matrices; v^T Q v recovers the
// quadratic polynomial.
struct QuadricSystem {
    int n = 0;
    std::vector<Matrix> quadrics;

    int size() const { return static_cast<int>(quadrics.size()); }
    void check_well_formed() const;
};

Polynomial quadric_to_poly(const Matrix& Q);
Matrix poly_to_quadric(const Polynomial& q);

// pairing v^T Q w
Rational quadric_pair(const Matrix& Q, const std::vector<Rational>& v,
                      const std::vector<Rational>& w);

FundamentalForm fundamental_form(const GraphJet& jet, int degree);

// Degree-2 coefficients as symmetric matrices: diagonal entries are the
// x_i^2 coefficients, off-diagonal entries half the x_i x_j coefficient.
QuadricSystem second_fundamental_system(const GraphJet& jet);

// Common kernel of all quadrics (canonical basis).
std::vector<std::vector<Rational>> singular_locus(const QuadricSystem& S);

// True when the span of the given vectors is in the base locus:
// w^T Q w' = 0 for all quadrics and all pairs of spanning vectors.
bool base_locus_contains(const QuadricSystem& S,
                         const std::vector<std::vector<Rational>>& W);

// Cubics all of whose first partials lie in the span of the system.
// Returned as a canonical basis of cubic polynomials.
std::vector<Polynomial> prolongation(const QuadricSystem& S);

// Classification of a two-quadric system vanishing on a hyperplane H with
// equation l = 0. Writing each quadric as l * lambda_i, the label depends
// only on the span of {lambda_1, lambda_2} and whether l lies in it:
//   1: dim span = 2, l inside    (model {x1*xn, xn^2})
//   2: dim span = 1, l outside   (model {x1*xn, 0}; no such system occurs
//      on a variety not contained in a hyperplane)
//   3: dim span = 2, l outside   (model {x1*xn, x2*xn})
//   4: dim span = 1, l inside    (model {xn^2, 0})
//   0: both quadrics zero
struct PencilClassification {
    int case_label = 0;
    std::vector<Rational> hyperplane_form;
    std::vector<std::vector<Rational>> lambdas;
};

PencilClassification classify_pencil_with_hyperplane_base(
    const QuadricSystem& S, const std::vector<std::vector<Rational>>& H);

// Dimension bookkeeping for a system whose quadrics contain a k-plane W in
// their base locus: each quadric kills a subspace of W of dimension at
// least 2k-n, and when a*(n-k) < k the whole system has a nonzero common
// singular vector inside W.
struct SinglocBoundReport {
    std::vector<int> per_quadric_w_singloc_dims;
    int common_w_singloc_dim = 0;
    int common_singloc_dim = 0;
    bool per_quadric_bound_ok = false;
    bool hypothesis_holds = false;  // a*(n-k) < k
    bool conclusion_ok = false;     // hypothesis implies common dim >= 1
};

SinglocBoundReport lemma_singloc_check(
    const QuadricSystem& S, const std::vector<std::vector<Rational>>& W);

}  // namespace lsv
