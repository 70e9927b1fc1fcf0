#include "lsv/quadrics.hpp"

namespace lsv {

std::vector<Rational> FundamentalForm::eval(
    const std::vector<Rational>& v) const {
    std::vector<Rational> out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.eval(v));
    return out;
}

void QuadricSystem::check_well_formed() const {
    if (n < 1) throw Error("quadric system needs a positive dimension");
    for (const auto& Q : quadrics) {
        if (Q.rows() != n || Q.cols() != n)
            throw DimensionMismatch("quadric has wrong shape");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (Q.at(i, j) != Q.at(j, i))
                    throw Error("quadric matrix is not symmetric");
    }
}

Polynomial quadric_to_poly(const Matrix& Q) {
    int n = Q.rows();
    Polynomial p(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Rational c = i == j ? Q.at(i, i) : Q.at(i, j) * 2;
            if (c == 0) continue;
            MultiIndex m(static_cast<std::size_t>(n));
            m[i] += 1;
            m[j] += 1;
            p.add_term(m, c);
        }
    }
    return p;
}

Matrix poly_to_quadric(const Polynomial& q) {
    int n = q.nvars();
    Matrix Q(n, n);
    for (const auto& [m, c] : q.terms()) {
        if (m.degree() != 2) throw Error("polynomial is not a quadratic form");
        int i = -1, j = -1;
        for (int v = 0; v < n; ++v) {
            if (m[v] == 2) i = j = v;
            if (m[v] == 1) (i < 0 ? i : j) = v;
        }
        if (i == j) {
            Q.at(i, i) = c;
        } else {
            Q.at(i, j) = c / 2;
            Q.at(j, i) = c / 2;
        }
    }
    return Q;
}

Rational quadric_pair(const Matrix& Q, const std::vector<Rational>& v,
                      const std::vector<Rational>& w) {
    auto Qw = Q.apply(w);
    Rational s(0);
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * Qw[i];
    return s;
}

FundamentalForm fundamental_form(const GraphJet& jet, int degree) {
    jet.check_well_formed();
    if (degree < 2 || degree > jet.order)
        throw Error("form degree must lie between 2 and the jet order");
    FundamentalForm F;
    F.degree = degree;
    F.n = jet.n;
    F.a = jet.a;
    for (const auto& f : jet.coeffs)
        F.components.push_back(f.homogeneous_part(degree));
    return F;
}

QuadricSystem second_fundamental_system(const GraphJet& jet) {
    FundamentalForm F = fundamental_form(jet, 2);
    QuadricSystem S;
    S.n = jet.n;
    for (const auto& c : F.components) S.quadrics.push_back(poly_to_quadric(c));
    return S;
}

std::vector<std::vector<Rational>> singular_locus(const QuadricSystem& S) {
    S.check_well_formed();
    Matrix stacked(0, S.n);
    for (const auto& Q : S.quadrics) stacked = stacked.stacked(Q);
    if (stacked.rows() == 0) {
        // empty system: everything is singular
        auto id = Matrix::identity(S.n);
        std::vector<std::vector<Rational>> all;
        for (int j = 0; j < S.n; ++j) all.push_back(id.column(j));
        return all;
    }
    return exact_kernel(stacked);
}

bool base_locus_contains(const QuadricSystem& S,
                         const std::vector<std::vector<Rational>>& W) {
    S.check_well_formed();
    for (const auto& Q : S.quadrics) {
        for (std::size_t i = 0; i < W.size(); ++i)
            for (std::size_t j = i; j < W.size(); ++j)
                if (quadric_pair(Q, W[i], W[j]) != 0) return false;
    }
    return true;
}

std::vector<Polynomial> prolongation(const QuadricSystem& S) {
    S.check_well_formed();
    int n = S.n;
    int s = S.size();
    auto cubics = monomials_of_degree(n, 3);
    auto squares = monomials_of_degree(n, 2);
    int nc = static_cast<int>(cubics.size());
    // columns: cubic coefficients, then one mixing coefficient per
    // (variable, quadric) pair; rows: (variable, degree-2 monomial)
    Matrix M(n * static_cast<int>(squares.size()), nc + n * s);
    std::vector<Polynomial> qpolys;
    for (const auto& Q : S.quadrics) qpolys.push_back(quadric_to_poly(Q));

    for (int v = 0; v < n; ++v) {
        for (std::size_t b = 0; b < squares.size(); ++b) {
            int row = v * static_cast<int>(squares.size()) + static_cast<int>(b);
            const MultiIndex& beta = squares[b];
            // d/dx_v of x^(beta + e_v) contributes (beta_v + 1) x^beta
            MultiIndex gamma = beta.with_one(static_cast<std::size_t>(v));
            auto it = std::lower_bound(cubics.begin(), cubics.end(), gamma);
            int ci = static_cast<int>(it - cubics.begin());
            M.at(row, ci) = Rational(beta[static_cast<std::size_t>(v)] + 1);
            for (int l = 0; l < s; ++l)
                M.at(row, nc + v * s + l) =
                    -qpolys[static_cast<std::size_t>(l)].coeff(beta);
        }
    }

    auto kernel = exact_kernel(M);
    std::vector<std::vector<Rational>> cvecs;
    for (const auto& k : kernel)
        cvecs.emplace_back(k.begin(), k.begin() + nc);
    auto basis = canonical_span(cvecs, nc);

    std::vector<Polynomial> out;
    for (const auto& vec : basis) {
        Polynomial p(n);
        for (int i = 0; i < nc; ++i)
            if (vec[static_cast<std::size_t>(i)] != 0)
                p.add_term(cubics[static_cast<std::size_t>(i)],
                           vec[static_cast<std::size_t>(i)]);
        out.push_back(std::move(p));
    }
    return out;
}

PencilClassification classify_pencil_with_hyperplane_base(
    const QuadricSystem& S, const std::vector<std::vector<Rational>>& H) {
    S.check_well_formed();
    if (S.size() != 2)
        throw Error("pencil classification expects exactly two quadrics");
    int n = S.n;
    if (static_cast<int>(H.size()) != n - 1 || span_dim(H, n) != n - 1)
        throw DimensionMismatch("hyperplane needs n-1 independent spanning vectors");

    // the linear form cutting out H
    Matrix Hrows = Matrix::from_rows(H);
    auto ker = exact_kernel(Hrows);
    if (ker.size() != 1) throw Error("hyperplane form is not unique");
    std::vector<Rational> ell = ker[0];

    PencilClassification out;
    out.hyperplane_form = ell;

    // divide each quadric by ell: Q = sym(ell ⊗ lambda)
    for (const auto& Q : S.quadrics) {
        // unknown lambda: (ell_i lambda_j + ell_j lambda_i)/2 = Q_ij
        auto squares = monomials_of_degree(n, 2);
        Matrix A(static_cast<int>(squares.size()), n);
        std::vector<Rational> rhs;
        for (std::size_t r = 0; r < squares.size(); ++r) {
            const MultiIndex& m = squares[r];
            int i = -1, j = -1;
            for (int v = 0; v < n; ++v) {
                if (m[v] == 2) i = j = v;
                if (m[v] == 1) (i < 0 ? i : j) = v;
            }
            if (i == j) {
                A.at(static_cast<int>(r), i) = ell[static_cast<std::size_t>(i)];
                rhs.push_back(Q.at(i, i));
            } else {
                A.at(static_cast<int>(r), j) = ell[static_cast<std::size_t>(i)];
                A.at(static_cast<int>(r), i) = ell[static_cast<std::size_t>(j)];
                rhs.push_back(Q.at(i, j) * 2);
            }
        }
        auto lambda = solve(A, rhs);
        if (!lambda)
            throw NotAPencilOnHyperplane(
                "a quadric of the system does not vanish on the hyperplane");
        out.lambdas.push_back(*lambda);
    }

    int dim_lambda = span_dim(out.lambdas, n);
    if (dim_lambda == 0) {
        out.case_label = 0;
        return out;
    }
    bool ell_inside = in_span(canonical_span(out.lambdas, n), ell, n);
    if (dim_lambda == 2)
        out.case_label = ell_inside ? 1 : 3;
    else
        out.case_label = ell_inside ? 4 : 2;
    return out;
}

SinglocBoundReport lemma_singloc_check(
    const QuadricSystem& S, const std::vector<std::vector<Rational>>& W) {
    S.check_well_formed();
    int n = S.n;
    int k = span_dim(W, n);
    if (k != static_cast<int>(W.size()))
        throw Error("W must be given by independent vectors");
    if (!base_locus_contains(S, W))
        throw Error("W is not in the base locus of the system");
    int a = S.size();

    SinglocBoundReport rep;
    rep.per_quadric_bound_ok = true;
    for (const auto& Q : S.quadrics) {
        auto kerq = exact_kernel(Q);
        int d = static_cast<int>(subspace_intersection(kerq, W, n).size());
        rep.per_quadric_w_singloc_dims.push_back(d);
        if (d < 2 * k - n) rep.per_quadric_bound_ok = false;
    }
    auto common = singular_locus(S);
    rep.common_singloc_dim = static_cast<int>(common.size());
    rep.common_w_singloc_dim =
        static_cast<int>(subspace_intersection(common, W, n).size());
    rep.hypothesis_holds = a * (n - k) < k;
    rep.conclusion_ok = !rep.hypothesis_holds || rep.common_w_singloc_dim >= 1;
    return rep;
}

}  // namespace lsv
