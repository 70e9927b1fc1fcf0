#include "lsv/graph_jet.hpp"

#include <algorithm>

namespace lsv {

void GraphJet::check_well_formed() const {
    if (n < 1 || a < 1) throw Error("graph jet needs positive dimensions");
    if (order < 2) throw Error("graph jet order must be at least 2");
    if (static_cast<int>(coeffs.size()) != a)
        throw DimensionMismatch("graph jet needs one coefficient polynomial per normal direction");
    for (const auto& f : coeffs) {
        if (f.nvars() != n)
            throw DimensionMismatch("graph jet coefficients live in the tangent variables");
        for (const auto& [m, c] : f.terms()) {
            int d = m.degree();
            if (d < 2 || d > order)
                throw Error("graph jet coefficients must have degrees between 2 and the order");
        }
    }
}

Matrix GraphChart::frame() const {
    int amb = ambient_dim();
    Matrix F(amb, jet.n + jet.a);
    for (int i = 0; i < amb; ++i)
        for (int j = 0; j < jet.n; ++j) F.at(i, j) = tangent_basis.at(i, j);
    for (int mu = 0; mu < jet.a; ++mu)
        F.at(normal_positions[static_cast<std::size_t>(mu)], jet.n + mu) = 1;
    return F;
}

std::vector<Rational> GraphChart::to_ambient(const std::vector<Rational>& u,
                                             const std::vector<Rational>& w) const {
    std::vector<Rational> uw = u;
    uw.insert(uw.end(), w.begin(), w.end());
    auto x = frame().apply(uw);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += base_point[i];
    return x;
}

GraphChart implicit_to_graph(const Variety& V, const std::vector<Rational>& p,
                             int order) {
    if (order < 2) throw Error("jet order must be at least 2");
    SmoothPointInfo info = validate_smooth_point(V, p);
    int n = V.expected_dim;
    int a = V.codim();
    int gens = static_cast<int>(V.generators.size());

    // tangent coordinates: canonical echelon basis of the Jacobian kernel
    auto kernel = exact_kernel(info.jacobian);
    Matrix K = Matrix::from_columns(kernel);

    GraphChart chart;
    chart.base_point = p;
    chart.tangent_basis = K;
    chart.normal_positions = info.normal_positions;

    // substitution x_i = p_i + (K u)_i + (w_mu if i is the mu-th normal
    // position); the normal slots receive the partially solved series
    std::vector<int> normal_slot(static_cast<std::size_t>(V.ambient_dim), -1);
    for (int mu = 0; mu < a; ++mu)
        normal_slot[static_cast<std::size_t>(info.normal_positions[static_cast<std::size_t>(mu)])] = mu;

    // linear block in the normal coordinates: rows generators, cols normals
    Matrix Jw(gens, a);
    for (int g = 0; g < gens; ++g)
        for (int mu = 0; mu < a; ++mu)
            Jw.at(g, mu) = info.jacobian.at(g, info.normal_positions[static_cast<std::size_t>(mu)]);

    std::vector<Polynomial> series(static_cast<std::size_t>(a), Polynomial(n));
    for (int d = 2; d <= order; ++d) {
        // residuals of the generators with the current series, to degree d
        std::vector<Polynomial> subs;
        subs.reserve(static_cast<std::size_t>(V.ambient_dim));
        for (int i = 0; i < V.ambient_dim; ++i) {
            Polynomial s(n);
            if (p[static_cast<std::size_t>(i)] != 0)
                s += Polynomial::constant(n, p[static_cast<std::size_t>(i)]);
            for (int j = 0; j < n; ++j) {
                if (K.at(i, j) != 0) s += Polynomial::variable(n, j) * K.at(i, j);
            }
            if (normal_slot[static_cast<std::size_t>(i)] >= 0)
                s += series[static_cast<std::size_t>(normal_slot[static_cast<std::size_t>(i)])];
            subs.push_back(std::move(s));
        }
        // degree-d corrections: Jw * g_d(alpha) = -residual_d(alpha)
        auto mons = monomials_of_degree(n, d);
        std::vector<Polynomial> residual;
        residual.reserve(V.generators.size());
        for (const auto& g : V.generators)
            residual.push_back(g.substituted(subs, d).homogeneous_part(d));
        for (const auto& alpha : mons) {
            std::vector<Rational> rhs;
            rhs.reserve(V.generators.size());
            bool all_zero = true;
            for (const auto& r : residual) {
                Rational c = -r.coeff(alpha);
                if (c != 0) all_zero = false;
                rhs.push_back(std::move(c));
            }
            if (all_zero) continue;
            auto sol = solve(Jw, rhs);
            if (!sol)
                throw SingularOrExcessCodim(
                    "truncated graph system is inconsistent; the variety is thinner than declared");
            for (int mu = 0; mu < a; ++mu) {
                if ((*sol)[static_cast<std::size_t>(mu)] != 0)
                    series[static_cast<std::size_t>(mu)].add_term(
                        alpha, (*sol)[static_cast<std::size_t>(mu)]);
            }
        }
    }

    chart.jet.n = n;
    chart.jet.a = a;
    chart.jet.order = order;
    chart.jet.coeffs = std::move(series);
    chart.jet.check_well_formed();
    return chart;
}

GraphJet project_to_hypersurface(const GraphJet& jet, int mu) {
    jet.check_well_formed();
    if (mu < 0 || mu >= jet.a) throw Error("normal index out of range");
    GraphJet out;
    out.n = jet.n;
    out.a = 1;
    out.order = jet.order;
    out.coeffs = {jet.coeffs[static_cast<std::size_t>(mu)]};
    return out;
}

Matrix tangent_directions(const GraphChart& chart, const LinearSpace& L) {
    L.check_well_formed();
    if (L.ambient_dim() != chart.ambient_dim())
        throw DimensionMismatch("space lives in a different ambient space than the chart");
    Matrix F = chart.frame();
    // base point of the chart must lie on L
    std::vector<Rational> diff = chart.base_point;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= L.base_point[i];
    if (!solve(L.directions, diff))
        throw NotOsculatingOrder1("the chart base point does not lie on the space");
    Matrix out(chart.jet.n, L.dim());
    for (int c = 0; c < L.dim(); ++c) {
        auto sol = solve(F, L.directions.column(c));
        if (!sol) throw Error("chart frame failed to express an ambient direction");
        for (int mu = 0; mu < chart.jet.a; ++mu) {
            if ((*sol)[static_cast<std::size_t>(chart.jet.n + mu)] != 0)
                throw NotOsculatingOrder1("the space is not tangent to the variety at the base point");
        }
        for (int i = 0; i < chart.jet.n; ++i)
            out.at(i, c) = (*sol)[static_cast<std::size_t>(i)];
    }
    if (exact_rank(out) != out.cols())
        throw Error("tangent directions became dependent in the chart");
    return out;
}

LinearSpace ambient_space_from_tangent(
    const GraphChart& chart,
    const std::vector<std::vector<Rational>>& tangent_vectors) {
    LinearSpace out;
    out.base_point = chart.base_point;
    Matrix cols(chart.ambient_dim(), static_cast<int>(tangent_vectors.size()));
    for (std::size_t c = 0; c < tangent_vectors.size(); ++c) {
        if (static_cast<int>(tangent_vectors[c].size()) != chart.jet.n)
            throw DimensionMismatch("tangent vector has wrong length");
        auto amb = chart.tangent_basis.apply(tangent_vectors[c]);
        for (int i = 0; i < chart.ambient_dim(); ++i)
            cols.at(i, static_cast<int>(c)) = amb[static_cast<std::size_t>(i)];
    }
    out.directions = cols;
    return out;
}

}  // namespace lsv
