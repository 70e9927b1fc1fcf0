#include "lsv/osculation.hpp"

#include <algorithm>

#include "lsv/graph_jet.hpp"

namespace lsv {

OsculationReport osculation_order(const GraphJet& jet, const Matrix& dirs,
                                  int max_order) {
    if (dirs.rows() != jet.n)
        throw DimensionMismatch("direction rows must match the tangent dimension");
    if (max_order < 2) throw Error("osculation is only measured from order 2");
    if (max_order > jet.order)
        throw Error("jet order " + std::to_string(jet.order) +
                    " is too small to check order " + std::to_string(max_order));

    std::vector<Polynomial> restrictions;
    restrictions.reserve(jet.coeffs.size());
    for (const Polynomial& f : jet.coeffs)
        restrictions.push_back(restrict_linear(f, dirs));

    OsculationReport rep;
    rep.max_order_checked = max_order;
    for (int d = 2; d <= max_order; ++d) {
        for (int mu = 0; mu < jet.a; ++mu) {
            Polynomial h = restrictions[mu].homogeneous_part(d);
            if (h.is_zero()) continue;
            rep.at_least_max = false;
            rep.order_found = d - 1;
            rep.first_obstruction =
                Obstruction{d, mu, h.terms().begin()->first};
            return rep;
        }
    }
    rep.at_least_max = true;
    rep.order_found = max_order;
    return rep;
}

int generic_threshold_block(int n, int k, int a, int w) {
    if (n < 2 || k < 1 || k > n - 1 || a < 1)
        throw Error("threshold requires n >= 2, 1 <= k <= n-1, a >= 1");
    if (w < 1 || w > k)
        throw Error("block dimension must satisfy 1 <= w <= k");
    long rhs = static_cast<long>(w) * (n - k);
    for (int m = 2;; ++m) {
        long lhs = static_cast<long>(a) * (count_monomials(w + 1, m) - (w + 1));
        if (lhs > rhs) return m;
    }
}

int generic_threshold(int n, int k, int a) {
    return generic_threshold_block(n, k, a, std::min(k, n - k));
}

AdaptedSplit adapt_to_linear_space(const GraphJet& jet, const Matrix& dirs) {
    jet.check_well_formed();
    const int n = jet.n;
    const int k = dirs.cols();
    if (dirs.rows() != n)
        throw DimensionMismatch("direction rows must match the tangent dimension");
    if (k < 1 || k > n)
        throw DimensionMismatch("need between 1 and n tangent directions");

    std::vector<std::vector<Rational>> cols;
    cols.reserve(k);
    for (int j = 0; j < k; ++j) cols.push_back(dirs.column(j));
    std::vector<std::vector<Rational>> tl = canonical_span(cols, n);
    if (static_cast<int>(tl.size()) != k)
        throw DimensionMismatch("tangent directions are linearly dependent");

    QuadricSystem ii = second_fundamental_system(jet);
    std::vector<std::vector<Rational>> sing = singular_locus(ii);
    std::vector<std::vector<Rational>> psi = subspace_intersection(sing, tl, n);
    std::vector<std::vector<Rational>> xi = greedy_extend(psi, tl, n);

    std::vector<std::vector<Rational>> full = xi;
    full.insert(full.end(), psi.begin(), psi.end());
    std::vector<std::vector<Rational>> units;
    units.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = 1;
        units.push_back(std::move(e));
    }
    std::vector<std::vector<Rational>> rho = greedy_extend(full, units, n);

    AdaptedSplit split;
    split.xi_dim = static_cast<int>(xi.size());
    split.psi_dim = static_cast<int>(psi.size());
    split.rho_dim = static_cast<int>(rho.size());
    if (split.xi_dim + split.psi_dim != k || split.k() + split.rho_dim != n)
        throw Error("adapted split does not fill the tangent space");

    std::vector<std::vector<Rational>> basis = xi;
    basis.insert(basis.end(), psi.begin(), psi.end());
    basis.insert(basis.end(), rho.begin(), rho.end());
    split.tangent_change = Matrix::from_columns(basis);

    split.jet.n = n;
    split.jet.a = jet.a;
    split.jet.order = jet.order;
    split.jet.coeffs.reserve(jet.coeffs.size());
    for (const Polynomial& f : jet.coeffs)
        split.jet.coeffs.push_back(restrict_linear(f, split.tangent_change));
    return split;
}

namespace {

// Pure-L monomials (supported on the first k coordinates) of degree 2..j
// must be absent from every jet coefficient.
void require_block_osculation(const GraphJet& jet, int k, int j) {
    for (int mu = 0; mu < jet.a; ++mu) {
        for (const auto& [m, c] : jet.coeffs[mu].terms()) {
            if (m.degree() > j) continue;
            bool pure = true;
            for (int i = k; i < jet.n; ++i)
                if (m[static_cast<std::size_t>(i)] != 0) { pure = false; break; }
            if (pure)
                throw Error("the space does not osculate to order " +
                            std::to_string(j) + ": normal component " +
                            std::to_string(mu) + " keeps a pure tangent term "
                            "of degree " + std::to_string(m.degree()));
        }
    }
}

}  // namespace

Matrix build_R_map(const AdaptedSplit& split, int j) {
    const GraphJet& jet = split.jet;
    const int w = split.xi_dim;
    const int s = split.rho_dim;
    const int k = split.k();
    if (j < 2) throw Error("coefficient slices start at degree 2");
    if (j > jet.order)
        throw Error("jet order " + std::to_string(jet.order) +
                    " has no degree-" + std::to_string(j) + " slice");
    require_block_osculation(jet, k, j);

    std::vector<MultiIndex> alphas = monomials_of_degree(w, j);
    Matrix m(jet.a * static_cast<int>(alphas.size()), w * s);
    for (int mu = 0; mu < jet.a; ++mu) {
        for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
            const MultiIndex& alpha = alphas[ai];
            int row = mu * static_cast<int>(alphas.size()) + static_cast<int>(ai);
            for (int xi = 0; xi < w; ++xi) {
                int mult = alpha[static_cast<std::size_t>(xi)];
                if (mult == 0) continue;
                MultiIndex probe(static_cast<std::size_t>(jet.n));
                for (int i = 0; i < w; ++i)
                    probe[static_cast<std::size_t>(i)] =
                        alpha[static_cast<std::size_t>(i)];
                probe[static_cast<std::size_t>(xi)] -= 1;
                for (int rho = 0; rho < s; ++rho) {
                    probe[static_cast<std::size_t>(k + rho)] += 1;
                    Rational c = jet.coeffs[mu].coeff(probe);
                    probe[static_cast<std::size_t>(k + rho)] -= 1;
                    if (c != 0) m.at(row, xi * s + rho) = Rational(mult) * c;
                }
            }
        }
    }
    return m;
}

GenericityReport genericity_check(const AdaptedSplit& split, int m) {
    const GraphJet& jet = split.jet;
    GenericityReport rep;
    rep.max_order = m;
    rep.w_dim = split.xi_dim;
    rep.m_dim = split.rho_dim;
    rep.psi_dim = split.psi_dim;
    rep.target_dim = split.xi_dim * split.rho_dim;
    rep.forced_fiber_dim = std::max(2 * split.k() - jet.n, 0);
    rep.threshold_m =
        (split.k() >= 1 && split.k() <= jet.n - 1)
            ? generic_threshold(jet.n, split.k(), jet.a)
            : 0;
    if (m < 2) throw Error("rank accumulation starts at order 2");

    if (rep.target_dim == 0) {
        rep.new_rank_per_order.assign(static_cast<std::size_t>(m - 1), 0);
        rep.cumulative_rank = 0;
        rep.full = true;
        return rep;
    }

    Matrix stack(0, rep.w_dim * rep.m_dim);
    int prev = 0;
    for (int j = 2; j <= m; ++j) {
        stack = stack.stacked(build_R_map(split, j));
        int r = exact_rank(stack);
        rep.new_rank_per_order.push_back(r - prev);
        prev = r;
    }
    rep.cumulative_rank = prev;
    rep.full = (rep.cumulative_rank == rep.target_dim);
    return rep;
}

GaussFiberReport gauss_fiber_in_L(const GraphChart& chart,
                                  const LinearSpace& L, const Variety* V) {
    const int n = chart.jet.n;
    Matrix dirs = tangent_directions(chart, L);
    std::vector<std::vector<Rational>> tl;
    tl.reserve(dirs.cols());
    for (int j = 0; j < dirs.cols(); ++j) tl.push_back(dirs.column(j));

    QuadricSystem ii = second_fundamental_system(chart.jet);
    if (!base_locus_contains(ii, tl))
        throw NotOsculatingOrder2(
            "the tangent space of L is not in the base locus of the "
            "second-order coefficients");

    GaussFiberReport rep;
    rep.fiber = subspace_intersection(singular_locus(ii), tl, n);
    rep.dim = static_cast<int>(rep.fiber.size());
    rep.lower_bound = std::max(2 * dirs.cols() - n, 0);
    if (V != nullptr && !rep.fiber.empty()) {
        LinearSpace span = ambient_space_from_tangent(chart, rep.fiber);
        rep.contained = contains_linear_space(*V, span);
    }
    return rep;
}

Matrix assemble_wedge_cubic_map(const QuadricSystem& R) {
    const int w = R.n;
    if (R.size() != w)
        throw DimensionMismatch(
            "need exactly one quadric per coordinate of the block");
    R.check_well_formed();

    const int pairs = w * (w - 1) / 2;
    auto pair_col = [w](int p, int q) {  // p < q
        return p * w - p * (p + 1) / 2 + (q - p - 1);
    };

    std::vector<MultiIndex> gammas = monomials_of_degree(w, 3);
    Matrix m(static_cast<int>(gammas.size()), pairs);
    for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
        const MultiIndex& gamma = gammas[gi];
        for (int u = 0; u < w; ++u) {
            int mult = gamma[static_cast<std::size_t>(u)];
            if (mult == 0) continue;
            MultiIndex rest = gamma.without_one(static_cast<std::size_t>(u));
            int p = -1, q = -1;
            for (int v = 0; v < w; ++v) {
                for (int rep = 0; rep < rest[static_cast<std::size_t>(v)]; ++rep)
                    (p < 0 ? p : q) = v;
            }
            for (int eta = 0; eta < w; ++eta) {
                if (eta == u) continue;
                Rational c = R.quadrics[static_cast<std::size_t>(eta)].at(p, q);
                if (c == 0) continue;
                c *= mult;
                if (eta < u)
                    m.at(static_cast<int>(gi), pair_col(eta, u)) += c;
                else
                    m.at(static_cast<int>(gi), pair_col(u, eta)) -= c;
            }
        }
    }
    return m;
}

WedgeCubicReport wedge_cubic_surjectivity(const QuadricSystem& R) {
    WedgeCubicReport rep;
    rep.w = R.n;
    rep.target = R.n * (R.n - 1) / 2;

    std::vector<std::vector<Rational>> flat;
    flat.reserve(R.quadrics.size());
    for (const Matrix& q : R.quadrics) {
        std::vector<Rational> v;
        v.reserve(static_cast<std::size_t>(R.n) * R.n);
        for (int i = 0; i < R.n; ++i)
            for (int j = i; j < R.n; ++j) v.push_back(q.at(i, j));
        flat.push_back(std::move(v));
    }
    rep.system_span_dim = flat.empty()
                              ? 0
                              : span_dim(flat, R.n * (R.n + 1) / 2);
    rep.zero_system = (rep.system_span_dim == 0);

    if (R.n <= 1) {
        rep.vacuous = true;
        rep.rank = 0;
        rep.surjective = true;
        return rep;
    }
    rep.rank = exact_rank(assemble_wedge_cubic_map(R));
    rep.surjective = (rep.rank == rep.target);
    return rep;
}

namespace {

// Fully symmetric coefficient of the cubic part on three basis slots:
// monomial coefficient divided by the number of orderings of the slots.
Rational polarized_cubic_coeff(const Polynomial& cubic, int a, int b, int c) {
    MultiIndex m(static_cast<std::size_t>(cubic.nvars()));
    m[static_cast<std::size_t>(a)] += 1;
    m[static_cast<std::size_t>(b)] += 1;
    m[static_cast<std::size_t>(c)] += 1;
    int mult;
    if (a == b && b == c) mult = 1;
    else if (a == b || b == c || a == c) mult = 3;
    else mult = 6;
    return cubic.coeff(m) / mult;
}

}  // namespace

PairingNormalizationReport normalized_wedge_cubic(const AdaptedSplit& split,
                                                  int mu) {
    const GraphJet& jet = split.jet;
    const int n = jet.n;
    const int k = split.k();
    const int w = split.xi_dim;
    const int s = split.rho_dim;

    PairingNormalizationReport rep;
    rep.degenerate_w = std::min(k, 2 * k - n);
    rep.degenerate_w_flag = (rep.degenerate_w <= 1);

    if (w == 0) {
        rep.wedge = wedge_cubic_surjectivity(QuadricSystem{0, {}});
        return rep;
    }
    if (jet.order < 3)
        throw Error("third-order coefficients require a jet of order >= 3");

    GraphJet hyp = project_to_hypersurface(jet, mu);
    Matrix q = poly_to_quadric(hyp.coeffs[0].homogeneous_part(2));

    Matrix b(w, s);
    for (int i = 0; i < w; ++i)
        for (int c = 0; c < s; ++c) b.at(i, c) = q.at(i, k + c);

    // columns of x: combinations of the rho-block pairing as delta with xi
    Matrix x(s, w);
    for (int eta = 0; eta < w; ++eta) {
        std::vector<Rational> e(static_cast<std::size_t>(w), Rational(0));
        e[static_cast<std::size_t>(eta)] = 1;
        auto sol = solve(b, e);
        if (!sol)
            throw PairingDegenerate(
                "second-order coefficients do not pair the xi-block with "
                "the complementary block at full rank");
        x.set_column(eta, *sol);
    }

    Polynomial cubic = hyp.coeffs[0].homogeneous_part(3);
    QuadricSystem r;
    r.n = w;
    for (int eta = 0; eta < w; ++eta) {
        Matrix qe(w, w);
        for (int i = 0; i < w; ++i) {
            for (int j = i; j < w; ++j) {
                Rational val(0);
                for (int c = 0; c < s; ++c) {
                    if (x.at(c, eta) == 0) continue;
                    val += x.at(c, eta) *
                           polarized_cubic_coeff(cubic, i, j, k + c);
                }
                qe.at(i, j) = val;
                qe.at(j, i) = val;
            }
        }
        r.quadrics.push_back(std::move(qe));
    }
    rep.wedge = wedge_cubic_surjectivity(r);
    return rep;
}

Decision decide_jet(const GraphJet& jet, const Matrix& dirs, int max_order) {
    const int n = jet.n;
    const int k = dirs.cols();
    Decision dec;
    dec.oracle_used = false;
    dec.threshold_m =
        (n >= 2 && k >= 1 && k <= n - 1) ? generic_threshold(n, k, jet.a) : 0;
    dec.osculation = osculation_order(jet, dirs, max_order);
    if (!dec.osculation.at_least_max) {
        dec.verdict = Verdict::not_contained;
        const Obstruction& ob = *dec.osculation.first_obstruction;
        dec.note = "restriction to the space has a nonzero term of degree " +
                   std::to_string(ob.degree);
        return dec;
    }
    dec.verdict = Verdict::undetermined;
    dec.note = "no obstruction through order " + std::to_string(max_order) +
               "; containment is undetermined from the jet alone";
    if (k < n) {
        AdaptedSplit split = adapt_to_linear_space(jet, dirs);
        dec.genericity = genericity_check(split, max_order);
    }
    return dec;
}

Decision decide(const Variety& V, const LinearSpace& L, int max_order) {
    Decision dec;
    dec.oracle_used = true;
    bool inside = contains_linear_space(V, L);
    dec.verdict = inside ? Verdict::contained : Verdict::not_contained;

    try {
        GraphChart chart = implicit_to_graph(V, L.base_point, max_order);
        Matrix dirs = tangent_directions(chart, L);
        Decision diag = decide_jet(chart.jet, dirs, max_order);
        dec.osculation = diag.osculation;
        dec.genericity = diag.genericity;
        dec.threshold_m = diag.threshold_m;
        if (inside)
            dec.note = "every generator vanishes identically on the space";
        else if (dec.osculation.at_least_max)
            dec.note = "a generator is nonzero on the space beyond the "
                       "checked jet order";
        else
            dec.note = diag.note;
        if (inside && !dec.osculation.at_least_max)
            throw Error("contained space shows a jet obstruction; "
                        "the jet construction is inconsistent");
    } catch (const NotOnVariety&) {
        dec.note = "base point is not on the variety";
    } catch (const SingularOrExcessCodim&) {
        dec.note = "no jet diagnostics: the base point is singular or the "
                   "declared dimension is off";
    } catch (const NotOsculatingOrder1&) {
        dec.note = "the space is not tangent at the base point";
        dec.osculation.at_least_max = false;
        dec.osculation.order_found = 0;
        dec.osculation.max_order_checked = max_order;
    }
    return dec;
}

}  // namespace lsv
