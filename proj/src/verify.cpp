#include "lsv/verify.hpp"

#include <array>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include "lsv/corpus.hpp"
#include "lsv/osculation.hpp"
#include "lsv/sampling.hpp"

namespace lsv {

namespace {

using TrialFn = std::function<TrialRecord(int, std::uint64_t)>;

struct SuitePlan {
    int total = 0;
    TrialFn fn;
};

int resolve_threads(int requested) {
    if (requested > 0) return std::min(requested, 16);
    const char* env = std::getenv("LSV_THREADS");
    if (env == nullptr) return 1;
    int v = std::atoi(env);
    return v < 1 ? 1 : std::min(v, 16);
}

long param_or(const std::map<std::string, long>& params,
              const std::string& key, long fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

std::vector<Rational> origin(int n) {
    return std::vector<Rational>(static_cast<std::size_t>(n), Rational(0));
}

TrialRecord pass(std::uint64_t seed, std::string detail) {
    return {seed, "pass", std::move(detail)};
}
TrialRecord fail(std::uint64_t seed, std::string detail) {
    return {seed, "fail", std::move(detail)};
}
TrialRecord undecided(std::uint64_t seed, std::string detail) {
    return {seed, "inconclusive", std::move(detail)};
}

Polynomial embed_poly(const Polynomial& p, int ambient) {
    Matrix sel(p.nvars(), ambient);
    for (int i = 0; i < p.nvars(); ++i) sel.at(i, i) = 1;
    return compose_affine(p, sel, origin(p.nvars()));
}

Matrix mono_quadric(int n, int i, int j) {
    Matrix q(n, n);
    if (i == j) {
        q.at(i, i) = 1;
    } else {
        q.at(i, j) = rat(1, 2);
        q.at(j, i) = rat(1, 2);
    }
    return q;
}

std::vector<std::vector<Rational>> unit_vectors(int n, int count) {
    std::vector<std::vector<Rational>> h;
    for (int i = 0; i < count; ++i) {
        std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        h.push_back(std::move(e));
    }
    return h;
}

// Unimodular change fixing the span of the first n-1 unit vectors.
Matrix hyperplane_preserving_change(Rng& rng, int n) {
    Matrix a = random_unimodular(rng, n - 1, 2 * (n - 1), 1);
    Matrix t(n, n);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) t.at(i, j) = a.at(i, j);
    for (int i = 0; i < n - 1; ++i) t.at(i, n - 1) = rng.integer(1);
    t.at(n - 1, n - 1) = 1;
    return t;
}

// ---- thm1: full coefficient-slice rank forces containment -----------------

SuitePlan plan_thm1(int trials, const std::map<std::string, long>& params) {
    std::vector<std::pair<int, int>> grid = {
        {2, 1}, {3, 1}, {3, 2}, {4, 2}, {4, 3}};
    if (params.count("n") && params.count("k"))
        grid = {{static_cast<int>(params.at("n")),
                 static_cast<int>(params.at("k"))}};

    SuitePlan plan;
    plan.total = trials;
    plan.fn = [grid](int i, std::uint64_t seed) -> TrialRecord {
        auto [n, k] = grid[static_cast<std::size_t>(i) % grid.size()];
        int mstar = generic_threshold(n, k, 1);

        GraphFamilySpec gs;
        gs.n = n;
        gs.a = 1;
        gs.degree = n + 3;
        gs.profile = JetProfile::vanish_on_block;
        gs.k = k;
        gs.vanish_order = -1;
        gs.shear = true;
        gs.bound = 2;
        GraphFamily fam = random_graph_variety(seed, gs);

        GraphChart chart =
            implicit_to_graph(fam.variety, origin(n + 1), mstar);
        Matrix dirs = tangent_directions(chart, fam.space);
        OsculationReport osc = osculation_order(chart.jet, dirs, mstar);
        if (!osc.at_least_max)
            return fail(seed, "designed family failed to osculate to order " +
                                  std::to_string(mstar));

        AdaptedSplit split = adapt_to_linear_space(chart.jet, dirs);
        GenericityReport gen = genericity_check(split, mstar);
        if (!contains_linear_space(fam.variety, fam.space))
            return fail(seed, "designed containment violated by the oracle");

        std::string shape = "n=" + std::to_string(n) + " k=" +
                            std::to_string(k) + " m*=" + std::to_string(mstar);
        if (gen.full)
            return pass(seed, shape + " rank " +
                                  std::to_string(gen.cumulative_rank) + "/" +
                                  std::to_string(gen.target_dim) +
                                  ", oracle confirms");
        return undecided(seed, shape + " rank " +
                                   std::to_string(gen.cumulative_rank) + "/" +
                                   std::to_string(gen.target_dim) +
                                   " not full; no conclusion claimed");
    };
    return plan;
}

// ---- thm2: rank bound and fiber inside the space ---------------------------

SuitePlan plan_thm2(int trials, const std::map<std::string, long>& params) {
    std::vector<std::pair<int, int>> grid = {{3, 2}, {4, 2}, {4, 3}, {5, 3},
                                             {6, 3}, {6, 4}, {7, 4}, {8, 4},
                                             {8, 5}, {8, 6}};
    if (params.count("n") && params.count("k"))
        grid = {{static_cast<int>(params.at("n")),
                 static_cast<int>(params.at("k"))}};

    SuitePlan plan;
    plan.total = trials;
    plan.fn = [grid](int i, std::uint64_t seed) -> TrialRecord {
        auto [n, k] = grid[static_cast<std::size_t>(i) % grid.size()];
        SystemWithBaseLocus swl =
            random_system_with_base_locus(seed, n, k, 1, 2);
        const Matrix& q = swl.system.quadrics[0];

        int rank = exact_rank(q);
        if (rank > 2 * (n - k))
            return fail(seed, "rank " + std::to_string(rank) + " exceeds " +
                                  std::to_string(2 * (n - k)));

        Variety v;
        v.ambient_dim = n + 1;
        v.expected_dim = n;
        v.generators = {Polynomial::variable(n + 1, n) -
                        embed_poly(quadric_to_poly(q), n + 1)};

        Matrix dirs(n + 1, k);
        for (int j = 0; j < k; ++j)
            for (int r = 0; r < n; ++r)
                dirs.at(r, j) = swl.w_basis[static_cast<std::size_t>(j)]
                                           [static_cast<std::size_t>(r)];
        LinearSpace lw{origin(n + 1), dirs};

        GraphChart chart = implicit_to_graph(v, origin(n + 1), 2);
        GaussFiberReport rep = gauss_fiber_in_L(chart, lw, &v);
        int bound = std::max(2 * k - n, 0);
        if (rep.dim < bound)
            return fail(seed, "fiber dimension " + std::to_string(rep.dim) +
                                  " below " + std::to_string(bound));
        if (rep.contained.has_value() && !*rep.contained)
            return fail(seed, "fiber span not inside the variety");

        return pass(seed, "n=" + std::to_string(n) + " k=" +
                              std::to_string(k) + " rank " +
                              std::to_string(rank) + " fiber " +
                              std::to_string(rep.dim));
    };
    return plan;
}

// ---- thm3: surfaces, order-3 jets, designed and corpus cases ---------------

struct CorpusCheck {
    const char* entry;
    const char* space;
    int max_order;
    bool expect_contained;
    int expect_order;  // -1 means clean through max_order
};

constexpr CorpusCheck kThm3Fixed[] = {
    {"ruled_graph", "x1_axis", 3, true, -1},
    {"scroll_codim2", "plane", 3, true, -1},
    {"cone", "ruling", 3, true, -1},
    {"segre_quadric", "ruling_b", 3, true, -1},
    {"segre_quadric", "ruling_c", 3, true, -1},
    {"ruled_graph", "diagonal", 3, false, 1},
    {"graph_cubic", "x1_axis", 3, false, 2},
    {"perturbed_ruled", "x1_axis", 4, false, 3},
};

TrialRecord run_corpus_check(const CorpusCheck& c, std::uint64_t seed) {
    CorpusEntry e = corpus_variety(c.entry);
    const LinearSpace& l = e.spaces.at(c.space);
    GraphChart chart =
        implicit_to_graph(e.variety, l.base_point, c.max_order);
    Matrix dirs = tangent_directions(chart, l);
    OsculationReport osc = osculation_order(chart.jet, dirs, c.max_order);
    bool inside = contains_linear_space(e.variety, l);

    std::string name = std::string(c.entry) + "/" + c.space;
    if (inside != c.expect_contained)
        return fail(seed, name + ": oracle verdict unexpected");
    if (c.expect_order < 0) {
        if (!osc.at_least_max)
            return fail(seed, name + ": obstruction at order " +
                                  std::to_string(osc.order_found + 1));
    } else {
        if (osc.at_least_max || osc.order_found != c.expect_order)
            return fail(seed, name + ": contact order " +
                                  (osc.at_least_max
                                       ? std::string("full")
                                       : std::to_string(osc.order_found)) +
                                  ", expected " +
                                  std::to_string(c.expect_order));
    }
    return pass(seed, name + ": verdicts as designed");
}

SuitePlan plan_thm3(int trials, const std::map<std::string, long>& params) {
    const int degree = static_cast<int>(param_or(params, "degree", 6));
    const int fixed = static_cast<int>(std::size(kThm3Fixed));

    SuitePlan plan;
    plan.total = trials + fixed;
    plan.fn = [trials, degree](int i, std::uint64_t seed) -> TrialRecord {
        if (i >= trials) return run_corpus_check(kThm3Fixed[i - trials], seed);

        Rng rng(seed);
        std::vector<Rational> u0 = {rng.integer(2), rng.integer(2)};
        Rational d0, d1;
        do {
            d0 = rng.integer(2);
            d1 = rng.integer(2);
        } while (d0 == 0 && d1 == 0);
        std::vector<Rational> dir = {d0, d1};

        Polynomial fhat = random_polynomial(rng, 2, 2, degree, 2);
        for (int dd = 2; dd <= degree; ++dd) {
            Rational r = fhat.homogeneous_part(dd).eval(dir);
            if (r == 0) continue;
            MultiIndex star(2);
            Rational denom;
            if (d0 != 0) {
                star[0] = dd;
                denom = 1;
                for (int t = 0; t < dd; ++t) denom *= d0;
            } else {
                star[1] = dd;
                denom = 1;
                for (int t = 0; t < dd; ++t) denom *= d1;
            }
            fhat.add_term(star, -r / denom);
        }

        // recenter: f(x) = fhat(x - u0), so the point (u0, 0) is on the graph
        std::vector<Rational> shift = {-u0[0], -u0[1]};
        Polynomial f = compose_affine(fhat, Matrix::identity(2), shift);

        Variety v;
        v.ambient_dim = 3;
        v.expected_dim = 2;
        v.generators = {Polynomial::variable(3, 2) - embed_poly(f, 3)};
        std::vector<Rational> p = {u0[0], u0[1], Rational(0)};
        Matrix dirs(3, 1);
        dirs.at(0, 0) = d0;
        dirs.at(1, 0) = d1;
        LinearSpace line{p, dirs};

        GraphChart chart = implicit_to_graph(v, p, 3);
        OsculationReport osc =
            osculation_order(chart.jet, tangent_directions(chart, line), 3);
        if (!osc.at_least_max)
            return fail(seed, "designed line fails order-3 contact");
        if (!contains_linear_space(v, line))
            return fail(seed, "designed line not contained");
        return pass(seed, "degree-" + std::to_string(degree) +
                              " surface: order-3 contact and containment");
    };
    return plan;
}

// ---- thm4: pencil classification on a hyperplane ---------------------------

QuadricSystem normal_form_system(int n, int case_label) {
    QuadricSystem s;
    s.n = n;
    switch (case_label) {
        case 1:
            s.quadrics = {mono_quadric(n, 0, n - 1), mono_quadric(n, n - 1, n - 1)};
            break;
        case 2:
            s.quadrics = {mono_quadric(n, 0, n - 1), Matrix(n, n)};
            break;
        case 3:
            s.quadrics = {mono_quadric(n, 0, n - 1), mono_quadric(n, 1, n - 1)};
            break;
        case 4:
            s.quadrics = {mono_quadric(n, n - 1, n - 1), Matrix(n, n)};
            break;
        default:
            s.quadrics = {Matrix(n, n), Matrix(n, n)};
            break;
    }
    return s;
}

struct Thm4Fixed {
    int n;
    int case_label;
};

std::vector<Thm4Fixed> thm4_fixed_members() {
    std::vector<Thm4Fixed> members;
    for (int n = 3; n <= 6; ++n)
        for (int c = 0; c <= 4; ++c) members.push_back({n, c});
    return members;
}

TrialRecord run_thm4_fixed(const Thm4Fixed& m, std::uint64_t seed) {
    QuadricSystem s = normal_form_system(m.n, m.case_label);
    PencilClassification cls = classify_pencil_with_hyperplane_base(
        s, unit_vectors(m.n, m.n - 1));
    std::string name = "normal form case " + std::to_string(m.case_label) +
                       ", n=" + std::to_string(m.n);
    if (cls.case_label != m.case_label)
        return fail(seed, name + ": classified as " +
                              std::to_string(cls.case_label));
    std::string note =
        m.case_label == 2 ? " (never occurs on a variety spanning its "
                            "ambient space; reported as stated)"
                          : "";
    return pass(seed, name + note);
}

TrialRecord run_thm4_prolongation(int n, std::uint64_t seed) {
    QuadricSystem s;
    s.n = n;
    s.quadrics = {mono_quadric(n, 0, n - 1)};
    std::vector<Polynomial> cubics = prolongation(s);
    if (!cubics.empty())
        return fail(seed, "prolongation of a rank-2 quadric is nonzero at n=" +
                              std::to_string(n));
    return pass(seed, "empty prolongation confirmed at n=" + std::to_string(n));
}

TrialRecord run_thm4_scroll(std::uint64_t seed) {
    CorpusEntry e = corpus_variety("scroll_codim2");
    const LinearSpace& l = e.spaces.at("plane");
    GraphChart chart = implicit_to_graph(e.variety, l.base_point, 2);
    Matrix dirs = tangent_directions(chart, l);
    std::vector<std::vector<Rational>> h;
    for (int j = 0; j < dirs.cols(); ++j) h.push_back(dirs.column(j));
    PencilClassification cls = classify_pencil_with_hyperplane_base(
        second_fundamental_system(chart.jet), h);
    if (cls.case_label != 3)
        return fail(seed, "scroll second-order system classified as " +
                              std::to_string(cls.case_label));
    if (!contains_linear_space(e.variety, l))
        return fail(seed, "scroll plane not contained");
    return pass(seed, "scroll pipeline: case 3 and containment");
}

TrialRecord run_thm4_invariance(std::uint64_t seed) {
    Rng rng(seed);
    int n = rng.uniform_int(3, 6);
    int c = rng.uniform_int(1, 4);
    QuadricSystem s = normal_form_system(n, c);

    // mix the pencil by an invertible 2x2 integer matrix
    Rational a, b, c2, d;
    do {
        a = rng.integer(2);
        b = rng.integer(2);
        c2 = rng.integer(2);
        d = rng.integer(2);
    } while (a * d - b * c2 == 0);
    Matrix q1(n, n), q2(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            q1.at(i, j) = a * s.quadrics[0].at(i, j) + b * s.quadrics[1].at(i, j);
            q2.at(i, j) = c2 * s.quadrics[0].at(i, j) + d * s.quadrics[1].at(i, j);
        }
    }

    Matrix t = hyperplane_preserving_change(rng, n);
    QuadricSystem mixed;
    mixed.n = n;
    mixed.quadrics = {t.transposed() * q1 * t, t.transposed() * q2 * t};

    PencilClassification cls = classify_pencil_with_hyperplane_base(
        mixed, unit_vectors(n, n - 1));
    if (cls.case_label != c)
        return fail(seed, "case " + std::to_string(c) + " reclassified as " +
                              std::to_string(cls.case_label) + " after a "
                              "basis change");
    return pass(seed, "case " + std::to_string(c) + " stable under pencil "
                          "and coordinate changes, n=" + std::to_string(n));
}

TrialRecord run_thm4_containment(std::uint64_t seed) {
    Rng rng(seed);
    int n = rng.uniform_int(3, 5);
    const int cases[] = {1, 3, 4};
    int c = cases[rng.uniform_int(0, 2)];
    QuadricSystem s = normal_form_system(n, c);

    Matrix t = hyperplane_preserving_change(rng, n);
    Matrix q1 = t.transposed() * s.quadrics[0] * t;
    Matrix q2 = t.transposed() * s.quadrics[1] * t;

    auto vanishing_cubic = [&rng](int nvars) {
        Polynomial h(nvars);
        for (const MultiIndex& m : monomials_of_degree(nvars, 3))
            if (m[static_cast<std::size_t>(nvars - 1)] >= 1)
                h.add_term(m, rng.integer(1));
        return h;
    };

    const int ambient = n + 2;
    Variety v;
    v.ambient_dim = ambient;
    v.expected_dim = n;
    v.generators = {
        Polynomial::variable(ambient, n) -
            embed_poly(quadric_to_poly(q1) + vanishing_cubic(n), ambient),
        Polynomial::variable(ambient, n + 1) -
            embed_poly(quadric_to_poly(q2) + vanishing_cubic(n), ambient)};

    Matrix dirs(ambient, n - 1);
    for (int j = 0; j < n - 1; ++j) dirs.at(j, j) = 1;
    LinearSpace l{origin(ambient), dirs};

    GraphChart chart = implicit_to_graph(v, origin(ambient), 2);
    PencilClassification cls = classify_pencil_with_hyperplane_base(
        second_fundamental_system(chart.jet), unit_vectors(n, n - 1));
    if (cls.case_label != c)
        return fail(seed, "graph member of case " + std::to_string(c) +
                              " classified as " +
                              std::to_string(cls.case_label));
    if (!contains_linear_space(v, l))
        return fail(seed, "hyperplane section of the tangent space not "
                          "contained in the case-" + std::to_string(c) +
                          " member");
    return pass(seed, "case " + std::to_string(c) + " member, n=" +
                          std::to_string(n) + ": classification and "
                          "containment agree");
}

SuitePlan plan_thm4(int trials, const std::map<std::string, long>&) {
    std::vector<Thm4Fixed> forms = thm4_fixed_members();
    const int prolong_count = 5;  // n = 2..6
    const int fixed = static_cast<int>(forms.size()) + prolong_count + 1;

    SuitePlan plan;
    plan.total = trials + fixed;
    plan.fn = [trials, forms](int i, std::uint64_t seed) -> TrialRecord {
        if (i < trials)
            return i % 2 == 0 ? run_thm4_invariance(seed)
                              : run_thm4_containment(seed);
        int j = i - trials;
        if (j < static_cast<int>(forms.size()))
            return run_thm4_fixed(forms[static_cast<std::size_t>(j)], seed);
        j -= static_cast<int>(forms.size());
        if (j < 5) return run_thm4_prolongation(2 + j, seed);
        return run_thm4_scroll(seed);
    };
    return plan;
}

// ---- thm5: wedge-cubic surjectivity ----------------------------------------

SuitePlan plan_thm5(int trials, const std::map<std::string, long>& params) {
    std::vector<std::pair<int, int>> grid = {{2, 2}, {2, 1}, {3, 3}, {3, 2},
                                             {4, 4}, {4, 3}, {5, 5}, {5, 4}};
    if (params.count("w") && params.count("span"))
        grid = {{static_cast<int>(params.at("w")),
                 static_cast<int>(params.at("span"))}};

    SuitePlan plan;
    plan.total = trials + 2;
    plan.fn = [trials, grid](int i, std::uint64_t seed) -> TrialRecord {
        if (i == trials) {
            QuadricSystem one;
            one.n = 1;
            one.quadrics = {Matrix(1, 1)};
            one.quadrics[0].at(0, 0) = 1;
            WedgeCubicReport rep = wedge_cubic_surjectivity(one);
            return rep.vacuous && rep.surjective
                       ? pass(seed, "w=1: nothing to cover")
                       : fail(seed, "w=1 member mishandled");
        }
        if (i == trials + 1) {
            QuadricSystem zero;
            zero.n = 3;
            zero.quadrics = {Matrix(3, 3), Matrix(3, 3), Matrix(3, 3)};
            WedgeCubicReport rep = wedge_cubic_surjectivity(zero);
            return rep.zero_system && !rep.surjective
                       ? pass(seed, "zero system: flat-relation branch, no "
                                    "surjectivity claimed")
                       : fail(seed, "zero system member mishandled");
        }

        auto [w, span] = grid[static_cast<std::size_t>(i) % grid.size()];
        QuadricSystem sys = random_system_with_span(seed, w, span, 2);
        WedgeCubicReport rep = wedge_cubic_surjectivity(sys);
        if (rep.system_span_dim != span)
            return fail(seed, "construction span " +
                                  std::to_string(rep.system_span_dim) +
                                  " instead of " + std::to_string(span));
        if (!rep.surjective)
            return fail(seed, "w=" + std::to_string(w) + " span=" +
                                  std::to_string(span) + ": rank " +
                                  std::to_string(rep.rank) + "/" +
                                  std::to_string(rep.target));
        return pass(seed, "w=" + std::to_string(w) + " span=" +
                              std::to_string(span) + ": onto");
    };
    return plan;
}

// ---- thm6_lemma: common singular vector inside the base-locus plane --------

SuitePlan plan_thm6(int trials, const std::map<std::string, long>& params) {
    std::vector<std::array<int, 3>> grid = {
        {3, 2, 1}, {4, 3, 1}, {4, 3, 2}, {5, 3, 1}, {5, 4, 1}, {5, 4, 3},
        {6, 4, 1}, {6, 5, 2}, {7, 5, 2}, {8, 6, 2}, {8, 7, 3}, {8, 5, 1}};
    if (params.count("n") && params.count("k") && params.count("a"))
        grid = {{static_cast<int>(params.at("n")),
                 static_cast<int>(params.at("k")),
                 static_cast<int>(params.at("a"))}};

    SuitePlan plan;
    plan.total = trials;
    plan.fn = [grid](int i, std::uint64_t seed) -> TrialRecord {
        auto [n, k, a] = grid[static_cast<std::size_t>(i) % grid.size()];
        SystemWithBaseLocus swl =
            random_system_with_base_locus(seed, n, k, a, 2);
        SinglocBoundReport rep =
            lemma_singloc_check(swl.system, swl.w_basis);
        std::string shape = "n=" + std::to_string(n) + " k=" +
                            std::to_string(k) + " a=" + std::to_string(a);
        if (!rep.hypothesis_holds)
            return fail(seed, shape + ": grid cell violates a(n-k) < k");
        if (!rep.per_quadric_bound_ok)
            return fail(seed, shape + ": a per-quadric kernel is smaller "
                                      "than 2k-n");
        if (!rep.conclusion_ok)
            return fail(seed, shape + ": no common singular vector in the "
                                      "plane (common dim " +
                                  std::to_string(rep.common_w_singloc_dim) +
                                  ")");
        return pass(seed, shape + ": common singular dim " +
                              std::to_string(rep.common_w_singloc_dim));
    };
    return plan;
}

}  // namespace

std::vector<std::string> verify_ids() {
    return {"thm1", "thm2", "thm3", "thm4", "thm5", "thm6_lemma"};
}

SuiteReport verify_theorem(const std::string& id, std::uint64_t master_seed,
                           int random_trials,
                           const std::map<std::string, long>& params,
                           int threads) {
    if (random_trials < 0) throw Error("trial count must be non-negative");

    SuitePlan plan;
    if (id == "thm1") plan = plan_thm1(random_trials, params);
    else if (id == "thm2") plan = plan_thm2(random_trials, params);
    else if (id == "thm3") plan = plan_thm3(random_trials, params);
    else if (id == "thm4") plan = plan_thm4(random_trials, params);
    else if (id == "thm5") plan = plan_thm5(random_trials, params);
    else if (id == "thm6_lemma") plan = plan_thm6(random_trials, params);
    else throw Error("unknown suite id: " + id);

    SuiteReport rep;
    rep.id = id;
    rep.params = params;
    rep.master_seed = master_seed;
    rep.trials = plan.total;
    rep.records.resize(static_cast<std::size_t>(plan.total));

    std::atomic<int> cursor{0};
    auto work = [&]() {
        for (;;) {
            int i = cursor.fetch_add(1);
            if (i >= plan.total) break;
            std::uint64_t seed =
                trial_seed(master_seed, static_cast<std::uint64_t>(i));
            try {
                rep.records[static_cast<std::size_t>(i)] = plan.fn(i, seed);
            } catch (const std::exception& e) {
                rep.records[static_cast<std::size_t>(i)] = {
                    seed, "fail", std::string("exception: ") + e.what()};
            }
        }
    };

    int nthreads = resolve_threads(threads);
    if (nthreads <= 1 || plan.total <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    for (const TrialRecord& r : rep.records) {
        if (r.status == "pass") ++rep.passes;
        else if (r.status == "fail") ++rep.failures;
        else ++rep.inconclusive;
    }
    return rep;
}

}  // namespace lsv
