#include "doctest.h"
#include "lsv/corpus.hpp"
#include "lsv/errors.hpp"
#include "lsv/graph_jet.hpp"
#include "lsv/osculation.hpp"
#include "lsv/parse.hpp"
#include "lsv/quadrics.hpp"
#include "lsv/sampling.hpp"
#include "lsv/variety.hpp"

using namespace lsv;

namespace {

std::vector<Rational> origin(int n) {
    return std::vector<Rational>(static_cast<std::size_t>(n), Rational(0));
}

std::vector<Rational> unit(int n, int i) {
    auto e = origin(n);
    e[static_cast<std::size_t>(i)] = 1;
    return e;
}

// Substitutes the chart parametrization x = base + F·(u, f(u)) into a
// polynomial on the ambient space, truncating at the jet order.
Polynomial chart_pullback(const Polynomial& g, const GraphChart& chart) {
    Matrix F = chart.frame();
    int n = chart.jet.n;
    int a = chart.jet.a;
    std::vector<Polynomial> subs;
    for (int i = 0; i < chart.ambient_dim(); ++i) {
        Polynomial s = Polynomial::constant(n, chart.base_point[static_cast<std::size_t>(i)]);
        for (int j = 0; j < n; ++j)
            if (F.at(i, j) != 0) s += Polynomial::variable(n, j) * F.at(i, j);
        for (int mu = 0; mu < a; ++mu)
            if (F.at(i, n + mu) != 0)
                s += chart.jet.coeffs[static_cast<std::size_t>(mu)] * F.at(i, n + mu);
        subs.push_back(std::move(s));
    }
    return g.substituted(subs, chart.jet.order);
}

QuadricSystem system_of(const std::vector<std::string>& exprs, int n) {
    QuadricSystem S;
    S.n = n;
    for (const auto& e : exprs) S.quadrics.push_back(poly_to_quadric(parse_poly(e, n)));
    return S;
}

std::vector<std::vector<Rational>> coordinate_hyperplane(int n) {
    std::vector<std::vector<Rational>> H;
    for (int i = 0; i + 1 < n; ++i) H.push_back(unit(n, i));
    return H;
}

}  // namespace

TEST_CASE("smooth-point validation splits coordinates at the circle") {
    Variety circle{2, 1, {parse_poly("x1^2 + x2^2 - 1", 2)}};
    SmoothPointInfo info = validate_smooth_point(circle, {rat(0), rat(1)});
    CHECK(info.tangent_positions == std::vector<int>{0});
    CHECK(info.normal_positions == std::vector<int>{1});

    CHECK_THROWS_AS(validate_smooth_point(circle, {rat(5), rat(5)}), NotOnVariety);

    Variety cone{3, 2, {parse_poly("x1^2 + x2^2 - x3^2", 3)}};
    CHECK_THROWS_AS(validate_smooth_point(cone, origin(3)), SingularOrExcessCodim);
}

TEST_CASE("circle chart matches the hand-solved series") {
    Variety circle{2, 1, {parse_poly("x1^2 + x2^2 - 1", 2)}};
    GraphChart chart = implicit_to_graph(circle, {rat(0), rat(1)}, 4);
    REQUIRE(chart.jet.n == 1);
    REQUIRE(chart.jet.a == 1);
    CHECK(chart.jet.coeffs[0] == parse_poly("-1/2*x1^2 - 1/8*x1^4", 1));
}

TEST_CASE("slanted-tangent chart matches the hand-solved series") {
    Variety v{2, 1, {parse_poly("x2 + x2^2 - x1", 2)}};
    GraphChart chart = implicit_to_graph(v, origin(2), 4);
    CHECK(chart.jet.coeffs[0] ==
          parse_poly("-x1^2 + 2*x1^3 - 5*x1^4", 1));
}

TEST_CASE("graph varieties reproduce their coefficients exactly") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GraphFamilySpec spec;
        spec.n = 2 + static_cast<int>(seed % 2);
        spec.a = 1 + static_cast<int>(seed % 2);
        spec.degree = 4;
        spec.shear = false;
        GraphFamily fam = random_graph_variety(seed, spec);
        GraphChart chart = implicit_to_graph(fam.variety, origin(spec.n + spec.a), 4);
        REQUIRE(chart.jet.coeffs.size() == fam.tangent_coeffs.size());
        for (std::size_t mu = 0; mu < chart.jet.coeffs.size(); ++mu)
            CHECK(chart.jet.coeffs[mu] == fam.tangent_coeffs[mu]);
    }
}

TEST_CASE("substituting the graph back into the generators leaves nothing") {
    for (std::uint64_t seed = 31; seed <= 40; ++seed) {
        GraphFamilySpec spec;
        spec.n = 2 + static_cast<int>(seed % 3);
        spec.a = 1 + static_cast<int>(seed % 2);
        spec.degree = 3 + static_cast<int>(seed % 2);
        spec.shear = true;
        GraphFamily fam = random_graph_variety(seed, spec);
        int order = 5;
        GraphChart chart =
            implicit_to_graph(fam.variety, origin(spec.n + spec.a), order);
        for (const auto& g : fam.variety.generators)
            CHECK(chart_pullback(g, chart).is_zero());
    }
}

TEST_CASE("containment forces unobstructed restrictions at every order") {
    for (std::uint64_t seed = 51; seed <= 60; ++seed) {
        GraphFamilySpec spec;
        spec.n = 3;
        spec.a = 1;
        spec.degree = 4;
        spec.profile = JetProfile::vanish_on_block;
        spec.k = 1 + static_cast<int>(seed % 2);
        GraphFamily fam = random_graph_variety(seed, spec);
        REQUIRE(contains_linear_space(fam.variety, fam.space));
        for (int m = 2; m <= 6; ++m) {
            GraphChart chart =
                implicit_to_graph(fam.variety, origin(4), m);
            Matrix dirs = tangent_directions(chart, fam.space);
            CHECK(osculation_order(chart.jet, dirs, m).at_least_max);
        }
    }
}

TEST_CASE("tangency is required to express a space in a chart") {
    CorpusEntry segre = corpus_variety("segre_quadric");
    GraphChart chart =
        implicit_to_graph(segre.variety, segre.smooth_points[0], 3);
    // the tangent line is expressible, a transverse line is not
    Matrix dirs = tangent_directions(chart, segre.spaces.at("tangent_line"));
    CHECK(dirs.cols() == 1);
    LinearSpace transverse{segre.smooth_points[0],
                           Matrix::from_columns({unit(4, 3)})};
    CHECK_THROWS_AS(tangent_directions(chart, transverse), NotOsculatingOrder1);
    LinearSpace off_point{unit(4, 1), Matrix::from_columns({unit(4, 1)})};
    CHECK_THROWS_AS(tangent_directions(chart, off_point), NotOsculatingOrder1);
}

TEST_CASE("fundamental forms read off the graph coefficients") {
    CorpusEntry ruled = corpus_variety("ruled_graph");
    GraphChart chart = implicit_to_graph(ruled.variety, origin(3), 2);
    FundamentalForm f2 = fundamental_form(chart.jet, 2);
    REQUIRE(f2.components.size() == 1);
    CHECK(f2.components[0] == parse_poly("x1*x2", 2));
    CHECK(f2.eval({rat(1), rat(1)}) == std::vector<Rational>{rat(1)});
    CHECK(f2.eval({rat(1), rat(0)}) == std::vector<Rational>{rat(0)});

    QuadricSystem ii = second_fundamental_system(chart.jet);
    REQUIRE(ii.size() == 1);
    CHECK(ii.quadrics[0].at(0, 1) == rat(1, 2));
    CHECK(quadric_to_poly(ii.quadrics[0]) == parse_poly("x1*x2", 2));
}

TEST_CASE("quadric matrices and polynomials convert both ways") {
    Rng rng(808);
    for (int t = 0; t < 30; ++t) {
        int n = rng.uniform_int(1, 5);
        Matrix q = random_symmetric(rng, n, 3);
        CHECK(poly_to_quadric(quadric_to_poly(q)) == q);
    }
    CHECK_THROWS_AS(poly_to_quadric(parse_poly("x1^3", 1)), Error);
}

TEST_CASE("singular loci of small systems") {
    CHECK(singular_locus(system_of({"x1*x2"}, 2)).empty());

    auto sl = singular_locus(system_of({"x1^2"}, 2));
    REQUIRE(sl.size() == 1);
    CHECK(sl[0] == unit(2, 1));

    // the two kernels meet only in zero
    CHECK(singular_locus(system_of({"x1*x3", "x2*x3"}, 3)).empty());

    auto plane = singular_locus(system_of({"x3^2"}, 3));
    REQUIRE(plane.size() == 2);
    CHECK(plane[0] == unit(3, 0));
    CHECK(plane[1] == unit(3, 1));
}

TEST_CASE("base locus membership is exact") {
    QuadricSystem S = system_of({"x1*x3", "x2*x3"}, 3);
    CHECK(base_locus_contains(S, {unit(3, 0), unit(3, 1)}));
    CHECK(!base_locus_contains(S, {unit(3, 0), unit(3, 2)}));
    CHECK(base_locus_contains(S, {}));
}

TEST_CASE("prolongation on pinned systems") {
    CHECK(prolongation(system_of({"x1*x2"}, 2)).empty());

    auto cubics = prolongation(system_of({"x1^2"}, 2));
    REQUIRE(cubics.size() == 1);
    CHECK(cubics[0] == parse_poly("x1^3", 2));

    for (int n = 2; n <= 6; ++n) {
        std::string expr = "x1*x" + std::to_string(n);
        CHECK(prolongation(system_of({expr}, n)).empty());
    }

    // the full quadric system on two variables admits every cubic
    auto all = prolongation(system_of({"x1^2", "x1*x2", "x2^2"}, 2));
    CHECK(all.size() == 4);
}

TEST_CASE("prolongation never shrinks when the system grows") {
    Rng rng(909);
    for (int t = 0; t < 20; ++t) {
        int n = rng.uniform_int(2, 4);
        QuadricSystem small;
        small.n = n;
        small.quadrics = {random_symmetric(rng, n, 2)};
        QuadricSystem big = small;
        big.quadrics.push_back(random_symmetric(rng, n, 2));
        CHECK(prolongation(big).size() >= prolongation(small).size());
    }
}

TEST_CASE("pencil classification matches the normal forms") {
    auto H3 = coordinate_hyperplane(3);
    CHECK(classify_pencil_with_hyperplane_base(system_of({"x1*x3", "x3^2"}, 3), H3).case_label == 1);
    CHECK(classify_pencil_with_hyperplane_base(system_of({"x1*x3", "0"}, 3), H3).case_label == 2);
    CHECK(classify_pencil_with_hyperplane_base(system_of({"x1*x3", "x2*x3"}, 3), H3).case_label == 3);
    CHECK(classify_pencil_with_hyperplane_base(system_of({"x3^2", "0"}, 3), H3).case_label == 4);
    CHECK(classify_pencil_with_hyperplane_base(system_of({"0", "0"}, 3), H3).case_label == 0);

    auto c3 = classify_pencil_with_hyperplane_base(system_of({"x1*x3", "x2*x3"}, 3), H3);
    CHECK(c3.hyperplane_form == unit(3, 2));

    // a quadric not vanishing on the hyperplane is rejected
    CHECK_THROWS_AS(classify_pencil_with_hyperplane_base(
                        system_of({"x1^2", "x3^2"}, 3), H3),
                    NotAPencilOnHyperplane);
}

TEST_CASE("pencil classification is stable under basis changes") {
    Rng rng(1010);
    auto H4 = coordinate_hyperplane(4);
    std::vector<std::vector<std::string>> forms = {
        {"x1*x4", "x4^2"}, {"x1*x4", "0"}, {"x1*x4", "x2*x4"}, {"x4^2", "0"}};
    std::vector<int> expected = {1, 2, 3, 4};
    for (std::size_t f = 0; f < forms.size(); ++f) {
        QuadricSystem S = system_of(forms[f], 4);
        for (int t = 0; t < 25; ++t) {
            Rational a = rng.integer(3), b = rng.integer(3);
            Rational c = rng.integer(3), d = rng.integer(3);
            if (a * d - b * c == 0) continue;
            QuadricSystem mixed;
            mixed.n = 4;
            Matrix q1(4, 4), q2(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    q1.at(i, j) = a * S.quadrics[0].at(i, j) + b * S.quadrics[1].at(i, j);
                    q2.at(i, j) = c * S.quadrics[0].at(i, j) + d * S.quadrics[1].at(i, j);
                }
            mixed.quadrics = {q1, q2};
            CHECK(classify_pencil_with_hyperplane_base(mixed, H4).case_label ==
                  expected[f]);
        }
    }
}

TEST_CASE("kernel-dimension bookkeeping for systems vanishing on a plane") {
    // one quadric on three variables, plane span{e1, e2} in the base locus
    auto rep = lemma_singloc_check(system_of({"x1*x3"}, 3),
                                   {unit(3, 0), unit(3, 1)});
    CHECK(rep.hypothesis_holds);  // 1*(3-2) < 2
    CHECK(rep.per_quadric_bound_ok);
    CHECK(rep.common_w_singloc_dim >= 1);
    CHECK(rep.conclusion_ok);

    // n = 4, k = 2, a = 1 fails the hypothesis: 1*(4-2) = 2, not < 2
    auto vac = lemma_singloc_check(system_of({"x1*x3 + x2*x4"}, 4),
                                   {unit(4, 0), unit(4, 1)});
    CHECK(!vac.hypothesis_holds);
    CHECK(vac.conclusion_ok);
}

TEST_CASE("quadric pairing is symmetric and bilinear") {
    Rng rng(1111);
    for (int t = 0; t < 20; ++t) {
        int n = rng.uniform_int(2, 4);
        Matrix q = random_symmetric(rng, n, 3);
        std::vector<Rational> v, w;
        for (int i = 0; i < n; ++i) {
            v.push_back(rng.integer(3));
            w.push_back(rng.integer(3));
        }
        CHECK(quadric_pair(q, v, w) == quadric_pair(q, w, v));
        auto v2 = v;
        for (auto& entry : v2) entry *= 3;
        CHECK(quadric_pair(q, v2, w) == 3 * quadric_pair(q, v, w));
        CHECK(quadric_to_poly(q).eval(v) == quadric_pair(q, v, v));
    }
}
