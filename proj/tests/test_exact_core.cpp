#include "doctest.h"
#include "lsv/errors.hpp"
#include "lsv/matrix.hpp"
#include "lsv/multi_index.hpp"
#include "lsv/parse.hpp"
#include "lsv/polynomial.hpp"
#include "lsv/rational.hpp"
#include "lsv/sampling.hpp"

using namespace lsv;

namespace {

std::vector<Rational> random_point(Rng& rng, int n, int bound) {
    std::vector<Rational> x;
    x.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x.push_back(rng.integer(bound));
    return x;
}

Matrix random_matrix(Rng& rng, int rows, int cols, int bound) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng.integer(bound);
    return m;
}

}  // namespace

TEST_CASE("rationals canonicalize and reject zero denominators") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat_to_string(rat(-6, 4)) == "-3/2");
    CHECK(rat_to_string(rat(5)) == "5");
    CHECK(rat_from_string("-7/3") == rat(-7, 3));
    CHECK(rat_from_string("0") == Rational(0));
    CHECK_THROWS_AS(rat(1, 0), Error);
}

TEST_CASE("multi-indices order graded-lexicographically") {
    MultiIndex a{{2, 0}};
    MultiIndex b{{1, 1}};
    MultiIndex c{{1, 0}};
    CHECK(c < a);  // lower degree first
    CHECK(b < a);  // same degree: exponent vectors compare lexicographically
    CHECK(a.degree() == 2);

    auto quad = monomials_of_degree(2, 2);
    REQUIRE(quad.size() == 3);
    CHECK(quad[0].exps == std::vector<int>{0, 2});
    CHECK(quad[1].exps == std::vector<int>{1, 1});
    CHECK(quad[2].exps == std::vector<int>{2, 0});
    CHECK(std::is_sorted(quad.begin(), quad.end()));

    CHECK(count_monomials(2, 3) == 4);
    CHECK(count_monomials(3, 2) == 6);
    CHECK(count_monomials(1, 5) == 1);

    MultiIndex m{{1, 2, 0}};
    CHECK(m.without_one(1).exps == std::vector<int>{1, 1, 0});
    CHECK(m.with_one(2).exps == std::vector<int>{1, 2, 1});
    CHECK_THROWS_AS(m.without_one(2), Error);
}

TEST_CASE("polynomial printing and basic arithmetic") {
    Polynomial p(3);
    p.add_term(MultiIndex{{2, 1, 0}}, rat(3, 2));
    p.add_term(MultiIndex{{0, 0, 1}}, rat(-1));
    CHECK(p.to_string() == "3/2*x1^2*x2 - x3");
    CHECK(p.degree() == 3);
    CHECK(!p.is_homogeneous());

    Polynomial z(3);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.to_string() == "0");

    CHECK(p - p == z);
    CHECK((p + p) == p * rat(2));
}

TEST_CASE("evaluation matches pinned values") {
    // x1*x2 - x3 at (1, 2, 2)
    Polynomial p = parse_poly("x1*x2 - x3", 3);
    CHECK(p.eval({rat(1), rat(2), rat(2)}) == Rational(0));
    // x1^2 + x2^2 at (3, 4)
    Polynomial q = parse_poly("x1^2 + x2^2", 2);
    CHECK(q.eval({rat(3), rat(4)}) == Rational(25));
    // x1^3 at 1/2
    Polynomial c = parse_poly("x1^3", 1);
    CHECK(c.eval({rat(1, 2)}) == rat(1, 8));
}

TEST_CASE("evaluation is multiplicative and additive on seeded pairs") {
    Rng rng(101);
    for (int t = 0; t < 60; ++t) {
        int n = rng.uniform_int(1, 3);
        Polynomial p = random_polynomial(rng, n, 0, 3, 3);
        Polynomial q = random_polynomial(rng, n, 0, 3, 3);
        auto x = random_point(rng, n, 4);
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
        CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
    }
}

TEST_CASE("affine composition commutes with evaluation") {
    Rng rng(202);
    for (int t = 0; t < 60; ++t) {
        int n = rng.uniform_int(1, 3);
        int m = rng.uniform_int(1, 3);
        Polynomial p = random_polynomial(rng, n, 0, 3, 2);
        Matrix A = random_matrix(rng, n, m, 2);
        auto b = random_point(rng, n, 2);
        auto t_pt = random_point(rng, m, 3);
        auto image = A.apply(t_pt);
        for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] += b[static_cast<std::size_t>(i)];
        CHECK(compose_affine(p, A, b).eval(t_pt) == p.eval(image));
    }
}

TEST_CASE("affine composition on a univariate example") {
    // p(t) = t^2 + t shifted by 1: p(t+1) = t^2 + 3t + 2
    Polynomial p = parse_poly("x1^2 + x1", 1);
    Polynomial shifted = compose_affine(p, Matrix::identity(1), {rat(1)});
    CHECK(shifted == parse_poly("x1^2 + 3*x1 + 2", 1));
}

TEST_CASE("homogeneous parts partition the polynomial") {
    Rng rng(303);
    for (int t = 0; t < 60; ++t) {
        int n = rng.uniform_int(1, 4);
        Polynomial p = random_polynomial(rng, n, 0, 4, 3);
        Polynomial sum(n);
        for (int d = 0; d <= p.degree(); ++d) {
            Polynomial part = p.homogeneous_part(d);
            CHECK((part.is_zero() || part.is_homogeneous()));
            sum += part;
        }
        CHECK(sum == p);
    }
}

TEST_CASE("derivatives satisfy the product rule") {
    Rng rng(404);
    for (int t = 0; t < 30; ++t) {
        int n = rng.uniform_int(1, 3);
        Polynomial p = random_polynomial(rng, n, 0, 3, 2);
        Polynomial q = random_polynomial(rng, n, 0, 3, 2);
        int v = rng.uniform_int(0, n - 1);
        CHECK((p * q).derivative(v) ==
              p.derivative(v) * q + p * q.derivative(v));
    }
}

TEST_CASE("rank plus kernel size equals column count on seeded matrices") {
    Rng rng(505);
    for (int t = 0; t < 200; ++t) {
        int rows = rng.uniform_int(1, 8);
        int cols = rng.uniform_int(1, 8);
        Matrix m = random_matrix(rng, rows, cols, 3);
        auto kernel = exact_kernel(m);
        CHECK(exact_rank(m) + static_cast<int>(kernel.size()) == cols);
        for (const auto& k : kernel) {
            auto image = m.apply(k);
            for (const auto& entry : image) CHECK(entry == Rational(0));
        }
    }
}

TEST_CASE("row reduction is idempotent and solve satisfies its system") {
    Rng rng(606);
    for (int t = 0; t < 60; ++t) {
        int rows = rng.uniform_int(1, 6);
        int cols = rng.uniform_int(1, 6);
        Matrix m = random_matrix(rng, rows, cols, 3);
        Matrix r = m;
        auto pivots = rref(r);
        Matrix r2 = r;
        auto pivots2 = rref(r2);
        CHECK(r == r2);
        CHECK(pivots == pivots2);
        CHECK(static_cast<int>(pivots.size()) == exact_rank(m));

        // a consistent right-hand side: m times a random vector
        auto x = random_point(rng, cols, 3);
        auto b = m.apply(x);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
}

TEST_CASE("span helpers agree with rank") {
    Matrix m = Matrix::from_rows({{rat(1), rat(0), rat(1)},
                                  {rat(0), rat(1), rat(1)},
                                  {rat(1), rat(1), rat(2)}});
    CHECK(exact_rank(m) == 2);
    std::vector<std::vector<Rational>> vecs = {m.row(0), m.row(1), m.row(2)};
    CHECK(span_dim(vecs, 3) == 2);
    CHECK(in_span({m.row(0), m.row(1)}, m.row(2), 3));
    CHECK(!in_span({m.row(0)}, m.row(1), 3));

    auto basis = canonical_span(vecs, 3);
    REQUIRE(basis.size() == 2);
    // canonical output is order-independent
    auto basis2 = canonical_span({m.row(2), m.row(0), m.row(1)}, 3);
    CHECK(basis == basis2);

    auto meet = subspace_intersection(
        {{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}},
        {{rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}}, 3);
    REQUIRE(meet.size() == 1);
    CHECK(meet[0] == std::vector<Rational>{rat(0), rat(1), rat(0)});
}

TEST_CASE("parser handles the pinned expressions") {
    Polynomial segre = parse_poly("x1*x4 - x2*x3", 4);
    Polynomial manual(4);
    manual.add_term(MultiIndex{{1, 0, 0, 1}}, rat(1));
    manual.add_term(MultiIndex{{0, 1, 1, 0}}, rat(-1));
    CHECK(segre == manual);

    CHECK(parse_poly("(x1+x2)^2", 2) ==
          parse_poly("x1^2 + 2*x1*x2 + x2^2", 2));
    CHECK(parse_poly(" 3/2 * x1 - 1 ", 1).eval({rat(2)}) == rat(2));

    CHECK_THROWS_AS(parse_poly("x1^-1", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("x3", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x1 + ", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("", 1), ParseError);
}

TEST_CASE("parse errors carry line and column positions") {
    try {
        parse_poly("x1 +\n  @", 1);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 3);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("printing then parsing returns the same polynomial") {
    Rng rng(707);
    for (int t = 0; t < 40; ++t) {
        int n = rng.uniform_int(1, 4);
        Polynomial p = random_polynomial(rng, n, 0, 4, 5);
        Polynomial q = parse_poly(p.to_string(), n);
        CHECK(p == q);
        CHECK(p.to_string() == q.to_string());
    }
}
