#include "lsv/corpus.hpp"

namespace lsv {

namespace {

Polynomial var(int nvars, int i) { return Polynomial::variable(nvars, i); }

std::vector<Rational> point(std::initializer_list<long> xs) {
    std::vector<Rational> p;
    p.reserve(xs.size());
    for (long x : xs) p.push_back(Rational(x));
    return p;
}

LinearSpace axis_space(std::vector<Rational> base, int ambient,
                       std::initializer_list<int> dirs) {
    Matrix d(ambient, static_cast<int>(dirs.size()));
    int j = 0;
    for (int i : dirs) d.at(i, j++) = 1;
    return LinearSpace{std::move(base), std::move(d)};
}

LinearSpace vector_space(std::vector<Rational> base,
                         const std::vector<std::vector<Rational>>& dirs) {
    return LinearSpace{std::move(base), Matrix::from_columns(dirs)};
}

int param_or(const std::map<std::string, int>& params, const std::string& key,
             int fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

}  // namespace

std::vector<std::string> corpus_names() {
    return {"segre_quadric", "round_quadric",  "cone",
            "graph_cubic",   "ruled_graph",    "scroll_codim2",
            "veronese_chart", "perturbed_ruled"};
}

CorpusEntry corpus_variety(const std::string& name,
                           const std::map<std::string, int>& params) {
    CorpusEntry e;
    e.name = name;

    if (name == "segre_quadric") {
        // rank-4 quadric hypersurface; its two rulings through the point
        // (1,0,0,0) are coordinate lines
        e.variety = Variety{4, 3, {var(4, 0) * var(4, 3) - var(4, 1) * var(4, 2)}};
        e.smooth_points = {point({1, 0, 0, 0})};
        e.spaces["ruling_b"] = axis_space(point({1, 0, 0, 0}), 4, {1});
        e.spaces["ruling_c"] = axis_space(point({1, 0, 0, 0}), 4, {2});
        e.spaces["tangent_line"] =
            vector_space(point({1, 0, 0, 0}), {{Rational(0), Rational(1),
                                                Rational(1), Rational(0)}});
        e.contained = {{"ruling_b", true}, {"ruling_c", true},
                       {"tangent_line", false}};
        return e;
    }

    if (name == "round_quadric") {
        int n = param_or(params, "n", 3);
        if (n < 2) throw Error("round_quadric needs ambient dimension >= 2");
        Polynomial g = Polynomial::constant(n, Rational(-1));
        for (int i = 0; i < n; ++i) g += var(n, i) * var(n, i);
        e.variety = Variety{n, n - 1, {g}};
        std::vector<Rational> north(static_cast<std::size_t>(n), Rational(0));
        north.back() = 1;
        e.smooth_points = {north};
        e.spaces["tangent_line"] = axis_space(north, n, {0});
        e.contained = {{"tangent_line", false}};
        return e;
    }

    if (name == "cone") {
        e.variety = Variety{3, 2,
                            {var(3, 0) * var(3, 0) + var(3, 1) * var(3, 1) -
                             var(3, 2) * var(3, 2)}};
        e.smooth_points = {point({1, 0, 1})};
        std::vector<Rational> ruling_dir = point({1, 0, 1});
        e.spaces["ruling"] = vector_space(point({1, 0, 1}), {ruling_dir});
        // through the apex; the base point is singular, so only the
        // containment oracle applies
        e.spaces["apex_ruling"] = vector_space(point({0, 0, 0}), {ruling_dir});
        e.contained = {{"ruling", true}, {"apex_ruling", true}};
        return e;
    }

    if (name == "graph_cubic") {
        e.variety = Variety{3, 2, {var(3, 2) - var(3, 0) * var(3, 0) * var(3, 0)}};
        e.smooth_points = {point({0, 0, 0})};
        e.spaces["x1_axis"] = axis_space(point({0, 0, 0}), 3, {0});
        e.spaces["x2_axis"] = axis_space(point({0, 0, 0}), 3, {1});
        e.contained = {{"x1_axis", false}, {"x2_axis", true}};
        return e;
    }

    if (name == "ruled_graph") {
        e.variety = Variety{3, 2, {var(3, 2) - var(3, 0) * var(3, 1)}};
        e.smooth_points = {point({0, 0, 0})};
        e.spaces["x1_axis"] = axis_space(point({0, 0, 0}), 3, {0});
        e.spaces["diagonal"] =
            vector_space(point({0, 0, 0}), {point({1, 1, 0})});
        e.contained = {{"x1_axis", true}, {"diagonal", false}};
        return e;
    }

    if (name == "scroll_codim2") {
        e.variety = Variety{5, 3,
                            {var(5, 3) - var(5, 0) * var(5, 2),
                             var(5, 4) - var(5, 1) * var(5, 2)}};
        e.smooth_points = {point({0, 0, 0, 0, 0})};
        e.spaces["plane"] = axis_space(point({0, 0, 0, 0, 0}), 5, {0, 1});
        e.contained = {{"plane", true}};
        return e;
    }

    if (name == "veronese_chart") {
        e.variety = Variety{5, 2,
                            {var(5, 2) - var(5, 0) * var(5, 0),
                             var(5, 3) - var(5, 0) * var(5, 1),
                             var(5, 4) - var(5, 1) * var(5, 1)}};
        e.smooth_points = {point({0, 0, 0, 0, 0})};
        e.spaces["x1_axis"] = axis_space(point({0, 0, 0, 0, 0}), 5, {0});
        e.contained = {{"x1_axis", false}};
        return e;
    }

    if (name == "perturbed_ruled") {
        int d = param_or(params, "d", 4);
        if (d < 3) throw Error("perturbed_ruled needs degree >= 3");
        Polynomial pow = Polynomial::constant(3, Rational(1));
        for (int i = 0; i < d; ++i) pow = pow * var(3, 0);
        e.variety = Variety{3, 2, {var(3, 2) - var(3, 0) * var(3, 1) - pow}};
        e.smooth_points = {point({0, 0, 0})};
        e.spaces["x1_axis"] = axis_space(point({0, 0, 0}), 3, {0});
        e.contained = {{"x1_axis", false}};
        return e;
    }

    throw Error("unknown corpus entry: " + name);
}

}  // namespace lsv
