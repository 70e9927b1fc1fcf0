#include "lsv/variety.hpp"

#include <algorithm>

namespace lsv {

void Variety::check_well_formed() const {
    if (ambient_dim <= 0) throw Error("variety needs a positive ambient dimension");
    if (expected_dim < 0 || expected_dim >= ambient_dim)
        throw Error("expected dimension must lie strictly between 0 and the ambient dimension");
    if (generators.empty()) throw Error("variety needs at least one generator");
    for (const auto& g : generators) {
        if (g.nvars() != ambient_dim)
            throw DimensionMismatch("generator variable count differs from ambient dimension");
    }
}

void LinearSpace::check_well_formed() const {
    if (base_point.empty()) throw Error("linear space needs a base point");
    if (directions.rows() != ambient_dim())
        throw DimensionMismatch("direction vectors live in the wrong ambient space");
    if (directions.cols() < 1) throw Error("linear space needs at least one direction");
    if (exact_rank(directions) != directions.cols())
        throw Error("direction vectors are linearly dependent");
}

SmoothPointInfo validate_smooth_point(const Variety& V,
                                      const std::vector<Rational>& p) {
    V.check_well_formed();
    if (static_cast<int>(p.size()) != V.ambient_dim)
        throw DimensionMismatch("point has wrong length");
    for (const auto& g : V.generators) {
        if (g.eval(p) != 0) throw NotOnVariety("point does not satisfy the generators");
    }
    int a = V.codim();
    Matrix J(static_cast<int>(V.generators.size()), V.ambient_dim);
    for (std::size_t i = 0; i < V.generators.size(); ++i) {
        auto grad = V.generators[i].gradient_at(p);
        for (int j = 0; j < V.ambient_dim; ++j)
            J.at(static_cast<int>(i), j) = grad[static_cast<std::size_t>(j)];
    }
    if (exact_rank(J) != a)
        throw SingularOrExcessCodim("Jacobian rank differs from the declared codimension");

    // Normal block: greedy pivots scanning columns right to left. The
    // complement (tangent block) is then the lexicographically lowest
    // index set whose removal still leaves an invertible block.
    std::vector<int> normal;
    {
        Matrix work = J;
        std::vector<std::vector<Rational>> chosen;
        for (int c = V.ambient_dim - 1; c >= 0 && static_cast<int>(normal.size()) < a; --c) {
            auto col = work.column(c);
            chosen.push_back(col);
            if (span_dim(chosen, static_cast<int>(V.generators.size())) ==
                static_cast<int>(chosen.size())) {
                normal.push_back(c);
            } else {
                chosen.pop_back();
            }
        }
        std::reverse(normal.begin(), normal.end());
    }
    SmoothPointInfo info;
    info.normal_positions = normal;
    std::vector<bool> is_normal(static_cast<std::size_t>(V.ambient_dim), false);
    for (int c : normal) is_normal[static_cast<std::size_t>(c)] = true;
    for (int c = 0; c < V.ambient_dim; ++c) {
        if (!is_normal[static_cast<std::size_t>(c)]) info.tangent_positions.push_back(c);
    }
    info.jacobian = std::move(J);
    return info;
}

bool contains_linear_space(const Variety& V, const LinearSpace& L) {
    V.check_well_formed();
    L.check_well_formed();
    if (L.ambient_dim() != V.ambient_dim)
        throw DimensionMismatch("variety and space live in different ambient spaces");
    for (const auto& g : V.generators) {
        if (!compose_affine(g, L.directions, L.base_point).is_zero()) return false;
    }
    return true;
}

}  // namespace lsv
