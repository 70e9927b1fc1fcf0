#pragma once

#include <vector>

#include "lsv/matrix.hpp"
#include "lsv/polynomial.hpp"

namespace lsv {

// Affine variety given by polynomial generators in ambient coordinates.
// expected_dim is the dimension the caller claims; smooth-point validation
// checks the Jacobian rank against ambient_dim - expected_dim.
struct Variety {
    int ambient_dim = 0;
    int expected_dim = 0;
    std::vector<Polynomial> generators;

    int codim() const { return ambient_dim - expected_dim; }
    void check_well_formed() const;
};

// Affine-linear space: base point plus independent direction vectors
// (columns of `directions`).
struct LinearSpace {
    std::vector<Rational> base_point;
    Matrix directions;  // ambient_dim x k, rank k

    int ambient_dim() const { return static_cast<int>(base_point.size()); }
    int dim() const { return directions.cols(); }
    void check_well_formed() const;
};

struct SmoothPointInfo {
    // positions of the coordinates whose Jacobian block is invertible;
    // complement hosts the lowest-index tangent coordinates
    std::vector<int> normal_positions;
    std::vector<int> tangent_positions;
    Matrix jacobian;  // generators x ambient, evaluated at the point
};

// Checks that p lies on V and that the Jacobian there has rank exactly
// codim(V). The invertible coordinate block is chosen so that the tangent
// coordinates occupy the lowest possible indices.
SmoothPointInfo validate_smooth_point(const Variety& V,
                                      const std::vector<Rational>& p);

// Exact containment oracle: every generator, composed with the affine
// parametrization of L, is the zero polynomial.
bool contains_linear_space(const Variety& V, const LinearSpace& L);

}  // namespace lsv
