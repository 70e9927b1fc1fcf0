#pragma once

#include <vector>

#include "lsv/variety.hpp"

namespace lsv {

// Truncated graph representation of a variety near a smooth point: in
// adapted coordinates (tangent u_1..u_n first, then normal w_1..w_a) the
// variety is w_mu = f_mu(u) + O(order+1) with each f_mu a polynomial whose
// terms have degree between 2 and `order`.
struct GraphJet {
    int n = 0;      // tangent dimension
    int a = 0;      // normal dimension
    int order = 0;  // truncation order (inclusive)
    std::vector<Polynomial> coeffs;  // a polynomials in n variables

    void check_well_formed() const;
};

// A graph jet together with the chart that produced it. The chart map is
//   x = base_point + tangent_basis * u + E * w
// where E selects the normal coordinate positions.
struct GraphChart {
    GraphJet jet;
    std::vector<Rational> base_point;   // ambient
    Matrix tangent_basis;               // ambient x n
    std::vector<int> normal_positions;  // size a

    int ambient_dim() const { return static_cast<int>(base_point.size()); }

    // Full linear part of the chart map: columns are the tangent basis
    // followed by the normal coordinate unit vectors.
    Matrix frame() const;

    // Ambient point of the chart coordinates (u, w).
    std::vector<Rational> to_ambient(const std::vector<Rational>& u,
                                     const std::vector<Rational>& w) const;
};

// Solves the generators for the normal coordinates order by order.
// Tangent coordinates are the canonical echelon basis of the Jacobian
// kernel; normal coordinates are the block selected by
// validate_smooth_point. Throws SingularOrExcessCodim when the truncated
// system is inconsistent (the variety is thinner than declared near p).
GraphChart implicit_to_graph(const Variety& V, const std::vector<Rational>& p,
                             int order);

// Jet of the single graph equation w_mu = f_mu(u).
GraphJet project_to_hypersurface(const GraphJet& jet, int mu);

// Expresses an affine-linear space in the chart's tangent coordinates.
// Requires the chart base point to lie on L and every direction of L to be
// tangent (zero normal component); otherwise throws NotOsculatingOrder1.
// Returns an n x k matrix of tangent-coordinate directions.
Matrix tangent_directions(const GraphChart& chart, const LinearSpace& L);

// Inverse of tangent_directions on subspaces: ambient affine space through
// the chart base point spanned by the given tangent-coordinate vectors.
LinearSpace ambient_space_from_tangent(const GraphChart& chart,
                                       const std::vector<std::vector<Rational>>& tangent_vectors);

}  // namespace lsv
