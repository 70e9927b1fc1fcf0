#pragma once

#include <cstdint>

#include "lsv/quadrics.hpp"
#include "lsv/variety.hpp"

namespace lsv {

// Deterministic 64-bit generator with platform-independent output, so
// seeded runs reproduce everywhere.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next();
    int uniform_int(int lo, int hi);      // inclusive, bias-free
    Rational integer(int bound);          // uniform in [-bound, bound]
    Rational nonzero_integer(int bound);  // uniform in [-bound, bound] \ {0}
};

// Per-trial seed derived from a master seed and a trial index; independent
// of thread schedule.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

// Every monomial of total degree mindeg..maxdeg gets an integer coefficient
// in [-bound, bound] (zeros included, so the result is moderately sparse).
Polynomial random_polynomial(Rng& rng, int nvars, int mindeg, int maxdeg,
                             int bound);

Matrix random_symmetric(Rng& rng, int n, int bound);

// Product of elementary row shears with small integer multipliers:
// determinant 1, exact inverse, modest entries.
Matrix random_unimodular(Rng& rng, int n, int steps, int bound);

// Exact inverse; throws if the matrix is singular.
Matrix inverse(const Matrix& m);

enum class JetProfile {
    free_coefficients,  // nothing forced
    vanish_on_block,    // pure monomials of the first k coordinates are
                        // removed in degrees 2..vanish_order (the whole
                        // degree range when vanish_order < 0)
};

struct GraphFamilySpec {
    int n = 2;       // tangent dimension
    int a = 1;       // normal dimension
    int degree = 3;  // top coefficient degree
    JetProfile profile = JetProfile::free_coefficients;
    int k = 1;              // block size for vanish_on_block
    int vanish_order = -1;  // see JetProfile
    bool shear = true;      // hide the aligned block by a unimodular change
    int bound = 2;
};

struct GraphFamily {
    Variety variety;    // ambient n+a graph variety through the origin
    LinearSpace space;  // designated k-plane through the origin
    std::vector<Polynomial> tangent_coeffs;  // the graph functions, n vars
};

GraphFamily random_graph_variety(std::uint64_t seed,
                                 const GraphFamilySpec& spec);

struct SystemWithBaseLocus {
    QuadricSystem system;
    std::vector<std::vector<Rational>> w_basis;  // k independent vectors in
                                                 // the common base locus
};

// `a` quadrics on n variables all vanishing on a k-plane, produced from an
// aligned zero block and hidden by a unimodular conjugation.
SystemWithBaseLocus random_system_with_base_locus(std::uint64_t seed, int n,
                                                  int k, int a, int bound);

// w quadrics on w variables whose span has the prescribed dimension
// (span_dim in {w-1, w}).
QuadricSystem random_system_with_span(std::uint64_t seed, int w, int span_dim,
                                      int bound);

}  // namespace lsv
