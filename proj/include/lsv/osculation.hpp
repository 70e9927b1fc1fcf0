#pragma once

#include <optional>
#include <string>

#include "lsv/quadrics.hpp"

namespace lsv {

struct Obstruction {
    int degree = 0;  // first degree whose restriction to L is nonzero
    int mu = 0;      // normal direction carrying the obstruction
    MultiIndex monomial;  // first offending monomial of the restriction
};

struct OsculationReport {
    bool at_least_max = false;
    int order_found = 0;  // meaningful when !at_least_max
    std::optional<Obstruction> first_obstruction;
    int max_order_checked = 0;
};

// Largest m <= max_order such that every fundamental form of degree <= m
// vanishes on the span of the given tangent directions. The directions are
// columns in the jet's tangent coordinates.
OsculationReport osculation_order(const GraphJet& jet, const Matrix& dirs,
                                  int max_order);

// Smallest order m >= 2 at which a block of w coordinate slots, fed through
// a independent normal directions, can cut out all w*(n-k) first-order
// relations: a * (C(w+m, m) - (w+1)) > w * (n-k).
int generic_threshold_block(int n, int k, int a, int w);

// Threshold with the effective block dimension w = min(k, n-k).
int generic_threshold(int n, int k, int a);

// Tangent split adapted to a linear space: tangent coordinates are
// reordered and recombined as [xi | psi | rho] where psi spans the
// intersection of T_xL with the singular locus of the second fundamental
// system, xi completes it to T_xL, and rho completes the tangent space.
struct AdaptedSplit {
    GraphJet jet;  // rewritten in the adapted tangent coordinates
    int xi_dim = 0;
    int psi_dim = 0;
    int rho_dim = 0;
    Matrix tangent_change;  // n x n: adapted coords -> original chart coords

    int k() const { return xi_dim + psi_dim; }
    int w_dim() const { return xi_dim; }
};

AdaptedSplit adapt_to_linear_space(const GraphJet& jet, const Matrix& dirs);

// Degree-j coefficient-slice matrix. Rows are (normal index, degree-j
// exponent vector over the xi-block); columns are (xi index, rho index);
// the entry is
//   multiplicity of xi in alpha  *  coefficient of x^(alpha-xi) * x_rho.
// Requires the xi-block to osculate to order >= j.
Matrix build_R_map(const AdaptedSplit& split, int j);

struct GenericityReport {
    int max_order = 0;
    std::vector<int> new_rank_per_order;  // orders 2..max_order
    int cumulative_rank = 0;
    int target_dim = 0;  // w_dim * rho_dim
    bool full = false;
    int threshold_m = 0;
    int w_dim = 0;    // xi-block dimension actually used
    int m_dim = 0;    // rho-block dimension
    int psi_dim = 0;  // quotiented directions
    int forced_fiber_dim = 0;  // max(2k - n, 0) for this shape
};

// Stacks the coefficient-slice matrices for orders 2..m and reports how
// much of the w*(n-k)-dimensional relation space they span.
GenericityReport genericity_check(const AdaptedSplit& split, int m);

struct GaussFiberReport {
    std::vector<std::vector<Rational>> fiber;  // chart tangent coordinates
    int dim = 0;
    int lower_bound = 0;  // max(2k - n, 0)
    std::optional<bool> contained;  // oracle verdict when a variety is given
};

// Intersection of the singular locus of the second fundamental system with
// T_xL. Requires T_xL to be in the base locus of the system (osculation to
// order two), else throws NotOsculatingOrder2. When V is non-null and the
// fiber is nonzero, checks by the oracle that the affine span of the fiber
// through the base point lies in V.
GaussFiberReport gauss_fiber_in_L(const GraphChart& chart,
                                  const LinearSpace& L, const Variety* V);

// ---- wedge-cubic surjectivity -------------------------------------------

// Input: w quadrics q_eta on w variables (third-order coefficient slices
// r_{ij,eta}). The assembled map sends a degree-3 exponent vector to the
// symmetrized contraction  sum over splits (pair|single) of
// r_{pair,eta} v^eta ^ v^single.  Rows: degree-3 exponents; columns: pairs.
Matrix assemble_wedge_cubic_map(const QuadricSystem& R);

struct WedgeCubicReport {
    int w = 0;
    int system_span_dim = 0;
    int rank = 0;
    int target = 0;  // C(w, 2)
    bool surjective = false;
    bool zero_system = false;  // zero map: forces flat relations instead,
                               // and containment follows on that branch too
    bool vacuous = false;      // w <= 1, nothing to cover
};

WedgeCubicReport wedge_cubic_surjectivity(const QuadricSystem& R);

struct PairingNormalizationReport {
    WedgeCubicReport wedge;
    int degenerate_w = 0;  // min(k, 2k-n), flagged when <= 1
    bool degenerate_w_flag = false;
};

// Jet-level wrapper: normalizes the pairing of the xi-block with a
// complementary rho-subblock of the chosen hypersurface projection
// (q_{xi,eta'} = delta) and assembles the wedge-cubic map from the
// third-order coefficients. Throws PairingDegenerate when the second
// fundamental form does not pair the xi-block with full rank.
PairingNormalizationReport normalized_wedge_cubic(const AdaptedSplit& split,
                                                  int mu);

// ---- decision -------------------------------------------------------------

enum class Verdict { contained, not_contained, undetermined };

struct Decision {
    Verdict verdict = Verdict::undetermined;
    bool oracle_used = false;
    OsculationReport osculation;
    std::optional<GenericityReport> genericity;
    int threshold_m = 0;
    std::string note;
};

// Jet-only decision: a recorded obstruction refutes containment; a clean
// restriction up to the checked order is undetermined.
Decision decide_jet(const GraphJet& jet, const Matrix& dirs, int max_order);

// Full decision: the polynomial oracle is authoritative; jet diagnostics
// are attached for the report.
Decision decide(const Variety& V, const LinearSpace& L, int max_order);

}  // namespace lsv
