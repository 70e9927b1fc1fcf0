#include "lsv/io_json.hpp"

namespace lsv {

void to_json(json& j, const MultiIndex& m) { j = m.exps; }
void from_json(const json& j, MultiIndex& m) {
    m.exps = j.get<std::vector<int>>();
    for (int e : m.exps)
        if (e < 0) throw Error("negative exponent in a monomial");
}

void to_json(json& j, const Polynomial& p) {
    j = json::array();
    for (const auto& [m, c] : p.terms())
        j.push_back({{"coeff", c}, {"exps", m}});
}

Polynomial poly_from_json(const json& j, int nvars) {
    if (!j.is_array()) throw Error("a polynomial must be a list of terms");
    if (nvars < 0) throw Error("negative variable count");
    Polynomial p(nvars);
    for (const json& t : j) {
        MultiIndex m = t.at("exps").get<MultiIndex>();
        if (static_cast<int>(m.size()) != nvars)
            throw Error("exponent vector length differs from the variable count");
        p.add_term(m, t.at("coeff").get<Rational>());
    }
    return p;
}

void from_json(const json& j, Polynomial& p) {
    // Standalone form: the variable count is read off the first term, so the
    // zero polynomial (an empty list) is only decodable through
    // poly_from_json, where the container supplies the dimension.
    if (!j.is_array()) throw Error("a polynomial must be a list of terms");
    if (j.empty())
        throw Error("cannot infer the variable count of an empty term list");
    p = poly_from_json(j, static_cast<int>(j.front().at("exps").size()));
}

void to_json(json& j, const Matrix& m) {
    j = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c));
        j.push_back(std::move(row));
    }
}

void from_json(const json& j, Matrix& m) {
    if (!j.is_array()) throw Error("a matrix must be a list of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows == 0 ? 0 : static_cast<int>(j.front().size());
    m = Matrix(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != cols)
            throw Error("ragged matrix rows");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = row[static_cast<std::size_t>(c)].get<Rational>();
    }
}

void to_json(json& j, const Variety& v) {
    j = json{{"ambient_dim", v.ambient_dim},
             {"expected_dim", v.expected_dim},
             {"generators", v.generators}};
}

void from_json(const json& j, Variety& v) {
    v.ambient_dim = j.at("ambient_dim").get<int>();
    v.expected_dim = j.at("expected_dim").get<int>();
    v.generators.clear();
    for (const json& g : j.at("generators"))
        v.generators.push_back(poly_from_json(g, v.ambient_dim));
    v.check_well_formed();
}

void to_json(json& j, const LinearSpace& l) {
    json dirs = json::array();
    for (int c = 0; c < l.directions.cols(); ++c)
        dirs.push_back(l.directions.column(c));
    j = json{{"point", l.base_point}, {"directions", std::move(dirs)}};
}

void from_json(const json& j, LinearSpace& l) {
    l.base_point = j.at("point").get<std::vector<Rational>>();
    auto dirs = j.at("directions").get<std::vector<std::vector<Rational>>>();
    l.directions = dirs.empty()
                       ? Matrix(static_cast<int>(l.base_point.size()), 0)
                       : Matrix::from_columns(dirs);
    l.check_well_formed();
}

void to_json(json& j, const QuadricSystem& s) {
    j = json{{"n", s.n}, {"quadrics", s.quadrics}};
}

void from_json(const json& j, QuadricSystem& s) {
    s.n = j.at("n").get<int>();
    s.quadrics = j.at("quadrics").get<std::vector<Matrix>>();
    s.check_well_formed();
}

void to_json(json& j, const GraphJet& jet) {
    j = json{{"n", jet.n}, {"a", jet.a}, {"order", jet.order},
             {"coeffs", jet.coeffs}};
}

void from_json(const json& j, GraphJet& jet) {
    jet.n = j.at("n").get<int>();
    jet.a = j.at("a").get<int>();
    jet.order = j.at("order").get<int>();
    jet.coeffs.clear();
    for (const json& f : j.at("coeffs"))
        jet.coeffs.push_back(poly_from_json(f, jet.n));
    jet.check_well_formed();
}

void to_json(json& j, const GraphChart& chart) {
    j = json{{"jet", chart.jet},
             {"base_point", chart.base_point},
             {"tangent_basis", chart.tangent_basis},
             {"normal_positions", chart.normal_positions}};
}

void to_json(json& j, const FundamentalForm& f) {
    j = json{{"degree", f.degree}, {"n", f.n}, {"a", f.a},
             {"components", f.components}};
}

void to_json(json& j, const AdaptedSplit& s) {
    j = json{{"jet", s.jet},
             {"xi_dim", s.xi_dim},
             {"psi_dim", s.psi_dim},
             {"rho_dim", s.rho_dim},
             {"tangent_change", s.tangent_change}};
}

void to_json(json& j, const Obstruction& o) {
    j = json{{"degree", o.degree}, {"component", o.mu},
             {"monomial", o.monomial}};
}

void to_json(json& j, const OsculationReport& r) {
    j = json{{"at_least_max", r.at_least_max},
             {"order_found", r.order_found},
             {"max_order_checked", r.max_order_checked},
             {"first_obstruction",
              r.first_obstruction ? json(*r.first_obstruction) : json()}};
}

void to_json(json& j, const GenericityReport& r) {
    j = json{{"max_order", r.max_order},
             {"new_rank_per_order", r.new_rank_per_order},
             {"cumulative_rank", r.cumulative_rank},
             {"target_dim", r.target_dim},
             {"full", r.full},
             {"threshold_m", r.threshold_m},
             {"w_dim", r.w_dim},
             {"m_dim", r.m_dim},
             {"psi_dim", r.psi_dim},
             {"forced_fiber_dim", r.forced_fiber_dim}};
}

void to_json(json& j, const GaussFiberReport& r) {
    j = json{{"fiber", r.fiber},
             {"dim", r.dim},
             {"lower_bound", r.lower_bound},
             {"contained", r.contained ? json(*r.contained) : json()}};
}

void to_json(json& j, const PencilClassification& c) {
    j = json{{"case_label", c.case_label},
             {"hyperplane_form", c.hyperplane_form},
             {"lambdas", c.lambdas}};
}

void to_json(json& j, const SinglocBoundReport& r) {
    j = json{{"per_quadric_w_singloc_dims", r.per_quadric_w_singloc_dims},
             {"common_w_singloc_dim", r.common_w_singloc_dim},
             {"common_singloc_dim", r.common_singloc_dim},
             {"per_quadric_bound_ok", r.per_quadric_bound_ok},
             {"hypothesis_holds", r.hypothesis_holds},
             {"conclusion_ok", r.conclusion_ok}};
}

void to_json(json& j, const WedgeCubicReport& r) {
    j = json{{"w", r.w},
             {"system_span_dim", r.system_span_dim},
             {"rank", r.rank},
             {"target", r.target},
             {"surjective", r.surjective},
             {"zero_system", r.zero_system},
             {"vacuous", r.vacuous}};
}

void to_json(json& j, const PairingNormalizationReport& r) {
    j = json{{"wedge", r.wedge},
             {"degenerate_w", r.degenerate_w},
             {"degenerate_w_flag", r.degenerate_w_flag}};
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::contained: return "contained";
        case Verdict::not_contained: return "not_contained";
        default: return "undetermined";
    }
}

void to_json(json& j, const Decision& d) {
    j = json{{"verdict", verdict_name(d.verdict)},
             {"oracle_used", d.oracle_used},
             {"osculation", d.osculation},
             {"genericity", d.genericity ? json(*d.genericity) : json()},
             {"threshold_m", d.threshold_m},
             {"note", d.note}};
}

void to_json(json& j, const TrialRecord& r) {
    j = json{{"seed", r.seed}, {"status", r.status}, {"detail", r.detail}};
}

void to_json(json& j, const SuiteReport& r) {
    j = json{{"id", r.id},
             {"params", r.params},
             {"master_seed", r.master_seed},
             {"trials", r.trials},
             {"passes", r.passes},
             {"failures", r.failures},
             {"inconclusive", r.inconclusive},
             {"ok", r.ok()},
             {"records", r.records}};
}

void to_json(json& j, const CorpusEntry& e) {
    j = json{{"name", e.name},
             {"variety", e.variety},
             {"smooth_points", e.smooth_points},
             {"spaces", e.spaces},
             {"contained", e.contained}};
}

}  // namespace lsv
