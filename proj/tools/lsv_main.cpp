#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lsv/corpus.hpp"
#include "lsv/errors.hpp"
#include "lsv/graph_jet.hpp"
#include "lsv/io_json.hpp"
#include "lsv/osculation.hpp"
#include "lsv/parse.hpp"
#include "lsv/polynomial.hpp"
#include "lsv/quadrics.hpp"
#include "lsv/variety.hpp"
#include "lsv/verify.hpp"

namespace {

using lsv::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lsv::Error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw lsv::Error(path + ": " + e.what());
    }
}

std::string trimmed_copy(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<lsv::Rational> parse_vector(const std::string& text) {
    std::vector<lsv::Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(lsv::rat_from_string(trimmed_copy(item)));
    if (out.empty()) throw lsv::Error("empty coordinate list");
    return out;
}

std::string vec_str(const std::vector<lsv::Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += lsv::rat_to_string(v[i]);
    }
    return s + ")";
}

std::string mono_str(const lsv::MultiIndex& m) {
    return lsv::Polynomial::monomial(m, lsv::Rational(1)).to_string();
}

// True when the text uses the variable x0 (projective-style input).
bool mentions_x0(const std::string& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == 'x' && s[i + 1] == '0' &&
            (i + 2 == s.size() || !std::isdigit(static_cast<unsigned char>(s[i + 2]))))
            return true;
    return false;
}

// Substitutes x_chart = 1 and renumbers the remaining variables.
lsv::Polynomial dehomogenized(const lsv::Polynomial& p, int chart) {
    int n = p.nvars();
    lsv::Matrix A(n, n - 1);
    for (int i = 0; i < n; ++i) {
        if (i < chart) A.at(i, i) = 1;
        if (i > chart) A.at(i, i - 1) = 1;
    }
    std::vector<lsv::Rational> b(static_cast<std::size_t>(n), lsv::Rational(0));
    b[static_cast<std::size_t>(chart)] = 1;
    return lsv::compose_affine(p, A, b);
}

// Variety input shared by the geometric verbs: a JSON file (term lists or
// "exprs" strings) or inline --gen expressions, with optional --chart
// dehomogenization of homogeneous coordinates x0..x_{N-1}.
struct VarietyInput {
    std::string path;
    std::vector<std::string> gens;
    int ambient = -1;
    int dim = -1;
    int chart = -1;

    void add_flags(CLI::App* sub) {
        sub->add_option("--variety", path, "variety JSON file");
        sub->add_option("--gen", gens,
                        "inline generator expression (repeatable; needs --ambient)");
        sub->add_option("--ambient", ambient, "ambient dimension for --gen input");
        sub->add_option("--dim", dim,
                        "expected dimension (default: ambient minus generator count)");
        sub->add_option("--chart", chart,
                        "dehomogenize projective input x0..x_{N-1} at x_i = 1");
    }

    lsv::Variety load() const {
        bool projective = chart >= 0;
        int amb;
        int expected;
        std::vector<std::string> exprs;
        std::vector<lsv::Polynomial> parsed;
        if (!path.empty()) {
            if (!gens.empty()) throw lsv::Error("give --variety or --gen, not both");
            json j = load_json_file(path);
            amb = j.at("ambient_dim").get<int>();
            expected = j.at("expected_dim").get<int>();
            if (j.contains("exprs")) {
                for (const json& e : j.at("exprs")) exprs.push_back(e.get<std::string>());
            } else {
                for (const json& g : j.at("generators"))
                    parsed.push_back(lsv::poly_from_json(g, amb));
            }
        } else {
            if (gens.empty()) throw lsv::Error("a variety is required (--variety or --gen)");
            if (ambient < 1) throw lsv::Error("--gen input needs --ambient");
            amb = ambient;
            expected = dim >= 0 ? dim : amb - static_cast<int>(gens.size());
            exprs = gens;
        }
        for (const std::string& e : exprs) {
            if (!projective && mentions_x0(e))
                throw lsv::Error(
                    "projective input (x0 present) needs --chart to pick an affine chart");
            parsed.push_back(lsv::parse_poly(e, amb, projective ? 0 : 1));
        }
        if (projective) {
            if (chart >= amb) throw lsv::Error("--chart index out of range");
            for (const auto& g : parsed)
                if (!g.is_homogeneous())
                    throw lsv::Error("--chart needs homogeneous generators");
            std::vector<lsv::Polynomial> affine;
            for (const auto& g : parsed) affine.push_back(dehomogenized(g, chart));
            parsed = std::move(affine);
            amb -= 1;
        }
        lsv::Variety v{amb, expected, parsed};
        v.check_well_formed();
        return v;
    }
};

// Linear-space input: a JSON file or inline --base/--dir flags, always in
// the affine (chart) coordinates of the variety.
struct SpaceInput {
    std::string path;
    std::string base;
    std::vector<std::string> dirs;

    void add_flags(CLI::App* sub) {
        sub->add_option("--space", path, "linear-space JSON file");
        sub->add_option("--base", base, "inline base point, e.g. \"0,0,0\"");
        sub->add_option("--dir", dirs, "inline direction vector (repeatable)");
    }

    lsv::LinearSpace load(int ambient_dim) const {
        if (!path.empty()) {
            if (!base.empty() || !dirs.empty())
                throw lsv::Error("give --space or --base/--dir, not both");
            return load_json_file(path).get<lsv::LinearSpace>();
        }
        if (dirs.empty()) throw lsv::Error("a space is required (--space or --dir)");
        std::vector<lsv::Rational> p =
            base.empty() ? std::vector<lsv::Rational>(
                               static_cast<std::size_t>(ambient_dim), lsv::Rational(0))
                         : parse_vector(base);
        std::vector<std::vector<lsv::Rational>> cols;
        for (const std::string& d : dirs) cols.push_back(parse_vector(d));
        lsv::LinearSpace L{p, lsv::Matrix::from_columns(cols)};
        L.check_well_formed();
        return L;
    }
};

lsv::QuadricSystem load_system(const std::string& path) {
    return load_json_file(path).get<lsv::QuadricSystem>();
}

std::vector<std::vector<lsv::Rational>> load_vector_list(const std::string& path) {
    return load_json_file(path).get<std::vector<std::vector<lsv::Rational>>>();
}

void emit(bool json_mode, const json& machine, const std::string& human) {
    if (json_mode)
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << human;
}

std::string osculation_text(const lsv::OsculationReport& r) {
    std::ostringstream os;
    if (r.at_least_max) {
        os << "osculation order: at least " << r.max_order_checked << " (checked through "
           << r.max_order_checked << ")\n";
    } else {
        os << "osculation order: " << r.order_found << " (checked through "
           << r.max_order_checked << ")\n";
        if (r.first_obstruction)
            os << "first obstruction: degree " << r.first_obstruction->degree
               << " in normal component " << r.first_obstruction->mu << " at monomial "
               << mono_str(r.first_obstruction->monomial) << "\n";
    }
    return os.str();
}

std::string genericity_text(const lsv::GenericityReport& g) {
    std::ostringstream os;
    os << "full rank reached: " << (g.full ? "yes" : "no") << "\n";
    os << "cumulative rank " << g.cumulative_rank << " of target " << g.target_dim
       << " through jet order " << g.max_order << " (threshold order " << g.threshold_m
       << ")\n";
    os << "new rank by order:";
    for (std::size_t i = 0; i < g.new_rank_per_order.size(); ++i)
        os << " " << (i + 2) << ":" << g.new_rank_per_order[i];
    os << "\n";
    return os.str();
}

// Default jet order for decide/genericity: the generic threshold when the
// shape admits one, otherwise 2.
int auto_order(int n, int k, int a) {
    if (k >= 1 && k <= n - 1 && a >= 1) return std::max(2, lsv::generic_threshold(n, k, a));
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact containment and osculation calculator for varieties and linear spaces"};
    app.require_subcommand(1);
    bool json_mode = false;
    int rc = 0;

    // threshold
    struct {
        int n = 0, k = 0, a = 0;
        std::optional<int> block;
    } th;
    CLI::App* threshold = app.add_subcommand("threshold", "generic jet order needed to force containment");
    threshold->add_option("-n", th.n, "variety dimension")->required();
    threshold->add_option("-k", th.k, "linear-space dimension")->required();
    threshold->add_option("-a", th.a, "codimension")->required();
    threshold->add_option("--block", th.block, "override the effective block dimension w");
    threshold->add_flag("--json", json_mode, "emit JSON");
    threshold->callback([&] {
        int m = th.block ? lsv::generic_threshold_block(th.n, th.k, th.a, *th.block)
                         : lsv::generic_threshold(th.n, th.k, th.a);
        emit(json_mode,
             json{{"n", th.n}, {"k", th.k}, {"a", th.a}, {"m", m}},
             "m = " + std::to_string(m) + "\n");
    });

    // osculation
    struct {
        VarietyInput var;
        SpaceInput space;
        int max_order = 10;
    } osc;
    CLI::App* osculation = app.add_subcommand("osculation", "osculation order of a linear space at its base point");
    osc.var.add_flags(osculation);
    osc.space.add_flags(osculation);
    osculation->add_option("--max-order", osc.max_order, "highest jet order to check");
    osculation->add_flag("--json", json_mode, "emit JSON");
    osculation->callback([&] {
        lsv::Variety V = osc.var.load();
        lsv::LinearSpace L = osc.space.load(V.ambient_dim);
        lsv::GraphChart chart = lsv::implicit_to_graph(V, L.base_point, osc.max_order);
        lsv::Matrix dirs = lsv::tangent_directions(chart, L);
        lsv::OsculationReport r = lsv::osculation_order(chart.jet, dirs, osc.max_order);
        emit(json_mode, json(r), osculation_text(r));
    });

    // contains
    struct {
        VarietyInput var;
        SpaceInput space;
    } con;
    CLI::App* contains = app.add_subcommand("contains", "exact containment oracle");
    con.var.add_flags(contains);
    con.space.add_flags(contains);
    contains->add_flag("--json", json_mode, "emit JSON");
    contains->callback([&] {
        lsv::Variety V = con.var.load();
        lsv::LinearSpace L = con.space.load(V.ambient_dim);
        bool inside = lsv::contains_linear_space(V, L);
        emit(json_mode, json{{"contained", inside}},
             std::string(inside ? "contained" : "not contained") + "\n");
    });

    // forms
    struct {
        VarietyInput var;
        std::string point;
        int degree = 2;
        std::optional<int> order;
    } fo;
    CLI::App* forms = app.add_subcommand("forms", "fundamental forms of the local graph at a smooth point");
    fo.var.add_flags(forms);
    forms->add_option("--point", fo.point, "smooth point, e.g. \"0,0,0\"")->required();
    forms->add_option("--degree", fo.degree, "form degree (default 2)");
    forms->add_option("--order", fo.order, "jet order of the chart (default: the degree)");
    forms->add_flag("--json", json_mode, "emit JSON");
    forms->callback([&] {
        lsv::Variety V = fo.var.load();
        int order = fo.order ? *fo.order : std::max(2, fo.degree);
        lsv::GraphChart chart =
            lsv::implicit_to_graph(V, parse_vector(fo.point), order);
        lsv::FundamentalForm f = lsv::fundamental_form(chart.jet, fo.degree);
        std::ostringstream os;
        for (std::size_t mu = 0; mu < f.components.size(); ++mu)
            os << "F_" << f.degree << "[" << mu << "] = "
               << f.components[mu].to_string() << "\n";
        emit(json_mode, json(f), os.str());
    });

    // singloc
    struct {
        std::string system;
    } sl;
    CLI::App* singloc = app.add_subcommand("singloc", "common kernel of a quadric system");
    singloc->add_option("--system", sl.system, "quadric-system JSON file")->required();
    singloc->add_flag("--json", json_mode, "emit JSON");
    singloc->callback([&] {
        auto basis = lsv::singular_locus(load_system(sl.system));
        std::ostringstream os;
        os << "singular locus dimension: " << basis.size() << "\n";
        for (const auto& v : basis) os << "  " << vec_str(v) << "\n";
        emit(json_mode, json{{"dim", basis.size()}, {"basis", basis}}, os.str());
    });

    // prolong
    struct {
        std::string system;
    } pr;
    CLI::App* prolong = app.add_subcommand("prolong", "cubics whose partial derivatives all lie in the system");
    prolong->add_option("--system", pr.system, "quadric-system JSON file")->required();
    prolong->add_flag("--json", json_mode, "emit JSON");
    prolong->callback([&] {
        auto cubics = lsv::prolongation(load_system(pr.system));
        std::ostringstream os;
        if (cubics.empty()) {
            os << "prolongation is empty\n";
        } else {
            os << "prolongation dimension: " << cubics.size() << "\n";
            for (const auto& c : cubics) os << "  " << c.to_string() << "\n";
        }
        emit(json_mode, json{{"dim", cubics.size()}, {"cubics", cubics}}, os.str());
    });

    // classify-pencil
    struct {
        std::string system;
        std::string hyperplane;
    } cp;
    CLI::App* classify = app.add_subcommand("classify-pencil", "normal form of a pencil of quadrics vanishing on a hyperplane");
    classify->add_option("--system", cp.system, "quadric-system JSON file")->required();
    classify->add_option("--hyperplane", cp.hyperplane,
                         "JSON file with a basis of the hyperplane (default: last coordinate zero)");
    classify->add_flag("--json", json_mode, "emit JSON");
    classify->callback([&] {
        lsv::QuadricSystem S = load_system(cp.system);
        std::vector<std::vector<lsv::Rational>> H;
        if (!cp.hyperplane.empty()) {
            H = load_vector_list(cp.hyperplane);
        } else {
            for (int i = 0; i + 1 < S.n; ++i) {
                std::vector<lsv::Rational> e(static_cast<std::size_t>(S.n), lsv::Rational(0));
                e[static_cast<std::size_t>(i)] = 1;
                H.push_back(std::move(e));
            }
        }
        lsv::PencilClassification c = lsv::classify_pencil_with_hyperplane_base(S, H);
        std::ostringstream os;
        os << "case " << c.case_label << "\n";
        os << "hyperplane form: " << vec_str(c.hyperplane_form) << "\n";
        if (!c.lambdas.empty()) {
            os << "lambda forms:\n";
            for (const auto& l : c.lambdas) os << "  " << vec_str(l) << "\n";
        }
        emit(json_mode, json(c), os.str());
    });

    // gauss-fiber
    struct {
        VarietyInput var;
        SpaceInput space;
    } gf;
    CLI::App* gauss = app.add_subcommand("gauss-fiber", "Gauss-map fiber directions inside a tangent linear space");
    gf.var.add_flags(gauss);
    gf.space.add_flags(gauss);
    gauss->add_flag("--json", json_mode, "emit JSON");
    gauss->callback([&] {
        lsv::Variety V = gf.var.load();
        lsv::LinearSpace L = gf.space.load(V.ambient_dim);
        lsv::GraphChart chart = lsv::implicit_to_graph(V, L.base_point, 2);
        lsv::GaussFiberReport r = lsv::gauss_fiber_in_L(chart, L, &V);
        std::ostringstream os;
        os << "fiber dimension: " << r.dim << " (lower bound " << r.lower_bound << ")\n";
        for (const auto& v : r.fiber) os << "  " << vec_str(v) << "\n";
        if (r.contained)
            os << "fiber span contained in the variety: " << (*r.contained ? "yes" : "no")
               << "\n";
        emit(json_mode, json(r), os.str());
    });

    // genericity
    struct {
        VarietyInput var;
        SpaceInput space;
        std::optional<int> max_order;
    } ge;
    CLI::App* genericity = app.add_subcommand("genericity", "rank profile of the coefficient-slice maps along a space");
    ge.var.add_flags(genericity);
    ge.space.add_flags(genericity);
    genericity->add_option("--max-order", ge.max_order,
                           "highest jet order to stack (default: the threshold order)");
    genericity->add_flag("--json", json_mode, "emit JSON");
    genericity->callback([&] {
        lsv::Variety V = ge.var.load();
        lsv::LinearSpace L = ge.space.load(V.ambient_dim);
        int m = ge.max_order ? *ge.max_order
                             : auto_order(V.expected_dim, L.dim(),
                                          V.ambient_dim - V.expected_dim);
        lsv::GraphChart chart = lsv::implicit_to_graph(V, L.base_point, m);
        lsv::Matrix dirs = lsv::tangent_directions(chart, L);
        lsv::AdaptedSplit split = lsv::adapt_to_linear_space(chart.jet, dirs);
        lsv::GenericityReport g = lsv::genericity_check(split, m);
        emit(json_mode, json(g), genericity_text(g));
    });

    // decide
    struct {
        VarietyInput var;
        SpaceInput space;
        std::string jet_path;
        std::vector<std::string> jet_dirs;
        std::optional<int> max_order;
    } de;
    CLI::App* decide = app.add_subcommand("decide", "is the linear space contained in the variety?");
    de.var.add_flags(decide);
    de.space.add_flags(decide);
    decide->add_option("--jet", de.jet_path,
                       "graph-jet JSON file (jet-only decision; needs --jet-dir)");
    decide->add_option("--jet-dir", de.jet_dirs,
                       "tangent direction in jet coordinates (repeatable)");
    decide->add_option("--max-order", de.max_order,
                       "highest jet order to check (default: the threshold order)");
    decide->add_flag("--json", json_mode, "emit JSON");
    decide->callback([&] {
        lsv::Decision d;
        if (!de.jet_path.empty()) {
            lsv::GraphJet jet = load_json_file(de.jet_path).get<lsv::GraphJet>();
            if (de.jet_dirs.empty()) throw lsv::Error("--jet needs --jet-dir directions");
            std::vector<std::vector<lsv::Rational>> cols;
            for (const std::string& s : de.jet_dirs) cols.push_back(parse_vector(s));
            lsv::Matrix dirs = lsv::Matrix::from_columns(cols);
            int m = de.max_order
                        ? *de.max_order
                        : std::min(jet.order,
                                   auto_order(jet.n, dirs.cols(), jet.a));
            d = lsv::decide_jet(jet, dirs, m);
        } else {
            lsv::Variety V = de.var.load();
            lsv::LinearSpace L = de.space.load(V.ambient_dim);
            int m = de.max_order ? *de.max_order
                                 : auto_order(V.expected_dim, L.dim(),
                                              V.ambient_dim - V.expected_dim);
            d = lsv::decide(V, L, m);
        }
        std::ostringstream os;
        if (d.verdict == lsv::Verdict::undetermined)
            os << "undetermined (checked through jet order "
               << d.osculation.max_order_checked << ")\n";
        else
            os << (d.verdict == lsv::Verdict::contained ? "contained" : "not contained")
               << "\n";
        if (!d.note.empty()) os << "note: " << d.note << "\n";
        emit(json_mode, json(d), os.str());
        if (d.verdict == lsv::Verdict::undetermined) rc = 2;
    });

    // verify
    struct {
        std::string id;
        std::uint64_t seed = 1;
        int trials = 100;
        int threads = 0;
        std::optional<long> n, k, a, w, span, degree;
    } ve;
    CLI::App* verify = app.add_subcommand("verify", "seeded statement-check suites");
    verify->add_option("id", ve.id, "suite id (thm1..thm5, thm6_lemma)")->required();
    verify->add_option("--seed", ve.seed, "master seed");
    verify->add_option("--trials", ve.trials, "number of seeded trials");
    verify->add_option("--threads", ve.threads, "worker threads (default: LSV_THREADS or 1)");
    verify->add_option("-n", ve.n, "restrict the shape grid: variety dimension");
    verify->add_option("-k", ve.k, "restrict the shape grid: space dimension");
    verify->add_option("-a", ve.a, "restrict the shape grid: codimension");
    verify->add_option("-w", ve.w, "restrict the shape grid: block dimension");
    verify->add_option("--span", ve.span, "restrict the shape grid: system span");
    verify->add_option("--degree", ve.degree, "restrict the shape grid: generator degree");
    verify->add_flag("--json", json_mode, "emit JSON");
    verify->callback([&] {
        std::map<std::string, long> params;
        if (ve.n) params["n"] = *ve.n;
        if (ve.k) params["k"] = *ve.k;
        if (ve.a) params["a"] = *ve.a;
        if (ve.w) params["w"] = *ve.w;
        if (ve.span) params["span"] = *ve.span;
        if (ve.degree) params["degree"] = *ve.degree;
        lsv::SuiteReport r =
            lsv::verify_theorem(ve.id, ve.seed, ve.trials, params, ve.threads);
        std::ostringstream os;
        os << "suite " << r.id << ": " << r.trials << " trials — " << r.passes
           << " pass, " << r.failures << " fail, " << r.inconclusive
           << " inconclusive\n";
        int shown = 0;
        for (const auto& rec : r.records) {
            if (rec.status != "fail" || shown >= 5) continue;
            os << "  fail seed " << rec.seed << ": " << rec.detail << "\n";
            ++shown;
        }
        os << "result: " << (r.ok() ? "ok" : "FAILED") << "\n";
        emit(json_mode, json(r), os.str());
        if (!r.ok()) rc = 3;
    });

    // corpus
    struct {
        std::string name;
        std::vector<std::string> params;
    } co;
    CLI::App* corpus = app.add_subcommand("corpus", "built-in worked examples");
    corpus->add_option("name", co.name, "corpus entry (omit to list names)");
    corpus->add_option("--param", co.params, "entry parameter as key=value (repeatable)");
    corpus->add_flag("--json", json_mode, "emit JSON");
    corpus->callback([&] {
        if (co.name.empty()) {
            std::ostringstream os;
            for (const std::string& n : lsv::corpus_names()) os << n << "\n";
            emit(json_mode, json(lsv::corpus_names()), os.str());
            return;
        }
        std::map<std::string, int> params;
        for (const std::string& kv : co.params) {
            std::size_t eq = kv.find('=');
            if (eq == std::string::npos)
                throw lsv::Error("--param expects key=value, got " + kv);
            params[trimmed_copy(kv.substr(0, eq))] =
                std::stoi(trimmed_copy(kv.substr(eq + 1)));
        }
        lsv::CorpusEntry e = lsv::corpus_variety(co.name, params);
        std::ostringstream os;
        os << "name: " << e.name << "\n";
        os << "ambient dimension " << e.variety.ambient_dim << ", expected dimension "
           << e.variety.expected_dim << "\n";
        os << "generators:\n";
        for (const auto& g : e.variety.generators) os << "  " << g.to_string() << "\n";
        os << "smooth points:\n";
        for (const auto& p : e.smooth_points) os << "  " << vec_str(p) << "\n";
        os << "spaces:\n";
        for (const auto& [name, space] : e.spaces) {
            os << "  " << name << ": base " << vec_str(space.base_point) << ", directions {";
            for (int c = 0; c < space.directions.cols(); ++c) {
                if (c) os << ", ";
                os << vec_str(space.directions.column(c));
            }
            os << "} — " << (e.contained.at(name) ? "contained" : "not contained") << "\n";
        }
        emit(json_mode, json(e), os.str());
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const lsv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
