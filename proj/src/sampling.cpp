#include "lsv/sampling.hpp"

namespace lsv {

std::uint64_t Rng::next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int Rng::uniform_int(int lo, int hi) {
    if (lo > hi) throw Error("empty integer range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw;
    do {
        draw = next();
    } while (draw >= limit);
    return lo + static_cast<int>(draw % span);
}

Rational Rng::integer(int bound) {
    return Rational(uniform_int(-bound, bound));
}

Rational Rng::nonzero_integer(int bound) {
    if (bound < 1) throw Error("nonzero draw needs bound >= 1");
    int v;
    do {
        v = uniform_int(-bound, bound);
    } while (v == 0);
    return Rational(v);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    Rng mix(master ^ (index + 1) * 0xd1342543de82ef95ULL);
    return mix.next();
}

Polynomial random_polynomial(Rng& rng, int nvars, int mindeg, int maxdeg,
                             int bound) {
    Polynomial p(nvars);
    for (int d = mindeg; d <= maxdeg; ++d)
        for (const MultiIndex& m : monomials_of_degree(nvars, d))
            p.add_term(m, rng.integer(bound));
    return p;
}

Matrix random_symmetric(Rng& rng, int n, int bound) {
    Matrix q(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Rational c = rng.integer(bound);
            q.at(i, j) = c;
            q.at(j, i) = c;
        }
    }
    return q;
}

Matrix random_unimodular(Rng& rng, int n, int steps, int bound) {
    Matrix t = Matrix::identity(n);
    if (n < 2) return t;
    for (int s = 0; s < steps; ++s) {
        int i = rng.uniform_int(0, n - 1);
        int j = rng.uniform_int(0, n - 2);
        if (j >= i) ++j;
        Rational c = rng.nonzero_integer(bound);
        for (int col = 0; col < n; ++col) t.at(i, col) += c * t.at(j, col);
    }
    return t;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    Matrix inv(m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        std::vector<Rational> e(static_cast<std::size_t>(m.rows()), Rational(0));
        e[static_cast<std::size_t>(j)] = 1;
        auto sol = solve(m, e);
        if (!sol) throw Error("matrix is singular");
        inv.set_column(j, *sol);
    }
    return inv;
}

GraphFamily random_graph_variety(std::uint64_t seed,
                                 const GraphFamilySpec& spec) {
    const int n = spec.n, a = spec.a;
    if (n < 1 || a < 1 || spec.degree < 2)
        throw Error("graph family needs n >= 1, a >= 1, degree >= 2");
    if (spec.k < 0 || spec.k > n) throw Error("block size out of range");
    Rng rng(seed);

    std::vector<Polynomial> coeffs;
    coeffs.reserve(a);
    for (int mu = 0; mu < a; ++mu) {
        Polynomial f = random_polynomial(rng, n, 2, spec.degree, spec.bound);
        if (spec.profile == JetProfile::vanish_on_block) {
            int cap = spec.vanish_order < 0 ? spec.degree : spec.vanish_order;
            Polynomial cleaned(n);
            for (const auto& [m, c] : f.terms()) {
                bool pure = true;
                for (int i = spec.k; i < n; ++i)
                    if (m[static_cast<std::size_t>(i)] != 0) {
                        pure = false;
                        break;
                    }
                if (pure && m.degree() <= cap) continue;
                cleaned.add_term(m, c);
            }
            f = std::move(cleaned);
        }
        coeffs.push_back(std::move(f));
    }

    Matrix t = spec.shear ? random_unimodular(rng, n, 2 * n, 1)
                          : Matrix::identity(n);
    std::vector<Polynomial> sheared;
    sheared.reserve(a);
    for (const Polynomial& f : coeffs) sheared.push_back(restrict_linear(f, t));

    // ambient generators x_{n+mu} - f_mu(T x_tangent)
    Matrix embed(n, n + a);
    for (int i = 0; i < n; ++i) embed.at(i, i) = 1;
    std::vector<Rational> tangent_zero(static_cast<std::size_t>(n), Rational(0));

    GraphFamily fam;
    fam.variety.ambient_dim = n + a;
    fam.variety.expected_dim = n;
    for (int mu = 0; mu < a; ++mu) {
        Polynomial g = Polynomial::variable(n + a, n + mu) -
                       compose_affine(sheared[static_cast<std::size_t>(mu)],
                                      embed, tangent_zero);
        fam.variety.generators.push_back(std::move(g));
    }
    fam.tangent_coeffs = std::move(sheared);

    Matrix tinv = inverse(t);
    Matrix dirs(n + a, spec.k);
    for (int j = 0; j < spec.k; ++j)
        for (int i = 0; i < n; ++i) dirs.at(i, j) = tinv.at(i, j);
    fam.space = LinearSpace{
        std::vector<Rational>(static_cast<std::size_t>(n + a), Rational(0)),
        std::move(dirs)};
    return fam;
}

SystemWithBaseLocus random_system_with_base_locus(std::uint64_t seed, int n,
                                                  int k, int a, int bound) {
    if (n < 2 || k < 1 || k > n - 1 || a < 1)
        throw Error("base-locus system needs n >= 2, 1 <= k <= n-1, a >= 1");
    Rng rng(seed);

    SystemWithBaseLocus out;
    out.system.n = n;
    Matrix t = random_unimodular(rng, n, 2 * n, 1);
    for (int mu = 0; mu < a; ++mu) {
        Matrix q = random_symmetric(rng, n, bound);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) q.at(i, j) = 0;
        out.system.quadrics.push_back(t.transposed() * q * t);
    }
    Matrix tinv = inverse(t);
    for (int j = 0; j < k; ++j) out.w_basis.push_back(tinv.column(j));
    return out;
}

QuadricSystem random_system_with_span(std::uint64_t seed, int w,
                                      int target_span, int bound) {
    if (w < 1 || target_span < 0 || target_span > w)
        throw Error("span dimension must lie between 0 and the block size");
    if (bound < 1) throw Error("span construction needs bound >= 1");
    Rng rng(seed);

    auto flatten = [w](const Matrix& q) {
        std::vector<Rational> v;
        for (int i = 0; i < w; ++i)
            for (int j = i; j < w; ++j) v.push_back(q.at(i, j));
        return v;
    };
    const int flat_dim = w * (w + 1) / 2;

    QuadricSystem sys;
    sys.n = w;
    std::vector<std::vector<Rational>> flats;
    while (static_cast<int>(sys.quadrics.size()) < target_span) {
        Matrix q = random_symmetric(rng, w, bound);
        std::vector<std::vector<Rational>> probe = flats;
        probe.push_back(flatten(q));
        if (span_dim(probe, flat_dim) != static_cast<int>(probe.size()))
            continue;
        flats = std::move(probe);
        sys.quadrics.push_back(std::move(q));
    }
    while (static_cast<int>(sys.quadrics.size()) < w) {
        Matrix q(w, w);
        for (int t = 0; t < target_span; ++t) {
            Rational c = rng.integer(bound);
            if (c == 0) continue;
            for (int i = 0; i < w; ++i)
                for (int j = 0; j < w; ++j)
                    q.at(i, j) += c * sys.quadrics[static_cast<std::size_t>(t)]
                                          .at(i, j);
        }
        sys.quadrics.push_back(std::move(q));
    }
    return sys;
}

}  // namespace lsv
