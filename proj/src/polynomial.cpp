#include "lsv/polynomial.hpp"

#include <sstream>

#include "lsv/matrix.hpp"

namespace lsv {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(MultiIndex(static_cast<std::size_t>(nvars)), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw Error("variable index out of range");
    MultiIndex m(static_cast<std::size_t>(nvars));
    m[i] = 1;
    return monomial(m, Rational(1));
}

Polynomial Polynomial::monomial(const MultiIndex& m, const Rational& c) {
    Polynomial p(static_cast<int>(m.size()));
    p.add_term(m, c);
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

Rational Polynomial::coeff(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::set_coeff(const MultiIndex& m, const Rational& c) {
    if (static_cast<int>(m.size()) != nvars_)
        throw DimensionMismatch("monomial has wrong variable count");
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

void Polynomial::add_term(const MultiIndex& m, const Rational& c) {
    if (static_cast<int>(m.size()) != nvars_)
        throw DimensionMismatch("monomial has wrong variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial p(nvars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial p = *this;
    p += o;
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial p = *this;
    p -= o;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw DimensionMismatch("adding polynomials in different variable counts");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw DimensionMismatch("subtracting polynomials in different variable counts");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("multiplying polynomials in different variable counts");
    Polynomial p(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            MultiIndex m(static_cast<std::size_t>(nvars_));
            for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            p.add_term(m, ca * cb);
        }
    }
    return p;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial p(nvars_);
    if (c == 0) return p;
    for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
    return p;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionMismatch("evaluation point has wrong length");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < nvars_; ++i) {
            for (int e = 0; e < m[i]; ++e) v *= point[i];
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Polynomial p(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.degree() == d) p.terms_.emplace(m, c);
    }
    return p;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
}

Polynomial Polynomial::truncated(int maxdeg) const {
    Polynomial p(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.degree() <= maxdeg) p.terms_.emplace(m, c);
    }
    return p;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw Error("variable index out of range");
    Polynomial p(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        p.add_term(m.without_one(static_cast<std::size_t>(var)),
                   c * Rational(m[var]));
    }
    return p;
}

Polynomial Polynomial::substituted(const std::vector<Polynomial>& subs,
                                   int truncate_deg) const {
    if (static_cast<int>(subs.size()) != nvars_)
        throw DimensionMismatch("substitution list has wrong length");
    int target_vars = subs.empty() ? 0 : subs[0].nvars();
    for (const auto& s : subs) {
        if (s.nvars() != target_vars)
            throw DimensionMismatch("substitution polynomials disagree on variables");
    }
    // memoized powers of each substituted variable
    std::vector<std::vector<Polynomial>> powers(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i)
        powers[i].push_back(Polynomial::constant(target_vars, Rational(1)));
    auto power = [&](std::size_t i, int e) -> const Polynomial& {
        while (static_cast<int>(powers[i].size()) <= e) {
            Polynomial next = powers[i].back() * subs[i];
            if (truncate_deg >= 0) next = next.truncated(truncate_deg);
            powers[i].push_back(std::move(next));
        }
        return powers[i][static_cast<std::size_t>(e)];
    };

    Polynomial out(target_vars);
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(target_vars, c);
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            term = term * power(static_cast<std::size_t>(i), m[i]);
            if (truncate_deg >= 0) term = term.truncated(truncate_deg);
            if (term.is_zero()) break;
        }
        out += term;
    }
    return out;
}

std::vector<Rational> Polynomial::gradient_at(
    const std::vector<Rational>& p) const {
    std::vector<Rational> g;
    g.reserve(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) g.push_back(derivative(i).eval(p));
    return g;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest degree first reads naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = m.degree() > 0;
        if (a != 1 || !has_vars) {
            os << rat_to_string(a);
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << "x" << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

Polynomial compose_affine(const Polynomial& p, const Matrix& A,
                          const std::vector<Rational>& b) {
    if (A.rows() != p.nvars())
        throw DimensionMismatch("affine map has wrong number of rows");
    if (static_cast<int>(b.size()) != p.nvars())
        throw DimensionMismatch("affine offset has wrong length");
    std::vector<Polynomial> subs;
    subs.reserve(static_cast<std::size_t>(p.nvars()));
    for (int i = 0; i < p.nvars(); ++i) {
        Polynomial s(A.cols());
        if (b[static_cast<std::size_t>(i)] != 0)
            s += Polynomial::constant(A.cols(), b[static_cast<std::size_t>(i)]);
        for (int j = 0; j < A.cols(); ++j) {
            if (A.at(i, j) != 0)
                s += Polynomial::variable(A.cols(), j) * A.at(i, j);
        }
        subs.push_back(std::move(s));
    }
    return p.substituted(subs);
}

Polynomial restrict_linear(const Polynomial& p, const Matrix& directions) {
    return compose_affine(
        p, directions,
        std::vector<Rational>(static_cast<std::size_t>(p.nvars()), Rational(0)));
}

}  // namespace lsv
