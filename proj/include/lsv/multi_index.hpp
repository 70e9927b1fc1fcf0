#pragma once

#include <compare>
#include <numeric>
#include <vector>

#include "lsv/errors.hpp"

namespace lsv {

// Exponent vector of a monomial in a fixed number of variables.
// Ordered by total degree first, then lexicographically, which gives the
// canonical term order used everywhere (maps, serialization, reports).
struct MultiIndex {
    std::vector<int> exps;

    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : exps(n, 0) {}
    explicit MultiIndex(std::vector<int> e) : exps(std::move(e)) {}

    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    std::size_t size() const { return exps.size(); }
    int operator[](std::size_t i) const { return exps[i]; }
    int& operator[](std::size_t i) { return exps[i]; }

    bool operator==(const MultiIndex& o) const { return exps == o.exps; }

    bool operator<(const MultiIndex& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        return exps < o.exps;
    }

    // exponent vector with one power of variable v removed; v must divide
    MultiIndex without_one(std::size_t v) const {
        if (v >= exps.size() || exps[v] == 0)
            throw Error("variable does not divide the monomial");
        MultiIndex m = *this;
        m.exps[v] -= 1;
        return m;
    }

    MultiIndex with_one(std::size_t v) const {
        MultiIndex m = *this;
        m.exps.at(v) += 1;
        return m;
    }
};

// All exponent vectors of total degree exactly d in n variables, in the
// canonical order.
std::vector<MultiIndex> monomials_of_degree(int n, int d);

// Number of monomials of degree exactly d in n variables: C(n+d-1, d).
long count_monomials(int n, int d);

}  // namespace lsv
