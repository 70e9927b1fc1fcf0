#include "lsv/multi_index.hpp"

#include <algorithm>

namespace lsv {

namespace {
void enumerate(int n, int d, int pos, MultiIndex& cur,
               std::vector<MultiIndex>& out) {
    if (pos == n - 1) {
        cur[pos] = d;
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur[pos] = e;
        enumerate(n, d - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}
}  // namespace

std::vector<MultiIndex> monomials_of_degree(int n, int d) {
    std::vector<MultiIndex> out;
    if (n <= 0) {
        if (d == 0) out.push_back(MultiIndex(std::size_t(0)));
        return out;
    }
    MultiIndex cur(static_cast<std::size_t>(n));
    enumerate(n, d, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

long count_monomials(int n, int d) {
    if (d < 0) return 0;
    if (n <= 0) return d == 0 ? 1 : 0;
    // C(n+d-1, d) without overflow at desk scale
    long num = 1;
    for (int i = 1; i <= d; ++i) num = num * (n - 1 + i) / i;
    return num;
}

}  // namespace lsv
