#include "veronese/sorting.hpp"

#include <algorithm>

namespace veronese {

int SortingSignature::length() const {
    int len = 0;
    for (const auto& [lo, hi] : intervals) len += hi - lo;
    return len;
}

namespace {

void check_same_degree(const Tuple& u, const Tuple& v) {
    if (u.size() != v.size()) throw ArgumentError("sorting: tuples of different length");
    if (tuple_sum(u) != tuple_sum(v)) throw ArgumentError("sorting: tuples of different degree");
}

// Number of positions in [1, hi] congruent to r (mod p), with 1 <= r <= p.
long long positions_upto(long long hi, int r, int p) {
    if (hi < r) return 0;
    return (hi - r) / p + 1;
}

}  // namespace

std::pair<Tuple, Tuple> sort_pair(const Tuple& u, const Tuple& v) {
    check_same_degree(u, v);
    const int n = static_cast<int>(u.size());
    Tuple a(n), b(n);
    long long before = 0;
    for (int j = 0; j < n; ++j) {
        const int m = u[j] + v[j];
        // the j-indices occupy merged positions (before, before + m];
        // odd positions go to the first output
        const int first = (before % 2 == 0) ? (m + 1) / 2 : m / 2;
        a[j] = first;
        b[j] = m - first;
        before += m;
    }
    return {std::move(a), std::move(b)};
}

std::vector<Tuple> sort_many(const std::vector<Tuple>& tuples) {
    const int p = static_cast<int>(tuples.size());
    if (p < 2) throw ArgumentError("sort_many: needs at least two factors");
    for (int k = 1; k < p; ++k) check_same_degree(tuples[0], tuples[k]);

    const int n = static_cast<int>(tuples[0].size());
    std::vector<Tuple> out(p, Tuple(n, 0));
    long long before = 0;
    for (int j = 0; j < n; ++j) {
        int m = 0;
        for (const Tuple& t : tuples) m += t[j];
        for (int k = 0; k < p; ++k)
            out[k][j] = static_cast<int>(positions_upto(before + m, k + 1, p) -
                                         positions_upto(before, k + 1, p));
        before += m;
    }
    return out;
}

std::optional<SortingSignature> delta(const Tuple& a, const Tuple& b) {
    check_same_degree(a, b);
    if (lex_compare(a, b) <= 0) throw ArgumentError("delta: requires a >lex b");

    SortingSignature sig;
    int open = -1;  // 0-based start of a pending interval
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        const int diff = a[i] - b[i];
        if (diff == 0) continue;
        if (diff == 1 && open < 0) {
            open = i;
        } else if (diff == -1 && open >= 0) {
            sig.intervals.emplace_back(open + 1, i + 1);
            open = -1;
        } else {
            return std::nullopt;
        }
    }
    if (open >= 0) return std::nullopt;  // cannot happen with equal degrees
    return sig;
}

bool is_sorted_pair(const Tuple& a, const Tuple& b) {
    check_same_degree(a, b);
    const bool swap = lex_less(a, b);
    const Tuple& hi = swap ? b : a;
    const Tuple& lo = swap ? a : b;
    const auto [x, y] = sort_pair(hi, lo);
    return x == hi && y == lo;
}

}  // namespace veronese
