#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "veronese/types.hpp"

namespace veronese {

/// Where a lex-smaller tuple b loses and gains one unit relative to a:
/// a disjoint union of half-open intervals [lo, hi) with 1-based endpoints,
/// the coordinate at lo dropping by one and the coordinate at hi rising by
/// one for each interval.
struct SortingSignature {
    std::vector<std::pair<int, int>> intervals;

    int length() const;

    friend bool operator==(const SortingSignature&, const SortingSignature&) = default;
};

/// Sturmfels' sorting operator on a pair of same-degree tuples: merge the two
/// exponent index multisets in weakly increasing order, then deal the merged
/// indices alternately, odd positions to the first output and even positions
/// to the second.  The output pair is fixed by the operator.
///
/// The per-coordinate counting form is used here (no index list is ever
/// materialized); the literal dealing implementation lives in the test
/// oracles.
std::pair<Tuple, Tuple> sort_pair(const Tuple& u, const Tuple& v);

/// Sorting operator for p >= 2 factors: the k-th output receives the merged
/// indices at positions k, p + k, ..., (d-1)p + k.
std::vector<Tuple> sort_many(const std::vector<Tuple>& tuples);

/// The sorting signature set of a pair a >lex b of same-degree tuples, or
/// nullopt when the pair is unsorted.  The pair is sorted exactly when the
/// nonzero entries of a - b, read left to right, alternate +1, -1, ..., +1,
/// -1; the signature pairs each +1 position with the following -1 position.
std::optional<SortingSignature> delta(const Tuple& a, const Tuple& b);

/// True iff the pair, arranged lex-descending, is fixed by the sorting
/// operator.
bool is_sorted_pair(const Tuple& a, const Tuple& b);

}  // namespace veronese
