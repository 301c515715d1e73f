#pragma once

#include <string>
#include <utility>
#include <vector>

#include "veronese/cliques.hpp"
#include "veronese/lattice.hpp"

namespace veronese {

/// A quadratic binomial relation of the presentation ideal: the unsorted pair
/// of generator indices (the leading term) and its sort (the trailing term).
struct BinomialPair {
    std::pair<int, int> lead;   // global point indices, lex-larger first
    std::pair<int, int> trail;  // indices of sort_pair(lead), lex-larger first

    friend bool operator==(const BinomialPair&, const BinomialPair&) = default;
};

/// Generator exponent tuples of the ideal (same content as enumerate_points).
std::vector<Tuple> generators_I(const Config& config);

/// One binomial per unsorted unordered pair of generators; the lead pairs are
/// exactly the non-edges of the sortedness graph.
std::vector<BinomialPair> groebner_pairs(const PointTable& table);

/// Generator of the dual ideal: all point indices outside one maximal clique
/// (a minimal vertex cover of the complement graph), sorted ascending.
struct DualGenerator {
    std::vector<int> support;
};

/// One dual generator per maximal clique, in clique enumeration order; all
/// have degree t - n.
std::vector<DualGenerator> alexander_dual_generators(const PointTable& table,
                                                     const std::vector<MaximalClique>& cliques);

enum class CasObject { Ideal, Groebner, Dual };

/// Plain-text script declaring the polynomial rings and the requested object
/// in generic computer-algebra syntax, for external cross-verification.
/// Variables T_i are indexed by the global lex-descending point index; a
/// comment block maps each index to its exponent tuple.
std::string export_cas(const Config& config, CasObject what);

}  // namespace veronese
