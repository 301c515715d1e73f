#pragma once

#include <string>
#include <utility>
#include <vector>

#include "veronese/cliques.hpp"
#include "veronese/lattice.hpp"

namespace veronese {

/// Deterministic rule breaking ties between equal-rank classes.  Both rules
/// are compliant; aggregate invariants must not depend on the choice.
enum class TieBreak {
    FirstTupleLexDesc,  // default: classes with lex-greater first tuple come first
    LastTupleLexAsc,    // alternate: classes with lex-smaller last tuple come first
};

const char* to_string(TieBreak tb);

struct OrderedClique {
    MaximalClique clique;
    int class_index = 0;         // into CliqueOrder::classes
    Signature relative;          // relative signature w.r.t. the class's marked L
    std::vector<int> vertices;   // global point indices, chain order
};

/// Total order on the maximal cliques: ranks ascend; equal-rank classes form
/// contiguous blocks arranged by the tie-break rule; inside a class, cliques
/// ascend in the lex order of their relative signatures.
struct CliqueOrder {
    Config config;
    TieBreak tie_break;
    PointTable table;
    std::vector<EquivalenceClass> classes;   // in block order
    std::vector<OrderedClique> sequence;
};

CliqueOrder build_order(const Config& config, TieBreak tb = TieBreak::FirstTupleLexDesc);

/// Number of predecessors of sequence[position] whose vertex set differs from
/// it in exactly one member.
int omega(const CliqueOrder& order, int position);

struct QuotientRecord {
    int clique = 0;                       // position in the order
    int omega = 0;
    std::vector<int> witness_positions;   // chain positions i whose member a^i is
                                          // removable by some predecessor, 1-based
    bool linear = true;
};

struct QuotientReport {
    std::vector<QuotientRecord> records;
    int max_omega = 0;
    long long top_count = 0;
    bool all_linear = true;
};

/// Colon-ideal check by direct monomial arithmetic: for each clique A, the
/// quotient by its predecessors is generated by the squarefree monomials on
/// the vertex sets A \ B; these are minimalized by divisibility (set
/// inclusion) and every minimal generator must be a single variable.  Also
/// computes omega two ways (predecessor count and witness count after
/// minimalization) and requires them to agree.
///
/// Throws TheoremViolationError if some quotient is not linear or some omega
/// exceeds n-1.
QuotientReport verify_linear_quotients(const CliqueOrder& order);

/// max omega over all cliques under the built order.
int projective_dimension(const Config& config, TieBreak tb = TieBreak::FirstTupleLexDesc);

/// (p, count) with p = projective dimension and count = #{A : omega(A) = p};
/// this is the top nonzero total Betti number of the dual ideal.
std::pair<int, long long> top_betti(const Config& config,
                                    TieBreak tb = TieBreak::FirstTupleLexDesc);

}  // namespace veronese
