#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "veronese/lattice.hpp"
#include "veronese/sorting.hpp"
#include "veronese/types.hpp"

namespace veronese {

/// Sortedness graph on the global point indices: two distinct points are
/// adjacent iff the lex-larger-first pair is sorted.  Adjacency is kept as a
/// packed bit matrix (row-major, 64-bit words).
struct Graph {
    int vertex_count = 0;
    int words_per_row = 0;
    std::vector<std::uint64_t> bits;

    Graph() = default;
    explicit Graph(int n_vertices);

    bool adjacent(int u, int v) const {
        return (bits[static_cast<std::size_t>(u) * words_per_row + (v >> 6)] >> (v & 63)) & 1u;
    }
    void add_edge(int u, int v);
    const std::uint64_t* row(int v) const {
        return bits.data() + static_cast<std::size_t>(v) * words_per_row;
    }
    long long edge_count() const;
};

Graph build_graph(const PointTable& table);

/// Signature of a maximal clique: the permutation (s_1, ..., s_{n-1}) of
/// {1, ..., n-1}, in one-line notation, recording which jump links each pair
/// of consecutive chain members.
using Signature = std::vector<int>;

/// A maximal clique written as its lex-descending chain of n points together
/// with its signature.
struct MaximalClique {
    std::vector<Tuple> chain;
    Signature signature;

    friend bool operator==(const MaximalClique&, const MaximalClique&) = default;
};

/// Precedence constraints on the jump indices {1, ..., n-1} forced by the
/// zero and cap coordinates of a class's first tuple.  Stored transitively
/// closed; antisymmetry is checked at construction.
class ObstructionPoset {
public:
    ObstructionPoset() = default;
    ObstructionPoset(int ground_size, const std::vector<std::pair<int, int>>& covers);

    int ground_size() const { return m_; }

    /// p comes strictly before q in every legitimate signature (1-based values).
    bool less(int p, int q) const { return lt_[index(p, q)] != 0; }

    bool trivial() const;

    /// All strict relations p < q, in (p, q) order.
    std::vector<std::pair<int, int>> relations() const;

    friend bool operator==(const ObstructionPoset&, const ObstructionPoset&) = default;

private:
    std::size_t index(int p, int q) const {
        return static_cast<std::size_t>(p - 1) * m_ + (q - 1);
    }
    int m_ = 0;
    std::vector<std::uint8_t> lt_;
};

/// All maximal cliques sharing a first (equivalently last) point, with the
/// data attached to the class: obstruction poset, the kappa block boundaries
/// (sentinels 0 and n+1 when undefined), the marked representative's
/// signature, the class rank, and the legitimate signatures in order.
struct EquivalenceClass {
    Tuple first;
    Tuple last;
    ObstructionPoset poset;
    int kappa1 = 0;
    int kappa2 = 0;
    Signature marked_L;
    int rank = 0;
    std::vector<Signature> signatures;

    int size() const { return static_cast<int>(signatures.size()); }
};

/// a - e_s + e_{s+1} when a_s > 0 and a_{s+1} < alpha_{s+1}; empty otherwise.
/// s is 1-based with 1 <= s <= n-1.
std::optional<Tuple> apply_jump(const Tuple& a, int s, const Config& config);

/// The possible first tuples of maximal cliques: points with a_1 >= 1 and
/// a_n <= alpha_n - 1, in lex-descending order.
std::vector<Tuple> start_tuples(const Config& config);

/// Obstruction poset of the class starting at `first`: a_i = 0 forces the
/// (i-1)-jump before the i-jump, and a_{i+1} = alpha_{i+1} (for i+1 < n)
/// forces the (i+1)-jump before the i-jump.
ObstructionPoset obstruction_poset(const Tuple& first, const Config& config);

/// True iff every relation p < q of the poset puts the value p before the
/// value q in the signature; this is exactly realizability by a maximal
/// clique of the class.
bool is_legitimate_signature(const Signature& sig, const ObstructionPoset& poset);

/// Applies the jumps s_1, ..., s_{n-1} in order starting from `first`;
/// returns the chain iff every jump is admissible.
std::optional<MaximalClique> clique_from_signature(const Tuple& first, const Signature& sig,
                                                   const Config& config);

/// The marked representative's signature: a trailing descending block
/// (n-1, ..., kappa2-1), a trailing ascending block (1, ..., kappa1), and a
/// prefix covering the middle window {kappa1+1, ..., kappa2-2} by the
/// greedy value-smallest linear extension of the poset restricted there.
Signature marked_signature(const EquivalenceClass& cls);

/// Class data for a given start tuple.
EquivalenceClass make_equivalence_class(const Tuple& first, const Config& config);

/// One class per start tuple, in lex-descending order of first tuple.
std::vector<EquivalenceClass> equivalence_classes(const Config& config);

/// Position of each signature value inside tau: the relative signature of a
/// clique with respect to the marked representative.  Throws ArgumentError if
/// a value of sgn does not occur in tau.
Signature relative_signature(const Signature& sgn, const Signature& tau);

/// Every maximal clique of the sortedness graph: classes in lex-descending
/// first-tuple order, and inside a class the signatures in lex order of their
/// relative signature.
std::vector<MaximalClique> enumerate_maximal_cliques(const Config& config);

/// The unique maximal clique (a^2, ..., a^n, a^{n+1}) extending the tail of
/// A, when the shifted point a^{n+1} = a^2 - e_1 + e_n stays inside the point
/// set; empty otherwise.
std::optional<MaximalClique> root(const MaximalClique& A, const Config& config);

/// Generic maximal-clique enumeration (Bron-Kerbosch with pivoting) on the
/// abstract graph; no chain structure is assumed.  Returns sorted vertex-index
/// sets, ordered lexicographically.
std::vector<std::vector<int>> brute_force_cliques(const Graph& graph);

/// Vertex-index view of a chain, in chain order.
std::vector<int> clique_vertices(const MaximalClique& A, const PointTable& table);

}  // namespace veronese
