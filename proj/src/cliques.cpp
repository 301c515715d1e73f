#include "veronese/cliques.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace veronese {

Graph::Graph(int n_vertices)
    : vertex_count(n_vertices),
      words_per_row((n_vertices + 63) / 64),
      bits(static_cast<std::size_t>(n_vertices) * words_per_row, 0) {}

void Graph::add_edge(int u, int v) {
    detail::ensure(u != v, "add_edge: the sortedness graph is simple");
    bits[static_cast<std::size_t>(u) * words_per_row + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits[static_cast<std::size_t>(v) * words_per_row + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

long long Graph::edge_count() const {
    long long total = 0;
    for (std::uint64_t w : bits) total += std::popcount(w);
    return total / 2;
}

Graph build_graph(const PointTable& table) {
    const int t = table.size();
    Graph g(t);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (is_sorted_pair(table[i], table[j])) g.add_edge(i, j);
    return g;
}

std::optional<Tuple> apply_jump(const Tuple& a, int s, const Config& config) {
    const int n = config.n();
    if (s < 1 || s > n - 1) throw ArgumentError("apply_jump: jump index out of range");
    if (a[s - 1] <= 0 || a[s] >= config.cap(s + 1)) return std::nullopt;
    Tuple b = a;
    b[s - 1] -= 1;
    b[s] += 1;
    return b;
}

std::vector<Tuple> start_tuples(const Config& config) {
    const int n = config.n();
    std::vector<Tuple> out;
    for (Tuple& p : enumerate_points(config))
        if (p[0] >= 1 && p[n - 1] <= config.cap(n) - 1) out.push_back(std::move(p));
    return out;
}

ObstructionPoset::ObstructionPoset(int ground_size,
                                   const std::vector<std::pair<int, int>>& covers)
    : m_(ground_size), lt_(static_cast<std::size_t>(ground_size) * ground_size, 0) {
    for (const auto& [p, q] : covers) {
        detail::ensure(1 <= p && p <= m_ && 1 <= q && q <= m_ && p != q,
                       "obstruction poset: bad cover relation");
        lt_[index(p, q)] = 1;
    }
    // transitive closure
    for (int k = 1; k <= m_; ++k)
        for (int p = 1; p <= m_; ++p)
            if (lt_[index(p, k)])
                for (int q = 1; q <= m_; ++q)
                    if (lt_[index(k, q)]) lt_[index(p, q)] = 1;
    for (int p = 1; p <= m_; ++p) {
        detail::ensure(!lt_[index(p, p)], "obstruction poset: relation is not irreflexive");
        for (int q = p + 1; q <= m_; ++q)
            detail::ensure(!(lt_[index(p, q)] && lt_[index(q, p)]),
                           "obstruction poset: relation is not antisymmetric");
    }
}

bool ObstructionPoset::trivial() const {
    return std::all_of(lt_.begin(), lt_.end(), [](std::uint8_t b) { return b == 0; });
}

std::vector<std::pair<int, int>> ObstructionPoset::relations() const {
    std::vector<std::pair<int, int>> rel;
    for (int p = 1; p <= m_; ++p)
        for (int q = 1; q <= m_; ++q)
            if (lt_[index(p, q)]) rel.emplace_back(p, q);
    return rel;
}

namespace {

void check_start_tuple(const Tuple& first, const Config& config, const char* who) {
    if (!point_in(first, config) || first[0] < 1 ||
        first[config.n() - 1] > config.cap(config.n()) - 1)
        throw ArgumentError(std::string(who) + ": " + format_tuple(first) +
                            " is not a start tuple");
}

}  // namespace

ObstructionPoset obstruction_poset(const Tuple& first, const Config& config) {
    check_start_tuple(first, config, "obstruction_poset");
    const int n = config.n();
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i <= n - 1; ++i) {
        if (i > 1 && first[i - 1] == 0) covers.emplace_back(i - 1, i);
        if (i + 1 < n && first[i] == config.cap(i + 1)) covers.emplace_back(i + 1, i);
    }
    return ObstructionPoset(n - 1, covers);
}

bool is_legitimate_signature(const Signature& sig, const ObstructionPoset& poset) {
    const int m = poset.ground_size();
    if (static_cast<int>(sig.size()) != m)
        throw ArgumentError("is_legitimate_signature: wrong signature length");
    std::vector<int> pos(m + 1, 0);
    for (int i = 0; i < m; ++i) {
        const int v = sig[i];
        if (v < 1 || v > m || pos[v] != 0)
            throw ArgumentError("is_legitimate_signature: not a permutation");
        pos[v] = i + 1;
    }
    for (int p = 1; p <= m; ++p)
        for (int q = 1; q <= m; ++q)
            if (poset.less(p, q) && pos[p] > pos[q]) return false;
    return true;
}

std::optional<MaximalClique> clique_from_signature(const Tuple& first, const Signature& sig,
                                                   const Config& config) {
    check_start_tuple(first, config, "clique_from_signature");
    const int n = config.n();
    if (static_cast<int>(sig.size()) != n - 1)
        throw ArgumentError("clique_from_signature: wrong signature length");

    MaximalClique mc;
    mc.chain.reserve(n);
    mc.chain.push_back(first);
    mc.signature = sig;
    for (int s : sig) {
        auto next = apply_jump(mc.chain.back(), s, config);
        if (!next) return std::nullopt;
        mc.chain.push_back(std::move(*next));
    }
    return mc;
}

Signature marked_signature(const EquivalenceClass& cls) {
    const int n = static_cast<int>(cls.first.size());
    const int m = n - 1;
    const int k1 = cls.kappa1;
    const int k2 = cls.kappa2;

    Signature sig;
    sig.reserve(m);

    // middle window, greedy value-smallest linear extension
    std::vector<int> window;
    for (int v = k1 + 1; v <= k2 - 2; ++v) window.push_back(v);
    std::vector<char> placed(window.size(), 0);
    for (std::size_t step = 0; step < window.size(); ++step) {
        int chosen = -1;
        for (std::size_t i = 0; i < window.size() && chosen < 0; ++i) {
            if (placed[i]) continue;
            bool free = true;
            for (std::size_t j = 0; j < window.size(); ++j)
                if (!placed[j] && j != i && cls.poset.less(window[j], window[i])) free = false;
            if (free) chosen = static_cast<int>(i);
        }
        detail::ensure(chosen >= 0, "marked signature: middle window has no extension");
        placed[chosen] = 1;
        sig.push_back(window[chosen]);
    }

    // trailing blocks: (n-1, ..., kappa2-1) then (1, ..., kappa1); when the
    // two would meet, kappa2-1 = kappa1 belongs to the ascending block
    for (int v = m; v >= std::max(k2 - 1, k1 + 1); --v) sig.push_back(v);
    for (int v = 1; v <= k1; ++v) sig.push_back(v);

    detail::ensure(static_cast<int>(sig.size()) == m, "marked signature: wrong length");
    detail::ensure(is_legitimate_signature(sig, cls.poset),
                   "marked signature must be legitimate");
    return sig;
}

EquivalenceClass make_equivalence_class(const Tuple& first, const Config& config) {
    check_start_tuple(first, config, "make_equivalence_class");
    const int n = config.n();

    EquivalenceClass cls;
    cls.first = first;
    cls.last = first;
    cls.last[0] -= 1;
    cls.last[n - 1] += 1;
    cls.poset = obstruction_poset(first, config);

    if (first[0] == 1) {
        int k = 1;
        while (k < n - 1 && first[k] == 0) ++k;  // first[k] is a_{k+1}
        cls.kappa1 = k;
    } else {
        cls.kappa1 = 0;
    }
    if (first[n - 1] == config.cap(n) - 1) {
        int k = n;
        while (k - 1 >= 2 && first[k - 2] == config.cap(k - 1)) --k;
        cls.kappa2 = k;
    } else {
        cls.kappa2 = n + 1;
    }
    detail::ensure(cls.kappa1 < cls.kappa2, "kappa1 < kappa2 must hold");

    cls.rank = rank_of(cls.last, config);
    detail::ensure(cls.rank >= 0, "class rank must be non-negative");
    cls.marked_L = marked_signature(cls);

    // legitimate signatures, generated directly in relative-lex order:
    // sgn = marked_L composed with the relative permutation
    const int m = n - 1;
    Signature rel(m);
    std::iota(rel.begin(), rel.end(), 1);
    do {
        Signature sgn(m);
        for (int i = 0; i < m; ++i) sgn[i] = cls.marked_L[rel[i] - 1];
        if (is_legitimate_signature(sgn, cls.poset)) cls.signatures.push_back(std::move(sgn));
    } while (std::next_permutation(rel.begin(), rel.end()));

    detail::ensure(!cls.signatures.empty() && cls.signatures.front() == cls.marked_L,
                   "the marked signature must come first in its class");
    return cls;
}

std::vector<EquivalenceClass> equivalence_classes(const Config& config) {
    std::vector<EquivalenceClass> out;
    for (const Tuple& first : start_tuples(config))
        out.push_back(make_equivalence_class(first, config));
    return out;
}

Signature relative_signature(const Signature& sgn, const Signature& tau) {
    if (sgn.size() != tau.size())
        throw ArgumentError("relative_signature: signatures of different length");
    const int m = static_cast<int>(tau.size());
    std::vector<int> pos(m + 1, 0);
    for (int i = 0; i < m; ++i) {
        const int v = tau[i];
        if (v < 1 || v > m || pos[v] != 0)
            throw ArgumentError("relative_signature: tau is not a permutation");
        pos[v] = i + 1;
    }
    Signature rel(m);
    for (int i = 0; i < m; ++i) {
        const int v = sgn[i];
        if (v < 1 || v > m || pos[v] == 0)
            throw ArgumentError("relative_signature: value not found in tau");
        rel[i] = pos[v];
    }
    return rel;
}

std::vector<MaximalClique> enumerate_maximal_cliques(const Config& config) {
    std::vector<MaximalClique> out;
    for (const Tuple& first : start_tuples(config)) {
        const EquivalenceClass cls = make_equivalence_class(first, config);
        for (const Signature& sgn : cls.signatures) {
            auto mc = clique_from_signature(first, sgn, config);
            detail::ensure(mc.has_value(), "legitimate signature must yield a clique");
            out.push_back(std::move(*mc));
        }
    }
    return out;
}

std::optional<MaximalClique> root(const MaximalClique& A, const Config& config) {
    const int n = config.n();
    if (static_cast<int>(A.chain.size()) != n)
        throw ArgumentError("root: chain must have n members");
    const Tuple& a2 = A.chain[1];
    if (a2[0] < 1 || a2[n - 1] > config.cap(n) - 1) return std::nullopt;

    Tuple shifted = a2;
    shifted[0] -= 1;
    shifted[n - 1] += 1;

    MaximalClique B;
    B.chain.assign(A.chain.begin() + 1, A.chain.end());
    B.chain.push_back(std::move(shifted));
    B.signature.assign(A.signature.begin() + 1, A.signature.end());
    B.signature.push_back(A.signature.front());
    return B;
}

namespace {

// Bron-Kerbosch with pivoting over packed vertex sets.
class CliqueOracle {
public:
    explicit CliqueOracle(const Graph& g) : g_(g), words_(g.words_per_row) {}

    std::vector<std::vector<int>> run() {
        std::vector<std::uint64_t> P(words_, 0), X(words_, 0);
        for (int v = 0; v < g_.vertex_count; ++v) P[v >> 6] |= std::uint64_t{1} << (v & 63);
        expand(P, X);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    static bool none(const std::vector<std::uint64_t>& s) {
        return std::all_of(s.begin(), s.end(), [](std::uint64_t w) { return w == 0; });
    }

    int common_count(const std::vector<std::uint64_t>& s, int v) const {
        const std::uint64_t* row = g_.row(v);
        int c = 0;
        for (int w = 0; w < words_; ++w) c += std::popcount(s[w] & row[w]);
        return c;
    }

    template <typename F>
    static void for_each_bit(const std::vector<std::uint64_t>& s, F f) {
        for (std::size_t w = 0; w < s.size(); ++w) {
            std::uint64_t word = s[w];
            while (word) {
                const int b = std::countr_zero(word);
                f(static_cast<int>(w * 64 + b));
                word &= word - 1;
            }
        }
    }

    void expand(std::vector<std::uint64_t> P, std::vector<std::uint64_t> X) {
        if (none(P) && none(X)) {
            std::vector<int> clique = R_;
            std::sort(clique.begin(), clique.end());
            out_.push_back(std::move(clique));
            return;
        }

        int pivot = -1, best = -1;
        auto consider = [&](int v) {
            const int c = common_count(P, v);
            if (c > best) {
                best = c;
                pivot = v;
            }
        };
        for_each_bit(P, consider);
        for_each_bit(X, consider);

        std::vector<int> candidates;
        {
            const std::uint64_t* row = g_.row(pivot);
            std::vector<std::uint64_t> cand(words_);
            for (int w = 0; w < words_; ++w) cand[w] = P[w] & ~row[w];
            for_each_bit(cand, [&](int v) { candidates.push_back(v); });
        }

        std::vector<std::uint64_t> newP(words_), newX(words_);
        for (int v : candidates) {
            const std::uint64_t* row = g_.row(v);
            for (int w = 0; w < words_; ++w) {
                newP[w] = P[w] & row[w];
                newX[w] = X[w] & row[w];
            }
            R_.push_back(v);
            expand(newP, newX);
            R_.pop_back();
            P[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            X[v >> 6] |= std::uint64_t{1} << (v & 63);
        }
    }

    const Graph& g_;
    int words_;
    std::vector<int> R_;
    std::vector<std::vector<int>> out_;
};

}  // namespace

std::vector<std::vector<int>> brute_force_cliques(const Graph& graph) {
    if (graph.vertex_count == 0) return {};
    return CliqueOracle(graph).run();
}

std::vector<int> clique_vertices(const MaximalClique& A, const PointTable& table) {
    std::vector<int> ids;
    ids.reserve(A.chain.size());
    for (const Tuple& p : A.chain) ids.push_back(table.index_of(p));
    return ids;
}

}  // namespace veronese
