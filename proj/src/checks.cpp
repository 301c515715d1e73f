#include "veronese/checks.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <random>

#include "veronese/cliques.hpp"
#include "veronese/ideal.hpp"
#include "veronese/invariants.hpp"
#include "veronese/order.hpp"
#include "veronese/sorting.hpp"

namespace veronese {

namespace {

// Integer content of a signature set as a bitmask over {1, ..., n-1}.
std::uint32_t interval_mask(const SortingSignature& sig) {
    std::uint32_t mask = 0;
    for (const auto& [lo, hi] : sig.intervals)
        for (int v = lo; v < hi; ++v) mask |= std::uint32_t{1} << v;
    return mask;
}

// Downset dynamic program; independent of the signature filter.
long long count_linear_extensions(const ObstructionPoset& poset) {
    const int m = poset.ground_size();
    std::vector<long long> ways(std::size_t{1} << m, 0);
    ways[0] = 1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        if (ways[mask] == 0) continue;
        for (int v = 1; v <= m; ++v) {
            if (mask & (std::uint32_t{1} << (v - 1))) continue;
            bool ready = true;
            for (int u = 1; u <= m && ready; ++u)
                if (u != v && poset.less(u, v) && !(mask & (std::uint32_t{1} << (u - 1))))
                    ready = false;
            if (ready) ways[mask | (std::uint32_t{1} << (v - 1))] += ways[mask];
        }
    }
    return ways[(std::size_t{1} << m) - 1];
}

bool adjacent_transposition(const Signature& s, const Signature& t, int k /*0-based*/) {
    if (s.size() != t.size()) return false;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        if (i == k || i == k + 1) continue;
        if (s[i] != t[i]) return false;
    }
    return s[k] == t[k + 1] && s[k + 1] == t[k] && s[k] != s[k + 1];
}

}  // namespace

ConfigCheckResult check_config(const Config& config) {
    ConfigCheckResult res{config, 0, 0, 0, 0, {}};
    auto fail = [&res](const char* check, const std::string& detail) {
        res.failures.push_back(std::string(check) + ": " + detail);
    };

    const int n = config.n();
    const PointTable table(config);
    const int t = table.size();
    res.t = t;
    res.reg = regularity(config);

    // lattice laws: strict descent, eta minimal, ranks non-negative
    {
        bool ok = table[t - 1] == table.eta();
        for (int i = 0; ok && i < t; ++i) {
            if (i + 1 < t && !lex_greater(table[i], table[i + 1])) ok = false;
            if (lex_less(table[i], table.eta())) ok = false;
            if (table.rank_of(table[i]) < 0) ok = false;
        }
        if (!ok) fail("aux", "lattice order laws fail");
    }

    // pairwise sorting laws feed the graph build
    Graph graph(t);
    {
        bool ok = true;
        for (int i = 0; ok && i < t; ++i) {
            for (int j = i + 1; ok && j < t; ++j) {
                const auto [x, y] = sort_pair(table[i], table[j]);
                if (!table.contains(x) || !table.contains(y)) {
                    fail("aux", "sorting escapes the point set");
                    ok = false;
                    break;
                }
                if (sort_pair(x, y) != std::pair<Tuple, Tuple>(x, y)) {
                    fail("aux", "sorting is not idempotent");
                    ok = false;
                    break;
                }
                if (x != y && !lex_greater(x, y)) {
                    fail("aux", "sorted pair out of lex order");
                    ok = false;
                    break;
                }
                const bool sorted = (x == table[i] && y == table[j]);
                const auto sig = delta(table[i], table[j]);
                if (sorted != sig.has_value()) {
                    fail("aux", "delta disagrees with the sorting operator");
                    ok = false;
                    break;
                }
                if (sorted) {
                    graph.add_edge(i, j);
                    if (table.rank_of(table[i]) != table.rank_of(table[j]) + sig->length()) {
                        fail("aux", "rank law fails along an edge");
                        ok = false;
                    }
                }
            }
        }
    }

    // clique enumeration against the graph oracle
    const std::vector<MaximalClique> cliques = enumerate_maximal_cliques(config);
    res.mult = static_cast<long long>(cliques.size());
    std::vector<std::vector<int>> clique_sets;
    std::vector<std::vector<int>> oracle_sets;
    {
        clique_sets.reserve(cliques.size());
        bool sizes_ok = true;
        for (const MaximalClique& mc : cliques) {
            if (static_cast<int>(mc.chain.size()) != n) sizes_ok = false;
            std::vector<int> ids = clique_vertices(mc, table);
            std::sort(ids.begin(), ids.end());
            clique_sets.push_back(std::move(ids));
        }
        if (!sizes_ok) fail("clique_oracle", "chain of size != n");
        std::sort(clique_sets.begin(), clique_sets.end());
        if (std::adjacent_find(clique_sets.begin(), clique_sets.end()) != clique_sets.end())
            fail("clique_oracle", "duplicate clique emitted");

        oracle_sets = brute_force_cliques(graph);
        for (const auto& c : oracle_sets)
            if (static_cast<int>(c.size()) != n) {
                fail("clique_oracle", "oracle clique of size != n");
                break;
            }
        if (clique_sets != oracle_sets)
            fail("clique_oracle", "signature enumeration disagrees with the graph oracle");
    }

    // chain laws: global sortedness, interval lengths, triple splitting
    {
        bool ok = true;
        for (const MaximalClique& mc : cliques) {
            if (!ok) break;
            if (sort_many(mc.chain) != mc.chain) {
                fail("aux", "chain is not globally sorted");
                ok = false;
                break;
            }
            for (int i = 0; ok && i < n; ++i)
                for (int j = i + 1; ok && j < n; ++j) {
                    const auto sig = delta(mc.chain[i], mc.chain[j]);
                    if (!sig || sig->length() != j - i) ok = false;
                }
            if (ok) {
                const auto span = delta(mc.chain.front(), mc.chain.back());
                if (!span ||
                    span->intervals != std::vector<std::pair<int, int>>{{1, n}})
                    ok = false;
            }
            if (!ok) {
                fail("aux", "chain interval law fails");
                break;
            }
            for (int i = 0; ok && i < n; ++i)
                for (int j = i + 1; ok && j < n; ++j)
                    for (int k = j + 1; ok && k < n; ++k) {
                        const auto ac = delta(mc.chain[i], mc.chain[k]);
                        const auto ab = delta(mc.chain[i], mc.chain[j]);
                        const auto bc = delta(mc.chain[j], mc.chain[k]);
                        const std::uint32_t mab = interval_mask(*ab);
                        const std::uint32_t mbc = interval_mask(*bc);
                        if ((mab & mbc) != 0 || interval_mask(*ac) != (mab | mbc)) ok = false;
                    }
            if (!ok) fail("aux", "signature sets do not split along chains");
        }
    }

    // class structure
    const std::vector<EquivalenceClass> classes = equivalence_classes(config);
    long long full_classes = 0;
    {
        long long fact = 1;
        for (int i = 2; i <= n - 1; ++i) fact *= i;

        int rank_zero = 0;
        bool ok = true;
        for (const EquivalenceClass& cls : classes) {
            if (cls.rank == 0) {
                ++rank_zero;
                if (cls.last != table.eta()) {
                    fail("aux", "rank-0 class must end at eta");
                    ok = false;
                }
            }
            if (cls.rank > 0 && !(cls.kappa1 + 1 < cls.kappa2 - 1)) {
                fail("aux", "kappa gap law fails");
                ok = false;
            }
            if (count_linear_extensions(cls.poset) != cls.size()) {
                fail("aux", "class size != linear extension count");
                ok = false;
            }
            const bool trivial = cls.poset.trivial();
            if (trivial) ++full_classes;
            if (trivial != (cls.size() == fact)) {
                fail("aux", "full class iff trivial poset fails");
                ok = false;
            }
            if (!trivial && 2 * cls.size() > fact) {
                fail("aux", "non-full class exceeds (n-1)!/2");
                ok = false;
            }
            bool interior = true;
            for (int j = 1; j < n - 1; ++j)
                if (cls.first[j] < 1 || cls.first[j] > config.cap(j + 1) - 1) interior = false;
            if (trivial != interior) {
                fail("aux", "full-class coordinate criterion fails");
                ok = false;
            }
            if (!ok) break;
        }
        if (rank_zero != 1) fail("aux", "exactly one rank-0 class expected");

        // oracle first tuples = start tuples
        std::vector<Tuple> oracle_firsts;
        for (const auto& c : oracle_sets) oracle_firsts.push_back(table[c.front()]);
        std::sort(oracle_firsts.begin(), oracle_firsts.end(), lex_greater);
        oracle_firsts.erase(std::unique(oracle_firsts.begin(), oracle_firsts.end()),
                            oracle_firsts.end());
        if (oracle_firsts != start_tuples(config))
            fail("aux", "oracle first tuples differ from the start tuples");
    }

    // root law and shift-right closure
    for (const MaximalClique& mc : cliques) {
        const auto r = root(mc, config);
        const int class_rank = table.rank_of(mc.chain.back());
        const bool blocked = class_rank == 0 ||
                             (mc.chain[0][0] == 1 && mc.signature[0] == 1) ||
                             (mc.chain[0][n - 1] == config.cap(n) - 1 &&
                              mc.signature[0] == n - 1);
        if (r.has_value() != !blocked) {
            fail("aux", "root existence criterion fails");
            break;
        }
        if (r) {
            std::vector<int> ids = clique_vertices(*r, table);
            std::sort(ids.begin(), ids.end());
            if (!std::binary_search(clique_sets.begin(), clique_sets.end(), ids)) {
                fail("aux", "root is not an enumerated maximal clique");
                break;
            }
            if (table.rank_of(r->chain.back()) != class_rank - 1) {
                fail("aux", "root does not lower the rank by one");
                break;
            }
        }
    }

    // singleton difference iff adjacent transposition, inside each class
    {
        bool ok = true;
        for (const EquivalenceClass& cls : classes) {
            if (!ok) break;
            std::vector<MaximalClique> members;
            for (const Signature& sgn : cls.signatures)
                members.push_back(*clique_from_signature(cls.first, sgn, config));
            for (std::size_t a = 0; a < members.size() && ok; ++a)
                for (std::size_t b = 0; b < members.size() && ok; ++b) {
                    if (a == b) continue;
                    std::vector<int> diff;
                    for (int i = 0; i < n; ++i)
                        if (members[a].chain[i] != members[b].chain[i]) diff.push_back(i);
                    const bool singleton = diff.size() == 1;
                    bool swap = false;
                    for (int k = 0; k + 1 < n - 1 && !swap; ++k)
                        swap = adjacent_transposition(members[a].signature,
                                                      members[b].signature, k) &&
                               diff.size() == 1 && diff[0] == k + 1;
                    bool any_swap = false;
                    for (int k = 0; k + 1 < n - 1 && !any_swap; ++k)
                        any_swap = adjacent_transposition(members[a].signature,
                                                          members[b].signature, k);
                    if (singleton != any_swap || (singleton && !swap)) {
                        fail("aux", "singleton difference law fails inside a class");
                        ok = false;
                    }
                }
        }
    }

    // quotient orders, linearity oracle, regularity formula
    {
        int max_first = -1;
        long long top_first = -1;
        bool verified_both = true;
        for (const TieBreak tb : {TieBreak::FirstTupleLexDesc, TieBreak::LastTupleLexAsc}) {
            CliqueOrder order = build_order(config, tb);

            if (order.sequence.size() != cliques.size())
                fail("linear_quotients", "order loses cliques");
            bool monotone = true;
            for (std::size_t i = 0; i + 1 < order.sequence.size(); ++i)
                if (order.classes[order.sequence[i].class_index].rank >
                    order.classes[order.sequence[i + 1].class_index].rank)
                    monotone = false;
            if (!monotone) fail("linear_quotients", "ranks not monotone along the order");

            try {
                const QuotientReport rep = verify_linear_quotients(order);
                for (const QuotientRecord& rec : rep.records)
                    if (!rec.witness_positions.empty() && rec.witness_positions.back() == n) {
                        fail("linear_quotients", "last chain member removed by a predecessor");
                        break;
                    }
                if (tb == TieBreak::FirstTupleLexDesc) {
                    max_first = rep.max_omega;
                    top_first = rep.top_count;
                    res.max_omega = rep.max_omega;
                } else if (rep.max_omega != max_first || rep.top_count != top_first) {
                    fail("regularity_formula", "tie-break changes the top Betti data");
                }
            } catch (const TheoremViolationError& e) {
                verified_both = false;
                fail("linear_quotients", e.what());
            }
        }
        if (verified_both && max_first != res.reg)
            fail("regularity_formula", "max omega " + std::to_string(max_first) +
                                           " differs from the closed form " +
                                           std::to_string(res.reg));
    }

    // counting formulas against the direct counts
    {
        if (count_t(config) != t) fail("counting_formulas", "t formula disagrees");
        if (count_G(config) != static_cast<long long>(classes.size()))
            fail("counting_formulas", "G formula disagrees");
        if (count_H(config) != full_classes) fail("counting_formulas", "H formula disagrees");
    }

    // invariance under the cap-complement dual
    {
        const Config dual = newton_dual(config);
        const PointTable dual_table(dual);
        if (dual_table.size() != t) fail("newton_dual", "t changes under the dual");
        if (regularity(dual) != res.reg) fail("newton_dual", "regularity changes under the dual");
        if (multiplicity(dual) != res.mult)
            fail("newton_dual", "multiplicity changes under the dual");

        bool bijective = true;
        for (int i = 0; i < t && bijective; ++i) {
            Tuple img(n);
            for (int j = 0; j < n; ++j) img[j] = config.alpha()[j] - table[i][j];
            bijective = point_in(img, dual);
        }
        if (!bijective) fail("aux", "cap-complement map escapes the dual point set");

        if (config.cap(n) <= config.alpha_sum() - config.d() && !(newton_dual(dual) == config))
            fail("aux", "dual fails to be an involution");
    }

    // multiplicity bounds
    {
        if (t > n) {
            try {
                const MultiplicityBounds b = multiplicity_bounds(config);
                if (b.lower > res.mult || BigInt(res.mult) > b.upper)
                    fail("bound_sandwich", "multiplicity " + std::to_string(res.mult) +
                                               " escapes [" + b.lower.str() + ", " +
                                               b.upper.str() + "]");
            } catch (const DegenerateConfigError& e) {
                fail("bound_sandwich", e.what());
            }
        } else {
            try {
                multiplicity_bounds(config);
                fail("bound_sandwich", "degenerate guard must reject t <= n");
            } catch (const DegenerateConfigError&) {
            }
        }
    }

    // peak laws: max omega = n-1 iff a suitably interior start tuple exists
    // (always true), and iff the arithmetic criterion holds on the reduced
    // configuration (the stated dichotomy; fails when alpha_1 = 1, d' >= n)
    {
        const bool peak = (res.max_omega == n - 1);
        bool shape = false;
        for (const Tuple& a : start_tuples(config)) {
            bool fits = a[0] >= 2 && a[n - 1] <= config.cap(n) - 2;
            for (int j = 1; fits && j < n - 1; ++j)
                fits = (a[j] >= 1 && a[j] <= config.cap(j + 1) - 1);
            if (fits) {
                shape = true;
                break;
            }
        }
        if (peak != shape) fail("aux", "peak iff interior start tuple fails");

        const Config reduced =
            2 * config.d() <= config.alpha_sum() ? config : newton_dual(config);
        const bool arith_reduced =
            (n <= reduced.d() && reduced.d() <= reduced.alpha_sum() - n);
        if (peak != arith_reduced)
            fail("peak_dichotomy", "max omega = n-1 disagrees with the arithmetic criterion");
    }

    // presentation binomials: lead pairs are exactly the complement edges
    {
        const auto pairs = groebner_pairs(table);
        if (static_cast<long long>(pairs.size()) !=
            static_cast<long long>(t) * (t - 1) / 2 - graph.edge_count())
            fail("aux", "lead pair count differs from the complement edge count");
        bool ok = true;
        for (const BinomialPair& bp : pairs) {
            if (graph.adjacent(bp.lead.first, bp.lead.second)) ok = false;
            if (!is_sorted_pair(table[bp.trail.first], table[bp.trail.second])) ok = false;
            for (int j = 0; j < n; ++j)
                if (table[bp.lead.first][j] + table[bp.lead.second][j] !=
                    table[bp.trail.first][j] + table[bp.trail.second][j])
                    ok = false;
            if (!ok) break;
        }
        if (!ok) fail("aux", "binomial soundness fails");
    }

    return res;
}

std::vector<Config> sweep_family(int max_n, int max_d, long long max_t) {
    std::vector<Config> out;
    for (int n = 3; n <= max_n; ++n) {
        for (int d = 1; d <= max_d; ++d) {
            Tuple alpha(n, 1);
            auto rec = [&](auto&& self, int i, int min_v, int sum) -> void {
                if (i == n) {
                    if (sum <= d) return;
                    Config cfg(n, d, alpha);
                    if (count_t(cfg) <= max_t) out.push_back(std::move(cfg));
                    return;
                }
                for (int v = min_v; v <= d; ++v) {
                    alpha[i] = v;
                    self(self, i + 1, v, sum + v);
                }
            };
            rec(rec, 0, 1, 0);
        }
    }
    return out;
}

SweepSummary run_sweep(const SweepOptions& options) {
    std::vector<Config> family = sweep_family(options.max_n, options.max_d, options.max_t);
    if (options.sample > 0 && options.sample < static_cast<int>(family.size())) {
        std::vector<Config> chosen;
        std::mt19937_64 rng(options.seed);
        std::sample(family.begin(), family.end(), std::back_inserter(chosen), options.sample,
                    rng);
        family = std::move(chosen);
    }

    SweepSummary summary;
    for (const Config& cfg : family) {
        ConfigCheckResult r = check_config(cfg);
        ++summary.configs;
        if (!r.ok()) {
            ++summary.failed_configs;
            for (const std::string& f : r.failures) {
                const auto colon = f.find(':');
                ++summary.failure_counts[f.substr(0, colon)];
            }
        }
        summary.results.push_back(std::move(r));
    }
    return summary;
}

}  // namespace veronese
