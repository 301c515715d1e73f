#include "veronese/order.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace veronese {

const char* to_string(TieBreak tb) {
    return tb == TieBreak::FirstTupleLexDesc ? "first-lex" : "last-lex";
}

CliqueOrder build_order(const Config& config, TieBreak tb) {
    CliqueOrder order{config, tb, PointTable(config), {}, {}};

    order.classes = equivalence_classes(config);
    std::sort(order.classes.begin(), order.classes.end(),
              [tb](const EquivalenceClass& a, const EquivalenceClass& b) {
                  if (a.rank != b.rank) return a.rank < b.rank;
                  if (tb == TieBreak::FirstTupleLexDesc) return lex_greater(a.first, b.first);
                  return lex_less(a.last, b.last);
              });

    for (std::size_t ci = 0; ci < order.classes.size(); ++ci) {
        const EquivalenceClass& cls = order.classes[ci];
        for (const Signature& sgn : cls.signatures) {
            auto mc = clique_from_signature(cls.first, sgn, config);
            detail::ensure(mc.has_value(), "legitimate signature must yield a clique");
            OrderedClique oc;
            oc.clique = std::move(*mc);
            oc.class_index = static_cast<int>(ci);
            oc.relative = relative_signature(sgn, cls.marked_L);
            oc.vertices = clique_vertices(oc.clique, order.table);
            order.sequence.push_back(std::move(oc));
        }
    }
    return order;
}

namespace {

// Sorted vertex list plus the chain position of each sorted entry; the scans
// work on sorted lists and report differences as chain-position bitmasks.
struct CliqueView {
    std::vector<int> sorted;  // vertex ids ascending
    std::vector<int> pos;     // pos[k] = chain position (0-based) of sorted[k]
};

std::vector<CliqueView> make_views(const CliqueOrder& order) {
    std::vector<CliqueView> views(order.sequence.size());
    for (std::size_t i = 0; i < order.sequence.size(); ++i) {
        const std::vector<int>& chain = order.sequence[i].vertices;
        const int n = static_cast<int>(chain.size());
        CliqueView& view = views[i];
        view.pos.resize(n);
        std::iota(view.pos.begin(), view.pos.end(), 0);
        std::sort(view.pos.begin(), view.pos.end(),
                  [&chain](int a, int b) { return chain[a] < chain[b]; });
        view.sorted.resize(n);
        for (int k = 0; k < n; ++k) view.sorted[k] = chain[view.pos[k]];
    }
    return views;
}

// Chain positions of A (as bits) whose member does not occur in B.
std::uint32_t diff_mask(const CliqueView& a, const CliqueView& b) {
    std::uint32_t mask = 0;
    std::size_t i = 0, j = 0;
    while (i < a.sorted.size()) {
        if (j == b.sorted.size() || a.sorted[i] < b.sorted[j]) {
            mask |= std::uint32_t{1} << a.pos[i];
            ++i;
        } else if (a.sorted[i] == b.sorted[j]) {
            ++i;
            ++j;
        } else {
            ++j;
        }
    }
    return mask;
}

}  // namespace

int omega(const CliqueOrder& order, int position) {
    if (position < 0 || position >= static_cast<int>(order.sequence.size()))
        throw ArgumentError("omega: position out of range");
    const auto views = make_views(order);
    int count = 0;
    for (int b = 0; b < position; ++b)
        if (std::popcount(diff_mask(views[position], views[b])) == 1) ++count;
    return count;
}

QuotientReport verify_linear_quotients(const CliqueOrder& order) {
    const int n = order.config.n();
    if (n > 20) throw ArgumentError("verify_linear_quotients: supports n <= 20");
    const auto views = make_views(order);
    const std::size_t count = order.sequence.size();

    QuotientReport report;
    report.records.reserve(count);

    std::vector<std::uint8_t> seen(std::size_t{1} << n, 0);
    std::vector<std::uint32_t> distinct;

    for (std::size_t a = 0; a < count; ++a) {
        distinct.clear();
        std::uint32_t witness = 0;
        int scan_count = 0;

        for (std::size_t b = 0; b < a; ++b) {
            const std::uint32_t mask = diff_mask(views[a], views[b]);
            detail::ensure(mask != 0, "distinct cliques must differ somewhere");
            if (std::popcount(mask) == 1) {
                ++scan_count;
                witness |= mask;
            }
            if (!seen[mask]) {
                seen[mask] = 1;
                distinct.push_back(mask);
            }
        }

        QuotientRecord rec;
        rec.clique = static_cast<int>(a);

        // minimalize the colon generators: a difference set is redundant iff
        // it contains a singleton difference set
        bool linear = true;
        for (std::uint32_t mask : distinct) {
            if ((mask & witness) == 0 && std::popcount(mask) > 1) linear = false;
            seen[mask] = 0;
        }
        rec.linear = linear;
        rec.omega = std::popcount(witness);
        for (int i = 0; i < n; ++i)
            if (witness & (std::uint32_t{1} << i)) rec.witness_positions.push_back(i + 1);

        if (!linear)
            throw TheoremViolationError("colon ideal at clique " + std::to_string(a) +
                                        " is not generated in degree 1");
        detail::ensure(scan_count == rec.omega,
                       "predecessor count and witness count must agree");
        if (rec.omega > n - 1)
            throw TheoremViolationError("omega exceeds n-1 at clique " + std::to_string(a));

        report.max_omega = std::max(report.max_omega, rec.omega);
        report.records.push_back(std::move(rec));
    }

    report.top_count = std::count_if(report.records.begin(), report.records.end(),
                                     [&](const QuotientRecord& r) {
                                         return r.omega == report.max_omega;
                                     });
    report.all_linear = true;
    return report;
}

int projective_dimension(const Config& config, TieBreak tb) {
    return verify_linear_quotients(build_order(config, tb)).max_omega;
}

std::pair<int, long long> top_betti(const Config& config, TieBreak tb) {
    const QuotientReport report = verify_linear_quotients(build_order(config, tb));
    return {report.max_omega, report.top_count};
}

}  // namespace veronese
