#include <doctest.h>

#include <algorithm>

#include "veronese/invariants.hpp"
#include "veronese/order.hpp"

using namespace veronese;

namespace {

const Config kExample(5, 8, {2, 2, 2, 3, 3});
const Config kFinal(5, 7, {1, 4, 4, 5, 7});

const std::vector<std::pair<Signature, Signature>> kRows = {
    {{2, 4, 3, 1}, {1, 2, 3, 4}}, {{2, 4, 1, 3}, {1, 2, 4, 3}}, {{2, 1, 4, 3}, {1, 4, 2, 3}},
    {{4, 2, 3, 1}, {2, 1, 3, 4}}, {{4, 2, 1, 3}, {2, 1, 4, 3}}, {{4, 3, 2, 1}, {2, 3, 1, 4}},
    {{4, 3, 1, 2}, {2, 3, 4, 1}}, {{4, 1, 2, 3}, {2, 4, 1, 3}}, {{4, 1, 3, 2}, {2, 4, 3, 1}},
    {{1, 2, 4, 3}, {4, 1, 2, 3}}, {{1, 4, 2, 3}, {4, 2, 1, 3}}, {{1, 4, 3, 2}, {4, 2, 3, 1}},
};

}  // namespace

TEST_SUITE("order") {

TEST_CASE("ranks ascend and the rank-zero class leads") {
    const CliqueOrder order = build_order(kExample);
    REQUIRE(!order.sequence.empty());
    CHECK(order.classes[order.sequence.front().class_index].rank == 0);
    for (std::size_t i = 0; i + 1 < order.sequence.size(); ++i)
        CHECK(order.classes[order.sequence[i].class_index].rank <=
              order.classes[order.sequence[i + 1].class_index].rank);
}

TEST_CASE("order is a permutation of the enumeration") {
    const CliqueOrder order = build_order(kExample);
    const auto cliques = enumerate_maximal_cliques(kExample);
    CHECK(order.sequence.size() == cliques.size());

    auto key = [](const MaximalClique& mc) { return std::make_pair(mc.chain, mc.signature); };
    std::vector<std::pair<std::vector<Tuple>, Signature>> a, b;
    for (const auto& oc : order.sequence) a.push_back(key(oc.clique));
    for (const auto& mc : cliques) b.push_back(key(mc));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
}

TEST_CASE("the worked class is ordered row for row") {
    const CliqueOrder order = build_order(kExample);
    const Tuple first{1, 1, 1, 3, 2};
    std::vector<std::pair<Signature, Signature>> rows;
    for (const OrderedClique& oc : order.sequence)
        if (oc.clique.chain.front() == first)
            rows.emplace_back(oc.clique.signature, oc.relative);
    CHECK(rows == kRows);
}

TEST_CASE("omega by predecessor scan") {
    const CliqueOrder order = build_order(kExample);
    CHECK(omega(order, 0) == 0);

    const QuotientReport report = verify_linear_quotients(order);
    // spot-check the standalone scan against the verifier's records
    for (int pos : {1, 5, 20, static_cast<int>(order.sequence.size()) - 1})
        CHECK(omega(order, pos) == report.records[pos].omega);
}

TEST_CASE("verifier on the worked example") {
    const CliqueOrder order = build_order(kExample);
    const QuotientReport report = verify_linear_quotients(order);
    CHECK(report.all_linear);
    CHECK(report.records.size() == order.sequence.size());
    const int n = kExample.n();
    for (const QuotientRecord& rec : report.records) {
        CHECK(rec.omega <= n - 1);
        CHECK(rec.omega == static_cast<int>(rec.witness_positions.size()));
        // the last chain member is never removable
        for (int pos : rec.witness_positions) CHECK(pos < n);
    }
}

TEST_CASE("verifier on the large example") {
    const CliqueOrder order = build_order(kFinal);
    const QuotientReport report = verify_linear_quotients(order);
    CHECK(report.all_linear);
    // the closed form would give 4 here; the verified order attains only 3
    // (no clique can shed all of its first n-1 members when alpha_1 = 1)
    CHECK(report.max_omega == 3);
}

TEST_CASE("single-clique configuration is trivially linear") {
    const Config cfg(3, 2, {1, 1, 1});
    const CliqueOrder order = build_order(cfg);
    REQUIRE(order.sequence.size() == 1);
    const QuotientReport report = verify_linear_quotients(order);
    CHECK(report.max_omega == 0);
    CHECK(report.records.front().omega == 0);
}

TEST_CASE("projective dimension") {
    CHECK(projective_dimension(kFinal) == 3);
    CHECK(projective_dimension(Config(4, 4, {2, 2, 2, 2})) == 3);  // full middle range
    CHECK(projective_dimension(kExample) == regularity(kExample));
}

TEST_CASE("top Betti data is tie-break independent") {
    for (const Config& cfg :
         {kExample, Config(4, 4, {2, 2, 2, 2}), Config(3, 4, {2, 3, 4}),
          Config(4, 5, {1, 2, 3, 5})}) {
        const auto first = top_betti(cfg, TieBreak::FirstTupleLexDesc);
        const auto last = top_betti(cfg, TieBreak::LastTupleLexAsc);
        CHECK(first == last);
        CHECK(first.second >= 1);
    }
    // with smallest cap >= 2 the closed form matches the enumerated value
    for (const Config& cfg : {kExample, Config(4, 4, {2, 2, 2, 2}), Config(3, 4, {2, 3, 4})})
        CHECK(top_betti(cfg).first == regularity(cfg));
}

TEST_CASE("peak criterion") {
    // max omega reaches n-1 exactly when a start tuple with a_1 >= 2, interior
    // middles, and a_n <= alpha_n - 2 exists
    for (const Config& cfg :
         {kExample, kFinal, Config(4, 4, {2, 2, 2, 2}), Config(3, 4, {2, 3, 4}),
          Config(4, 5, {1, 2, 3, 5})}) {
        const int n = cfg.n();
        const bool peak = projective_dimension(cfg) == n - 1;
        bool shape = false;
        for (const Tuple& a : start_tuples(cfg)) {
            bool fits = a[0] >= 2 && a[n - 1] <= cfg.cap(n) - 2;
            for (int j = 1; fits && j < n - 1; ++j)
                fits = a[j] >= 1 && a[j] <= cfg.cap(j + 1) - 1;
            if (fits) {
                shape = true;
                break;
            }
        }
        CHECK(peak == shape);
        // the arithmetic form n <= d <= |alpha| - n agrees when alpha_1 >= 2
        if (cfg.alpha().front() >= 2)
            CHECK(peak == (n <= cfg.d() && cfg.d() <= cfg.alpha_sum() - n));
    }
}

TEST_CASE("closed form and enumerated dimension split at unit smallest cap") {
    // alpha_1 = 1 blocks every start tuple with a_1 >= 2, so no clique sheds
    // all of its first n-1 members and max omega stays at n-2 even though the
    // closed form reports n-1
    const Config small(4, 5, {1, 2, 3, 5});
    CHECK(regularity(small) == 3);
    CHECK(projective_dimension(small) == 2);

    CHECK(regularity(kFinal) == 4);
    CHECK(projective_dimension(kFinal) == 3);
}

}  // TEST_SUITE
