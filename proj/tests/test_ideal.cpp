#include <doctest.h>

#include <algorithm>

#include "veronese/ideal.hpp"
#include "veronese/serialize.hpp"

using namespace veronese;

namespace {
const Config kSmall(3, 3, {2, 2, 2});
const Config kExample(5, 8, {2, 2, 2, 3, 3});
const Config kFinal(5, 7, {1, 4, 4, 5, 7});
}  // namespace

TEST_SUITE("ideal") {

TEST_CASE("generators") {
    const auto gens = generators_I(kFinal);
    CHECK(gens.size() == 171);
    for (const Tuple& g : gens) CHECK(tuple_sum(g) == kFinal.d());

    // equal degree and distinct, hence pairwise incomparable under division
    const auto small = generators_I(kSmall);
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = 0; j < small.size(); ++j) {
            if (i == j) continue;
            bool divides = true;
            for (std::size_t k = 0; k < small[i].size(); ++k)
                if (small[i][k] > small[j][k]) divides = false;
            CHECK(!divides);
        }
}

TEST_CASE("presentation binomials") {
    const PointTable table(kSmall);
    const Graph graph = build_graph(table);
    const auto pairs = groebner_pairs(table);

    const long long t = table.size();
    CHECK(static_cast<long long>(pairs.size()) == t * (t - 1) / 2 - graph.edge_count());

    for (const BinomialPair& bp : pairs) {
        CHECK(!graph.adjacent(bp.lead.first, bp.lead.second));
        CHECK(is_sorted_pair(table[bp.trail.first], table[bp.trail.second]));
        // the binomial vanishes under T_c -> x^c
        for (int k = 0; k < kSmall.n(); ++k)
            CHECK(table[bp.lead.first][k] + table[bp.lead.second][k] ==
                  table[bp.trail.first][k] + table[bp.trail.second][k]);
    }
}

TEST_CASE("dual generators") {
    const PointTable table(kExample);
    const auto cliques = enumerate_maximal_cliques(kExample);
    const auto gens = alexander_dual_generators(table, cliques);
    CHECK(gens.size() == cliques.size());
    const int expected_degree = table.size() - kExample.n();
    for (const DualGenerator& g : gens)
        CHECK(static_cast<int>(g.support.size()) == expected_degree);

    // every support is a minimal vertex cover of the complement graph
    const Graph graph = build_graph(table);
    std::vector<std::pair<int, int>> complement_edges;
    for (int u = 0; u < table.size(); ++u)
        for (int v = u + 1; v < table.size(); ++v)
            if (!graph.adjacent(u, v)) complement_edges.emplace_back(u, v);

    for (const DualGenerator& g : gens) {
        std::vector<char> in_support(table.size(), 0);
        for (int v : g.support) in_support[v] = 1;
        for (const auto& [u, v] : complement_edges) CHECK((in_support[u] || in_support[v]));
        // minimality: every support vertex covers some edge alone
        for (int w : g.support) {
            bool essential = false;
            for (const auto& [u, v] : complement_edges) {
                if (u == w && !in_support[v]) essential = true;
                if (v == w && !in_support[u]) essential = true;
                if (essential) break;
            }
            CHECK(essential);
        }
    }
}

TEST_CASE("dual generator count on the large example") {
    const PointTable table(kFinal);
    const auto gens = alexander_dual_generators(table, enumerate_maximal_cliques(kFinal));
    CHECK(gens.size() == 960);
    CHECK(gens.front().support.size() == 166);
}

TEST_CASE("cas export") {
    const std::string ideal_script = export_cas(kSmall, CasObject::Ideal);
    CHECK(ideal_script.find("I = ideal(") != std::string::npos);
    CHECK(ideal_script == export_cas(kSmall, CasObject::Ideal));  // deterministic

    const std::string gb = export_cas(kSmall, CasObject::Groebner);
    const PointTable table(kSmall);
    const auto pairs = groebner_pairs(table);
    REQUIRE(!pairs.empty());
    // the lead pair is printed first
    const std::string lead = "T" + std::to_string(pairs[0].lead.first) + "*T" +
                             std::to_string(pairs[0].lead.second) + " - ";
    CHECK(gb.find(lead) != std::string::npos);

    const std::string dual_script = export_cas(kSmall, CasObject::Dual);
    CHECK(dual_script.find("D = ideal(") != std::string::npos);
}

TEST_CASE("ideal export round-trips through json") {
    const auto gens = generators_I(kSmall);
    const Json doc = points_to_json(gens);
    CHECK(points_from_json(doc) == gens);

    const Json cfg_doc = to_json(kSmall);
    CHECK(config_from_json(cfg_doc) == kSmall);
}

}  // TEST_SUITE
