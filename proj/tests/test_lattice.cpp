#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "veronese/lattice.hpp"

using namespace veronese;

TEST_SUITE("lattice") {

TEST_CASE("config validation") {
    CHECK_NOTHROW(Config(5, 7, {1, 4, 4, 5, 7}));
    CHECK_THROWS_AS(Config(2, 3, {2, 2}), ConfigError);          // n = 2 degenerate
    CHECK_THROWS_AS(Config(3, 6, {2, 2, 2}), ConfigError);       // d = |alpha| principal
    CHECK_THROWS_AS(Config(3, 7, {2, 2, 2}), ConfigError);       // d > |alpha|
    CHECK_THROWS_AS(Config(3, 3, {2, 1, 2}), ConfigError);       // caps not sorted
    CHECK_THROWS_AS(Config(3, 2, {2, 2, 3}), ConfigError);       // cap above degree
    CHECK_THROWS_AS(Config(3, 3, {0, 2, 2}), ConfigError);       // cap below one
    CHECK_THROWS_AS(Config(3, 3, {2, 2}), ConfigError);          // wrong arity
}

TEST_CASE("point enumeration counts") {
    CHECK(enumerate_points(Config(5, 7, {1, 4, 4, 5, 7})).size() == 171);
    CHECK(enumerate_points(Config(3, 3, {3, 3, 3})).size() == 10);

    const Config cfg(5, 8, {2, 2, 2, 3, 3});
    CHECK(static_cast<long long>(enumerate_points(cfg).size()) ==
          oracle::count_bounded_compositions(8, {2, 2, 2, 3, 3}));
}

TEST_CASE("points are strictly lex-descending and valid") {
    const Config cfg(5, 8, {2, 2, 2, 3, 3});
    const auto points = enumerate_points(cfg);
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        CHECK(lex_greater(points[i], points[i + 1]));
    for (const Tuple& p : points) CHECK(point_in(p, cfg));
}

TEST_CASE("lex comparison") {
    CHECK(lex_compare({1, 1, 1, 3, 2}, {0, 2, 1, 3, 2}) > 0);
    CHECK(lex_compare({1, 1, 1, 3, 2}, {1, 1, 1, 3, 2}) == 0);
    CHECK(lex_compare({0, 2, 1, 3, 2}, {1, 1, 1, 3, 2}) < 0);
    CHECK_THROWS_AS(lex_compare({1, 2}, {1, 2, 3}), ArgumentError);
}

TEST_CASE("eta recurrence") {
    CHECK(eta(Config(5, 8, {2, 2, 2, 3, 3})) == Tuple{0, 0, 2, 3, 3});
    CHECK(eta(Config(4, 3, {3, 3, 3, 3})) == Tuple{0, 0, 0, 3});  // full caps collapse

    // eta is the lex-minimum of the enumeration
    for (const Config& cfg : {Config(5, 8, {2, 2, 2, 3, 3}), Config(3, 4, {2, 3, 4}),
                              Config(4, 5, {1, 2, 3, 5})}) {
        const auto points = enumerate_points(cfg);
        Tuple min = points.front();
        for (const Tuple& p : points)
            if (lex_less(p, min)) min = p;
        CHECK(eta(cfg) == min);
        CHECK(points.back() == min);
    }
}

TEST_CASE("rank") {
    const Config cfg(5, 8, {2, 2, 2, 3, 3});
    CHECK(rank_of(eta(cfg), cfg) == 0);
    CHECK(rank_of({0, 1, 1, 3, 3}, cfg) == 1);
    for (const Tuple& p : enumerate_points(cfg)) CHECK(rank_of(p, cfg) >= 0);
}

TEST_CASE("newton dual") {
    const Config cfg(5, 7, {1, 4, 4, 5, 7});
    const Config dual = newton_dual(cfg);
    CHECK(dual.d() == 14);
    CHECK(dual.alpha() == cfg.alpha());
    CHECK(newton_dual(dual) == cfg);

    // cap-complement bijection between the point sets
    const auto points = enumerate_points(cfg);
    const auto dual_points = enumerate_points(dual);
    CHECK(points.size() == dual_points.size());
    for (const Tuple& p : points) {
        Tuple img(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) img[i] = cfg.alpha()[i] - p[i];
        CHECK(point_in(img, dual));
    }
}

TEST_CASE("newton dual clamps inactive caps") {
    // |alpha| - d = 4 < alpha_n, so the dual caps are cut down to the degree
    const Config cfg(5, 7, {1, 1, 1, 1, 7});
    const Config dual = newton_dual(cfg);
    CHECK(dual.d() == 4);
    CHECK(dual.alpha() == Tuple{1, 1, 1, 1, 4});
    CHECK(enumerate_points(dual).size() == enumerate_points(cfg).size());
}

TEST_CASE("point table") {
    const Config cfg(5, 8, {2, 2, 2, 3, 3});
    const PointTable table(cfg);
    CHECK(table.size() == static_cast<int>(enumerate_points(cfg).size()));
    for (int i = 0; i < table.size(); ++i) CHECK(table.index_of(table[i]) == i);
    CHECK(table.eta() == eta(cfg));
    CHECK_THROWS_AS(table.index_of({8, 0, 0, 0, 0}), ArgumentError);
    CHECK(!table.contains({8, 0, 0, 0, 0}));
}

}  // TEST_SUITE
