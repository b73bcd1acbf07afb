#include <doctest.h>

#include <algorithm>
#include <set>

#include "toric/fiber.hpp"
#include "toric/graver.hpp"

using namespace toric;

namespace {

HostPtr c4() {
    return make_host(new_hypergraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
}

HostPtr k5() {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            edges.push_back({i, j});
    return make_host(new_hypergraph(5, edges));
}

int k5_edge(int i, int j) {
    if (i > j)
        std::swap(i, j);
    int idx = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
            if (a == i && b == j)
                return idx;
            ++idx;
        }
    return -1;
}

} // namespace

TEST_CASE("margins") {
    auto host = c4();
    // canonical edges [0,1] [0,3] [1,2] [2,3]; the matching {01, 23}
    FiberPoint p{host, {1, 0, 0, 1}};
    CHECK(margin(p) == std::vector<Coeff>{1, 1, 1, 1});
    FiberPoint zero{host, {0, 0, 0, 0}};
    CHECK(margin(zero) == std::vector<Coeff>{0, 0, 0, 0});

    auto k = k5();
    std::vector<Coeff> counts(10, 0);
    counts[k5_edge(0, 2)] = 1; // edges {1,3} and {2,4} in 1-based vertices
    counts[k5_edge(1, 3)] = 1;
    CHECK(margin(FiberPoint{k, counts}) == std::vector<Coeff>{1, 1, 1, 1, 0});
}

TEST_CASE("enumerate_fiber on the 4-cycle") {
    Fiber f = enumerate_fiber(c4(), {1, 1, 1, 1});
    REQUIRE(f.points.size() == 2);
    // ascending lexicographic order
    CHECK(f.points[0].counts == std::vector<Coeff>{0, 1, 1, 0});
    CHECK(f.points[1].counts == std::vector<Coeff>{1, 0, 0, 1});
}

TEST_CASE("enumerate_fiber on K5 with a vertex left out") {
    Fiber f = enumerate_fiber(k5(), {1, 1, 1, 1, 0});
    REQUIRE(f.points.size() == 3);
    std::set<std::vector<Coeff>> expected;
    for (auto [a, b] : {std::pair{k5_edge(0, 1), k5_edge(2, 3)},
                        {k5_edge(0, 2), k5_edge(1, 3)},
                        {k5_edge(0, 3), k5_edge(1, 2)}}) {
        std::vector<Coeff> u(10, 0);
        u[a] = u[b] = 1;
        expected.insert(u);
    }
    std::set<std::vector<Coeff>> got;
    for (const auto& p : f.points)
        got.insert(p.counts);
    CHECK(got == expected);
}

TEST_CASE("the zero margin has exactly the zero point") {
    Fiber f = enumerate_fiber(k5(), std::vector<Coeff>(5, 0));
    REQUIRE(f.points.size() == 1);
    CHECK(f.points[0].counts == std::vector<Coeff>(10, 0));
}

TEST_CASE("apply_move walks between the two matchings") {
    auto host = c4();
    WalkVector move{host, {1, -1, -1, 1}};
    FiberPoint p{host, {1, 0, 0, 1}};
    auto q = apply_move(p, move, -1);
    REQUIRE(q);
    CHECK(q->counts == std::vector<Coeff>{0, 1, 1, 0});
    CHECK(margin(*q) == margin(p));

    CHECK_FALSE(apply_move(p, move, +1).has_value()); // would go negative

    auto back = apply_move(*q, move, +1);
    REQUIRE(back);
    CHECK(back->counts == p.counts);

    WalkVector other{k5(), std::vector<Coeff>(10, 0)};
    CHECK_THROWS_AS(apply_move(p, other, 1), HostMismatch);
}

TEST_CASE("moves preserve margins across the K5 graver set") {
    auto host = k5();
    auto moves = markov_moves(host);
    Fiber f = enumerate_fiber(host, {1, 1, 1, 1, 0});
    for (const auto& p : f.points)
        for (const auto& m : moves)
            for (int dir : {1, -1})
                if (auto q = apply_move(p, m, dir))
                    CHECK(margin(*q) == margin(p));
}

TEST_CASE("random_walk is reproducible and stays in the fiber") {
    auto host = c4();
    auto moves = markov_moves(host);
    FiberPoint start{host, {1, 0, 0, 1}};
    auto t1 = random_walk(start, moves, 50, 2024);
    auto t2 = random_walk(start, moves, 50, 2024);
    REQUIRE(t1.size() == 51);
    for (size_t i = 0; i < t1.size(); ++i)
        CHECK(t1[i].counts == t2[i].counts);

    Fiber f = enumerate_fiber(host, margin(start));
    std::set<std::vector<Coeff>> fiber_set;
    for (const auto& p : f.points)
        fiber_set.insert(p.counts);
    for (const auto& p : t1)
        CHECK(fiber_set.count(p.counts));

    auto t3 = random_walk(start, moves, 50, 2025);
    bool differs = false;
    for (size_t i = 0; i < t1.size(); ++i)
        differs |= t1[i].counts != t3[i].counts;
    CHECK(differs);
}

TEST_CASE("empty move list keeps the walk constant") {
    auto host = c4();
    FiberPoint start{host, {1, 0, 0, 1}};
    auto t = random_walk(start, {}, 10, 7);
    REQUIRE(t.size() == 11);
    for (const auto& p : t)
        CHECK(p.counts == start.counts);
}

TEST_CASE("walks visit the whole small fiber") {
    auto host = k5();
    auto moves = markov_moves(host);
    std::vector<Coeff> counts(10, 0);
    counts[k5_edge(0, 1)] = counts[k5_edge(2, 3)] = 1;
    FiberPoint start{host, counts};
    auto trace = random_walk(start, moves, 1000, 99);
    std::set<std::vector<Coeff>> seen;
    for (const auto& p : trace)
        seen.insert(p.counts);
    CHECK(seen.size() == 3);
}

TEST_CASE("fiber_connected") {
    auto host = c4();
    auto moves = markov_moves(host);
    Fiber f = enumerate_fiber(host, {1, 1, 1, 1});
    CHECK(fiber_connected(f, moves));
    CHECK_FALSE(fiber_connected(f, {})); // two points, no edges

    auto k = k5();
    Fiber g = enumerate_fiber(k, {1, 1, 1, 1, 0});
    CHECK(fiber_connected(g, markov_moves(k)));
}

TEST_CASE("graver moves connect every fiber of the test hosts") {
    for (const auto& host : {c4(), k5()}) {
        auto moves = markov_moves(host);
        // margins of all points with a couple of units per edge
        std::vector<std::vector<Coeff>> margins;
        margins.push_back(std::vector<Coeff>(host->n, 1));
        std::vector<Coeff> twos(host->n, 2);
        margins.push_back(twos);
        for (const auto& b : margins) {
            Coeff total = 0;
            for (Coeff x : b)
                total += x;
            if (total % host->uniform_degree().value() != 0)
                continue;
            Fiber f = enumerate_fiber(host, b);
            if (!f.points.empty())
                CHECK(fiber_connected(f, moves));
        }
    }
}

TEST_CASE("enumerate_fiber respects the work cap") {
    CHECK_THROWS_AS(enumerate_fiber(k5(), {4, 4, 4, 4, 4}, 10), ResourceLimit);
}
