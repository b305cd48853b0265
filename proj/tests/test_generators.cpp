#include <doctest.h>

#include <set>

#include "ccast/generators.hpp"
#include "test_support.hpp"

using namespace ccast;
using namespace ccast::testing;

TEST_CASE("every generator output validates") {
    std::vector<Instance> instances;
    instances.push_back(gen_line(1, 1));
    instances.push_back(gen_line(7, 3));
    instances.push_back(gen_grid(1, 2, 2));
    instances.push_back(gen_grid(4, 5, 3));
    instances.push_back(gen_random_tree(1, 2, 0));
    instances.push_back(gen_random_tree(14, 4, 5));
    instances.push_back(gen_random_connected(6, 0.0, 2, 1));
    instances.push_back(gen_random_connected(12, 0.5, 2, 2));
    instances.push_back(gen_gadget(2).first);
    instances.push_back(gen_gadget(3).first);
    instances.push_back(gen_setcover({2, {{1, 2}, {2}}}));
    instances.push_back(gen_setpartition({{1, 2, 3}, 3, SetPartitionSpec::Shape::Line}));
    instances.push_back(gen_setpartition({{2, 2, 2}, 3, SetPartitionSpec::Shape::NeckTree}));
    for (const Instance& instance : instances) {
        CHECK_NOTHROW(validate_instance(instance));
    }
}

TEST_CASE("gen_line shapes") {
    Instance one = gen_line(1, 1);
    CHECK(one.reading_count() == 1);
    CHECK(one.graph.has_edge(0, 1));

    Instance five = gen_line(5, 2);
    DistanceMap d = bfs_distances(five);
    for (int v = 1; v <= 5; ++v) CHECK(d[static_cast<size_t>(v)] == v);

    Instance ccp = gen_line(3, 2, {1, 1, 2});
    CHECK(!ccp.is_uccp());
    CHECK(ccp.size_of(3) == 2);
    CHECK_THROWS_AS(gen_line(0, 2), Error);
    CHECK_THROWS_AS(gen_line(3, 2, {1, 1}), Error);
}

TEST_CASE("gen_grid shapes") {
    Instance tiny = gen_grid(1, 2, 2);
    CHECK(tiny.reading_count() == 1);

    Instance square = gen_grid(2, 2, 2);
    CHECK(square.reading_count() == 3);
    CHECK(square.graph.edges().size() == 4);

    CHECK_THROWS_AS(gen_grid(0, 3, 2), Error);
}

TEST_CASE("infer_grid_dims recognizes lattices and only lattices") {
    CHECK(infer_grid_dims(gen_grid(3, 4, 2)) == std::make_pair(3, 4));
    CHECK(infer_grid_dims(gen_grid(1, 5, 2)).has_value());
    CHECK(!infer_grid_dims(gen_random_connected(8, 0.4, 2, 3)).has_value());
    // the 4-cycle with this labeling is not a gen_grid layout
    Instance cycle = make_instance(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 2);
    CHECK(!infer_grid_dims(cycle).has_value());
}

TEST_CASE("gen_random_tree is deterministic per seed and really a tree") {
    Instance a = gen_random_tree(6, 2, 7);
    Instance b = gen_random_tree(6, 2, 7);
    CHECK(a == b);
    Instance c = gen_random_tree(6, 2, 8);
    CHECK(!(a == c));
    for (const Instance& t : {a, c}) {
        CHECK(t.graph.edges().size() == 6);  // n edges on n+1 vertices, connected
        CHECK(t.graph.connected());
    }
    CHECK(gen_random_tree(1, 2, 0).graph.has_edge(0, 1));
}

TEST_CASE("gen_random_connected density extremes") {
    Instance complete = gen_random_connected(4, 1.0, 2, 3);
    CHECK(complete.graph.edges().size() == 10);  // K5
    Instance tree = gen_random_connected(9, 0.0, 2, 3);
    CHECK(tree.graph.edges().size() == 9);
}

TEST_CASE("gen_random_connected frozen regression") {
    Instance instance = gen_random_connected(9, 0.3, 2, 11);
    std::vector<std::pair<VertexId, VertexId>> expected = {
        {0, 1}, {0, 3}, {0, 4}, {0, 7}, {1, 2}, {1, 3}, {1, 4}, {1, 7}, {1, 8}, {2, 3},
        {2, 6}, {3, 5}, {3, 6}, {4, 5}, {4, 8}, {4, 9}, {5, 6}, {5, 9}, {6, 9}};
    CHECK(instance.graph.edges() == expected);
}

TEST_CASE("gen_gadget ell=2 structure") {
    auto [instance, spec] = gen_gadget(2);
    CHECK(spec.k == 2);
    CHECK(instance.reading_count() == 10);
    REQUIRE(spec.gadgets.size() == 2);
    CHECK(spec.gadgets[0].lanes.size() == 2);
    for (const auto& lane : spec.gadgets[0].lanes) CHECK(lane.size() == 2);
    CHECK(spec.gadgets[1].lanes.size() == 4);
    for (const auto& lane : spec.gadgets[1].lanes) CHECK(lane.size() == 1);

    // gateway degrees: (i-1)k on-ramps + ik edges to tails
    const Graph& g = instance.graph;
    CHECK(g.neighbors(spec.gadgets[0].gateway).size() == 2);
    CHECK(g.neighbors(spec.gadgets[1].gateway).size() == 6);
    // heads of the last gadget sit on the sink
    for (const auto& lane : spec.gadgets[1].lanes) {
        CHECK(g.has_edge(lane.back(), kSink));
    }
}

TEST_CASE("gen_gadget vertex counts") {
    CHECK(gen_gadget(2).first.reading_count() == 10);
    CHECK(gen_gadget(3).first.reading_count() == 111);  // 3 * (36 + 1)
    CHECK_THROWS_AS(gen_gadget(1), Error);
    CHECK_THROWS_AS(gen_gadget(7), EllTooLarge);
}

TEST_CASE("gen_gadget frozen BFS distances for ell=2") {
    auto [instance, spec] = gen_gadget(2);
    DistanceMap d = bfs_distances(instance);
    CHECK(d == DistanceMap{0, 4, 3, 4, 3, 5, 1, 1, 1, 1, 2});
}

TEST_CASE("gen_gadget frozen BFS distances for ell=3") {
    auto [instance, spec] = gen_gadget(3);
    DistanceMap d = bfs_distances(instance);
    // closed form per gadget: heads of gadget i sit one hop above the next
    // gateway, tails k/i - 1 above their head, gateways one above the tails
    // d(gw_i) = d(gw_{i+1}) + k/i + 1, anchored at d(gw_3) = k/3 + 1
    std::vector<int> gateway_expect = {14, 7, 3};
    for (int i = 1; i <= 3; ++i) {
        const auto& g = spec.gadgets[static_cast<size_t>(i - 1)];
        int expected_gateway = gateway_expect[static_cast<size_t>(i - 1)];
        CHECK(d[static_cast<size_t>(g.gateway)] == expected_gateway);
        for (const auto& lane : g.lanes) {
            CHECK(d[static_cast<size_t>(lane.front())] == expected_gateway - 1);
            CHECK(d[static_cast<size_t>(lane.back())] ==
                  expected_gateway - static_cast<int>(lane.size()));
        }
    }
}

TEST_CASE("gadget spec annotation queries") {
    auto [instance, spec] = gen_gadget(2);
    CHECK(spec.is_gateway(5));
    CHECK(spec.gadget_of(5) == 1);
    CHECK(spec.gadget_of(kSink) == 0);
    CHECK(spec.is_spc(1));
    CHECK(spec.is_spc(2));
    CHECK(!spec.is_spc(3));
    CHECK(spec.is_tail(1));
    CHECK(spec.is_head(2));
    // single-vertex lanes are both head and tail
    CHECK(spec.is_head(6));
    CHECK(spec.is_tail(6));
    CHECK(spec.spc_vertices() == std::vector<VertexId>{1, 2, 6});
}

TEST_CASE("gen_setcover builds the three-level instance") {
    Instance instance = gen_setcover({2, {{1, 2}, {2}}});
    CHECK(instance.capacity_k == 2);
    CHECK(instance.reading_count() == 6);  // 2 sets + 2 elements + 2 enforcers
    CHECK(instance.graph.has_edge(0, 1));
    CHECK(instance.graph.has_edge(0, 2));
    CHECK(instance.graph.has_edge(1, 3));  // x1 in S1
    CHECK(instance.graph.has_edge(1, 4));  // x2 in S1
    CHECK(instance.graph.has_edge(2, 4));  // x2 in S2
    CHECK(!instance.graph.has_edge(2, 3));
    DistanceMap d = bfs_distances(instance);
    CHECK(d[5] == 2);  // enforcers hang off their subset
    CHECK(d[6] == 2);
}

TEST_CASE("gen_setcover rejects uncovered elements") {
    CHECK_THROWS_AS(gen_setcover({3, {{1, 2}}}), Error);
    CHECK_THROWS_AS(gen_setcover({2, {{1, 5}}}), Error);
}

TEST_CASE("gen_setcover single covering set") {
    Instance instance = gen_setcover({3, {{1, 2, 3}}});
    CHECK(instance.capacity_k == 3);
    CHECK(instance.reading_count() == 1 + 3 + 2);
}

TEST_CASE("gen_setpartition line puts the first element farthest") {
    Instance line = gen_setpartition({{1, 2, 3}, 3, SetPartitionSpec::Shape::Line});
    CHECK(line.size_of(3) == 1);  // farthest vertex carries the first element
    CHECK(line.size_of(2) == 2);
    CHECK(line.size_of(1) == 3);
}

TEST_CASE("gen_setpartition neck-tree wiring") {
    Instance neck = gen_setpartition({{2, 2, 2}, 3, SetPartitionSpec::Shape::NeckTree});
    CHECK(neck.size_of(1) == 3);  // the neck reads k
    CHECK(neck.graph.has_edge(0, 1));
    for (int leaf = 2; leaf <= 4; ++leaf) {
        CHECK(neck.graph.has_edge(1, leaf));
        CHECK(neck.size_of(leaf) == 2);
    }
}

TEST_CASE("gen_setpartition input validation") {
    CHECK_THROWS_AS(gen_setpartition({{1, 2}, 3, SetPartitionSpec::Shape::Line}), Error);
    CHECK_THROWS_AS(gen_setpartition({{7, 1}, 4, SetPartitionSpec::Shape::Line}), Error);
}
