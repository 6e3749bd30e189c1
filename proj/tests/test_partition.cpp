#include <catch2/catch_amalgamated.hpp>

#include "geoplan/partition.hpp"
#include "helpers.hpp"

using namespace geoplan;
using testutil::mg;
using testutil::plan_of;

namespace {

// H of the (n,n; 5,3,2^{n-4}) construction at n = 4: loop at u plus three
// u-v edges a, b, c. Class 0 = {a', b', b'', c'}, class 1 = {a'', c'', both
// loop copies}.
EulerianPartition two_class_witness() {
    Multigraph h = mg(2, {{0, 0}, {0, 1}, {0, 1}, {0, 1}});
    //                    loop      a       b       c
    return EulerianPartition(double_graph(h), {1, 1, 0, 1, 0, 0, 0, 1}, 2);
}

}  // namespace

TEST_CASE("EulerianPartition basics") {
    EulerianPartition part = two_class_witness();
    CHECK(part.class_sizes() == std::vector<int>{4, 4});
    CHECK(part.multiplicity(0, 1) == 2);
    CHECK(part.multiplicity(1, 0) == 1);
    CHECK(part.multiplicity(1, 1) == 1);
    CHECK(part.multiplicity(2, 0) == 2);
    // Conservation: each edge contributes exactly two colored copies.
    for (int e = 0; e < 4; ++e)
        CHECK(part.multiplicity(e, 0) + part.multiplicity(e, 1) == 2);

    CHECK_THROWS_AS(
        EulerianPartition(double_graph(mg(1, {{0, 0}})), {0}, 1),
        std::invalid_argument);
    CHECK_THROWS_AS(
        EulerianPartition(double_graph(mg(1, {{0, 0}})), {0, 2}, 2),
        std::invalid_argument);
}

TEST_CASE("class_subgraph and the Eulerian test per class") {
    EulerianPartition part = two_class_witness();
    Multigraph e2 = class_subgraph(part, 1);
    CHECK(degree(e2, 0) == 6);  // a'' + c'' + doubled loop
    CHECK(degree(e2, 1) == 2);
    CHECK(is_eulerian(e2));
    CHECK(is_eulerian_partition(part));

    // A doubled loop as a single class is Eulerian.
    EulerianPartition loop(double_graph(mg(1, {{0, 0}})), {0, 0}, 1);
    CHECK(is_eulerian(class_subgraph(loop, 0)));
    CHECK(is_eulerian_partition(loop));

    // One copy of a non-loop edge per class has odd degrees.
    EulerianPartition split(double_graph(mg(2, {{0, 1}})), {0, 1}, 2);
    CHECK_FALSE(is_eulerian(class_subgraph(split, 0)));
    CHECK_FALSE(is_eulerian_partition(split));

    CHECK_THROWS_AS(class_subgraph(part, 2), std::invalid_argument);
}

TEST_CASE("is_t_partition compares class sizes as multisets") {
    EulerianPartition part = two_class_witness();
    CHECK(is_t_partition(part, DegreeSequence({4, 4})));
    CHECK_FALSE(is_t_partition(part, DegreeSequence({5, 3})));
    EulerianPartition whole(double_graph(mg(1, {{0, 0}})), {0, 0}, 1);
    CHECK(is_t_partition(whole, DegreeSequence({2})));
}

TEST_CASE("link graphs") {
    // Both loop copies one color: a single connected color vertex.
    EulerianPartition same(double_graph(mg(1, {{0, 0}})), {0, 0}, 1);
    LinkGraph l1 = link_graph(same, 0);
    CHECK(l1.colors_present == std::vector<int>{0});
    CHECK(l1.edges.empty());
    CHECK(l1.connected());

    // Loop copies in two colors: the colors are linked.
    EulerianPartition split(double_graph(mg(1, {{0, 0}})), {0, 1}, 2);
    LinkGraph l2 = link_graph(split, 0);
    CHECK(l2.colors_present == std::vector<int>{0, 1});
    CHECK(l2.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(l2.connected());

    // Two edges at v, each monochromatic in different colors: isolated
    // colors, the local-connectivity obstruction.
    EulerianPartition iso(double_graph(mg(2, {{0, 1}, {0, 1}})), {0, 0, 1, 1}, 2);
    LinkGraph l3 = link_graph(iso, 0);
    CHECK(l3.colors_present == std::vector<int>{0, 1});
    CHECK(l3.edges.empty());
    CHECK_FALSE(l3.connected());

    CHECK(is_locally_connected(same));
    CHECK(is_locally_connected(split));
    CHECK_FALSE(is_locally_connected(iso));
}

TEST_CASE("find_partition decides witness existence") {
    Multigraph two_cycle = mg(2, {{0, 1}, {0, 1}});
    CHECK_FALSE(find_partition(two_cycle, DegreeSequence({3, 1})).has_value());

    auto present = find_partition(two_cycle, DegreeSequence({2, 2}));
    REQUIRE(present.has_value());
    CHECK(is_eulerian_partition(*present));
    CHECK(is_t_partition(*present, DegreeSequence({2, 2})));
    CHECK(is_locally_connected(*present));

    Multigraph h = mg(2, {{0, 0}, {0, 1}, {0, 1}, {0, 1}});
    auto part = find_partition(h, DegreeSequence({4, 4}));
    REQUIRE(part.has_value());
    CHECK(is_eulerian_partition(*part));
    CHECK(is_t_partition(*part, DegreeSequence({4, 4})));
    CHECK(is_locally_connected(*part));

    CHECK_THROWS_AS(find_partition(mg(2, {{0, 0}}), DegreeSequence({1, 1})),
                    std::invalid_argument);  // disconnected
    CHECK_THROWS_AS(find_partition(two_cycle, DegreeSequence({2, 2, 2})),
                    std::invalid_argument);  // size sum mismatch
}

TEST_CASE("partitions found satisfy the per-vertex parity law") {
    // In an Eulerian class every vertex degree is even, so per vertex and
    // color the copy count is even.
    Multigraph h = mg(2, {{0, 0}, {0, 1}, {0, 1}, {0, 1}});
    auto part = find_partition(h, DegreeSequence({4, 4}));
    REQUIRE(part.has_value());
    for (int v = 0; v < h.vertex_count; ++v)
        for (int j = 0; j < part->color_count; ++j) {
            int incident = 0;
            for (int e = 0; e < h.edge_count(); ++e) {
                auto [a, b] = h.edges[e];
                int factor = (a == v) + (b == v);
                incident += factor * part->multiplicity(e, j);
            }
            CHECK(incident % 2 == 0);
        }
}

TEST_CASE("partition_to_plan") {
    Multigraph loop = mg(1, {{0, 0}});
    EulerianPartition lp(double_graph(loop), {0, 0}, 1);
    Plan p1 = partition_to_plan(loop, lp);
    CHECK(p1.h.edges == std::vector<std::pair<int, int>>{{0, 0}});
    CHECK(is_geographic(p1));

    Multigraph edge = mg(2, {{0, 1}});
    EulerianPartition ep(double_graph(edge), {0, 0}, 1);
    Plan p2 = partition_to_plan(edge, ep);
    CHECK(p2.h.is_loop(0));
    CHECK(is_geographic(p2));

    // Class sizes become the dual degree sequence.
    Multigraph h = mg(2, {{0, 0}, {0, 1}, {0, 1}, {0, 1}});
    auto part = find_partition(h, DegreeSequence({4, 4}));
    REQUIRE(part.has_value());
    Plan p3 = partition_to_plan(h, *part);
    CHECK(is_geographic(p3));
    CHECK(degree_sequence(p3.h).entries == std::vector<int>{4, 4});

    EulerianPartition bad(double_graph(edge), {0, 1}, 2);
    CHECK_THROWS_AS(partition_to_plan(edge, bad), std::invalid_argument);
    CHECK_THROWS_AS(partition_to_plan(loop, ep), std::invalid_argument);
}

TEST_CASE("plan_to_partition") {
    EulerianPartition lp = plan_to_partition(plan_of("2|2\n"));
    CHECK(lp.color == std::vector<int>{0, 0});

    // Two-edge path with both edges loops at the single face: every copy is
    // colored by that face.
    EulerianPartition pp = plan_to_partition(plan_of("110|2\n101|2\n"));
    CHECK(pp.color == std::vector<int>{0, 0, 0, 0});
    CHECK(is_eulerian_partition(pp));
    CHECK(is_t_partition(pp, DegreeSequence({4})));
    CHECK(is_locally_connected(pp));

    CHECK_THROWS_AS(plan_to_partition(plan_of("11|11\n")), std::invalid_argument);
}

TEST_CASE("partition round-trip reproduces the plan up to isomorphism") {
    for (int ell = 1; ell <= 2; ++ell)
        testutil::for_each_window_plan(ell, [&](const Plan& p) {
            if (!is_geographic(p)) return;
            EulerianPartition part = plan_to_partition(p);
            CHECK(is_eulerian_partition(part));
            CHECK(is_t_partition(part, degree_sequence(p.h)));
            CHECK(is_locally_connected(part));
            Plan back = partition_to_plan(p.g, part);
            CHECK(plans_isomorphic(back, p));
        });
}
