#include "orgknow/graph.hpp"

#include <random>
#include <vector>

#include "doctest.h"

using namespace orgknow;

namespace {

/// Independent dense-matrix oracle: metrics recomputed from a plain
/// adjacency matrix, never through the graph's own indexes.
struct MatrixOracle {
    std::size_t n;
    std::vector<std::vector<double>> weight; // weight[i][j] for edge ids[i] -> ids[j]
    std::vector<NodeId> ids;

    explicit MatrixOracle(const std::vector<NodeId>& node_ids)
        : n(node_ids.size()), weight(n, std::vector<double>(n, 0.0)), ids(node_ids) {}

    std::size_t index_of(NodeId id) const {
        for (std::size_t i = 0; i < n; ++i) {
            if (ids[i] == id) {
                return i;
            }
        }
        FAIL("oracle asked about unknown node");
        return 0;
    }

    void record_edge(NodeId source, NodeId target, double w) {
        weight[index_of(source)][index_of(target)] = w;
    }

    std::size_t in_degree(NodeId id) const {
        std::size_t column = index_of(id), count = 0;
        for (std::size_t row = 0; row < n; ++row) {
            count += weight[row][column] != 0.0 ? 1 : 0;
        }
        return count;
    }

    std::size_t out_degree(NodeId id) const {
        std::size_t row = index_of(id), count = 0;
        for (std::size_t column = 0; column < n; ++column) {
            count += weight[row][column] != 0.0 ? 1 : 0;
        }
        return count;
    }

    double in_weight(NodeId id) const {
        std::size_t column = index_of(id);
        double sum = 0.0;
        for (std::size_t row = 0; row < n; ++row) {
            sum += weight[row][column];
        }
        return sum;
    }

    double out_weight(NodeId id) const {
        std::size_t row = index_of(id);
        double sum = 0.0;
        for (std::size_t column = 0; column < n; ++column) {
            sum += weight[row][column];
        }
        return sum;
    }

    double density() const {
        std::size_t m = 0;
        for (std::size_t row = 0; row < n; ++row) {
            for (std::size_t column = 0; column < n; ++column) {
                m += weight[row][column] != 0.0 ? 1 : 0;
            }
        }
        return static_cast<double>(m) / static_cast<double>(n * (n - 1));
    }
};

} // namespace

TEST_CASE("add_node inserts and is idempotent") {
    DirectedWeightedGraph g;
    g.add_node(1);
    CHECK(g.node_count() == 1);
    CHECK(g.edge_count() == 0);
    g.add_node(1);
    CHECK(g.node_count() == 1);
    g.add_node(2);
    CHECK(g.node_count() == 2);
    CHECK(g.has_node(2));
    CHECK_THROWS_AS(g.add_node(0), InvalidNodeIdError);
}

TEST_CASE("add_edge stores the weight and enforces invariants") {
    DirectedWeightedGraph g;
    g.add_node(1);
    g.add_node(2);
    g.add_edge(1, 2, 10.0);
    CHECK(g.edge_count() == 1);
    CHECK(g.edge_weight(1, 2) == 10.0);

    CHECK_THROWS_AS(g.add_edge(1, 2, 5.0), DuplicateEdgeError);
    CHECK_THROWS_AS(g.add_edge(1, 1, 1.0), SelfLoopError);
    CHECK_THROWS_AS(g.add_edge(1, 3, 1.0), UnknownNodeError);
    CHECK_THROWS_AS(g.add_edge(3, 2, 1.0), UnknownNodeError);
    CHECK_THROWS_AS(g.add_edge(2, 1, 0.0), InvalidWeightError);
    CHECK_THROWS_AS(g.add_edge(2, 1, -1.0), InvalidWeightError);
}

TEST_CASE("degree on a directed star") {
    DirectedWeightedGraph g;
    for (NodeId id = 1; id <= 5; ++id) {
        g.add_node(id);
    }
    for (NodeId spoke = 2; spoke <= 5; ++spoke) {
        g.add_edge(spoke, 1, 1.0);
    }
    auto center = g.degree(1);
    CHECK(center.in_degree == 4);
    CHECK(center.out_degree == 0);
    CHECK(center.total == 4);

    g.add_node(9);
    auto isolated = g.degree(9);
    CHECK(isolated.in_degree == 0);
    CHECK(isolated.out_degree == 0);
    CHECK(isolated.total == 0);

    CHECK_THROWS_AS(g.degree(77), UnknownNodeError);
}

TEST_CASE("weighted degree sums incident weights") {
    DirectedWeightedGraph g;
    for (NodeId id = 1; id <= 4; ++id) {
        g.add_node(id);
    }
    g.add_edge(2, 1, 10.0);
    g.add_edge(3, 1, 9.0);
    g.add_edge(4, 1, 1.0);
    auto w = g.weighted_degree(1);
    CHECK(w.in_weight == 20.0);
    CHECK(w.out_weight == 0.0);
    CHECK(w.total == 20.0);

    g.add_node(9);
    auto isolated = g.weighted_degree(9);
    CHECK(isolated.in_weight == 0.0);
    CHECK(isolated.out_weight == 0.0);
    CHECK(isolated.total == 0.0);
}

TEST_CASE("density of small graphs") {
    DirectedWeightedGraph complete3;
    for (NodeId id = 1; id <= 3; ++id) {
        complete3.add_node(id);
    }
    for (NodeId a = 1; a <= 3; ++a) {
        for (NodeId b = 1; b <= 3; ++b) {
            if (a != b) {
                complete3.add_edge(a, b, 1.0);
            }
        }
    }
    CHECK(complete3.density() == 1.0);

    DirectedWeightedGraph pair;
    pair.add_node(1);
    pair.add_node(2);
    pair.add_edge(1, 2, 3.0);
    CHECK(pair.density() == 0.5);

    DirectedWeightedGraph single;
    single.add_node(1);
    CHECK_THROWS_AS(single.density(), TooFewNodesError);

    DirectedWeightedGraph empty;
    CHECK_THROWS_AS(empty.density(), TooFewNodesError);
}

TEST_CASE("density of a 48-node, 480-edge graph") {
    // Every node votes for the next ten ids (mod 48): 480 distinct edges.
    DirectedWeightedGraph g;
    for (NodeId id = 1; id <= 48; ++id) {
        g.add_node(id);
    }
    for (NodeId source = 1; source <= 48; ++source) {
        for (NodeId step = 1; step <= 10; ++step) {
            NodeId target = (source - 1 + step) % 48 + 1;
            g.add_edge(source, target, static_cast<double>(11 - step));
        }
    }
    CHECK(g.edge_count() == 480);
    CHECK(g.density() == 480.0 / 2256.0);
}

TEST_CASE("symmetrize folds directional weights into pair weights") {
    DirectedWeightedGraph g;
    g.add_node(1);
    g.add_node(2);
    g.add_node(3);
    g.add_edge(1, 2, 3.0);
    g.add_edge(2, 1, 5.0);
    g.add_edge(1, 3, 3.0);

    auto u = g.symmetrize();
    CHECK(u.is_undirected());
    CHECK(u.edge_weight(1, 2) == 8.0);
    CHECK(u.edge_weight(2, 1) == 8.0);
    CHECK(u.edge_weight(1, 3) == 3.0);
    CHECK(u.edge_weight(3, 1) == 3.0);

    CHECK(u.nodes() == g.nodes());
    CHECK(u.total_edge_weight() == g.total_edge_weight());

    auto twice = u.symmetrize();
    CHECK(twice == u);
}

TEST_CASE("symmetrized density counts unordered pairs") {
    DirectedWeightedGraph g;
    g.add_node(1);
    g.add_node(2);
    g.add_node(3);
    g.add_edge(1, 2, 1.0);
    g.add_edge(2, 1, 2.0);
    auto u = g.symmetrize();
    // One of three possible pairs is joined.
    CHECK(u.density() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("random graphs match the adjacency-matrix oracle") {
    std::mt19937 rng(20210613);
    for (int round = 0; round < 25; ++round) {
        std::uniform_int_distribution<std::size_t> size_dist(2, 20);
        std::size_t n = size_dist(rng);

        std::vector<NodeId> ids;
        for (std::size_t i = 0; i < n; ++i) {
            ids.push_back(static_cast<NodeId>(i + 1));
        }
        DirectedWeightedGraph g;
        for (NodeId id : ids) {
            g.add_node(id);
        }
        MatrixOracle oracle(ids);

        std::uniform_real_distribution<double> keep(0.0, 1.0);
        std::uniform_int_distribution<int> weight_dist(1, 10);
        std::size_t m = 0;
        double mass = 0.0;
        for (NodeId a : ids) {
            for (NodeId b : ids) {
                if (a == b || keep(rng) > 0.4) {
                    continue;
                }
                double w = static_cast<double>(weight_dist(rng));
                g.add_edge(a, b, w);
                oracle.record_edge(a, b, w);
                ++m;
                mass += w;
            }
        }

        std::size_t in_sum = 0, out_sum = 0;
        double weighted_total_sum = 0.0;
        for (NodeId id : ids) {
            auto d = g.degree(id);
            auto w = g.weighted_degree(id);
            CHECK(d.in_degree == oracle.in_degree(id));
            CHECK(d.out_degree == oracle.out_degree(id));
            CHECK(d.total == d.in_degree + d.out_degree);
            CHECK(w.in_weight == oracle.in_weight(id));
            CHECK(w.out_weight == oracle.out_weight(id));
            in_sum += d.in_degree;
            out_sum += d.out_degree;
            weighted_total_sum += w.total;
        }
        // Handshake identities.
        CHECK(in_sum == m);
        CHECK(out_sum == m);
        CHECK(weighted_total_sum == 2.0 * mass);
        if (m > 0) {
            CHECK(g.density() == oracle.density());
        }
        CHECK(g.density() >= 0.0);
        CHECK(g.density() <= 1.0);

        auto u = g.symmetrize();
        CHECK(u.nodes() == g.nodes());
        CHECK(u.total_edge_weight() == doctest::Approx(g.total_edge_weight()).epsilon(1e-12));
    }
}
