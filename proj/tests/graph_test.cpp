#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "spfilt/graph.hpp"
#include "support.hpp"

using namespace spfilt;

namespace {

// Independent reconstruction: filter every map into [a, b] by monotonicity
// over the full relation, then pair nodes through the exhaustive upper-set
// filter. Deliberately avoids build_mutation_graph's search and
// enumerate_upper_sets.
struct NaiveGraph {
    std::vector<std::vector<int>> nodes;
    std::set<std::pair<std::vector<int>, std::vector<int>>> edges;
};

NaiveGraph naive_graph(const PosetHandle& poset, int a, int b) {
    NaiveGraph out;
    const int n = poset->size();
    const int width = b - a + 1;
    std::vector<int> values(static_cast<size_t>(n), 0);
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= width;
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        for (int i = 0; i < n; ++i) {
            values[static_cast<size_t>(i)] = a + static_cast<int>(rest % width);
            rest /= width;
        }
        bool monotone = true;
        for (int i = 0; i < n && monotone; ++i)
            for (int j = 0; j < n && monotone; ++j)
                if (poset->leq(i, j) &&
                    values[static_cast<size_t>(i)] > values[static_cast<size_t>(j)])
                    monotone = false;
        if (monotone) out.nodes.push_back(values);
    }
    std::sort(out.nodes.begin(), out.nodes.end());

    for (const auto& src : out.nodes) {
        for (const auto& w : test::brute_force_upper_lists(poset)) {
            if (w.empty()) continue;
            const Subset mask = poset->subset_of(w);
            std::vector<int> dst = src;
            for (int i = 0; i < n; ++i)
                if (mask[static_cast<size_t>(i)]) ++dst[static_cast<size_t>(i)];
            if (std::binary_search(out.nodes.begin(), out.nodes.end(), dst))
                out.edges.emplace(src, dst);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("one-element graph") {
    const MutationGraph g = build_mutation_graph(PrimePoset::chain(1), 0, 1);
    REQUIRE(g.nodes().size() == 2);
    CHECK(g.nodes()[0].values() == std::vector<int>{0});
    CHECK(g.nodes()[1].values() == std::vector<int>{1});
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].src == 0);
    CHECK(g.edges()[0].dst == 1);
    CHECK(g.edges()[0].label.is_all());
}

TEST_CASE("two-chain window graph matches the exhaustive reconstruction") {
    auto chain = PrimePoset::chain(2);
    const MutationGraph g = build_mutation_graph(chain, 0, 1);
    CHECK(g.nodes().size() == 3);
    CHECK(g.nodes()[0].values() == std::vector<int>{0, 0});
    CHECK(g.nodes()[1].values() == std::vector<int>{0, 1});
    CHECK(g.nodes()[2].values() == std::vector<int>{1, 1});
    CHECK(g.edges().size() == 2);

    const NaiveGraph reference = naive_graph(chain, 0, 1);
    REQUIRE(g.nodes().size() == reference.nodes.size());
    for (size_t i = 0; i < reference.nodes.size(); ++i)
        CHECK(g.nodes()[i].values() == reference.nodes[i]);
    std::set<std::pair<std::vector<int>, std::vector<int>>> built;
    for (const auto& e : g.edges())
        built.emplace(g.nodes()[static_cast<size_t>(e.src)].values(),
                      g.nodes()[static_cast<size_t>(e.dst)].values());
    CHECK(built == reference.edges);
    // Multiple parameters can join the same pair of nodes; the two-chain
    // window has one parameter per edge.
    CHECK(g.edges().size() == reference.edges.size());
}

TEST_CASE("random windows match the exhaustive reconstruction") {
    test::Rng rng(60601);
    for (int round = 0; round < 30; ++round) {
        auto poset = test::random_poset(rng, 5);
        const int a = test::pick(rng, -2, 1);
        const int b = a + test::pick(rng, 0, 2);
        const MutationGraph g = build_mutation_graph(poset, a, b);
        const NaiveGraph reference = naive_graph(poset, a, b);
        REQUIRE(g.nodes().size() == reference.nodes.size());
        for (size_t i = 0; i < reference.nodes.size(); ++i)
            CHECK(g.nodes()[i].values() == reference.nodes[i]);
        std::set<std::pair<std::vector<int>, std::vector<int>>> built;
        for (const auto& e : g.edges()) {
            CHECK(test::naive_is_upper(*poset, e.label.members()));
            CHECK_FALSE(e.label.is_empty());
            built.emplace(g.nodes()[static_cast<size_t>(e.src)].values(),
                          g.nodes()[static_cast<size_t>(e.dst)].values());
        }
        CHECK(built == reference.edges);
    }
}

TEST_CASE("edges strictly raise the value sum") {
    test::Rng rng(424242);
    for (int round = 0; round < 15; ++round) {
        auto poset = test::random_poset(rng, 4);
        const MutationGraph g = build_mutation_graph(poset, 0, 2);
        for (const auto& e : g.edges()) {
            const auto& src = g.nodes()[static_cast<size_t>(e.src)].values();
            const auto& dst = g.nodes()[static_cast<size_t>(e.dst)].values();
            CHECK(std::accumulate(src.begin(), src.end(), 0) <
                  std::accumulate(dst.begin(), dst.end(), 0));
        }
    }
}

TEST_CASE("degenerate and oversized windows") {
    const MutationGraph point = build_mutation_graph(PrimePoset::chain(2), 0, 0);
    CHECK(point.nodes().size() == 1);
    CHECK(point.edges().empty());

    CHECK_THROWS_AS(build_mutation_graph(PrimePoset::chain(2), 1, 0), BadWindow);
    CHECK_THROWS_AS(build_mutation_graph(PrimePoset::chain(1), 0, 200000), TooLarge);
}

TEST_CASE("empty-set loops appear only on request") {
    auto chain = PrimePoset::chain(2);
    const MutationGraph with_loops = build_mutation_graph(chain, 0, 1, false);
    int loops = 0;
    for (const auto& e : with_loops.edges())
        if (e.label.is_empty()) {
            CHECK(e.src == e.dst);
            ++loops;
        }
    CHECK(loops == 3);  // one identity per node
    CHECK(with_loops.edges().size() == 5);
}

TEST_CASE("rebuilding gives identical node and edge sequences") {
    auto fan = PrimePoset::fan(2);
    const MutationGraph g1 = build_mutation_graph(fan, 0, 2);
    const MutationGraph g2 = build_mutation_graph(fan, 0, 2);
    REQUIRE(g1.nodes().size() == g2.nodes().size());
    for (size_t i = 0; i < g1.nodes().size(); ++i)
        CHECK(g1.nodes()[i] == g2.nodes()[i]);
    REQUIRE(g1.edges().size() == g2.edges().size());
    for (size_t i = 0; i < g1.edges().size(); ++i) {
        CHECK(g1.edges()[i].src == g2.edges()[i].src);
        CHECK(g1.edges()[i].dst == g2.edges()[i].dst);
        CHECK(g1.edges()[i].label == g2.edges()[i].label);
    }
}

TEST_CASE("reachability from the bottom of the two-chain window") {
    auto chain = PrimePoset::chain(2);
    const MutationGraph g = build_mutation_graph(chain, 0, 1);
    const auto reached = reachable_t_functions(g, PosetHom::constant(chain, 0));
    REQUIRE(reached.size() == 3);
    CHECK(reached[0].values() == std::vector<int>{0, 0});
    CHECK(reached[1].values() == std::vector<int>{0, 1});
    CHECK(reached[2].values() == std::vector<int>{1, 1});

    const auto top = reachable_t_functions(g, PosetHom::constant(chain, 1));
    REQUIRE(top.size() == 1);
    CHECK(top[0].values() == std::vector<int>{1, 1});

    CHECK_THROWS_AS(reachable_t_functions(g, PosetHom::constant(chain, 9)), UnknownNode);
}

TEST_CASE("every low t-function over the fan window is reachable with a witness path") {
    auto fan = PrimePoset::fan(2);
    const MutationGraph g = build_mutation_graph(fan, 0, 1);
    const auto reached = reachable_t_functions(g, PosetHom::constant(fan, 0));
    CHECK(reached.size() == 5);  // every increasing map into {0,1} steps by at most one

    for (const auto& node : g.nodes()) {
        if (!is_t_function(node) || node.min_value() != 0) continue;
        CHECK(std::find(reached.begin(), reached.end(), node) != reached.end());

        // The decomposition is a concrete path witness: check it edge by edge.
        const MutationSequence seq = decompose_to_mutations(node);
        PosetHom cur = PosetHom::constant(fan, seq.base);
        for (const auto& step : seq.steps) {
            const PosetHom next = mutate_function(cur, step);
            bool edge_found = false;
            for (const auto& e : g.edges())
                if (g.nodes()[static_cast<size_t>(e.src)] == cur &&
                    g.nodes()[static_cast<size_t>(e.dst)] == next &&
                    e.label.members() == step)
                    edge_found = true;
            CHECK(edge_found);
            cur = next;
        }
        CHECK(cur == node);
    }
}

TEST_CASE("DOT output") {
    const std::string dot = graph_to_dot(build_mutation_graph(PrimePoset::chain(1), 0, 1));
    CHECK(dot ==
          "digraph mutation {\n"
          "  \"c0:0\" [shape=doublecircle];\n"
          "  \"c0:1\" [shape=doublecircle];\n"
          "  \"c0:0\" -> \"c0:1\" [label=\"@all\"];\n"
          "}\n");

    const MutationGraph g = build_mutation_graph(PrimePoset::chain(2), 0, 2);
    const std::string text = graph_to_dot(g);
    CHECK(text.rfind("digraph mutation {\n", 0) == 0);
    CHECK(text.find("\"c0:0;c1:2\";\n") != std::string::npos);  // not a t-function: no shape
    CHECK(text.find("\"c0:0;c1:1\" [shape=doublecircle];") != std::string::npos);
    size_t arrows = 0;
    for (size_t at = text.find("->"); at != std::string::npos; at = text.find("->", at + 1))
        ++arrows;
    CHECK(arrows == g.edges().size());

    const std::string tiny = graph_to_dot(build_mutation_graph(PrimePoset::chain(1), 0, 0));
    CHECK(tiny ==
          "digraph mutation {\n"
          "  \"c0:0\" [shape=doublecircle];\n"
          "}\n");
}
