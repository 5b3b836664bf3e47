#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubecensus/edgecolor.hpp"
#include "cubecensus/genreg.hpp"
#include "oracles.hpp"

using namespace cubecensus;

namespace {

// a returned coloring must be total and proper
void validate_coloring(const Graph& g, const EdgeColoring& w, int ncolors) {
    REQUIRE(w.assignment.size() == static_cast<size_t>(g.edge_count()));
    for (const auto& [e, c] : w.assignment) {
        CHECK(g.adjacent(e.first, e.second));
        CHECK(c >= 0);
        CHECK(c < ncolors);
    }
    for (size_t a = 0; a < w.assignment.size(); ++a)
        for (size_t b = a + 1; b < w.assignment.size(); ++b) {
            auto [e1, c1] = w.assignment[a];
            auto [e2, c2] = w.assignment[b];
            bool share = e1.first == e2.first || e1.first == e2.second ||
                         e1.second == e2.first || e1.second == e2.second;
            if (share) CHECK(c1 != c2);
        }
}

void validate_cycle(const Graph& g, const std::vector<int>& cycle) {
    REQUIRE(cycle.size() == static_cast<size_t>(g.order()));
    std::vector<bool> seen(g.order(), false);
    for (int v : cycle) {
        CHECK(!seen[v]);
        seen[v] = true;
    }
    for (size_t i = 0; i + 1 < cycle.size(); ++i) CHECK(g.adjacent(cycle[i], cycle[i + 1]));
    CHECK(g.adjacent(cycle.back(), cycle.front()));
}

} // namespace

TEST_CASE("chromatic index of the basic actors") {
    auto k4 = chromatic_index(complete_graph(4));
    CHECK(k4.value == 3);
    REQUIRE(k4.witness.has_value());
    validate_coloring(complete_graph(4), *k4.witness, 3);

    auto pet = chromatic_index(petersen());
    CHECK(pet.value == 4);
    CHECK(!pet.witness.has_value());

    // triangle-replaced Petersen stays class 2
    Graph h = triangle_replace(petersen(), 0b111);
    CHECK(chromatic_index(h).value == 4);

    auto b = chromatic_index(k33());
    CHECK(b.value == 3);
    validate_coloring(k33(), *b.witness, 3);

    // 2-regular: even cycle class 1, odd cycle class 2
    Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    CHECK(chromatic_index(c6).value == 2);
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(chromatic_index(c5).value == 3);

    // K2: 1-regular
    CHECK(chromatic_index(Graph::from_edges(2, {{0, 1}})).value == 1);

    // odd-order complete graph: 4-regular class 2
    CHECK(chromatic_index(complete_graph(5)).value == 5);
    auto k6 = chromatic_index(complete_graph(6)); // even order: class 1
    CHECK(k6.value == 5);
    validate_coloring(complete_graph(6), *k6.witness, 5);

    CHECK_THROWS_AS(chromatic_index(Graph::from_edges(3, {{0, 1}, {1, 2}})), EdgecolorError);
    CHECK_THROWS_AS(chromatic_index(Graph(4)), EdgecolorError); // 0-regular
}

TEST_CASE("3-edge-coloring counts on known instances") {
    CHECK(count_3_edge_colorings(petersen()) == BigInt(0));
    CHECK(count_3_edge_colorings(complete_graph(4)) == BigInt(6));
    CHECK(count_3_edge_colorings(triangle_replace(complete_graph(4), 1u << 1)) == BigInt(6));
    CHECK(count_3_edge_colorings(k33()) == BigInt(oracles::count_3_edge_colorings_bruteforce(k33())));

    CHECK_THROWS_AS(count_3_edge_colorings(Graph::from_edges(3, {{0, 1}, {1, 2}})), EdgecolorError);
    CHECK_THROWS_AS(count_3_edge_colorings(line_graph(petersen())), EdgecolorError); // 4-regular

    // cubic circulant on 26 vertices: 39 edges is beyond the counting cap
    GraphBuilder big(26);
    for (int i = 0; i < 26; ++i) big.add_edge(i, (i + 1) % 26);
    for (int i = 0; i < 13; ++i) big.add_edge(i, i + 13);
    try {
        count_3_edge_colorings(big.build());
        CHECK(false);
    } catch (const EdgecolorError& e) {
        CHECK(e.kind == EdgecolorError::Kind::TooLarge);
    }
}

TEST_CASE("counting matches 3^m brute force on every cubic graph up to order 10") {
    for (int n : {4, 6, 8, 10}) {
        for (const Graph& g : generate({n, 3, true})) {
            BigInt fast = count_3_edge_colorings(g);
            CHECK(fast == BigInt(oracles::count_3_edge_colorings_bruteforce(g)));
            // decision/count consistency
            CHECK((chromatic_index(g).value == 3) == (fast > BigInt(0)));
        }
    }
}

TEST_CASE("triangle replacement preserves the number of 3-edge-colorings") {
    for (int n : {4, 6, 8}) {
        for (const Graph& g : generate({n, 3, true})) {
            BigInt base = count_3_edge_colorings(g);
            for (int v = 0; v < n; ++v)
                CHECK(count_3_edge_colorings(triangle_replace(g, 1u << v)) == base);
        }
    }
}

TEST_CASE("hamiltonicity of the basic actors") {
    auto k4 = is_hamiltonian(complete_graph(4));
    CHECK(k4.hamiltonian);
    validate_cycle(complete_graph(4), *k4.cycle);
    CHECK(*k4.cycle == std::vector<int>{0, 1, 2, 3}); // lexicographically least

    auto pet = is_hamiltonian(petersen());
    CHECK(!pet.hamiltonian);
    CHECK(oracles::hamiltonian_bruteforce(petersen()) == false);

    // triangle-replaced Petersen is not hamiltonian either
    CHECK(!is_hamiltonian(triangle_replace(petersen(), 0b111)).hamiltonian);

    CHECK_THROWS_AS(is_hamiltonian(Graph::from_edges(2, {{0, 1}})), EdgecolorError);
    Graph disco = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_THROWS_AS(is_hamiltonian(disco), EdgecolorError);
}

TEST_CASE("hamiltonicity matches permutation search up to order 8") {
    for (int n : {4, 6, 8}) {
        for (const Graph& g : generate({n, 3, true})) {
            auto res = is_hamiltonian(g);
            CHECK(res.hamiltonian == oracles::hamiltonian_bruteforce(g));
            if (res.hamiltonian) validate_cycle(g, *res.cycle);
        }
    }
    // non-regular instances too
    Graph path_plus = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}});
    CHECK(is_hamiltonian(path_plus).hamiltonian == oracles::hamiltonian_bruteforce(path_plus));
}

TEST_CASE("hamiltonian cubic graphs are 3-edge-colorable") {
    for (int n : {6, 8, 10}) {
        for (const Graph& g : generate({n, 3, true})) {
            if (is_hamiltonian(g).hamiltonian) CHECK(chromatic_index(g).value == 3);
        }
    }
}
