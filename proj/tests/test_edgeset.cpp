#include <doctest.h>

#include "tspn/edgeset.hpp"

using namespace tspn;

namespace {

EdgeSet square_tour(long a, long b) {
    EdgeSet es;
    es.add({{Rat(a), Rat(a)}, {Rat(b), Rat(a)}});
    es.add({{Rat(b), Rat(a)}, {Rat(b), Rat(b)}});
    es.add({{Rat(b), Rat(b)}, {Rat(a), Rat(b)}});
    es.add({{Rat(a), Rat(b)}, {Rat(a), Rat(a)}});
    return es;
}

}  // namespace

TEST_CASE("square tour is connected and eulerian") {
    auto es = square_tour(0, 4);
    CHECK(edgeset_connected(es));
    CHECK(edgeset_eulerian(es));
    CHECK(odd_degree_vertices(es).empty());
}

TEST_CASE("open path has two odd vertices") {
    EdgeSet es;
    es.add({{Rat(0), Rat(0)}, {Rat(4), Rat(0)}});
    es.add({{Rat(4), Rat(0)}, {Rat(4), Rat(4)}});
    CHECK(edgeset_connected(es));
    CHECK(!edgeset_eulerian(es));
    CHECK(odd_degree_vertices(es).size() == 2);
}

TEST_CASE("crossing segments are subdivided at the crossing") {
    EdgeSet es;
    es.add({{Rat(0), Rat(0)}, {Rat(4), Rat(4)}});
    es.add({{Rat(0), Rat(4)}, {Rat(4), Rat(0)}});
    auto g = planarize(es);
    CHECK(g.vertices.size() == 5);
    CHECK(g.arcs.size() == 4);
    CHECK(graph_connected(g));
    CHECK(!g.all_even());  // four degree-1 tips
}

TEST_CASE("two disjoint squares are not connected") {
    auto es = square_tour(0, 2);
    auto far = square_tour(10, 12);
    for (auto& e : far.edges) es.add(e.seg);
    CHECK(!edgeset_connected(es));
    auto g = planarize(es);
    CHECK(g.all_even());
}

TEST_CASE("duplicated edge keeps parity even") {
    EdgeSet es;
    es.add({{Rat(0), Rat(0)}, {Rat(3), Rat(0)}});
    es.add({{Rat(0), Rat(0)}, {Rat(3), Rat(0)}}, Provenance::ParityDuplicate);
    CHECK(edgeset_eulerian(es));
}

TEST_CASE("exact a plus b sqrt2 comparisons") {
    CHECK(quadlen_less(QuadLen(1, 0), QuadLen(0, 1)));      // 1 < sqrt2
    CHECK(quadlen_less(QuadLen(0, 1), QuadLen(2, 0)));      // sqrt2 < 2
    CHECK(!quadlen_less(QuadLen(3, 0), QuadLen(0, 2)));     // 3 > 2 sqrt2
    CHECK(quadlen_less(QuadLen(0, 2), QuadLen(3, 0)));
    CHECK(quadlen_less(QuadLen(5, 3), QuadLen(5, 4)));
    CHECK(!quadlen_less(QuadLen(1, 1), QuadLen(1, 1)));
    // 99/70 is a hair above sqrt2
    CHECK(quadlen_less(QuadLen(0, 70), QuadLen(99, 0)));
    CHECK(!quadlen_less(QuadLen(99, 0), QuadLen(0, 70)));
}
