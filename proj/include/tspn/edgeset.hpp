#pragma once

#include "tspn/geom.hpp"

#include <map>

namespace tspn {

enum class Provenance { Original, MSpan, RegionSpan, Connector, ParityDuplicate };

struct Edge {
    Segment seg;
    Provenance prov = Provenance::Original;
    int id = -1;
};

struct EdgeSet {
    std::vector<Edge> edges;
    int next_id = 0;

    int add(Segment s, Provenance prov = Provenance::Original) {
        edges.push_back(Edge{std::move(s), prov, next_id});
        return next_id++;
    }
    std::vector<Segment> segments() const {
        std::vector<Segment> out;
        out.reserve(edges.size());
        for (auto& e : edges) out.push_back(e.seg);
        return out;
    }
    std::vector<Segment> segments_without(Provenance skip) const {
        std::vector<Segment> out;
        for (auto& e : edges)
            if (e.prov != skip) out.push_back(e.seg);
        return out;
    }
    double total_length() const {
        double s = 0;
        for (auto& e : edges) s += e.seg.length();
        return s;
    }
    bool empty() const { return edges.empty(); }
};

/// Multigraph obtained by subdividing all segments at pairwise intersection
/// points; degree parity and connectivity are defined on it.
struct PlanarGraph {
    std::vector<Point> vertices;
    std::vector<std::pair<int, int>> arcs;  // vertex index pairs, multi-edges kept
    std::vector<int> degree;

    bool all_even() const {
        for (int d : degree)
            if (d % 2) return false;
        return true;
    }
};

PlanarGraph planarize(const EdgeSet& es);
bool graph_connected(const PlanarGraph& g);       // ignoring isolated vertices
bool edgeset_connected(const EdgeSet& es);
bool edgeset_eulerian(const EdgeSet& es);         // connected with all degrees even
std::vector<Point> odd_degree_vertices(const EdgeSet& es);

/// Exact length value a + b*sqrt(2), for octilinear edge sets measured in
/// integer grid units.
struct QuadLen {
    boost::multiprecision::cpp_int a, b;

    QuadLen() : a(0), b(0) {}
    QuadLen(long x, long y) : a(x), b(y) {}
    QuadLen operator+(const QuadLen& o) const { return {a + o.a, b + o.b}; }
    QuadLen& operator+=(const QuadLen& o) { a += o.a; b += o.b; return *this; }
    bool operator==(const QuadLen& o) const { return a == o.a && b == o.b; }
    double value() const;
private:
    QuadLen(boost::multiprecision::cpp_int x, boost::multiprecision::cpp_int y)
        : a(std::move(x)), b(std::move(y)) {}
};

bool quadlen_less(const QuadLen& x, const QuadLen& y);  // exact a+b√2 comparison

}  // namespace tspn
