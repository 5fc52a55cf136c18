#include "tspn/edgeset.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace tspn {

PlanarGraph planarize(const EdgeSet& es) {
    PlanarGraph g;
    std::map<Point, int> vid;
    auto getv = [&](const Point& p) {
        auto it = vid.find(p);
        if (it != vid.end()) return it->second;
        int id = (int)g.vertices.size();
        g.vertices.push_back(p);
        vid.emplace(p, id);
        return id;
    };

    size_t n = es.edges.size();
    // split points per edge, as parameters along the segment
    std::vector<std::vector<Rat>> params(n);
    for (size_t i = 0; i < n; ++i) {
        params[i].push_back(Rat(0));
        params[i].push_back(Rat(1));
    }
    auto param_of = [&](const Segment& s, const Point& p) -> Rat {
        Rat dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
        if (dx != 0) return (p.x - s.a.x) / dx;
        if (dy != 0) return (p.y - s.a.y) / dy;
        return Rat(0);
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            auto isect = intersect_segments(es.edges[i].seg, es.edges[j].seg);
            if (isect.kind == SegIntersection::Kind::Point) {
                params[i].push_back(param_of(es.edges[i].seg, isect.p));
                params[j].push_back(param_of(es.edges[j].seg, isect.p));
            } else if (isect.kind == SegIntersection::Kind::Overlap) {
                for (const Point* p : {&isect.overlap.a, &isect.overlap.b}) {
                    params[i].push_back(param_of(es.edges[i].seg, *p));
                    params[j].push_back(param_of(es.edges[j].seg, *p));
                }
            }
        }
    }
    for (size_t i = 0; i < n; ++i) {
        const Segment& s = es.edges[i].seg;
        if (s.degenerate()) {
            getv(s.a);  // isolated touch point, contributes a vertex only
            continue;
        }
        auto& ps = params[i];
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        for (size_t k = 0; k + 1 < ps.size(); ++k) {
            Point a{s.a.x + ps[k] * (s.b.x - s.a.x), s.a.y + ps[k] * (s.b.y - s.a.y)};
            Point b{s.a.x + ps[k + 1] * (s.b.x - s.a.x), s.a.y + ps[k + 1] * (s.b.y - s.a.y)};
            g.arcs.push_back({getv(a), getv(b)});
        }
    }
    g.degree.assign(g.vertices.size(), 0);
    for (auto& [u, v] : g.arcs) {
        g.degree[u]++;
        g.degree[v]++;
    }
    return g;
}

bool graph_connected(const PlanarGraph& g) {
    int nv = (int)g.vertices.size();
    if (nv == 0) return true;
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& [u, v] : g.arcs) parent[find(u)] = find(v);
    int root = -1;
    for (int i = 0; i < nv; ++i) {
        if (g.degree[i] == 0) continue;
        if (root < 0) root = find(i);
        else if (find(i) != root) return false;
    }
    return true;
}

bool edgeset_connected(const EdgeSet& es) { return graph_connected(planarize(es)); }

bool edgeset_eulerian(const EdgeSet& es) {
    auto g = planarize(es);
    return g.all_even() && graph_connected(g);
}

std::vector<Point> odd_degree_vertices(const EdgeSet& es) {
    auto g = planarize(es);
    std::vector<Point> out;
    for (size_t i = 0; i < g.vertices.size(); ++i)
        if (g.degree[i] % 2) out.push_back(g.vertices[i]);
    return out;
}

double QuadLen::value() const {
    return a.convert_to<double>() + b.convert_to<double>() * std::sqrt(2.0);
}

bool quadlen_less(const QuadLen& x, const QuadLen& y) {
    // x < y  iff  (a1-a2) + (b1-b2)√2 < 0, decided by sign analysis and squaring
    boost::multiprecision::cpp_int da = x.a - y.a, db = x.b - y.b;
    if (da == 0) return db < 0;
    if (db == 0) return da < 0;
    if (da < 0 && db < 0) return true;
    if (da > 0 && db > 0) return false;
    // opposite signs: compare da^2 vs 2 db^2 with the sign of da deciding direction
    boost::multiprecision::cpp_int lhs = da * da, rhs = 2 * db * db;
    if (da < 0) return lhs > rhs;  // da negative dominates iff |da| > |db|√2
    return lhs < rhs;
}

}  // namespace tspn
