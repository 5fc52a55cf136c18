#include "tspn/solvers.hpp"

#include "tspn/span.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tspn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SampleSet {
    std::vector<Point> pts;
    std::vector<double> xs, ys;

    void add(Point p) {
        xs.push_back(to_double(p.x));
        ys.push_back(to_double(p.y));
        pts.push_back(std::move(p));
    }
    int size() const { return (int)pts.size(); }
};

double pair_dist(const SampleSet& A, int i, const SampleSet& B, int j) {
    return std::hypot(A.xs[i] - B.xs[j], A.ys[i] - B.ys[j]);
}

// Rational points exactly on the unit circle around c, approximately uniform:
// the tangent-half-angle map sends a rational u to ((1-u^2)/(1+u^2), 2u/(1+u^2)).
SampleSet disk_samples(const Point& c, double res) {
    int n = std::max(8, (int)std::ceil(2 * M_PI / res));
    SampleSet out;
    for (int j = 0; j < n; ++j) {
        double theta = -M_PI + 2 * M_PI * (j + 0.5) / n;  // avoid the pole at pi
        Rat u = rat_approx(std::tan(theta / 2));
        Rat d = 1 + u * u;
        out.add(Point{c.x + (1 - u * u) / d, c.y + 2 * u / d});
    }
    return out;
}

SampleSet polygon_samples(const Polygon& poly, double res) {
    SampleSet out;
    int n = (int)poly.vertices.size();
    for (int i = 0; i < n; ++i) {
        const Point& a = poly.vertices[i];
        const Point& b = poly.vertices[(i + 1) % n];
        long sub = std::max(1L, (long)std::ceil(Segment{a, b}.length() / res));
        for (long t = 0; t < sub; ++t) {
            Rat lam(t, sub);
            out.add(Point{a.x + lam * (b.x - a.x), a.y + lam * (b.y - a.y)});
        }
    }
    return out;
}

std::vector<SampleSet> instance_samples(const Instance& inst, double res) {
    std::vector<SampleSet> S;
    if (inst.kind == Instance::Kind::UnitDisks)
        for (auto& c : inst.disk_centers) S.push_back(disk_samples(c, res));
    else
        for (auto& p : inst.polygons) S.push_back(polygon_samples(p, res));
    return S;
}

struct SearchResult {
    std::vector<int> order;  // region indices in visit order
    std::vector<int> pick;   // sample index per visit position
    double length = kInf;
};

// Exact minimum over cyclic region orders (reflections deduped by fixing the
// first region and orienting the permutation) and over one sample per region.
SearchResult best_over_orders(const std::vector<SampleSet>& S) {
    int k = (int)S.size();
    for (auto& s : S)
        if (s.size() == 0) throw std::invalid_argument("a region has no samples");
    SearchResult best;
    std::vector<int> rest(k - 1);
    std::iota(rest.begin(), rest.end(), 1);
    std::vector<std::vector<double>> cost(k);
    std::vector<std::vector<int>> par(k);
    do {
        if (k >= 3 && rest.front() > rest.back()) continue;  // reflection duplicate
        std::vector<int> ord{0};
        ord.insert(ord.end(), rest.begin(), rest.end());
        const SampleSet& S0 = S[ord[0]];
        for (int s0 = 0; s0 < S0.size(); ++s0) {
            for (int i = 1; i < k; ++i) {
                const SampleSet& Si = S[ord[i]];
                cost[i].assign(Si.size(), kInf);
                par[i].assign(Si.size(), -1);
                if (i == 1) {
                    for (int q = 0; q < Si.size(); ++q) {
                        cost[1][q] = pair_dist(S0, s0, Si, q);
                        par[1][q] = s0;
                    }
                    continue;
                }
                const SampleSet& Sp = S[ord[i - 1]];
                for (int q = 0; q < Si.size(); ++q) {
                    double b = kInf;
                    int bp = -1;
                    for (int p = 0; p < Sp.size(); ++p) {
                        double c = cost[i - 1][p] + pair_dist(Sp, p, Si, q);
                        if (c < b) b = c, bp = p;
                    }
                    cost[i][q] = b;
                    par[i][q] = bp;
                }
            }
            double close_best = kInf;
            int close_q = -1;
            if (k == 1) {
                close_best = 0, close_q = s0;
            } else {
                const SampleSet& Sl = S[ord[k - 1]];
                for (int q = 0; q < Sl.size(); ++q) {
                    double c = cost[k - 1][q] + pair_dist(Sl, q, S0, s0);
                    if (c < close_best) close_best = c, close_q = q;
                }
            }
            if (close_best < best.length) {
                best.length = close_best;
                best.order = ord;
                best.pick.assign(k, 0);
                int q = close_q;
                for (int i = k - 1; i >= 1; --i) {
                    best.pick[i] = q;
                    q = par[i][q];
                }
                best.pick[0] = s0;
            }
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

Tour tour_from_search(const std::vector<SampleSet>& S, const SearchResult& r) {
    Tour t;
    t.length = r.length;
    for (size_t i = 0; i < r.order.size(); ++i) {
        t.order.push_back(r.order[i]);
        t.points.push_back(S[r.order[i]].pts[r.pick[i]]);
    }
    return t;
}

Point polygon_representative(const Polygon& poly) {
    // area centroid; boundary fallback for nonconvex shapes that exclude it
    Rat a{0}, cx{0}, cy{0};
    int n = (int)poly.vertices.size();
    for (int i = 0; i < n; ++i) {
        const Point& p = poly.vertices[i];
        const Point& q = poly.vertices[(i + 1) % n];
        Rat w = p.x * q.y - q.x * p.y;
        a += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    if (a == 0) return poly.vertices[0];
    Point c{cx / (3 * a), cy / (3 * a)};
    if (point_in_polygon(c, poly) == Side::Outside) return poly.vertices[0];
    return c;
}

double closed_length(const std::vector<double>& xs, const std::vector<double>& ys,
                     const std::vector<int>& ord) {
    double s = 0;
    int k = (int)ord.size();
    for (int i = 0; i < k; ++i) {
        int a = ord[i], b = ord[(i + 1) % k];
        s += std::hypot(xs[a] - xs[b], ys[a] - ys[b]);
    }
    return s;
}

std::vector<int> held_karp(const std::vector<double>& xs, const std::vector<double>& ys) {
    int k = (int)xs.size();
    auto d = [&](int a, int b) { return std::hypot(xs[a] - xs[b], ys[a] - ys[b]); };
    int full = 1 << (k - 1);  // subsets of {1..k-1}; tours start and end at 0
    std::vector<std::vector<double>> dp(full, std::vector<double>(k - 1, kInf));
    std::vector<std::vector<int>> par(full, std::vector<int>(k - 1, -1));
    for (int j = 0; j < k - 1; ++j) dp[1 << j][j] = d(0, j + 1);
    for (int mask = 1; mask < full; ++mask)
        for (int j = 0; j < k - 1; ++j) {
            if (!(mask & (1 << j)) || dp[mask][j] == kInf) continue;
            for (int t = 0; t < k - 1; ++t) {
                if (mask & (1 << t)) continue;
                int nm = mask | (1 << t);
                double c = dp[mask][j] + d(j + 1, t + 1);
                if (c < dp[nm][t]) dp[nm][t] = c, par[nm][t] = j;
            }
        }
    double best = kInf;
    int bj = -1;
    for (int j = 0; j < k - 1; ++j) {
        double c = dp[full - 1][j] + d(j + 1, 0);
        if (c < best) best = c, bj = j;
    }
    std::vector<int> ord{0};
    std::vector<int> rev;
    int mask = full - 1, j = bj;
    while (j != -1) {
        rev.push_back(j + 1);
        int pj = par[mask][j];
        mask ^= 1 << j;
        j = pj;
    }
    ord.insert(ord.end(), rev.rbegin(), rev.rend());
    return ord;
}

std::vector<int> two_opt(const std::vector<double>& xs, const std::vector<double>& ys) {
    int k = (int)xs.size();
    auto d = [&](int a, int b) { return std::hypot(xs[a] - xs[b], ys[a] - ys[b]); };
    std::vector<int> ord{0};
    std::vector<char> used(k, 0);
    used[0] = 1;
    while ((int)ord.size() < k) {  // nearest-neighbour start
        int cur = ord.back(), bi = -1;
        double bd = kInf;
        for (int i = 0; i < k; ++i)
            if (!used[i] && d(cur, i) < bd) bd = d(cur, i), bi = i;
        used[bi] = 1;
        ord.push_back(bi);
    }
    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 0; i + 1 < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                int a = ord[i], b = ord[(i + 1) % k], c = ord[j], e = ord[(j + 1) % k];
                if (a == c || b == e) continue;
                if (d(a, c) + d(b, e) + 1e-12 < d(a, b) + d(c, e)) {
                    std::reverse(ord.begin() + i + 1, ord.begin() + j + 1);
                    improved = true;
                }
            }
    }
    return ord;
}

// --- localization helpers (grid-search approximation, doubles throughout) ---

using DPoly = std::vector<std::pair<double, double>>;

bool inside_d(double px, double py, const DPoly& v) {
    bool in = false;
    int n = (int)v.size();
    for (int i = 0, j = n - 1; i < n; j = i++) {
        auto [xi, yi] = v[i];
        auto [xj, yj] = v[j];
        if ((yi > py) != (yj > py) && px < (xj - xi) * (py - yi) / (yj - yi) + xi) in = !in;
    }
    return in;
}

double cheb_point_seg(double px, double py, double ax, double ay, double bx, double by) {
    auto f = [&](double t) {
        return std::max(std::abs(ax + t * (bx - ax) - px), std::abs(ay + t * (by - ay) - py));
    };
    double lo = 0, hi = 1;
    for (int it = 0; it < 60; ++it) {  // f is convex in t
        double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        if (f(m1) <= f(m2)) hi = m2;
        else lo = m1;
    }
    return f((lo + hi) / 2);
}

double cheb_point_poly(double px, double py, const DPoly& v) {
    if (inside_d(px, py, v)) return 0;
    double best = kInf;
    int n = (int)v.size();
    for (int i = 0; i < n; ++i) {
        auto [ax, ay] = v[i];
        auto [bx, by] = v[(i + 1) % n];
        best = std::min(best, cheb_point_seg(px, py, ax, ay, bx, by));
    }
    return best;
}

Window square_window(double cx, double cy, double side) {
    Rat x = rat_approx(cx), y = rat_approx(cy), h = rat_approx(side / 2);
    return Window{x - h, x + h, y - h, y + h};
}

// --- dp_solve helpers ---

std::vector<Point> hull_grid_points(const Polygon& hull, const GridSpec& grid) {
    if (hull.vertices.size() < 3) return hull.vertices;
    Rat xmin = hull.vertices[0].x, xmax = xmin, ymin = hull.vertices[0].y, ymax = ymin;
    for (auto& v : hull.vertices) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    long i0 = rat_ceil((xmin - grid.origin.x) / grid.spacing).convert_to<long>();
    long i1 = rat_floor((xmax - grid.origin.x) / grid.spacing).convert_to<long>();
    long j0 = rat_ceil((ymin - grid.origin.y) / grid.spacing).convert_to<long>();
    long j1 = rat_floor((ymax - grid.origin.y) / grid.spacing).convert_to<long>();
    std::vector<Point> out;
    for (long i = i0; i <= i1; ++i)
        for (long j = j0; j <= j1; ++j) {
            Point p{grid.origin.x + grid.spacing * i, grid.origin.y + grid.spacing * j};
            if (point_in_polygon(p, hull) != Side::Outside) out.push_back(p);
        }
    return out;
}

Tour oracle_over_samples(std::vector<SampleSet> S) {
    auto r = best_over_orders(S);
    return tour_from_search(S, r);
}

std::vector<Segment> tour_segments(const Tour& t) {
    std::vector<Segment> segs;
    int k = (int)t.points.size();
    for (int i = 0; i < k; ++i) {
        Segment s{t.points[i], t.points[(i + 1) % k]};
        if (!s.degenerate()) segs.push_back(s);
    }
    return segs;
}

}  // namespace

Tour brute_force_oracle(const Instance& inst, double resolution) {
    int k = inst.k();
    if (k > 9)
        throw OracleRefusal("oracle bound exceeded: k=" + std::to_string(k) + " (max 9)");
    if (k < 1) throw std::invalid_argument("empty instance");
    if (resolution <= 0) throw std::invalid_argument("resolution must be positive");
    auto S = instance_samples(inst, resolution);
    if (k == 1) {
        Tour t;
        t.points.push_back(S[0].pts[0]);
        t.order.push_back(0);
        return t;
    }
    Tour t = tour_from_search(S, best_over_orders(S));
    // Lipschitz slack: snapping each optimal touch point to its nearest sample
    // moves it by at most half the sample spacing (plus the rational rounding
    // of circle samples) and perturbs its two incident edges by that much.
    t.gap = k * (resolution + 1e-3);
    return t;
}

Tour centers_heuristic(const Instance& inst, double eps, CentersMode mode) {
    int k = inst.k();
    if (k < 1) throw std::invalid_argument("empty instance");
    std::vector<Point> reps;
    if (inst.kind == Instance::Kind::UnitDisks)
        reps = inst.disk_centers;
    else
        for (auto& p : inst.polygons) reps.push_back(polygon_representative(p));
    std::vector<double> xs, ys;
    for (auto& p : reps) {
        xs.push_back(to_double(p.x));
        ys.push_back(to_double(p.y));
    }
    bool exact = mode == CentersMode::Exact || (mode == CentersMode::Auto && k <= 15);
    if (mode == CentersMode::Exact && k > 15)
        throw std::invalid_argument("exact mode is limited to k <= 15");
    Tour t;
    std::vector<int> ord;
    if (k == 1)
        ord = {0};
    else if (k == 2)
        ord = {0, 1};
    else
        ord = exact ? held_karp(xs, ys) : two_opt(xs, ys);
    for (int i : ord) {
        t.order.push_back(i);
        t.points.push_back(reps[i]);
    }
    t.length = k >= 2 ? closed_length(xs, ys, ord) : 0;
    t.gap = 2.0 * k * (1 + eps);
    return t;
}

double lower_bound(int k, double alpha, double delta_min) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
    if (delta_min <= 0) throw std::invalid_argument("delta_min must be positive");
    return std::max(0.0, (k / alpha - 1) * M_PI * delta_min / 4);
}

double large_external_bound(double alpha) {
    if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
    return alpha * (8 * std::sqrt(2.0) / M_PI + 1);
}

LocalizationReport localization_candidates(const Instance& inst) {
    if (inst.kind != Instance::Kind::DiskLikePolygons || inst.polygons.empty())
        throw std::invalid_argument("localization needs a polygonal instance");
    std::vector<DPoly> polys;
    double bx0 = kInf, bx1 = -kInf, by0 = kInf, by1 = -kInf;
    for (auto& p : inst.polygons) {
        DPoly d;
        for (auto& v : p.vertices) {
            double x = to_double(v.x), y = to_double(v.y);
            d.emplace_back(x, y);
            bx0 = std::min(bx0, x), bx1 = std::max(bx1, x);
            by0 = std::min(by0, y), by1 = std::max(by1, y);
        }
        polys.push_back(std::move(d));
    }
    // a square centered at c meeting every region needs half-side
    // max_i cheb(c, P_i); grid search for the minimizing center
    auto half_side = [&](double cx, double cy) {
        double h = 0;
        for (auto& p : polys) h = std::max(h, cheb_point_poly(cx, cy, p));
        return h;
    };
    double cx = (bx0 + bx1) / 2, cy = (by0 + by1) / 2, h0 = half_side(cx, cy);
    const int G = 48;
    for (int i = 0; i <= G; ++i)
        for (int j = 0; j <= G; ++j) {
            double x = bx0 + (bx1 - bx0) * i / G, y = by0 + (by1 - by0) * j / G;
            double h = half_side(x, y);
            if (h < h0) h0 = h, cx = x, cy = y;
        }
    for (auto& p : polys)  // shared vertices give an exact degenerate square
        for (auto& [x, y] : p) {
            double h = half_side(x, y);
            if (h < h0) h0 = h, cx = x, cy = y;
        }
    double rad = std::max(bx1 - bx0, by1 - by0) / G;
    for (int round = 0; round < 3; ++round) {
        double bcx = cx, bcy = cy;
        for (int i = -8; i <= 8; ++i)
            for (int j = -8; j <= 8; ++j) {
                double x = bcx + rad * i / 8, y = bcy + rad * j / 8;
                double h = half_side(x, y);
                if (h < h0) h0 = h, cx = x, cy = y;
            }
        rad /= 4;
    }

    LocalizationReport rep;
    rep.R0 = square_window(cx, cy, 2 * h0);
    rep.center = Point{rat_approx(cx), rat_approx(cy)};
    rep.diam_R0 = 2 * h0 * std::sqrt(2.0);
    double side = 4 * std::sqrt(2.0) * rep.diam_R0;  // candidate square side

    double dmin = kInf;
    int smallest = 0;
    for (size_t i = 0; i < inst.polygons.size(); ++i) {
        double d = polygon_metrics(inst.polygons[i], 4).diameter;
        if (d < dmin) dmin = d, smallest = (int)i;
    }

    if (h0 <= 1e-9) {  // all regions share a point
        rep.candidates.push_back(square_window(cx, cy, 2 + 2 * dmin));
        return rep;
    }
    auto region_inside = [&](const DPoly& p) {
        for (auto& [x, y] : p)
            if (std::abs(x - cx) > h0 + 1e-9 || std::abs(y - cy) > h0 + 1e-9) return false;
        return true;
    };
    bool some_inside = false;
    for (auto& p : polys) some_inside |= region_inside(p);
    if (some_inside) {
        // replacement argument along the boundary of R0: corners, edge
        // midpoints, and the center
        for (int i = -1; i <= 1; ++i)
            for (int j = -1; j <= 1; ++j)
                rep.candidates.push_back(square_window(cx + i * h0, cy + j * h0, side));
        return rep;
    }
    rep.L_star_bounds = {{2 * rep.diam_R0, 2 * std::sqrt(2.0) * rep.diam_R0}};
    if (dmin <= rep.diam_R0 / 2) {
        auto& p = polys[smallest];
        double sx0 = kInf, sx1 = -kInf, sy0 = kInf, sy1 = -kInf;
        for (auto& [x, y] : p) {
            sx0 = std::min(sx0, x), sx1 = std::max(sx1, x);
            sy0 = std::min(sy0, y), sy1 = std::max(sy1, y);
        }
        rep.candidates.push_back(square_window((sx0 + sx1) / 2, (sy0 + sy1) / 2, side));
    } else {
        rep.candidates.push_back(square_window(cx, cy, side));
        for (auto& p : polys)
            for (auto& [x, y] : p) rep.candidates.push_back(square_window(x, y, side));
    }
    return rep;
}

DpResult dp_solve(const RoundedInstance& rounded, int m, int M, const DpLimits& limits) {
    int k = (int)rounded.gamma_hulls.size();
    if (k < 1) throw std::invalid_argument("empty instance");
    if (k > limits.max_k)
        throw DpRefusal("state space exceeded: k=" + std::to_string(k) + " (bound " +
                        std::to_string(limits.max_k) + ")");
    const Window& w = rounded.bounding_square;
    long coords = (long)(to_double((w.xmax - w.xmin) / rounded.grid.spacing) * 2);
    if (coords > limits.max_half_grid_coords)
        throw DpRefusal("state space exceeded: " + std::to_string(coords) +
                        " half-grid coordinates per axis (bound " +
                        std::to_string(limits.max_half_grid_coords) + ")");

    std::vector<SampleSet> S(k);
    for (int i = 0; i < k; ++i) {
        auto pts = hull_grid_points(rounded.gamma_hulls[i], rounded.grid);
        if (pts.empty()) throw std::invalid_argument("a rounded region has no grid points");
        if ((int)pts.size() > limits.max_candidates_per_region)
            throw DpRefusal("state space exceeded: region " + std::to_string(i) + " has " +
                            std::to_string(pts.size()) + " grid candidates (bound " +
                            std::to_string(limits.max_candidates_per_region) + ")");
        for (auto& p : pts) S[i].add(p);
    }

    DpResult res;
    if (k == 1) {
        res.tour.points.push_back(S[0].pts[0]);
        res.tour.order.push_back(0);
        return res;
    }
    res.tour = tour_from_search(S, best_over_orders(S));

    EdgeSet cycle;
    int n = (int)res.tour.points.size();
    for (int i = 0; i < n; ++i) {
        Segment s{res.tour.points[i], res.tour.points[(i + 1) % n]};
        if (!s.degenerate()) cycle.add(s);
    }
    auto t = transform_grid_guillotine(cycle, rounded.gamma_hulls, rounded.grid, m, M, w);
    res.edges = std::move(t.edges);
    res.graph_length = res.edges.total_length();
    res.cuts_made = t.cuts_made;
    return res;
}

Point snap_into_hull(const Point& p, const Polygon& hull, const GridSpec& grid) {
    auto pts = hull_grid_points(hull, grid);
    if (pts.empty()) throw std::invalid_argument("hull contains no grid point");
    Point best = pts[0];
    Rat bd = dist_sq(p, best);
    for (auto& q : pts) {
        Rat d = dist_sq(p, q);
        if (d < bd || (d == bd && q < best)) bd = d, best = q;
    }
    return best;
}

Certificate certify(const std::string& name, const Instance& inst) {
    Certificate cert;
    cert.name = name;
    if (name == "localization") {
        auto rep = localization_candidates(inst);
        int k = inst.k();
        double cx = to_double(rep.center.x), cy = to_double(rep.center.y);
        double R = 2 * rep.diam_R0;

        auto filtered = [&](double res, auto&& keep) {
            auto S = instance_samples(inst, res);
            for (auto& s : S) {
                SampleSet f;
                for (int i = 0; i < s.size(); ++i)
                    if (keep(s.xs[i], s.ys[i])) f.add(s.pts[i]);
                s = std::move(f);
            }
            return S;
        };

        Tour coarse = oracle_over_samples(instance_samples(inst, 1.0));
        std::vector<std::pair<double, double>> anchors;
        for (auto& p : coarse.points) anchors.emplace_back(to_double(p.x), to_double(p.y));
        Tour global = oracle_over_samples(filtered(0.05, [&](double x, double y) {
            for (auto& [ax, ay] : anchors)
                if (std::hypot(x - ax, y - ay) <= 3.0) return true;
            return false;
        }));
        cert.global_length = global.length;  // feasible tour: upper bound

        double rres = 0.1;
        auto restricted_samples = filtered(rres, [&](double x, double y) {
            return std::hypot(x - cx, y - cy) <= R;
        });
        bool feasible = true;
        for (auto& s : restricted_samples) feasible &= s.size() > 0;
        if (!feasible) {
            cert.restricted_length = kInf;
            cert.margin = kInf;
            return cert;
        }
        Tour restricted = oracle_over_samples(restricted_samples);
        cert.restricted_length = restricted.length - k * (rres + 1e-3);  // rigorous lower bound
        cert.margin = cert.restricted_length / cert.global_length - 1;
        if (!(cert.margin >= 0.05))
            throw std::runtime_error("localization certification failed: margin " +
                                     std::to_string(cert.margin));
        return cert;
    }
    if (name == "disconnected_region_span") {
        if (inst.kind != Instance::Kind::DiskLikePolygons)
            throw std::invalid_argument("needs a polygonal instance");
        Tour tour = brute_force_oracle(inst, 0.5);
        auto segs = tour_segments(tour);
        Rat xmin = inst.polygons[0].vertices[0].x, xmax = xmin;
        Rat ymin = inst.polygons[0].vertices[0].y, ymax = ymin;
        for (auto& p : inst.polygons)
            for (auto& v : p.vertices) {
                xmin = std::min(xmin, v.x), xmax = std::max(xmax, v.x);
                ymin = std::min(ymin, v.y), ymax = std::max(ymax, v.y);
            }
        Window w{xmin - 1, xmax + 1, ymin - 1, ymax + 1};
        auto scan = [&](Axis axis, const Rat& lo, const Rat& hi) {
            for (auto c = Rat(rat_floor(lo)) + 1; c < hi; c += 1) {
                if (c <= lo) continue;
                Cut cut = make_cut(axis, c, w);
                auto [sr, cls] = classify_cut(cut, segs, inst.polygons, 1, 1);
                if (!cls.favorable_c || *cls.favorable_c > 8) continue;
                auto span = region_span(cut, inst.polygons, 1);
                if (!span) continue;
                double d = kInf;
                for (auto& s : segs)
                    d = std::min(d, std::sqrt(to_double(segment_segment_dist_sq(*span, s))));
                if (d > cert.D) {
                    cert.D = d;
                    cert.cut = cut;
                }
            }
        };
        scan(Axis::Vertical, w.xmin, w.xmax);
        scan(Axis::Horizontal, w.ymin, w.ymax);
        if (!(cert.D >= 2))
            throw std::runtime_error("disconnected-span certification failed: D " +
                                     std::to_string(cert.D));
        return cert;
    }
    throw std::invalid_argument("unknown certificate '" + name + "'");
}

}  // namespace tspn
