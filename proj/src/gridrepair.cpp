#include "tspn/gridrepair.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tspn {

namespace {

Rat grid_floor_coord(const Rat& x, const Rat& base, const Rat& d) {
    return base + Rat(rat_floor((x - base) / d)) * d;
}

Rat grid_ceil_coord(const Rat& x, const Rat& base, const Rat& d) {
    return base + Rat(rat_ceil((x - base) / d)) * d;
}

Rat nearest_grid_coord(const Rat& x, const Rat& base, const Rat& d) {
    Rat lo = grid_floor_coord(x, base, d), hi = lo + d;
    return hi - x < x - lo ? hi : lo;  // ties resolve low
}

Rat clamp_rat(const Rat& x, const Rat& lo, const Rat& hi) {
    return x < lo ? lo : (x > hi ? hi : x);
}

/// Closest point of an axis-parallel structure segment (clamped projection);
/// for grid-rounded inputs the result is a grid point again, and it is never
/// farther away than the point it replaces.
Point snap_on(const Segment& s, const Point& p) {
    if (s.a.x == s.b.x) {
        Rat lo = std::min(s.a.y, s.b.y), hi = std::max(s.a.y, s.b.y);
        return {s.a.x, clamp_rat(p.y, lo, hi)};
    }
    Rat lo = std::min(s.a.x, s.b.x), hi = std::max(s.a.x, s.b.x);
    return {clamp_rat(p.x, lo, hi), s.a.y};
}

Rat param_on(const Segment& e, const Point& p) {
    if (e.a.x != e.b.x) return (p.x - e.a.x) / (e.b.x - e.a.x);
    return (p.y - e.a.y) / (e.b.y - e.a.y);
}

/// Replace every edge meeting the structure by stubs from its endpoints to
/// snapped attachment points; the part between the first and last hit is
/// dropped. Stub lengths never exceed the sub-parts they replace. Edges in
/// `keep` pass through untouched.
EdgeSet reroute_onto(const EdgeSet& es, const std::vector<Segment>& structure,
                     const std::vector<char>& keep, RepairReport& rep, int* rerouted = nullptr) {
    EdgeSet out;
    for (size_t ei = 0; ei < es.edges.size(); ++ei) {
        const Edge& e = es.edges[ei];
        if (ei < keep.size() && keep[ei]) {
            out.add(e.seg, e.prov);
            continue;
        }
        struct Hit {
            Rat t;
            Point p;
            int seg;
        };
        std::vector<Hit> hits;
        for (int i = 0; i < (int)structure.size(); ++i) {
            auto is = intersect_segments(e.seg, structure[i]);
            if (is.kind == SegIntersection::Kind::Point)
                hits.push_back({param_on(e.seg, is.p), is.p, i});
            else if (is.kind == SegIntersection::Kind::Overlap) {
                hits.push_back({param_on(e.seg, is.overlap.a), is.overlap.a, i});
                hits.push_back({param_on(e.seg, is.overlap.b), is.overlap.b, i});
            }
        }
        if (hits.empty()) {
            out.add(e.seg, e.prov);
            continue;
        }
        auto lo = *std::min_element(hits.begin(), hits.end(),
                                    [](const Hit& a, const Hit& b) { return a.t < b.t; });
        auto hi = *std::max_element(hits.begin(), hits.end(),
                                    [](const Hit& a, const Hit& b) { return a.t < b.t; });
        if (lo.t == hi.t && (lo.p == e.seg.a || lo.p == e.seg.b)) {
            out.add(e.seg, e.prov);  // touches the structure at an endpoint only
            continue;
        }
        // Attach the outer stub at the structure point closest to its far
        // endpoint (clamped projection): never longer, grid points stay grid.
        Point pa = snap_on(structure[lo.seg], e.seg.a);
        Point pb = snap_on(structure[hi.seg], e.seg.b);
        if (pa != lo.p) rep.moved_points.push_back({lo.p, pa});
        if (pb != hi.p && hi.p != lo.p) rep.moved_points.push_back({hi.p, pb});
        if (lo.t < hi.t) rep.removed_length += Segment{lo.p, hi.p}.length();
        Segment s1{e.seg.a, pa}, s2{pb, e.seg.b};
        if (!s1.degenerate()) out.add(s1, e.prov);
        if (!s2.degenerate()) out.add(s2, e.prov);
        if (rerouted) ++*rerouted;
    }
    return out;
}

std::vector<Point> sorted_odd(const EdgeSet& es) {
    auto v = odd_degree_vertices(es);
    std::sort(v.begin(), v.end());
    return v;
}

/// Restore the degree parities the edge set had before a repair: vertices that
/// went odd are greedily matched (nearest partner first) and joined by straight
/// duplicate segments; a leftover pairs with the nearest vertex that went even.
void fix_parity(EdgeSet& es, const std::vector<Point>& odd_before, RepairReport& rep) {
    auto odd_now = sorted_odd(es);
    std::vector<Point> fresh, healed;
    std::set_difference(odd_now.begin(), odd_now.end(), odd_before.begin(), odd_before.end(),
                        std::back_inserter(fresh));
    std::set_difference(odd_before.begin(), odd_before.end(), odd_now.begin(), odd_now.end(),
                        std::back_inserter(healed));
    if (fresh.size() % 2 == 1 && !healed.empty()) {
        const Point& p = fresh.back();
        size_t best = 0;
        for (size_t i = 1; i < healed.size(); ++i)
            if (dist_sq(p, healed[i]) < dist_sq(p, healed[best])) best = i;
        fresh.push_back(healed[best]);
    }
    while (fresh.size() >= 2) {
        Point p = fresh.front();
        fresh.erase(fresh.begin());
        size_t best = 0;
        for (size_t i = 1; i < fresh.size(); ++i)
            if (dist_sq(p, fresh[i]) < dist_sq(p, fresh[best])) best = i;
        Point q = fresh[best];
        fresh.erase(fresh.begin() + best);
        Segment s{p, q};
        es.add(s, Provenance::ParityDuplicate);
        rep.parity_fixes.push_back(s);
        rep.added_length += s.length();
    }
}

struct CutFrame {
    bool vertical;
    Rat coord;
    Rat across_base, along_base;  // grid origin components
    Rat across_lo, across_hi, along_lo, along_hi;  // window extents
};

CutFrame frame_of(const Cut& cut, const Window& w, const GridSpec& grid) {
    CutFrame f;
    f.vertical = cut.axis == Axis::Vertical;
    f.coord = cut.coord;
    f.across_base = f.vertical ? grid.origin.x : grid.origin.y;
    f.along_base = f.vertical ? grid.origin.y : grid.origin.x;
    f.across_lo = f.vertical ? w.xmin : w.ymin;
    f.across_hi = f.vertical ? w.xmax : w.ymax;
    f.along_lo = f.vertical ? w.ymin : w.xmin;
    f.along_hi = f.vertical ? w.ymax : w.xmax;
    return f;
}

Point mk(const CutFrame& f, const Rat& across, const Rat& along) {
    return f.vertical ? Point{across, along} : Point{along, across};
}

/// Along-interval of a span segment on the cut line.
std::pair<Rat, Rat> along_range(const CutFrame& f, const Segment& s) {
    Rat a = f.vertical ? s.a.y : s.a.x;
    Rat b = f.vertical ? s.b.y : s.b.x;
    return {std::min(a, b), std::max(a, b)};
}

/// Grid-expanded along-interval, clamped back to the window when the window
/// boundary is off-grid.
std::pair<Rat, Rat> expand_to_grid(const CutFrame& f, const Rat& lo, const Rat& hi,
                                   const Rat& d) {
    Rat e1 = grid_floor_coord(lo, f.along_base, d);
    Rat e2 = grid_ceil_coord(hi, f.along_base, d);
    if (e1 < f.along_lo) e1 = f.along_lo;
    if (e2 > f.along_hi) e2 = f.along_hi;
    if (e1 == e2) e2 = std::min(e2 + d, f.along_hi);
    if (e1 >= e2) throw std::runtime_error("window too narrow for the repair structure");
    return {e1, e2};
}

/// Connect a freshly inserted structure segment to the rest of the edge set:
/// nearest pair of points, structure side snapped along the segment, edge side
/// subdivided and snapped to the nearest grid point.
void connect_structure(EdgeSet& es, const Segment& structure, const GridSpec& grid,
                       RepairReport& rep) {
    Rat bd{-1};
    Point bs, bt;
    size_t bi = 0;
    for (size_t i = 0; i + 1 < es.edges.size(); ++i) {  // last edge is the structure itself
        Point ps, pt;
        Rat d2 = segment_segment_dist_sq(structure, es.edges[i].seg, &ps, &pt);
        if (bd < 0 || d2 < bd || (d2 == bd && (pt < bt || (pt == bt && ps < bs)))) {
            bd = d2;
            bs = ps;
            bt = pt;
            bi = i;
        }
    }
    if (bd < 0) return;
    if (bd == 0) return;  // already attached
    Point qs = snap_on(structure, bs);
    Point qt{nearest_grid_coord(bt.x, grid.origin.x, grid.spacing),
             nearest_grid_coord(bt.y, grid.origin.y, grid.spacing)};
    const Segment host = es.edges[bi].seg;
    if (bt == host.a)
        qt = host.a;
    else if (bt == host.b)
        qt = host.b;
    else {
        // subdivide the host edge at the (snapped) attachment point
        Edge old = es.edges[bi];
        es.edges.erase(es.edges.begin() + bi);
        double before = old.seg.length();
        double after = 0;
        Segment h1{old.seg.a, qt}, h2{qt, old.seg.b};
        if (!h1.degenerate()) {
            es.add(h1, old.prov);
            after += h1.length();
        }
        if (!h2.degenerate()) {
            es.add(h2, old.prov);
            after += h2.length();
        }
        if (qt != bt) rep.moved_points.push_back({bt, qt});
        rep.added_length += std::max(0.0, after - before);
    }
    Segment conn{qs, qt};
    if (!conn.degenerate()) {
        es.add(conn, Provenance::Connector);
        rep.added_length += conn.length();
    }
}

}  // namespace

std::pair<EdgeSet, RepairReport> patch_span(const EdgeSet& edges, const Cut& cut,
                                            const Window& window, const GridSpec& grid, int m) {
    RepairReport rep;
    CutFrame f = frame_of(cut, window, grid);
    const Rat d = grid.spacing;
    bool on_grid = grid.coord_on_grid(cut.coord, f.across_base);
    bool on_half = !on_grid && grid.coord_on_half_grid(cut.coord, f.across_base);
    if (!on_grid && !on_half)
        throw std::invalid_argument("patch_span: cut is not on the half-grid");

    auto segs = edges.segments();
    auto span = m_span(cut, segs, m);
    if (!span) return {edges, rep};
    auto [lo, hi] = along_range(f, *span);
    if (hi - lo >= d) return {edges, rep};

    int crossing = 0;
    for (auto& s : segs) {
        Rat aa = f.vertical ? s.a.x : s.a.y;
        Rat ab = f.vertical ? s.b.x : s.b.y;
        if ((aa - cut.coord) * (ab - cut.coord) >= 0) continue;
        Rat t = (cut.coord - aa) / (ab - aa);
        Rat along = (f.vertical ? s.a.y : s.a.x) + t * ((f.vertical ? s.b.y : s.b.x) -
                                                        (f.vertical ? s.a.y : s.a.x));
        if (along >= lo && along <= hi) ++crossing;
    }
    if (crossing < (on_grid ? 15 : 19)) return {edges, rep};

    Rat g1 = grid_floor_coord(lo, f.along_base, d);
    Rat g2 = grid_ceil_coord(hi, f.along_base, d);
    if (g1 == g2) g2 += d;
    Rat half = on_grid ? d : d / 2;
    Rat bx_lo = cut.coord - half, bx_hi = cut.coord + half;
    if (bx_lo < f.across_lo || bx_hi > f.across_hi || g1 < f.along_lo || g2 > f.along_hi)
        throw std::runtime_error("patch_span: patch box leaves the window");

    auto odd_before = sorted_odd(edges);
    Point c00 = mk(f, bx_lo, g1), c01 = mk(f, bx_lo, g2);
    Point c10 = mk(f, bx_hi, g1), c11 = mk(f, bx_hi, g2);
    std::vector<Segment> box = {{c00, c01}, {c10, c11}, {c00, c10}, {c01, c11}};

    std::vector<char> keep(edges.edges.size(), 0);
    for (size_t i = 0; i < edges.edges.size(); ++i) {
        auto& s = edges.edges[i].seg;
        for (const Point* p : {&s.a, &s.b}) {
            Rat ac = f.vertical ? p->x : p->y;
            Rat al = f.vertical ? p->y : p->x;
            if (ac > bx_lo && ac < bx_hi && al > g1 && al < g2) keep[i] = 1;
        }
    }
    EdgeSet out = reroute_onto(edges, box, keep, rep);
    for (auto& s : box) {
        out.add(s, Provenance::MSpan);
        rep.added_length += s.length();
    }
    if (on_grid && g2 - g1 == 2 * d) {
        Segment mid{mk(f, bx_lo, g1 + d), mk(f, bx_hi, g1 + d)};
        out.add(mid, Provenance::MSpan);
        rep.added_length += mid.length();
    }
    fix_parity(out, odd_before, rep);
    return {out, rep};
}

std::pair<EdgeSet, RepairReport> make_m_good(const EdgeSet& edges, const Cut& cut,
                                             const Window& window, const GridSpec& grid, int m) {
    RepairReport rep;
    auto segs = edges.segments();
    if (cut_is_m_good(cut, segs, m + 9)) return {edges, rep};

    CutFrame f = frame_of(cut, window, grid);
    const Rat d = grid.spacing;
    bool on_grid = grid.coord_on_grid(cut.coord, f.across_base);
    bool on_half = !on_grid && grid.coord_on_half_grid(cut.coord, f.across_base);
    if (!on_grid && !on_half)
        throw std::invalid_argument("make_m_good: cut is not on the half-grid");
    if (f.across_hi - f.across_lo < d)
        throw std::runtime_error("window too narrow for the repair structure");

    auto span = m_span(cut, segs, m);
    if (!span) return {edges, rep};  // cannot happen when the wider span is bad
    auto [lo, hi] = along_range(f, *span);
    auto [e1, e2] = expand_to_grid(f, lo, hi, d);

    auto odd_before = sorted_odd(edges);
    std::vector<Segment> structure;
    if (on_grid) {
        structure.push_back({mk(f, cut.coord, e1), mk(f, cut.coord, e2)});
    } else {
        Rat xl = cut.coord - d / 2, xr = cut.coord + d / 2;
        if (xl < f.across_lo || xr > f.across_hi)
            throw std::runtime_error("window too narrow for the repair structure");
        Rat bar = clamp_rat(grid_floor_coord((e1 + e2) / 2, f.along_base, d), e1, e2);
        structure.push_back({mk(f, xl, e1), mk(f, xl, e2)});
        structure.push_back({mk(f, xr, e1), mk(f, xr, e2)});
        structure.push_back({mk(f, xl, bar), mk(f, xr, bar)});
    }
    EdgeSet out = reroute_onto(edges, structure, {}, rep);
    for (auto& s : structure) {
        out.add(s, Provenance::MSpan);
        rep.added_length += s.length();
    }
    fix_parity(out, odd_before, rep);
    return {out, rep};
}

std::pair<EdgeSet, RepairReport> make_region_good(const EdgeSet& edges,
                                                  const std::vector<Polygon>& regions,
                                                  const Cut& cut, const Window& window,
                                                  const GridSpec& grid, int m, int M, int C) {
    (void)m;
    RepairReport rep;
    auto segs = edges.segments();
    auto rs = region_span(cut, regions, M + C);
    if (!rs) return {edges, rep};
    if (cut_is_region_good(cut, segs, regions, M + C, RegionGoodVariant::SpanInE))
        return {edges, rep};

    CutFrame f = frame_of(cut, window, grid);
    const Rat d = grid.spacing;
    bool on_grid = grid.coord_on_grid(cut.coord, f.across_base);
    bool on_half = !on_grid && grid.coord_on_half_grid(cut.coord, f.across_base);
    if (!on_grid && !on_half)
        throw std::invalid_argument("make_region_good: cut is not on the half-grid");

    auto odd_before = sorted_odd(edges);
    auto [rlo, rhi] = along_range(f, *rs);
    Segment visiting;
    if (on_grid) {
        auto [e1, e2] = expand_to_grid(f, rlo, rhi, d);
        visiting = {mk(f, cut.coord, e1), mk(f, cut.coord, e2)};
    } else {
        // every region meeting the cut inside the window must end up visited
        std::vector<const Polygon*> span_regions;
        for (auto& r : regions)
            if (!cut_polygon_intervals(cut, r).empty()) span_regions.push_back(&r);
        struct SideTry {
            bool ok = false;
            Rat lo, hi;
        };
        auto try_side = [&](const Rat& xs) {
            SideTry st;
            if (xs <= f.across_lo || xs >= f.across_hi) return st;
            Cut side = cut;
            side.coord = xs;
            bool first = true;
            for (auto* r : span_regions) {
                auto ivs = cut_polygon_intervals(side, *r);
                if (ivs.empty()) return st;
                // the first interval's start must land inside the segment
                Rat p = ivs.front().lo;
                if (first) {
                    st.lo = st.hi = p;
                    first = false;
                } else {
                    st.lo = std::min(st.lo, p);
                    st.hi = std::max(st.hi, p);
                }
            }
            st.ok = !first;
            return st;
        };
        Rat xl = cut.coord - d / 2, xr = cut.coord + d / 2;
        SideTry L = try_side(xl), R = try_side(xr);
        if (!L.ok && !R.ok)
            throw std::runtime_error("make_region_good: no grid line visits the span regions");
        bool use_left = L.ok && (!R.ok || L.hi - L.lo <= R.hi - R.lo);
        const SideTry& st = use_left ? L : R;
        Rat xs = use_left ? xl : xr;
        CutFrame fs = f;
        fs.coord = xs;
        auto [e1, e2] = expand_to_grid(fs, st.lo, st.hi, d);
        visiting = {mk(f, xs, e1), mk(f, xs, e2)};
    }
    EdgeSet out = reroute_onto(edges, {visiting}, {}, rep);
    out.add(visiting, Provenance::RegionSpan);
    rep.added_length += visiting.length();
    connect_structure(out, visiting, grid, rep);
    fix_parity(out, odd_before, rep);
    return {out, rep};
}

GridTransformResult transform_grid_guillotine(const EdgeSet& tour,
                                              const std::vector<Polygon>& regions,
                                              const GridSpec& grid, int m, int M,
                                              const Window& window) {
    GridTransformResult res;
    res.edges = tour;
    double x0 = std::max(to_double(window.width()), to_double(window.height()));
    int depth_guard = (int)(4 * (std::log(std::max(2.0, x0)) / std::log(4.0 / 3.0) + x0)) + 8;

    struct Rec {
        GridTransformResult& res;
        const std::vector<Polygon>& regions;
        const GridSpec& grid;
        int m, M, guard;

        int run(const Window& w, int depth) {
            int idx = (int)res.certificate.nodes.size();
            res.certificate.nodes.push_back({});
            res.certificate.nodes[idx].window = w;
            if (depth > guard) throw std::runtime_error("decomposition depth exceeded");
            if (base_case_holds(res.edges, w, BaseCase::Modified)) {
                res.certificate.nodes[idx].leaf = true;
                return idx;
            }
            auto segs = res.edges.segments();
            std::optional<Cut> best;
            Rat best_val{0};
            auto len_along = [](const std::optional<Segment>& s) -> Rat {
                if (!s) return Rat(0);
                return abs(s->b.x - s->a.x) + abs(s->b.y - s->a.y);
            };
            auto consider = [&](Axis axis, const Rat& c) {
                Cut cand = make_cut(axis, c, w);
                // cheap screens (spans, centrality) before any darkness sweep
                Rat sigma = len_along(m_span(cand, segs, m));
                Rat Sigma = len_along(region_span(cand, regions, M));
                Rat val = sigma + Sigma;
                if (best && val > best_val) return false;
                bool vert = axis == Axis::Vertical;
                Rat lo = vert ? w.xmin : w.ymin, hi = vert ? w.xmax : w.ymax;
                Rat dist = std::min(cand.coord - lo, hi - cand.coord);
                bool central = dist >= 2;
                bool wcentral = dist >= std::min(Rat(2), (hi - lo) / 4);
                bool perfect;
                if (val == 0) {
                    perfect = central || wcentral;
                } else {
                    if (!central && !(wcentral && Sigma == 0)) return false;
                    Rat wdark = total_length(dark_portions(cand, segs, m), cand.axis) +
                                total_length(region_dark_portions(cand, regions,
                                                                  std::max(1, M / 2)),
                                             cand.axis);
                    perfect = val <= 8 * wdark;
                }
                if (!perfect) return false;
                if (!best || val < best_val ||
                    (val == best_val && axis == Axis::Vertical && best->axis == Axis::Horizontal))
                    best = cand, best_val = val;
                // zero-value candidates win the tie-break outright: scanning
                // goes vertical-first in ascending coordinate order
                return best_val == 0;
            };
            bool settled = false;
            for (auto& c : grid.half_grid_coords(w.xmin, w.xmax, grid.origin.x))
                if ((settled = consider(Axis::Vertical, c))) break;
            if (!settled)
                for (auto& c : grid.half_grid_coords(w.ymin, w.ymax, grid.origin.y))
                    if (consider(Axis::Horizontal, c)) break;
            if (!best) throw NoPerfectCut("no perfect half-grid cut in window");

            auto [e1, r1] = make_m_good(res.edges, *best, w, grid, m);
            res.edges = std::move(e1);
            auto [e2, r2] = make_region_good(res.edges, regions, *best, w, grid, m, M);
            res.edges = std::move(e2);
            for (auto* r : {&r1, &r2}) {
                res.report.added_length += r->added_length;
                res.report.removed_length += r->removed_length;
                res.report.parity_fixes.insert(res.report.parity_fixes.end(),
                                               r->parity_fixes.begin(), r->parity_fixes.end());
                res.report.moved_points.insert(res.report.moved_points.end(),
                                               r->moved_points.begin(), r->moved_points.end());
                res.ledger.analytic_tail += r->added_length;
            }
            ++res.cuts_made;

            auto& node = res.certificate.nodes[idx];
            node.cut = *best;
            {
                auto post = res.edges.segments();
                node.sigma = len_along(m_span(*best, post, m));
                node.Sigma = len_along(region_span(*best, regions, M));
            }
            Window wl = w, wr = w;
            if (best->axis == Axis::Vertical)
                wl.xmax = best->coord, wr.xmin = best->coord;
            else
                wl.ymax = best->coord, wr.ymin = best->coord;
            int li = run(wl, depth + 1);
            int ri = run(wr, depth + 1);
            res.certificate.nodes[idx].left = li;
            res.certificate.nodes[idx].right = ri;
            return idx;
        }
    } rec{res, regions, grid, m, M, depth_guard};

    res.certificate.root = rec.run(window, 0);
    return res;
}

GridParameters grid_parameters(int k, const Rat& eps) {
    double e = to_double(eps);
    int m = std::max((int)std::ceil(1.0 / e - 1e-12), 8);
    double v = (1.0 / e) * std::log2(std::max(2.0, (double)k / e));
    int M = std::max((int)std::ceil(v - 1e-9), 32);
    return {m, M};
}

}  // namespace tspn
