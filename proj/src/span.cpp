#include "tspn/span.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace tspn {

Rat total_length(const std::vector<Segment>& segs, Axis) {
    Rat s = 0;
    for (auto& seg : segs) {
        Rat dx = seg.b.x - seg.a.x, dy = seg.b.y - seg.a.y;
        s += abs(dx) + abs(dy);  // segments are axis parallel
    }
    return s;
}

namespace {

Point on_cut(const Cut& cut, const Rat& t) {
    return cut.axis == Axis::Vertical ? Point{cut.coord, t} : Point{t, cut.coord};
}

std::optional<Segment> span_from_endpoints(const Cut& cut, std::vector<Rat>& ps, int m) {
    std::sort(ps.begin(), ps.end());
    int xi = (int)ps.size();
    if (xi <= 2 * m - 2) return std::nullopt;
    return Segment{on_cut(cut, ps[m - 1]), on_cut(cut, ps[xi - m])};
}

}  // namespace

std::optional<Segment> m_span(const Cut& cut, const std::vector<Segment>& edges, int m) {
    auto comps = cut_segment_components(cut, edges);
    std::vector<Rat> ps;
    for (auto& c : comps) {
        ps.push_back(c.lo);
        ps.push_back(c.hi);  // degenerate components contribute twice
    }
    return span_from_endpoints(cut, ps, m);
}

std::optional<Segment> region_span(const Cut& cut, const std::vector<Polygon>& regions, int M) {
    bool vert = cut.axis == Axis::Vertical;
    Rat wlo = vert ? cut.window.ymin : cut.window.xmin;
    Rat whi = vert ? cut.window.ymax : cut.window.xmax;
    std::vector<Rat> ps;
    for (auto& r : regions) {
        for (auto& c : cut_polygon_intervals(cut, r)) {
            if (c.lo > wlo) ps.push_back(c.lo);
            if (c.hi < whi) ps.push_back(c.hi);
            if (c.lo == c.hi && c.lo > wlo && c.lo < whi) ps.push_back(c.lo);  // second copy
        }
    }
    return span_from_endpoints(cut, ps, M);
}

namespace {

// Breakpoint machinery shared by both darkness computations. Returns the sorted
// distinct coordinates (along the cut) partitioning it into intervals on which
// membership in the orthogonal span is constant.
struct DarkCtx {
    const Cut& cut;
    Rat lo, hi;  // along-cut window interval
    std::vector<Rat> bps;

    explicit DarkCtx(const Cut& c) : cut(c) {
        bool vert = cut.axis == Axis::Vertical;
        lo = vert ? cut.window.ymin : cut.window.xmin;
        hi = vert ? cut.window.ymax : cut.window.xmax;
        bps.push_back(lo);
        bps.push_back(hi);
    }
    Rat along(const Point& p) const { return cut.axis == Axis::Vertical ? p.y : p.x; }
    Rat across(const Point& p) const { return cut.axis == Axis::Vertical ? p.x : p.y; }

    // full-height lines at the cut coordinate and at the window's across bounds
    std::vector<Segment> probe_lines() const {
        bool vert = cut.axis == Axis::Vertical;
        Rat axmin = vert ? cut.window.xmin : cut.window.ymin;
        Rat axmax = vert ? cut.window.xmax : cut.window.ymax;
        std::vector<Segment> lines;
        for (const Rat& c : {cut.coord, axmin, axmax}) {
            if (vert)
                lines.push_back(Segment{{c, lo}, {c, hi}});
            else
                lines.push_back(Segment{{lo, c}, {hi, c}});
        }
        return lines;
    }
    void add_seg(const Segment& s) {
        bps.push_back(along(s.a));
        bps.push_back(along(s.b));
    }
    void add_isect(const Segment& a, const Segment& b) {
        auto i = intersect_segments(a, b);
        if (i.kind == SegIntersection::Kind::Point)
            bps.push_back(along(i.p));
        else if (i.kind == SegIntersection::Kind::Overlap)
            add_seg(i.overlap);
    }

    std::vector<Segment> sweep(const std::function<bool(const Rat&)>& dark_at) {
        std::sort(bps.begin(), bps.end());
        bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
        std::erase_if(bps, [&](const Rat& t) { return t < lo || t > hi; });
        // alternate breakpoint, open interval, breakpoint, ... so isolated dark
        // points survive and a light breakpoint splits two dark intervals
        std::vector<std::pair<Rat, Rat>> dark;
        bool prev_dark = false;
        auto item = [&](bool is_dark, const Rat& a, const Rat& b) {
            if (is_dark) {
                if (prev_dark)
                    dark.back().second = b;
                else
                    dark.push_back({a, b});
            }
            prev_dark = is_dark;
        };
        for (size_t i = 0; i < bps.size(); ++i) {
            item(dark_at(bps[i]), bps[i], bps[i]);
            if (i + 1 < bps.size()) {
                Rat mid = (bps[i] + bps[i + 1]) / 2;
                item(dark_at(mid), bps[i], bps[i + 1]);
            }
        }
        std::vector<Segment> out;
        bool vert = cut.axis == Axis::Vertical;
        for (auto& [a, b] : dark)
            out.push_back(vert ? Segment{{cut.coord, a}, {cut.coord, b}}
                               : Segment{{a, cut.coord}, {b, cut.coord}});
        return out;
    }
};

Cut orthogonal_cut(const Cut& cut, const Rat& t) {
    Axis oa = cut.axis == Axis::Vertical ? Axis::Horizontal : Axis::Vertical;
    return Cut{oa, t, cut.window};
}

// Orthogonal spans do not depend on the candidate coordinate, only on the
// window, axis, and geometry; scanning many candidates of the same window
// repeats those queries, so memoize them per geometry/window context.
bool same_window(const Window& a, const Window& b) {
    return a.xmin == b.xmin && a.xmax == b.xmax && a.ymin == b.ymin && a.ymax == b.ymax;
}

template <class Geom>
struct OrthoSpanCache {
    Geom geom;
    Window win;
    bool valid = false;
    std::map<std::tuple<int, int, Rat>, std::optional<Segment>> spans;

    template <class Eq>
    void sync(const Geom& g, const Window& w, Eq eq) {
        if (valid && same_window(win, w) && eq(geom, g)) return;
        geom = g;
        win = w;
        spans.clear();
        valid = true;
    }
    template <class Compute>
    const std::optional<Segment>& get(Axis axis, int count, const Rat& t, Compute compute) {
        auto key = std::make_tuple((int)axis, count, t);
        auto it = spans.find(key);
        if (it == spans.end()) it = spans.emplace(key, compute()).first;
        return it->second;
    }
};

bool segs_equal(const std::vector<Segment>& a, const std::vector<Segment>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i].a == b[i].a && a[i].b == b[i].b)) return false;
    return true;
}

bool polys_equal(const std::vector<Polygon>& a, const std::vector<Polygon>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].vertices != b[i].vertices) return false;
    return true;
}

thread_local OrthoSpanCache<std::vector<Segment>> edge_ortho_cache;
thread_local OrthoSpanCache<std::vector<Polygon>> region_ortho_cache;

}  // namespace

std::vector<Segment> dark_portions(const Cut& cut, const std::vector<Segment>& edges, int m) {
    if (edges.empty()) return {};
    DarkCtx ctx(cut);
    auto lines = ctx.probe_lines();
    for (size_t i = 0; i < edges.size(); ++i) {
        ctx.add_seg(edges[i]);
        for (size_t j = i + 1; j < edges.size(); ++j) ctx.add_isect(edges[i], edges[j]);
        for (auto& l : lines) ctx.add_isect(edges[i], l);
    }
    edge_ortho_cache.sync(edges, cut.window, segs_equal);
    return ctx.sweep([&](const Rat& t) {
        // the orthogonal span lies along orth; test the across coordinate of cut
        auto span = edge_ortho_cache.get(cut.axis, m, t, [&] {
            return m_span(orthogonal_cut(cut, t), edges, m);
        });
        if (!span) return false;
        Rat a = cut.axis == Axis::Vertical ? std::min(span->a.x, span->b.x)
                                           : std::min(span->a.y, span->b.y);
        Rat b = cut.axis == Axis::Vertical ? std::max(span->a.x, span->b.x)
                                           : std::max(span->a.y, span->b.y);
        return a <= cut.coord && cut.coord <= b;
    });
}

std::vector<Segment> region_dark_portions(const Cut& cut, const std::vector<Polygon>& regions,
                                          int M) {
    if (regions.empty()) return {};
    DarkCtx ctx(cut);
    auto lines = ctx.probe_lines();
    for (auto& r : regions) {
        int n = (int)r.vertices.size();
        for (int i = 0; i < n; ++i) {
            Segment e{r.vertices[i], r.vertices[(i + 1) % n]};
            ctx.bps.push_back(ctx.along(e.a));
            for (auto& l : lines) ctx.add_isect(e, l);
        }
    }
    region_ortho_cache.sync(regions, cut.window, polys_equal);
    return ctx.sweep([&](const Rat& t) {
        auto span = region_ortho_cache.get(cut.axis, M, t, [&] {
            return region_span(orthogonal_cut(cut, t), regions, M);
        });
        if (!span) return false;
        Rat a = cut.axis == Axis::Vertical ? std::min(span->a.x, span->b.x)
                                           : std::min(span->a.y, span->b.y);
        Rat b = cut.axis == Axis::Vertical ? std::max(span->a.x, span->b.x)
                                           : std::max(span->a.y, span->b.y);
        return a <= cut.coord && cut.coord <= b;
    });
}

std::pair<SpanReport, CutClass> classify_cut(const Cut& cut, const std::vector<Segment>& edges,
                                             const std::vector<Polygon>& regions, int m, int M) {
    SpanReport rep;
    rep.cut = cut;
    rep.span_segment = m_span(cut, edges, m);
    rep.region_span_segment = region_span(cut, regions, M);
    auto len_along = [](const std::optional<Segment>& s) -> Rat {
        if (!s) return Rat(0);
        Rat dx = s->b.x - s->a.x, dy = s->b.y - s->a.y;
        return abs(dx) + abs(dy);
    };
    rep.sigma_m = len_along(rep.span_segment);
    rep.Sigma_M = len_along(rep.region_span_segment);
    rep.dark_segments = dark_portions(cut, edges, m);
    rep.region_dark_segments = region_dark_portions(cut, regions, M);
    rep.delta_m = total_length(rep.dark_segments, cut.axis);
    rep.Delta_M = total_length(rep.region_dark_segments, cut.axis);
    rep.Delta_halfM = total_length(region_dark_portions(cut, regions, std::max(1, M / 2)), cut.axis);

    CutClass cls;
    Rat spans = rep.sigma_m + rep.Sigma_M;
    Rat dark = rep.delta_m + rep.Delta_M;
    Rat wdark = rep.delta_m + rep.Delta_halfM;
    if (spans == 0)
        cls.favorable_c = Rat(0);
    else if (dark > 0)
        cls.favorable_c = spans / dark;
    if (spans == 0)
        cls.weakly_favorable_c = Rat(0);
    else if (wdark > 0)
        cls.weakly_favorable_c = spans / wdark;

    bool vert = cut.axis == Axis::Vertical;
    Rat lo = vert ? cut.window.xmin : cut.window.ymin;
    Rat hi = vert ? cut.window.xmax : cut.window.ymax;
    Rat dist = std::min(cut.coord - lo, hi - cut.coord);
    Rat h = hi - lo;
    cls.central = dist >= 2;
    cls.weakly_central = dist >= std::min(Rat(2), h / 4);
    bool wfav8 = cls.weakly_favorable_c && *cls.weakly_favorable_c <= 8;
    cls.perfect = wfav8 && (cls.central || (cls.weakly_central && rep.Sigma_M == 0));
    return {rep, cls};
}

namespace {

struct CandidateEval {
    bool perfect = false;
    Rat value;  // sigma_m + Sigma_M
};

CandidateEval eval_candidate(const Cut& cut, const std::vector<Segment>& edges,
                             const std::vector<Polygon>& regions, int m, int M) {
    CandidateEval ev;
    auto span = m_span(cut, edges, m);
    auto rspan = region_span(cut, regions, M);
    auto len_along = [](const std::optional<Segment>& s) -> Rat {
        if (!s) return Rat(0);
        Rat dx = s->b.x - s->a.x, dy = s->b.y - s->a.y;
        return abs(dx) + abs(dy);
    };
    Rat sigma = len_along(span), Sigma = len_along(rspan);
    ev.value = sigma + Sigma;

    bool vert = cut.axis == Axis::Vertical;
    Rat lo = vert ? cut.window.xmin : cut.window.ymin;
    Rat hi = vert ? cut.window.xmax : cut.window.ymax;
    Rat dist = std::min(cut.coord - lo, hi - cut.coord);
    bool central = dist >= 2;
    bool wcentral = dist >= std::min(Rat(2), (hi - lo) / 4);
    if (!central && !wcentral) return ev;

    if (ev.value == 0) {
        // weakly 0-favorable; Sigma_M vanishes too
        ev.perfect = central || wcentral;
        return ev;
    }
    Rat wdark = total_length(dark_portions(cut, edges, m), cut.axis) +
                total_length(region_dark_portions(cut, regions, std::max(1, M / 2)), cut.axis);
    bool wfav8 = ev.value <= 8 * wdark;
    ev.perfect = wfav8 && (central || (wcentral && Sigma == 0));
    return ev;
}

void structure_coords(const std::vector<Segment>& edges, const std::vector<Polygon>& regions,
                      bool vert, std::vector<Rat>& out) {
    for (auto& e : edges) {
        out.push_back(vert ? e.a.x : e.a.y);
        out.push_back(vert ? e.b.x : e.b.y);
    }
    for (auto& r : regions)
        for (auto& p : r.vertices) out.push_back(vert ? p.x : p.y);
}

}  // namespace

Cut find_perfect_cut(const Window& window, const std::vector<Segment>& edges,
                     const std::vector<Polygon>& regions, int m, int M, const GridSpec& grid) {
    struct Best {
        bool found = false;
        Rat value;
        Axis axis = Axis::Vertical;
        Rat coord;
    } best;

    auto consider = [&](Axis axis, const Rat& coord) {
        Cut cut{axis, coord, window};
        auto ev = eval_candidate(cut, edges, regions, m, M);
        if (!ev.perfect) return;
        bool better;
        if (!best.found) better = true;
        else if (ev.value != best.value) better = ev.value < best.value;
        else if (axis != best.axis) better = axis == Axis::Vertical;
        else better = coord < best.coord;
        if (better) best = {true, ev.value, axis, coord};
    };

    auto candidates_for = [&](Axis axis, bool enrich) {
        bool vert = axis == Axis::Vertical;
        Rat lo = vert ? window.xmin : window.ymin;
        Rat hi = vert ? window.xmax : window.ymax;
        Rat base = vert ? grid.origin.x : grid.origin.y;
        std::vector<Rat> cs = grid.half_grid_coords(lo, hi, base);
        if (enrich) {
            structure_coords(edges, regions, vert, cs);
            cs.push_back(lo + (hi - lo) / 4);
            cs.push_back(lo + (hi - lo) / 2);
            cs.push_back(lo + 3 * (hi - lo) / 4);
        }
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        std::erase_if(cs, [&](const Rat& c) { return !(c > lo && c < hi); });
        return cs;
    };

    // Half-grid candidates suffice on snapped instances; the enriched pool
    // (structure coordinates, window fractions, bisection) is a fallback only,
    // so it can never displace a half-grid cut in the tie-break.
    std::vector<Rat> vcs = candidates_for(Axis::Vertical, false);
    std::vector<Rat> hcs = candidates_for(Axis::Horizontal, false);

    for (int round = 0; round < 7; ++round) {
        if (round == 1) {
            vcs = candidates_for(Axis::Vertical, true);
            hcs = candidates_for(Axis::Horizontal, true);
        } else if (round > 1) {
            // refine by bisection between consecutive candidates
            auto refine = [](std::vector<Rat>& cs) {
                std::vector<Rat> next;
                for (size_t i = 0; i + 1 < cs.size(); ++i) next.push_back((cs[i] + cs[i + 1]) / 2);
                cs.insert(cs.end(), next.begin(), next.end());
                std::sort(cs.begin(), cs.end());
                cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
            };
            refine(vcs);
            refine(hcs);
        }
        for (auto& c : vcs) {
            consider(Axis::Vertical, c);
            if (best.found && best.value == 0 && best.axis == Axis::Vertical) break;
        }
        if (!(best.found && best.value == 0)) {
            for (auto& c : hcs) {
                consider(Axis::Horizontal, c);
                if (best.found && best.value == 0) break;
            }
        }
        if (best.found) return Cut{best.axis, best.coord, window};
    }
    throw NoPerfectCut("no perfect cut found in candidate set");
}

}  // namespace tspn
