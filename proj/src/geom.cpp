#include "tspn/geom.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace tspn {

double to_double(const Rat& r) { return r.convert_to<double>(); }

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
                s.find('E') != std::string::npos)
                throw std::invalid_argument("float syntax not accepted, use p/q");
            return Rat(boost::multiprecision::cpp_int(s));
        }
        boost::multiprecision::cpp_int p(s.substr(0, slash));
        boost::multiprecision::cpp_int q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational '" + s + "': " + e.what());
    }
}

std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_approx(double x, long max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
    bool neg = x < 0;
    double v = neg ? -x : x;
    // Stern-Brocot style continued fraction expansion
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 1e17) break;
        long long a = (long long)fl;
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    Rat r(p1, q1 == 0 ? 1 : q1);
    return neg ? Rat(-r) : r;
}

Rat Segment::length_sq() const { return dist_sq(a, b); }
double Segment::length() const { return std::sqrt(to_double(length_sq())); }

Cut make_cut(Axis axis, Rat coord, Window w) {
    if (axis == Axis::Vertical) {
        if (!(coord > w.xmin && coord < w.xmax))
            throw std::invalid_argument("cut coordinate not strictly inside window");
    } else {
        if (!(coord > w.ymin && coord < w.ymax))
            throw std::invalid_argument("cut coordinate not strictly inside window");
    }
    return Cut{axis, std::move(coord), std::move(w)};
}

static Rat cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int orientation(const Point& a, const Point& b, const Point& c) {
    Rat cr = cross(a, b, c);
    if (cr > 0) return 1;
    if (cr < 0) return -1;
    return 0;
}

bool point_on_segment(const Point& p, const Segment& s) {
    if (orientation(s.a, s.b, p) != 0) return false;
    return p.x >= std::min(s.a.x, s.b.x) && p.x <= std::max(s.a.x, s.b.x) &&
           p.y >= std::min(s.a.y, s.b.y) && p.y <= std::max(s.a.y, s.b.y);
}

SegIntersection intersect_segments(const Segment& s, const Segment& t) {
    SegIntersection out;
    Rat d1 = cross(t.a, t.b, s.a);
    Rat d2 = cross(t.a, t.b, s.b);
    Rat d3 = cross(s.a, s.b, t.a);
    Rat d4 = cross(s.a, s.b, t.b);

    auto sgn = [](const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); };
    int s1 = sgn(d1), s2 = sgn(d2), s3 = sgn(d3), s4 = sgn(d4);

    if (s1 == 0 && s2 == 0 && s3 == 0 && s4 == 0) {
        // collinear; project on the dominant axis
        bool usex = s.a.x != s.b.x || t.a.x != t.b.x;
        auto key = [&](const Point& p) { return usex ? p.x : p.y; };
        Point slo = s.a, shi = s.b, tlo = t.a, thi = t.b;
        if (key(shi) < key(slo)) std::swap(slo, shi);
        if (key(thi) < key(tlo)) std::swap(tlo, thi);
        Point lo = key(slo) < key(tlo) ? tlo : slo;
        Point hi = key(shi) < key(thi) ? shi : thi;
        if (key(lo) > key(hi)) return out;
        if (lo == hi) {
            out.kind = SegIntersection::Kind::Point;
            out.p = lo;
        } else {
            out.kind = SegIntersection::Kind::Overlap;
            out.overlap = Segment{lo, hi};
        }
        return out;
    }

    if (s1 * s2 > 0 || s3 * s4 > 0) return out;

    Rat denom = d1 - d2;
    if (denom == 0) {
        // parallel but not collinear, or a degenerate segment touching
        for (const Point* p : {&s.a, &s.b})
            if (point_on_segment(*p, t)) { out.kind = SegIntersection::Kind::Point; out.p = *p; return out; }
        for (const Point* p : {&t.a, &t.b})
            if (point_on_segment(*p, s)) { out.kind = SegIntersection::Kind::Point; out.p = *p; return out; }
        return out;
    }
    Rat u = d1 / denom;  // position along s
    if (u < 0 || u > 1) return out;
    Point p{s.a.x + u * (s.b.x - s.a.x), s.a.y + u * (s.b.y - s.a.y)};
    if (!point_on_segment(p, t)) return out;
    out.kind = SegIntersection::Kind::Point;
    out.p = p;
    return out;
}

Side point_in_polygon(const Point& p, const Polygon& poly) {
    int n = (int)poly.vertices.size();
    bool inside = false;
    for (int i = 0; i < n; ++i) {
        const Point& a = poly.vertices[i];
        const Point& b = poly.vertices[(i + 1) % n];
        if (point_on_segment(p, Segment{a, b})) return Side::Boundary;
        // ray cast to +x
        bool a_below = a.y <= p.y, b_below = b.y <= p.y;
        if (a_below != b_below) {
            int orient = orientation(a, b, p);
            if (b.y > a.y ? orient < 0 : orient > 0) inside = !inside;
        }
    }
    return inside ? Side::Inside : Side::Outside;
}

namespace {

// 1D pieces (points and intervals) along the cut axis, to be unioned
struct Pieces {
    std::vector<Rat> pts;
    std::vector<std::pair<Rat, Rat>> ivs;
};

std::vector<CutInterval> union_pieces(Pieces& pc, const Rat& lo_open, const Rat& hi_open) {
    // clip to the open interval (lo_open, hi_open); interval parts keep clipped
    // closed endpoints, point parts on the boundary are dropped
    std::vector<std::pair<Rat, Rat>> ivs;
    for (auto& iv : pc.ivs) {
        Rat a = std::max(iv.first, lo_open), b = std::min(iv.second, hi_open);
        if (a < b) ivs.push_back({a, b});
        else if (a == b && a > lo_open && a < hi_open) pc.pts.push_back(a);
    }
    std::sort(ivs.begin(), ivs.end());
    std::vector<std::pair<Rat, Rat>> merged;
    for (auto& iv : ivs) {
        if (!merged.empty() && iv.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, iv.second);
        else
            merged.push_back(iv);
    }
    std::vector<CutInterval> out;
    std::sort(pc.pts.begin(), pc.pts.end());
    pc.pts.erase(std::unique(pc.pts.begin(), pc.pts.end()), pc.pts.end());
    size_t mi = 0;
    for (auto& p : pc.pts) {
        if (!(p > lo_open && p < hi_open)) continue;
        while (mi < merged.size() && merged[mi].second < p) ++mi;
        if (mi < merged.size() && merged[mi].first <= p) continue;  // absorbed
        out.push_back({p, p});
    }
    for (auto& iv : merged) out.push_back({iv.first, iv.second});
    std::sort(out.begin(), out.end(), [](const CutInterval& a, const CutInterval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    return out;
}

}  // namespace

std::vector<CutInterval> cut_segment_components(const Cut& cut, const std::vector<Segment>& edges) {
    bool vert = cut.axis == Axis::Vertical;
    Rat lo = vert ? cut.window.ymin : cut.window.xmin;
    Rat hi = vert ? cut.window.ymax : cut.window.xmax;
    Segment line = vert
        ? Segment{{cut.coord, lo}, {cut.coord, hi}}
        : Segment{{lo, cut.coord}, {hi, cut.coord}};
    auto along = [&](const Point& p) { return vert ? p.y : p.x; };
    auto across = [&](const Point& p) { return vert ? p.x : p.y; };

    Pieces pc;
    for (const auto& e : edges) {
        // cheap reject: edge lies strictly on one side of the cut line
        Rat ca = across(e.a), cb = across(e.b);
        if ((ca < cut.coord && cb < cut.coord) || (ca > cut.coord && cb > cut.coord)) continue;
        auto isect = intersect_segments(e, line);
        if (isect.kind == SegIntersection::Kind::Point)
            pc.pts.push_back(along(isect.p));
        else if (isect.kind == SegIntersection::Kind::Overlap) {
            Rat a = along(isect.overlap.a), b = along(isect.overlap.b);
            if (a > b) std::swap(a, b);
            pc.ivs.push_back({a, b});
        }
    }
    return union_pieces(pc, lo, hi);
}

std::vector<CutInterval> cut_polygon_intervals(const Cut& cut, const Polygon& region) {
    bool vert = cut.axis == Axis::Vertical;
    Rat lo = vert ? cut.window.ymin : cut.window.xmin;
    Rat hi = vert ? cut.window.ymax : cut.window.xmax;
    auto along = [&](const Point& p) { return vert ? p.y : p.x; };
    auto at = [&](const Rat& t) { return vert ? Point{cut.coord, t} : Point{t, cut.coord}; };

    // bounding-box reject: most regions are nowhere near a given cut line
    {
        auto across = [&](const Point& p) { return vert ? p.x : p.y; };
        const auto& vs = region.vertices;
        Rat cmin = across(vs[0]), cmax = cmin, amin = along(vs[0]), amax = amin;
        for (auto& v : vs) {
            Rat c = across(v), a = along(v);
            if (c < cmin) cmin = c;
            if (c > cmax) cmax = c;
            if (a < amin) amin = a;
            if (a > amax) amax = a;
        }
        if (cut.coord < cmin || cut.coord > cmax || amax < lo || amin > hi) return {};
    }

    // breakpoints: boundary crossings of the full cut line with the polygon
    std::vector<Rat> bps{lo, hi};
    Segment line = vert ? Segment{{cut.coord, lo}, {cut.coord, hi}}
                        : Segment{{lo, cut.coord}, {hi, cut.coord}};
    int n = (int)region.vertices.size();
    for (int i = 0; i < n; ++i) {
        Segment e{region.vertices[i], region.vertices[(i + 1) % n]};
        auto isect = intersect_segments(e, line);
        if (isect.kind == SegIntersection::Kind::Point)
            bps.push_back(along(isect.p));
        else if (isect.kind == SegIntersection::Kind::Overlap) {
            bps.push_back(along(isect.overlap.a));
            bps.push_back(along(isect.overlap.b));
        }
    }
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    Pieces pc;
    for (size_t i = 0; i + 1 < bps.size(); ++i) {
        if (bps[i] < lo || bps[i + 1] > hi) continue;
        Rat mid = (bps[i] + bps[i + 1]) / 2;
        if (point_in_polygon(at(mid), region) != Side::Outside)
            pc.ivs.push_back({bps[i], bps[i + 1]});
    }
    // isolated touch points (vertex tangencies)
    for (auto& t : bps) {
        if (t < lo || t > hi) continue;
        if (point_in_polygon(at(t), region) != Side::Outside) pc.pts.push_back(t);
    }
    return union_pieces(pc, lo, hi);
}

Segment interval_to_segment(const Cut& cut, const CutInterval& iv) {
    if (cut.axis == Axis::Vertical)
        return Segment{{cut.coord, iv.lo}, {cut.coord, iv.hi}};
    return Segment{{iv.lo, cut.coord}, {iv.hi, cut.coord}};
}

Rat dist_sq(const Point& a, const Point& b) {
    Rat dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

Rat segment_point_dist_sq(const Segment& s, const Point& p, Point* closest) {
    Rat len2 = s.length_sq();
    if (len2 == 0) {
        if (closest) *closest = s.a;
        return dist_sq(s.a, p);
    }
    Rat t = ((p.x - s.a.x) * (s.b.x - s.a.x) + (p.y - s.a.y) * (s.b.y - s.a.y)) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    Point c{s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)};
    if (closest) *closest = c;
    return dist_sq(c, p);
}

Rat segment_segment_dist_sq(const Segment& s, const Segment& t, Point* ps, Point* pt) {
    auto isect = intersect_segments(s, t);
    if (isect.kind != SegIntersection::Kind::None) {
        Point p = isect.kind == SegIntersection::Kind::Point ? isect.p : isect.overlap.a;
        if (ps) *ps = p;
        if (pt) *pt = p;
        return Rat(0);
    }
    Rat best = -1;
    Point bs, bt;
    auto consider = [&](const Segment& seg, const Point& p, bool p_on_t) {
        Point c;
        Rat d = segment_point_dist_sq(seg, p, &c);
        if (best < 0 || d < best) {
            best = d;
            if (p_on_t) { bs = c; bt = p; } else { bs = p; bt = c; }
        }
    };
    consider(s, t.a, true);
    consider(s, t.b, true);
    consider(t, s.a, false);
    consider(t, s.b, false);
    if (ps) *ps = bs;
    if (pt) *pt = bt;
    return best;
}

PolygonMetrics polygon_metrics(const Polygon& region, int disk_grid_resolution) {
    PolygonMetrics m;
    const auto& v = region.vertices;
    int n = (int)v.size();
    Rat best_diam2 = 0;
    for (int i = 0; i < n; ++i) {
        m.perimeter += Segment{v[i], v[(i + 1) % n]}.length();
        for (int j = i + 1; j < n; ++j) best_diam2 = std::max(best_diam2, dist_sq(v[i], v[j]));
    }
    m.diameter = std::sqrt(to_double(best_diam2));

    // inscribed disk by grid search over centers; diagnostics only
    Rat xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
    for (auto& p : v) {
        xmin = std::min(xmin, p.x); xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y); ymax = std::max(ymax, p.y);
    }
    double best_r = 0;
    int R = std::max(2, disk_grid_resolution);
    for (int i = 1; i < R; ++i) {
        for (int j = 1; j < R; ++j) {
            Point c{xmin + (xmax - xmin) * i / R, ymin + (ymax - ymin) * j / R};
            if (point_in_polygon(c, region) != Side::Inside) continue;
            Rat dmin = -1;
            for (int e = 0; e < n; ++e) {
                Rat d = segment_point_dist_sq(Segment{v[e], v[(e + 1) % n]}, c);
                if (dmin < 0 || d < dmin) dmin = d;
            }
            best_r = std::max(best_r, std::sqrt(to_double(dmin)));
        }
    }
    m.contains_disk_of_diameter = 2 * best_r;
    return m;
}

Polygon convex_hull(std::vector<Point> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    int n = (int)points.size();
    if (n < 3) throw std::invalid_argument("need at least 3 distinct points");
    std::vector<Point> h(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && orientation(h[k - 2], h[k - 1], points[i]) <= 0) --k;
        h[k++] = points[i];
    }
    int lower = k + 1;
    for (int i = n - 2; i >= 0; --i) {
        while (k >= lower && orientation(h[k - 2], h[k - 1], points[i]) <= 0) --k;
        h[k++] = points[i];
    }
    h.resize(k - 1);
    if ((int)h.size() < 3) throw std::invalid_argument("all points collinear");
    return Polygon{std::move(h)};
}

bool segment_intersects_polygon(const Segment& s, const Polygon& poly) {
    if (point_in_polygon(s.a, poly) != Side::Outside) return true;
    if (point_in_polygon(s.b, poly) != Side::Outside) return true;
    int n = (int)poly.vertices.size();
    for (int i = 0; i < n; ++i) {
        Segment e{poly.vertices[i], poly.vertices[(i + 1) % n]};
        if (intersect_segments(s, e).kind != SegIntersection::Kind::None) return true;
    }
    return false;
}

bool polygons_disjoint(const Polygon& a, const Polygon& b) {
    int n = (int)a.vertices.size();
    for (int i = 0; i < n; ++i) {
        Segment e{a.vertices[i], a.vertices[(i + 1) % n]};
        if (segment_intersects_polygon(e, b)) return false;
    }
    // b entirely inside a
    if (point_in_polygon(b.vertices[0], a) != Side::Outside) return false;
    return true;
}

}  // namespace tspn
