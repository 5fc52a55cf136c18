#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tspn {

using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

double to_double(const Rat& r);
Rat rat_from_string(const std::string& s);   // "p/q" or "p"
std::string rat_to_string(const Rat& r);

/// Best rational with denominator <= max_den (used for sample points; never
/// in correctness-critical predicates).
Rat rat_approx(double x, long max_den = 100000);

struct Point {
    Rat x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

struct Segment {
    Point a, b;
    bool degenerate() const { return a == b; }
    Rat length_sq() const;
    double length() const;
};

struct Polygon {
    std::vector<Point> vertices;  // simple, counterclockwise
};

struct Window {
    Rat xmin, xmax, ymin, ymax;
    Rat width() const { return xmax - xmin; }
    Rat height() const { return ymax - ymin; }
    bool contains(const Point& p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    bool strictly_contains(const Point& p) const {
        return p.x > xmin && p.x < xmax && p.y > ymin && p.y < ymax;
    }
};

enum class Axis { Horizontal, Vertical };

/// Axis-parallel line through the interior of a window.
struct Cut {
    Axis axis = Axis::Vertical;
    Rat coord;      // x for vertical cuts, y for horizontal cuts
    Window window;
};

Cut make_cut(Axis axis, Rat coord, Window w);  // validates coord strictly inside

// orientation sign of (b-a) x (c-a): +1 ccw, -1 cw, 0 collinear
int orientation(const Point& a, const Point& b, const Point& c);
bool point_on_segment(const Point& p, const Segment& s);

struct SegIntersection {
    enum class Kind { None, Point, Overlap } kind = Kind::None;
    Point p;        // for Kind::Point
    Segment overlap;  // for Kind::Overlap (may be degenerate)
};
SegIntersection intersect_segments(const Segment& s, const Segment& t);

enum class Side { Inside, Boundary, Outside };
Side point_in_polygon(const Point& p, const Polygon& poly);

// 1D interval along a cut; lo == hi marks a degenerate component.
struct CutInterval {
    Rat lo, hi;
};

/// Connected components of  cut-line ∩ edges ∩ int(W), sorted along the cut.
/// Transversal crossings come back as degenerate components; components whose
/// closure only touches the window boundary are dropped, interval components
/// are clipped to the closed window (their boundary endpoints still count
/// downstream, matching the edge-span counting convention).
std::vector<CutInterval> cut_segment_components(const Cut& cut, const std::vector<Segment>& edges);

/// Maximal subsegments of the cut line inside the closed region, clipped to
/// the window, sorted along the cut.
std::vector<CutInterval> cut_polygon_intervals(const Cut& cut, const Polygon& region);

Segment interval_to_segment(const Cut& cut, const CutInterval& iv);

struct PolygonMetrics {
    double diameter = 0.0;
    double perimeter = 0.0;
    double contains_disk_of_diameter = 0.0;  // grid-search approximation
};
PolygonMetrics polygon_metrics(const Polygon& region, int disk_grid_resolution = 32);

Polygon convex_hull(std::vector<Point> points);  // throws on collinear input

bool polygons_disjoint(const Polygon& a, const Polygon& b);
bool segment_intersects_polygon(const Segment& s, const Polygon& poly);  // closed region

Rat dist_sq(const Point& a, const Point& b);
Rat segment_point_dist_sq(const Segment& s, const Point& p, Point* closest = nullptr);
Rat segment_segment_dist_sq(const Segment& s, const Segment& t, Point* ps = nullptr, Point* pt = nullptr);

}  // namespace tspn
