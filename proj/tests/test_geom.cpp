#include <doctest.h>

#include "tspn/geom.hpp"

#include <algorithm>
#include <random>

using namespace tspn;

namespace {

Window box(long x1, long y1, long x2, long y2) {
    return Window{Rat(x1), Rat(x2), Rat(y1), Rat(y2)};
}

Segment hseg(long x1, long x2, long y) { return {{Rat(x1), Rat(y)}, {Rat(x2), Rat(y)}}; }

Polygon rectangle(Rat x1, Rat y1, Rat x2, Rat y2) {
    return Polygon{{{x1, y1}, {x2, y1}, {x2, y2}, {x1, y2}}};
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(rat_from_string("3/4") == Rat(3, 4));
    CHECK(rat_from_string("-7") == Rat(-7));
    CHECK(rat_to_string(Rat(10, 4)) == "5/2");
    CHECK(rat_to_string(Rat(-3)) == "-3");
    CHECK_THROWS(rat_from_string("0.5"));
    CHECK_THROWS(rat_from_string("1e3"));
    CHECK_THROWS(rat_from_string("1/0"));
}

TEST_CASE("cut components of transversal crossings") {
    Cut cut{Axis::Vertical, Rat(5), box(0, 0, 10, 10)};
    std::vector<Segment> edges{hseg(1, 9, 2), hseg(1, 9, 5), hseg(1, 9, 8)};
    auto comps = cut_segment_components(cut, edges);
    REQUIRE(comps.size() == 3);
    for (auto& c : comps) CHECK(c.lo == c.hi);
    CHECK(comps[0].lo == 2);
    CHECK(comps[1].lo == 5);
    CHECK(comps[2].lo == 8);
}

TEST_CASE("cut components of a collinear overlap") {
    Cut cut{Axis::Vertical, Rat(5), box(0, 0, 10, 10)};
    std::vector<Segment> edges{{{Rat(5), Rat(3)}, {Rat(5), Rat(7)}}};
    auto comps = cut_segment_components(cut, edges);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].lo == 3);
    CHECK(comps[0].hi == 7);
}

TEST_CASE("cut components of an empty edge set") {
    Cut cut{Axis::Vertical, Rat(5), box(0, 0, 10, 10)};
    CHECK(cut_segment_components(cut, {}).empty());
}

TEST_CASE("cut components merge touching pieces and drop boundary touches") {
    Cut cut{Axis::Vertical, Rat(5), box(0, 0, 10, 10)};
    // two collinear pieces sharing an endpoint plus a crossing inside them
    std::vector<Segment> edges{{{Rat(5), Rat(1)}, {Rat(5), Rat(4)}},
                               {{Rat(5), Rat(4)}, {Rat(5), Rat(6)}},
                               hseg(0, 10, 5),
                               hseg(0, 10, 0)};  // lies on the window boundary
    auto comps = cut_segment_components(cut, edges);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].lo == 1);
    CHECK(comps[0].hi == 6);
}

TEST_CASE("polygon intervals of an axis box") {
    Cut cut{Axis::Vertical, Rat(5), box(0, 0, 10, 10)};
    auto ivs = cut_polygon_intervals(cut, rectangle(4, 1, 6, 2));
    REQUIRE(ivs.size() == 1);
    CHECK(ivs[0].lo == 1);
    CHECK(ivs[0].hi == 2);
}

TEST_CASE("polygon intervals of a U shape, checked against point sampling") {
    // arms crossing x=5 at y in [0,1] and [3,4]
    Polygon u{{{Rat(2), Rat(0)}, {Rat(8), Rat(0)}, {Rat(8), Rat(4)}, {Rat(2), Rat(4)},
               {Rat(2), Rat(3)}, {Rat(7), Rat(3)}, {Rat(7), Rat(1)}, {Rat(2), Rat(1)}}};
    // reverse to counterclockwise if needed
    Cut cut{Axis::Vertical, Rat(15, 2), box(0, -1, 10, 10)};
    auto ivs = cut_polygon_intervals(cut, u);
    REQUIRE(ivs.size() == 1);  // x=7.5 passes through the solid right arm
    CHECK(ivs[0].lo == 0);
    CHECK(ivs[0].hi == 4);

    Cut cut5{Axis::Vertical, Rat(5), box(0, -1, 10, 10)};
    auto ivs5 = cut_polygon_intervals(cut5, u);
    REQUIRE(ivs5.size() == 2);
    CHECK(ivs5[0].lo == 0);
    CHECK(ivs5[0].hi == 1);
    CHECK(ivs5[1].lo == 3);
    CHECK(ivs5[1].hi == 4);

    // sampling cross-check at 1/16 steps
    for (int i = -8; i <= 80; ++i) {
        Rat y(i, 8);
        bool in_some = false;
        for (auto& iv : ivs5)
            if (y >= iv.lo && y <= iv.hi) in_some = true;
        Side side = point_in_polygon(Point{Rat(5), y}, u);
        if (side == Side::Inside) CHECK(in_some);
        if (side == Side::Outside) CHECK(!in_some);
    }
}

TEST_CASE("polygon intervals of a disjoint region") {
    Cut cut{Axis::Vertical, Rat(5), box(0, 0, 10, 10)};
    CHECK(cut_polygon_intervals(cut, rectangle(1, 1, 4, 2)).empty());
}

TEST_CASE("polygon metrics on simple shapes") {
    auto sq = polygon_metrics(rectangle(0, 0, 1, 1));
    CHECK(sq.perimeter == doctest::Approx(4.0));
    CHECK(sq.diameter == doctest::Approx(std::sqrt(2.0)));

    // regular hexagon with circumradius 1, rational approximation
    Rat c(1, 2);           // cos 60
    Rat s(56, 65);         // ~sin 60 would be irrational; use exact unit points instead
    Polygon hex{{{Rat(1), Rat(0)}, {c, s}, {-c, s}, {Rat(-1), Rat(0)}, {-c, -s}, {c, -s}}};
    auto hm = polygon_metrics(hex);
    CHECK(hm.diameter == doctest::Approx(2.0));
    CHECK(hm.perimeter == doctest::Approx(6.0).epsilon(0.01));
}

TEST_CASE("polygon metrics of a 16-gon disk approximation") {
    Polygon p;
    for (int i = 0; i < 16; ++i) {
        double ang = 2 * 3.14159265358979 * i / 16;
        p.vertices.push_back({rat_approx(std::cos(ang)), rat_approx(std::sin(ang))});
    }
    auto m = polygon_metrics(p);
    CHECK(m.diameter == doctest::Approx(2.0).epsilon(0.001));
    CHECK(m.perimeter >= 6.2);
    CHECK(m.perimeter <= 2 * 3.14159266);
    CHECK(m.contains_disk_of_diameter > 1.5);
}

TEST_CASE("convex hull of a square plus center") {
    std::vector<Point> pts{{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(2), Rat(2)},
                           {Rat(0), Rat(2)}, {Rat(1), Rat(1)}};
    auto h = convex_hull(pts);
    CHECK(h.vertices.size() == 4);
    for (auto& p : pts) CHECK(point_in_polygon(p, h) != Side::Outside);
}

TEST_CASE("convex hull of grid points in a unit disk") {
    std::vector<Point> pts;
    for (int i = -2; i <= 2; ++i)
        for (int j = -2; j <= 2; ++j)
            if (Rat(i * i + j * j, 4) <= 1) pts.push_back({Rat(i, 2), Rat(j, 2)});
    auto h = convex_hull(pts);
    // contains the inscribed diamond of the spacing-1 grid
    for (auto& d : std::vector<Point>{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(0)},
                                      {Rat(0), Rat(-1)}})
        CHECK(point_in_polygon(d, h) != Side::Outside);
    // symmetric under 90 degree rotation
    for (auto& v : h.vertices)
        CHECK(point_in_polygon(Point{-v.y, v.x}, h) == Side::Boundary);
    for (auto& p : pts) CHECK(point_in_polygon(p, h) != Side::Outside);
}

TEST_CASE("convex hull rejects collinear input and accepts a triangle") {
    CHECK_THROWS(convex_hull({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}}));
    auto t = convex_hull({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    CHECK(t.vertices.size() == 3);
}

TEST_CASE("predicates are order independent") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-12, 12);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Segment> edges;
        for (int i = 0; i < 8; ++i)
            edges.push_back({{Rat(d(rng)), Rat(d(rng))}, {Rat(d(rng)), Rat(d(rng))}});
        Cut cut{Axis::Vertical, Rat(1, 2), box(-13, -13, 13, 13)};
        auto a = cut_segment_components(cut, edges);
        std::shuffle(edges.begin(), edges.end(), rng);
        auto b = cut_segment_components(cut, edges);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].lo == b[i].lo);
            CHECK(a[i].hi == b[i].hi);
        }
        for (size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].hi < a[i].lo);
    }
}

TEST_CASE("segment intersection basics") {
    Segment s{{Rat(0), Rat(0)}, {Rat(4), Rat(4)}};
    Segment t{{Rat(0), Rat(4)}, {Rat(4), Rat(0)}};
    auto i = intersect_segments(s, t);
    REQUIRE(i.kind == SegIntersection::Kind::Point);
    CHECK(i.p == Point{Rat(2), Rat(2)});

    Segment u{{Rat(1), Rat(1)}, {Rat(3), Rat(3)}};
    auto o = intersect_segments(s, u);
    REQUIRE(o.kind == SegIntersection::Kind::Overlap);
    CHECK(o.overlap.a == Point{Rat(1), Rat(1)});
    CHECK(o.overlap.b == Point{Rat(3), Rat(3)});

    Segment far{{Rat(10), Rat(0)}, {Rat(10), Rat(4)}};
    CHECK(intersect_segments(s, far).kind == SegIntersection::Kind::None);

    Segment touch{{Rat(4), Rat(4)}, {Rat(9), Rat(0)}};
    auto tt = intersect_segments(s, touch);
    REQUIRE(tt.kind == SegIntersection::Kind::Point);
    CHECK(tt.p == Point{Rat(4), Rat(4)});
}

TEST_CASE("segment distances") {
    Segment s{{Rat(0), Rat(0)}, {Rat(10), Rat(0)}};
    CHECK(segment_point_dist_sq(s, {Rat(5), Rat(3)}) == 9);
    CHECK(segment_point_dist_sq(s, {Rat(-3), Rat(4)}) == 25);
    Segment t{{Rat(0), Rat(2)}, {Rat(10), Rat(2)}};
    Point ps, pt;
    CHECK(segment_segment_dist_sq(s, t, &ps, &pt) == 4);
    Segment x{{Rat(5), Rat(-1)}, {Rat(5), Rat(1)}};
    CHECK(segment_segment_dist_sq(s, x) == 0);
}
