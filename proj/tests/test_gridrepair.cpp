#include "tspn/gridrepair.hpp"

#include <algorithm>

#include "doctest.h"

using namespace tspn;

namespace {

GridSpec quarter_grid() {
    GridSpec g;
    g.origin = {Rat(0), Rat(0)};
    g.spacing = Rat(1, 4);
    g.extent = 64;
    return g;
}

GridSpec unit_demo_grid() {
    GridSpec g;
    g.origin = {Rat(0), Rat(0)};
    g.spacing = Rat(1);
    g.extent = 4;
    g.demo = true;
    return g;
}

EdgeSet square_tour(const Rat& a, const Rat& b) {
    EdgeSet es;
    es.add({{a, a}, {b, a}});
    es.add({{b, a}, {b, b}});
    es.add({{b, b}, {a, b}});
    es.add({{a, b}, {a, a}});
    return es;
}

// Two bundles of parallel edges crossing x = 1 inside a span much shorter
// than the grid spacing.
EdgeSet crossing_bundles() {
    EdgeSet es;
    for (int i = 0; i < 8; ++i) es.add({{Rat(1, 2), Rat(1)}, {Rat(3, 2), Rat(5, 4)}});
    for (int i = 0; i < 8; ++i) es.add({{Rat(1, 4), Rat(1)}, {Rat(9, 4), Rat(3, 2)}});
    return es;
}

// Twenty horizontal rungs crossing the vertical lines near x = 1.
EdgeSet comb() {
    EdgeSet es;
    for (int i = 1; i <= 20; ++i) es.add({{Rat(3, 4), Rat(i, 4)}, {Rat(3, 2), Rat(i, 4)}});
    return es;
}

std::vector<Point> sorted_odd(const EdgeSet& es) {
    auto v = odd_degree_vertices(es);
    std::sort(v.begin(), v.end());
    return v;
}

bool has_edge(const EdgeSet& es, const Point& a, const Point& b, Provenance prov) {
    for (auto& e : es.edges)
        if (e.prov == prov && ((e.seg.a == a && e.seg.b == b) || (e.seg.a == b && e.seg.b == a)))
            return true;
    return false;
}

// Square ring around (2, 2), opened by a narrow slit on the right arm at
// height sy; staggered slit heights keep every axis-parallel line through the
// cluster crossing almost all rings.
Polygon slit_ring(const Rat& a, const Rat& b, const Rat& sy) {
    Rat c(2), s(1, 2000);
    return Polygon{{{c - b, c - b}, {c + b, c - b}, {c + b, sy - s}, {c + a, sy - s},
                    {c + a, c - a}, {c - a, c - a}, {c - a, c + a}, {c + a, c + a},
                    {c + a, sy + s}, {c + b, sy + s}, {c + b, c + b}, {c - b, c + b}}};
}

std::vector<Polygon> staggered_rings() {
    std::vector<Polygon> regs;
    regs.push_back(slit_ring(Rat(1), Rat(11, 10), Rat(2) - Rat(6, 1000)));
    regs.push_back(slit_ring(Rat(9, 20), Rat(11, 20), Rat(2) - Rat(5, 1000)));
    for (int j = 1; j <= 11; ++j)
        regs.push_back(slit_ring(Rat(3, 5) + Rat(j, 250), Rat(3, 5) + Rat(j, 250) + Rat(1, 500),
                                 Rat(2) + Rat(j - 4, 1000)));
    return regs;
}

}  // namespace

TEST_CASE("patching replaces a crowded crossing with a grid box") {
    GridSpec g = quarter_grid();
    Window w{Rat(0), Rat(2), Rat(0), Rat(2)};
    EdgeSet es = crossing_bundles();
    Cut cut = make_cut(Axis::Vertical, Rat(1), w);

    auto [out, rep] = patch_span(es, cut, w, g, 1);
    CHECK(rep.added_length == doctest::Approx(1.5));  // box perimeter
    CHECK(rep.removed_length == doctest::Approx(8.246211));
    CHECK(rep.moved_points.size() == 24);
    CHECK(rep.parity_fixes.empty());
    CHECK(out.total_length() < es.total_length());

    // box sides, on the grid
    CHECK(has_edge(out, {Rat(3, 4), Rat(1)}, {Rat(3, 4), Rat(5, 4)}, Provenance::MSpan));
    CHECK(has_edge(out, {Rat(5, 4), Rat(1)}, {Rat(5, 4), Rat(5, 4)}, Provenance::MSpan));
    CHECK(has_edge(out, {Rat(3, 4), Rat(1)}, {Rat(5, 4), Rat(1)}, Provenance::MSpan));
    CHECK(has_edge(out, {Rat(3, 4), Rat(5, 4)}, {Rat(5, 4), Rat(5, 4)}, Provenance::MSpan));
    // reconnected stubs land on grid points of the box boundary
    CHECK(has_edge(out, {Rat(1, 2), Rat(1)}, {Rat(3, 4), Rat(1)}, Provenance::Original));
    CHECK(has_edge(out, {Rat(5, 4), Rat(5, 4)}, {Rat(3, 2), Rat(5, 4)}, Provenance::Original));
    for (auto& [from, to] : rep.moved_points) CHECK(g.on_grid(to));
    // parity across the repair is preserved
    CHECK(sorted_odd(out) == sorted_odd(es));
}

TEST_CASE("patching at a half-grid cut uses the narrow box") {
    GridSpec g = quarter_grid();
    Window w{Rat(0), Rat(2), Rat(0), Rat(2)};
    EdgeSet es;
    for (int i = 0; i < 10; ++i) es.add({{Rat(3, 4), Rat(1)}, {Rat(3, 2), Rat(9, 8)}});
    for (int i = 0; i < 9; ++i) es.add({{Rat(3, 4), Rat(1)}, {Rat(3, 2), Rat(5, 4)}});
    Cut cut = make_cut(Axis::Vertical, Rat(9, 8), w);

    auto [out, rep] = patch_span(es, cut, w, g, 1);
    // delta-wide box [1, 5/4] x [1, 5/4] plus one parity duplicate
    CHECK(rep.added_length == doctest::Approx(1.353553));
    CHECK(rep.removed_length == doctest::Approx(4.906193));
    CHECK(rep.parity_fixes.size() == 1);
    CHECK(has_edge(out, {Rat(1), Rat(1)}, {Rat(1), Rat(5, 4)}, Provenance::MSpan));
    CHECK(has_edge(out, {Rat(5, 4), Rat(1)}, {Rat(5, 4), Rat(5, 4)}, Provenance::MSpan));
    CHECK(sorted_odd(out) == sorted_odd(es));
}

TEST_CASE("patching is gated on crossing count and span length") {
    GridSpec g = quarter_grid();
    Window w{Rat(0), Rat(2), Rat(0), Rat(2)};
    EdgeSet es;
    es.add({{Rat(1, 2), Rat(1)}, {Rat(3, 2), Rat(5, 4)}});
    es.add({{Rat(1, 4), Rat(1)}, {Rat(9, 4), Rat(3, 2)}});
    Cut cut = make_cut(Axis::Vertical, Rat(1), w);

    auto [out, rep] = patch_span(es, cut, w, g, 1);
    CHECK(rep.trivial());
    CHECK(out.edges.size() == es.edges.size());

    // off-lattice cut coordinates are rejected
    CHECK_THROWS_AS(patch_span(es, make_cut(Axis::Vertical, Rat(1, 16), w), w, g, 1),
                    std::invalid_argument);

    // a box that would stick out of the window is an error
    Window tight{Rat(7, 8), Rat(2), Rat(0), Rat(2)};
    EdgeSet crowded = crossing_bundles();
    CHECK_THROWS_AS(
        patch_span(crowded, make_cut(Axis::Vertical, Rat(1), tight), tight, g, 1),
        std::runtime_error);
}

TEST_CASE("half-grid cuts become good through an H structure") {
    GridSpec g = quarter_grid();
    Window w{Rat(0), Rat(8), Rat(0), Rat(8)};
    EdgeSet es = comb();
    Cut cut = make_cut(Axis::Vertical, Rat(9, 8), w);
    REQUIRE(!cut_is_m_good(cut, es.segments(), 10));

    auto [out, rep] = make_m_good(es, cut, w, g, 1);
    CHECK(cut_is_m_good(cut, out.segments(), 10));
    // two verticals at the neighbouring grid lines plus the bar
    CHECK(has_edge(out, {Rat(1), Rat(1, 4)}, {Rat(1), Rat(5)}, Provenance::MSpan));
    CHECK(has_edge(out, {Rat(5, 4), Rat(1, 4)}, {Rat(5, 4), Rat(5)}, Provenance::MSpan));
    CHECK(has_edge(out, {Rat(1), Rat(5, 2)}, {Rat(5, 4), Rat(5, 2)}, Provenance::MSpan));
    CHECK(rep.added_length == doctest::Approx(14.0));
    CHECK(rep.removed_length == doctest::Approx(5.0));
    CHECK(rep.parity_fixes.size() == 17);
    CHECK(sorted_odd(out) == sorted_odd(es));
}

TEST_CASE("grid cuts become good by inserting the extended span") {
    GridSpec g = quarter_grid();
    Window w{Rat(0), Rat(8), Rat(0), Rat(8)};
    EdgeSet es = comb();
    Cut cut = make_cut(Axis::Vertical, Rat(1), w);

    auto [out, rep] = make_m_good(es, cut, w, g, 1);
    CHECK(cut_is_m_good(cut, out.segments(), 10));
    CHECK(has_edge(out, {Rat(1), Rat(1, 4)}, {Rat(1), Rat(5)}, Provenance::MSpan));
    CHECK(rep.added_length == doctest::Approx(9.5));  // span plus its parity twin
    CHECK(rep.parity_fixes.size() == 1);
    CHECK(sorted_odd(out) == sorted_odd(es));

    // an already wide-good cut is untouched
    EdgeSet single;
    single.add({{Rat(3, 4), Rat(1)}, {Rat(3, 2), Rat(1)}});
    auto [out2, rep2] = make_m_good(single, make_cut(Axis::Vertical, Rat(9, 8), w), w, g, 1);
    CHECK(rep2.trivial());
    CHECK(out2.edges.size() == 1);
}

TEST_CASE("region repair visits every region met by a half-grid cut") {
    GridSpec g = quarter_grid();
    Window w{Rat(0), Rat(8), Rat(0), Rat(8)};
    std::vector<Polygon> regs;
    for (int j = 0; j < 30; ++j) {
        Rat y0 = Rat(1, 4) + Rat(j, 4);
        regs.push_back(Polygon{{{Rat(1), y0},
                                {Rat(5, 4), y0},
                                {Rat(5, 4), y0 + Rat(3, 16)},
                                {Rat(1), y0 + Rat(3, 16)}}});
    }
    EdgeSet es = square_tour(Rat(2), Rat(3));
    Cut cut = make_cut(Axis::Vertical, Rat(9, 8), w);
    REQUIRE(region_span(cut, regs, 25).has_value());

    auto [out, rep] = make_region_good(es, regs, cut, w, g, 1, 1);
    // visiting segment on the left grid neighbour, one connector to the tour
    CHECK(has_edge(out, {Rat(1), Rat(1, 4)}, {Rat(1), Rat(15, 2)}, Provenance::RegionSpan));
    CHECK(has_edge(out, {Rat(1), Rat(2)}, {Rat(2), Rat(2)}, Provenance::Connector));
    CHECK(rep.added_length == doctest::Approx(15.59017));
    CHECK(rep.parity_fixes.size() == 2);
    CHECK(cut_is_region_good(cut, out.segments(), regs, 25,
                             RegionGoodVariant::BothSidesObligation));
    CHECK(edgeset_eulerian(out));

    // empty wide region span: identity
    auto [out2, rep2] =
        make_region_good(es, regs, make_cut(Axis::Vertical, Rat(5), w), w, g, 1, 1);
    CHECK(rep2.trivial());
}

TEST_CASE("grid transform is the identity on already sparse scenes") {
    GridSpec g = quarter_grid();
    std::vector<Polygon> regs = {Polygon{{{Rat(9, 4), Rat(9, 4)},
                                          {Rat(11, 4), Rat(9, 4)},
                                          {Rat(11, 4), Rat(11, 4)},
                                          {Rat(9, 4), Rat(11, 4)}}}};
    Window w{Rat(0), Rat(4), Rat(0), Rat(4)};
    auto r = transform_grid_guillotine(square_tour(Rat(2), Rat(3)), regs, g, 8, 32, w);
    CHECK(r.cuts_made == 7);
    CHECK(r.report.trivial());
    CHECK(r.ledger.analytic_tail == 0);
    CHECK(r.edges.total_length() == doctest::Approx(4.0));

    CheckOptions opt;
    opt.m = 17;
    opt.M = 56;
    opt.variant = RegionGoodVariant::BothSidesObligation;
    auto chk = check_guillotine(r.edges, regs, w, g, opt);
    CHECK(std::holds_alternative<GuillotineCertificate>(chk));
}

TEST_CASE("grid transform leaves a doubled chain of disk visits alone") {
    GridSpec g = quarter_grid();
    EdgeSet es;
    for (int i = 0; i < 5; ++i)
        for (int rep = 0; rep < 2; ++rep)
            es.add({{Rat(6 * i), Rat(0)}, {Rat(6 * (i + 1)), Rat(0)}});
    std::vector<Polygon> regs;
    for (int i = 0; i <= 5; ++i)
        regs.push_back(Polygon{{{Rat(6 * i) - Rat(1, 2), Rat(-1, 2)},
                                {Rat(6 * i) + Rat(1, 2), Rat(-1, 2)},
                                {Rat(6 * i) + Rat(1, 2), Rat(1, 2)},
                                {Rat(6 * i) - Rat(1, 2), Rat(1, 2)}}});
    Window w{Rat(-2), Rat(32), Rat(-2), Rat(2)};
    auto r = transform_grid_guillotine(es, regs, g, 3, 1, w);
    CHECK(r.cuts_made == 13);
    CHECK(r.report.trivial());
    CHECK(r.edges.total_length() == doctest::Approx(60.0));

    CheckOptions opt;
    opt.m = 12;
    opt.M = 25;
    opt.variant = RegionGoodVariant::BothSidesObligation;
    CHECK(std::holds_alternative<GuillotineCertificate>(check_guillotine(r.edges, regs, w, g, opt)));
}

TEST_CASE("grid transform repairs a cut forced through nested rings") {
    GridSpec g = unit_demo_grid();
    auto regs = staggered_rings();
    EdgeSet es = square_tour(Rat(4, 5), Rat(16, 5));
    Window w{Rat(0), Rat(4), Rat(0), Rat(4)};

    auto r = transform_grid_guillotine(es, regs, g, 3, 1, w);
    CHECK(r.cuts_made == 7);
    CHECK(r.report.added_length == doctest::Approx(4.033105));
    CHECK(r.ledger.analytic_tail == doctest::Approx(r.report.added_length));
    CHECK(r.report.moved_points.size() == 1);
    CHECK(r.report.parity_fixes.size() == 1);
    // visiting segment doubled for parity; the tour is bent through the grid
    // point (2, 1) to pick it up, so no separate connector is needed
    CHECK(has_edge(r.edges, {Rat(2), Rat(1)}, {Rat(2), Rat(3)}, Provenance::RegionSpan));
    CHECK(has_edge(r.edges, {Rat(2), Rat(1)}, {Rat(2), Rat(3)}, Provenance::ParityDuplicate));
    CHECK(has_edge(r.edges, {Rat(4, 5), Rat(4, 5)}, {Rat(2), Rat(1)}, Provenance::Original));
    CHECK(edgeset_eulerian(r.edges));
    CHECK(edgeset_connected(r.edges));

    CheckOptions opt;
    opt.m = 12;
    opt.M = 25;
    opt.variant = RegionGoodVariant::BothSidesObligation;
    CHECK(std::holds_alternative<GuillotineCertificate>(check_guillotine(r.edges, regs, w, g, opt)));
}

TEST_CASE("recursion parameters grow with the precision request") {
    auto p = grid_parameters(8, Rat(1, 3));
    CHECK(p.m == 8);
    CHECK(p.M == 32);
    auto q = grid_parameters(1000, Rat(1, 10));
    CHECK(q.m == 10);
    CHECK(q.M == 133);
}
