#include "tspn/instance.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace tspn {

boost::multiprecision::cpp_int rat_floor(const Rat& r) {
    boost::multiprecision::cpp_int q = numerator(r) / denominator(r);
    if (q * denominator(r) > numerator(r)) --q;  // fix toward -inf
    return q;
}

boost::multiprecision::cpp_int rat_ceil(const Rat& r) {
    boost::multiprecision::cpp_int q = numerator(r) / denominator(r);
    if (q * denominator(r) < numerator(r)) ++q;
    return q;
}

namespace {

boost::multiprecision::cpp_int rat_round(const Rat& r) { return rat_floor(r + Rat(1, 2)); }

Polygon rect(Rat x1, Rat y1, Rat x2, Rat y2) {
    return Polygon{{{x1, y1}, {x2, y1}, {x2, y2}, {x1, y2}}};
}

}  // namespace

Rat GridSpec::snap_coord(const Rat& x, const Rat& base) const {
    return base + Rat(rat_round((x - base) / spacing)) * spacing;
}

Point GridSpec::snap(const Point& p) const {
    return {snap_coord(p.x, origin.x), snap_coord(p.y, origin.y)};
}

bool GridSpec::coord_on_grid(const Rat& x, const Rat& base) const {
    Rat t = (x - base) / spacing;
    return denominator(t) == 1;
}

bool GridSpec::on_grid(const Point& p) const {
    return coord_on_grid(p.x, origin.x) && coord_on_grid(p.y, origin.y);
}

bool GridSpec::coord_on_half_grid(const Rat& x, const Rat& base) const {
    Rat t = 2 * (x - base) / spacing;
    return denominator(t) == 1;
}

std::vector<Rat> GridSpec::half_grid_coords(const Rat& lo, const Rat& hi, const Rat& base) const {
    std::vector<Rat> out;
    Rat step = spacing / 2;
    boost::multiprecision::cpp_int i = rat_floor((lo - base) / step) + 1;
    for (Rat v = base + Rat(i) * step; v < hi; v += step)
        if (v > lo) out.push_back(v);
    return out;
}

std::vector<Rat> GridSpec::grid_coords(const Rat& lo, const Rat& hi, const Rat& base) const {
    std::vector<Rat> out;
    boost::multiprecision::cpp_int i = rat_floor((lo - base) / spacing) + 1;
    for (Rat v = base + Rat(i) * spacing; v < hi; v += spacing)
        if (v > lo) out.push_back(v);
    return out;
}

void certify_disjoint(const Instance& inst) {
    auto fail = [](int i, int j) {
        std::ostringstream os;
        os << "regions " << i << " and " << j << " are not disjoint";
        throw std::invalid_argument(os.str());
    };
    if (inst.kind == Instance::Kind::UnitDisks) {
        int k = (int)inst.disk_centers.size();
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (dist_sq(inst.disk_centers[i], inst.disk_centers[j]) <= 4) fail(i, j);
    } else {
        int k = (int)inst.polygons.size();
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (!polygons_disjoint(inst.polygons[i], inst.polygons[j])) fail(i, j);
    }
}

DerivedGrid derive_grid(const Instance& inst, std::optional<Rat> demo_spacing, bool allow_small_k) {
    int k = inst.k();
    if (k < 1) throw std::invalid_argument("empty instance");
    if (!allow_small_k && (k < 6 || inst.epsilon > Rat(1, 3)))
        throw std::invalid_argument("guarantee regime needs k >= 6 and epsilon <= 1/3");

    DerivedGrid dg;
    Rat keps = Rat(k) / inst.epsilon;
    boost::multiprecision::cpp_int q = rat_ceil(keps);
    dg.grid.spacing = Rat(1) / Rat(4 * q * q);
    dg.square_side = rat_ceil(3 * keps).convert_to<long>();

    // bounding box of the regions
    Rat xmin, xmax, ymin, ymax;
    bool first = true;
    auto extend = [&](const Point& p, Rat r) {
        if (first) {
            xmin = p.x - r; xmax = p.x + r; ymin = p.y - r; ymax = p.y + r;
            first = false;
        } else {
            xmin = std::min(xmin, p.x - r); xmax = std::max(xmax, p.x + r);
            ymin = std::min(ymin, p.y - r); ymax = std::max(ymax, p.y + r);
        }
    };
    if (inst.kind == Instance::Kind::UnitDisks)
        for (auto& c : inst.disk_centers) extend(c, Rat(1));
    else
        for (auto& poly : inst.polygons)
            for (auto& v : poly.vertices) extend(v, Rat(0));

    Rat x0 = Rat(rat_floor(xmin)), y0 = Rat(rat_floor(ymin));
    dg.bounding_square = Window{x0, x0 + dg.square_side, y0, y0 + dg.square_side};
    dg.localizable = xmax <= dg.bounding_square.xmax && ymax <= dg.bounding_square.ymax;

    if (demo_spacing) {
        if (*demo_spacing <= 0 || numerator(*demo_spacing) != 1)
            throw std::invalid_argument("demo spacing must be a unit fraction");
        dg.grid.spacing = *demo_spacing;
        dg.grid.demo = true;
    }
    dg.grid.origin = Point{x0, y0};
    dg.grid.extent = (Rat(dg.square_side) / dg.grid.spacing).convert_to<long>();
    return dg;
}

namespace {

Polygon hull_of_grid_points_in(const GridSpec& grid, const Window& bbox,
                               const std::function<bool(const Point&)>& inside, int label) {
    long budget = 4000000;
    Rat nx = (bbox.xmax - bbox.xmin) / grid.spacing;
    Rat ny = (bbox.ymax - bbox.ymin) / grid.spacing;
    if (nx * ny > budget)
        throw std::invalid_argument("grid too fine for region point enumeration");
    std::vector<Point> pts;
    Rat x0 = grid.snap_coord(bbox.xmin, grid.origin.x) - grid.spacing;
    Rat y0 = grid.snap_coord(bbox.ymin, grid.origin.y) - grid.spacing;
    for (Rat x = x0; x <= bbox.xmax + grid.spacing; x += grid.spacing)
        for (Rat y = y0; y <= bbox.ymax + grid.spacing; y += grid.spacing)
            if (inside(Point{x, y})) pts.push_back(Point{x, y});
    if ((int)pts.size() < 3) {
        std::ostringstream os;
        os << "region " << label << " contains fewer than 3 grid points at spacing "
           << rat_to_string(grid.spacing);
        throw std::invalid_argument(os.str());
    }
    return convex_hull(std::move(pts));
}

}  // namespace

RoundedInstance grid_round_instance(const Instance& inst, const DerivedGrid& dg) {
    if (dg.grid.spacing > 1 && inst.kind == Instance::Kind::UnitDisks)
        throw std::invalid_argument("spacing must be at most 1 for unit disks");
    RoundedInstance out;
    out.base = inst;
    out.grid = dg.grid;
    out.bounding_square = dg.bounding_square;
    if (inst.kind == Instance::Kind::UnitDisks) {
        for (size_t i = 0; i < inst.disk_centers.size(); ++i) {
            Point c = dg.grid.snap(inst.disk_centers[i]);
            out.base.disk_centers[i] = c;
            Window bbox{c.x - 1, c.x + 1, c.y - 1, c.y + 1};
            out.gamma_hulls.push_back(hull_of_grid_points_in(
                dg.grid, bbox, [&](const Point& p) { return dist_sq(p, c) <= 1; }, (int)i));
        }
    } else {
        for (size_t i = 0; i < inst.polygons.size(); ++i) {
            const Polygon& poly = inst.polygons[i];
            Rat xmin = poly.vertices[0].x, xmax = xmin, ymin = poly.vertices[0].y, ymax = ymin;
            for (auto& v : poly.vertices) {
                xmin = std::min(xmin, v.x); xmax = std::max(xmax, v.x);
                ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y);
            }
            out.gamma_hulls.push_back(hull_of_grid_points_in(
                dg.grid, Window{xmin, xmax, ymin, ymax},
                [&](const Point& p) { return point_in_polygon(p, poly) != Side::Outside; },
                (int)i));
        }
    }
    return out;
}

Instance generate_random(int k, unsigned long seed, long box) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (box < 4) throw std::invalid_argument("box too small");
    std::mt19937_64 rng(seed);
    // quarter-unit coordinates so demo-grid snapping keeps centers in place
    std::uniform_int_distribution<long> coord(4, 4 * box - 4);
    Instance inst;
    inst.kind = Instance::Kind::UnitDisks;
    const Rat min_d2 = Rat(25, 4);  // centers at least 5/2 apart
    int attempts = 0;
    while ((int)inst.disk_centers.size() < k) {
        if (++attempts > 200000)
            throw std::runtime_error("rejection sampling exhausted, use a larger box");
        Point c{Rat(coord(rng), 4), Rat(coord(rng), 4)};
        bool ok = true;
        for (auto& o : inst.disk_centers)
            if (dist_sq(c, o) < min_d2) { ok = false; break; }
        if (ok) inst.disk_centers.push_back(c);
    }
    return inst;
}

Instance generate_counterexample(const std::string& name) {
    Instance inst;
    inst.kind = Instance::Kind::DiskLikePolygons;
    if (name == "disconnected_region_span") {
        // long bar crossing the interesting vertical line, a second bar to the
        // right, and two squares flanking the line higher up
        inst.polygons.push_back(rect(-20, 2, 20, Rat(11, 5)));   // bar across
        inst.polygons.push_back(rect(6, 0, 20, Rat(1, 5)));      // right bar
        inst.polygons.push_back(rect(-4, 9, -1, 12));            // left square
        inst.polygons.push_back(rect(1, 9, 4, 12));              // right square
        inst.alpha = Rat(200);
    } else if (name == "localization") {
        // three interlocking arms: an L-shaped meeting near the origin and a
        // second, cheaper meeting far to the left
        Polygon arm1{{{-48, Rat(-1, 5)}, {0, Rat(-1, 5)}, {0, 0}, {Rat(-239, 5), 0},
                      {Rat(-239, 5), 23}, {-36, 23}, {-36, Rat(116, 5)}, {-48, Rat(116, 5)}}};
        Polygon arm2{{{2, Rat(-1, 5)}, {8, Rat(-1, 5)}, {8, 45}, {-30, 45},
                      {-30, Rat(108, 5)}, {-36, Rat(108, 5)}, {-36, Rat(107, 5)},
                      {Rat(-149, 5), Rat(107, 5)}, {Rat(-149, 5), Rat(224, 5)},
                      {Rat(39, 5), Rat(224, 5)}, {Rat(39, 5), 0}, {2, 0}}};
        Polygon arm3{{{0, 2}, {0, 20}, {-40, 20}, {-40, Rat(99, 5)},
                      {Rat(-1, 5), Rat(99, 5)}, {Rat(-1, 5), 2}}};
        inst.polygons = {arm1, arm2, arm3};
        inst.alpha = Rat(400);
    } else {
        throw std::invalid_argument("unknown counterexample '" + name + "'");
    }
    certify_disjoint(inst);
    return inst;
}

}  // namespace tspn
