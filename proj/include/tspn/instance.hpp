#pragma once

#include "tspn/geom.hpp"

#include <optional>

namespace tspn {

struct Instance {
    enum class Kind { UnitDisks, DiskLikePolygons };
    Kind kind = Kind::UnitDisks;
    Rat epsilon{1, 3};
    Rat alpha{4};                     // unit disks are 4-fat in the area sense
    std::vector<Point> disk_centers;  // radius 1 each, for UnitDisks
    std::vector<Polygon> polygons;    // for DiskLikePolygons

    int k() const {
        return kind == Kind::UnitDisks ? (int)disk_centers.size() : (int)polygons.size();
    }
};

/// Throws std::invalid_argument naming the offending pair if two regions touch
/// or overlap.
void certify_disjoint(const Instance& inst);

boost::multiprecision::cpp_int rat_floor(const Rat& r);
boost::multiprecision::cpp_int rat_ceil(const Rat& r);

struct GridSpec {
    Point origin;
    Rat spacing;      // delta
    long extent = 0;  // grid cells per axis over the bounding square
    bool demo = false;

    Rat snap_coord(const Rat& x, const Rat& base) const;
    Point snap(const Point& p) const;
    bool coord_on_grid(const Rat& x, const Rat& base) const;
    bool on_grid(const Point& p) const;
    bool coord_on_half_grid(const Rat& x, const Rat& base) const;
    /// Half-grid values in the open interval (lo, hi).
    std::vector<Rat> half_grid_coords(const Rat& lo, const Rat& hi, const Rat& base) const;
    std::vector<Rat> grid_coords(const Rat& lo, const Rat& hi, const Rat& base) const;
};

struct DerivedGrid {
    GridSpec grid;
    Window bounding_square;
    long square_side = 0;
    bool localizable = true;  // false: regions did not fit, heuristic suffices
};

/// spacing (2*ceil(k/eps))^-2, square side ceil(3k/eps); demo_spacing overrides
/// the spacing and flags the grid as demo.
DerivedGrid derive_grid(const Instance& inst, std::optional<Rat> demo_spacing = {},
                        bool allow_small_k = false);

struct RoundedInstance {
    Instance base;  // centers snapped
    GridSpec grid;
    std::vector<Polygon> gamma_hulls;  // conv of grid points inside each region
    Window bounding_square;
};

RoundedInstance grid_round_instance(const Instance& inst, const DerivedGrid& dg);

Instance generate_random(int k, unsigned long seed, long box);
Instance generate_counterexample(const std::string& name);

}  // namespace tspn
