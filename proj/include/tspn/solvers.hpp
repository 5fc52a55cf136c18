#pragma once

#include "tspn/gridrepair.hpp"

namespace tspn {

struct Tour {
    std::vector<Point> points;  // one touch point per region, in visit order
    std::vector<int> order;     // points[i] lies in region order[i]
    double length = 0;          // closed polyline through the points
    double gap = 0;             // rigorous optimality slack, see the producing op
};

struct OracleRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact minimum over all tour orders of the shortest closed polyline through
/// one boundary sample per region, sampled at the given spacing. The returned
/// gap bounds |sampled - optimal|: moving each optimal touch point to its
/// nearest sample perturbs its two incident tour edges by at most half the
/// sample spacing each, so the total error is below k * resolution (plus a
/// small allowance for the rational snap of circle samples). Refuses k > 9.
Tour brute_force_oracle(const Instance& inst, double resolution);

enum class CentersMode { Auto, Exact, TwoOpt };

/// Tour through one representative point per region (disk center, polygon
/// centroid): exact Held-Karp for k <= 15, nearest-neighbour + 2-opt beyond
/// (no ratio guarantee in that mode). The recorded gap is the additive
/// guarantee 2k(1+eps) of a center tour over the region tour optimum.
Tour centers_heuristic(const Instance& inst, double eps, CentersMode mode = CentersMode::Auto);

/// max(0, (k/alpha - 1) * pi * delta_min / 4).
double lower_bound(int k, double alpha, double delta_min);

/// alpha * (8 sqrt(2) / pi + 1), the cap on large external regions.
double large_external_bound(double alpha);

struct LocalizationReport {
    Window R0;                 // smallest axis-aligned square meeting every region
    Point center;              // its center c0
    double diam_R0 = 0;
    std::optional<std::pair<double, double>> L_star_bounds;  // [2 diam, 2 sqrt(2) diam]
    std::vector<Window> candidates;
};

/// Grid-search approximation of the smallest square R0 meeting all regions,
/// then the two-case candidate construction: a region inside R0 yields a
/// constant number of candidates along the boundary of R0; otherwise the
/// optimum length is bracketed by [2 diam R0, 2 sqrt(2) diam R0] and the
/// candidates are squares of side 4 sqrt(2) diam R0 centered at the smallest
/// region when it is small, else at every polygon vertex. At most n+1
/// candidates for n total vertices. Polygonal instances only.
LocalizationReport localization_candidates(const Instance& inst);

struct DpRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DpLimits {
    int max_k = 8;
    int max_candidates_per_region = 128;
    long max_half_grid_coords = 2048;
};

struct DpResult {
    EdgeSet edges;        // connected, Eulerian, grid-rounded, guillotine
    Tour tour;            // extracted by shortcutting, length <= graph_length
    double graph_length = 0;
    int cuts_made = 0;
};

/// Demo-scale dynamic program: exact minimum over visit orders and grid touch
/// points (one grid point of each Gamma-hull) of the closed tour length, then
/// the guillotine structure is imposed on the optimal tour by the grid
/// transform. The full subproblem enumeration over boundary-crossing patterns
/// and per-cut obligations is pruned to this touch-point family; exceeding
/// the limits is a refusal naming the counts, never a silent degradation.
DpResult dp_solve(const RoundedInstance& rounded, int m, int M, const DpLimits& limits = {});

/// Nearest grid point inside the hull (exact comparison, ties to the smallest
/// point); the feasible way to grid-round a touch point.
Point snap_into_hull(const Point& p, const Polygon& hull, const GridSpec& grid);

struct Certificate {
    std::string name;
    double margin = 0;             // localization: restricted/global - 1
    double restricted_length = 0;  // best tour inside B(c0, 2 diam R0), lower bound
    double global_length = 0;      // unrestricted tour, upper bound
    double D = 0;                  // disconnected_region_span: span-to-tour distance
    std::optional<Cut> cut;        // the favorable cut exhibiting the span
};

/// name == "localization": certifies that every tour inside B(c0, 2 diam R0)
/// is at least (1+margin) times the global optimum, margin >= 0.05, via the
/// brute-force oracle with sample filtering. name == "disconnected_region_span":
/// exhibits a favorable cut whose 1-region-span keeps distance >= 2 from every
/// point of the oracle tour. Throws on certification failure.
Certificate certify(const std::string& name, const Instance& inst);

}  // namespace tspn
