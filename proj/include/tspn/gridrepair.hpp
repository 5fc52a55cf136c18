#pragma once

#include "tspn/guillotine.hpp"

namespace tspn {

struct RepairReport {
    double added_length = 0;
    double removed_length = 0;  // deleted inner parts only
    std::vector<Segment> parity_fixes;
    std::vector<std::pair<Point, Point>> moved_points;  // (old, new) grid snaps

    bool trivial() const {
        return added_length == 0 && removed_length == 0 && parity_fixes.empty() &&
               moved_points.empty();
    }
};

/// Patching repair around a short, heavily crossed span: build the patch box
/// (width 2δ at grid cuts, δ at half-grid cuts; height δ or 2δ), delete the
/// edge parts inside it, reconnect the outer parts to grid points on the box
/// boundary without increasing their length, and fix parity. Applied only
/// when the span is non-empty, shorter than δ, and crossed by at least 15
/// (grid) / 19 (half-grid) edges; otherwise a no-op with a zero report.
/// Throws when the box would leave the window.
std::pair<EdgeSet, RepairReport> patch_span(const EdgeSet& edges, const Cut& cut,
                                            const Window& window, const GridSpec& grid, int m);

/// Makes a perfect half-grid cut (m+9)-good: inserts an H across the cut
/// (half-grid coordinates) or the grid-extended span (grid coordinates),
/// reroutes every crossing edge onto the new structure with grid snaps that
/// never increase length, and repairs parity. Identity when the cut is
/// already (m+9)-good. Requires window width ≥ δ across the cut.
std::pair<EdgeSet, RepairReport> make_m_good(const EdgeSet& edges, const Cut& cut,
                                             const Window& window, const GridSpec& grid, int m);

/// Makes a perfect (m+9)-good half-grid cut (M+C)-region-good: on grid cuts
/// the region span is extended to the grid and inserted; on half-grid cuts a
/// visiting segment at the neighbouring grid coordinate (shorter side, ties
/// left) covers the span regions, plus one connecting segment to the edge
/// set. Identity when the (M+C)-region-span is empty.
std::pair<EdgeSet, RepairReport> make_region_good(const EdgeSet& edges,
                                                  const std::vector<Polygon>& regions,
                                                  const Cut& cut, const Window& window,
                                                  const GridSpec& grid, int m, int M,
                                                  int C = 24);

struct GridTransformResult {
    EdgeSet edges;
    ChargeLedger ledger;  // additions accounted in the analytic tail
    GuillotineCertificate certificate;
    RepairReport report;
    int cuts_made = 0;
};

/// Recursively finds perfect half-grid cuts and repairs them with make_m_good
/// and make_region_good; the output is grid-rounded, connected, Eulerian, and
/// passes check_guillotine at (m+9, M+24) with the both-sides obligation.
GridTransformResult transform_grid_guillotine(const EdgeSet& tour,
                                              const std::vector<Polygon>& regions,
                                              const GridSpec& grid, int m, int M,
                                              const Window& window);

struct GridParameters {
    int m = 0, M = 0;
};

/// m = max(⌈1/ε⌉, 8), M = max(⌈(1/ε)·log2(k/ε)⌉, 32).
GridParameters grid_parameters(int k, const Rat& eps);

}  // namespace tspn
