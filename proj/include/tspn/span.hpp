#pragma once

#include "tspn/instance.hpp"

#include <optional>

namespace tspn {

struct SpanReport {
    Cut cut;
    Rat sigma_m{0}, Sigma_M{0};          // span lengths
    Rat delta_m{0}, Delta_M{0}, Delta_halfM{0};  // dark lengths
    std::optional<Segment> span_segment, region_span_segment;
    std::vector<Segment> dark_segments, region_dark_segments;
};

struct CutClass {
    std::optional<Rat> favorable_c;         // minimal c with spans <= c * dark
    std::optional<Rat> weakly_favorable_c;  // same with the M/2 region darkness
    bool central = false;
    bool weakly_central = false;
    bool perfect = false;
};

std::optional<Segment> m_span(const Cut& cut, const std::vector<Segment>& edges, int m);

std::optional<Segment> region_span(const Cut& cut, const std::vector<Polygon>& regions, int M);

std::vector<Segment> dark_portions(const Cut& cut, const std::vector<Segment>& edges, int m);

std::vector<Segment> region_dark_portions(const Cut& cut, const std::vector<Polygon>& regions,
                                          int M);

std::pair<SpanReport, CutClass> classify_cut(const Cut& cut, const std::vector<Segment>& edges,
                                             const std::vector<Polygon>& regions, int m, int M);

struct NoPerfectCut : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Searches half-grid candidate coordinates (enriched with structure-derived
/// coordinates and bisection refinement rounds when needed). Ties broken by
/// smallest sigma_m + Sigma_M, then vertical before horizontal, then smallest
/// coordinate. Throws NoPerfectCut when the search space has no perfect cut.
Cut find_perfect_cut(const Window& window, const std::vector<Segment>& edges,
                     const std::vector<Polygon>& regions, int m, int M, const GridSpec& grid);

Rat total_length(const std::vector<Segment>& along_cut_segments, Axis axis);

}  // namespace tspn
