#pragma once

#include "tspn/instance.hpp"
#include "tspn/solvers.hpp"
#include "tspn/span.hpp"

#include <nlohmann/json.hpp>

namespace tspn {

using Json = nlohmann::ordered_json;

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);
Json segment_to_json(const Segment& s);
Json polygon_to_json(const Polygon& p);

Json instance_to_json(const Instance& inst);
/// Validates the schema and certifies disjointness.
Instance instance_from_json(const Json& j);

void save_instance(const Instance& inst, const std::string& path);
/// Parse errors carry the line number; overlap errors name the region pair.
Instance load_instance(const std::string& path);

Json span_report_to_json(const SpanReport& rep, const CutClass& cls);
Json cut_to_json(const Cut& cut);

Json window_to_json(const Window& w);
Window window_from_json(const Json& j);
Json grid_to_json(const GridSpec& g);
GridSpec grid_from_json(const Json& j);

Json edge_set_to_json(const EdgeSet& es);
EdgeSet edge_set_from_json(const Json& j);

Json tour_to_json(const Tour& t);
Json repair_report_to_json(const RepairReport& r);
Json ledger_to_json(const ChargeLedger& l);
Json guillotine_certificate_to_json(const GuillotineCertificate& c);
Json certificate_to_json(const Certificate& c);

/// Edge set + regions + window + grid, the input of the guillotine checker.
struct SceneInput {
    EdgeSet edges;
    std::vector<Polygon> regions;
    Window window;
    GridSpec grid;
};
Json scene_to_json(const SceneInput& s);
SceneInput scene_from_json(const Json& j);

/// 12 significant digits, shortest form, deterministic across platforms.
std::string format_length(double v);

}  // namespace tspn
