#pragma once

#include "tspn/json_io.hpp"

namespace tspn::api {

struct SolveOptions {
    std::string method = "oracle";  // oracle | centers | dp
    double resolution = 0.05;
    double eps = 1.0 / 3;
    Rat demo_spacing{1, 4};
    int m = 3, M = 1;
};

Json solve(const Instance& inst, const SolveOptions& opt);

/// Tour construction (oracle when small, centers otherwise), grid rounding,
/// then the plain or grid-repairing guillotine transform with ledger and
/// certificate summaries.
Json transform(const Instance& inst, int m, int M, bool grid_repairs, const Rat& demo_spacing);

Json check_scene(const SceneInput& scene, int m, int M, const std::string& variant);

/// Never throws on certification failure: the result carries ok=false and the
/// reason instead.
Json certify_claim(const std::string& claim, const Instance& inst);

std::string render_instance(const Instance& inst);

Json gen(const std::string& kind, int k, unsigned long seed, long box, const std::string& name);

}  // namespace tspn::api
