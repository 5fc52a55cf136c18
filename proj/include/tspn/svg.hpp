#pragma once

#include "tspn/instance.hpp"

#include <optional>
#include <string>

namespace tspn {

struct Scene {
    Window window{Rat(0), Rat(10), Rat(0), Rat(10)};
    std::optional<Instance> instance;
    std::optional<GridSpec> grid;  // drawn only when coarse enough to see
    std::vector<Segment> edges;
    std::vector<Segment> spans;
    std::vector<Segment> dark;
    std::vector<Cut> cuts;
};

/// Window framed around everything in the scene with a small margin.
Window scene_window(const Scene& scene);

std::string render_svg(const Scene& scene);
void render_svg(const Scene& scene, const std::string& path);

}  // namespace tspn
