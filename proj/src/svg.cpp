#include "tspn/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tspn {

namespace {

std::string num(const Rat& r) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", to_double(r));
    return buf;
}

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void line(std::ostream& os, const Point& a, const Point& b, const char* style) {
    os << "  <line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
       << "\" y2=\"" << num(b.y) << "\" " << style << "/>\n";
}

void extend(Window& w, bool& first, const Point& p, const Rat& r) {
    if (first) {
        w = Window{p.x - r, p.x + r, p.y - r, p.y + r};
        first = false;
        return;
    }
    w.xmin = std::min(w.xmin, p.x - r);
    w.xmax = std::max(w.xmax, p.x + r);
    w.ymin = std::min(w.ymin, p.y - r);
    w.ymax = std::max(w.ymax, p.y + r);
}

}  // namespace

Window scene_window(const Scene& scene) {
    Window w = scene.window;
    bool first = true;
    if (scene.instance) {
        const Instance& inst = *scene.instance;
        if (inst.kind == Instance::Kind::UnitDisks)
            for (auto& c : inst.disk_centers) extend(w, first, c, Rat(1));
        else
            for (auto& p : inst.polygons)
                for (auto& v : p.vertices) extend(w, first, v, Rat(0));
    }
    for (auto* segs : {&scene.edges, &scene.spans, &scene.dark})
        for (auto& s : *segs) {
            extend(w, first, s.a, Rat(0));
            extend(w, first, s.b, Rat(0));
        }
    if (first) return scene.window;
    Rat margin = std::max(Rat(1), (w.xmax - w.xmin) / 20);
    return Window{w.xmin - margin, w.xmax + margin, w.ymin - margin, w.ymax + margin};
}

std::string render_svg(const Scene& scene) {
    Window w = scene_window(scene);
    double x0 = to_double(w.xmin), y0 = to_double(w.ymin);
    double ww = to_double(w.xmax - w.xmin), wh = to_double(w.ymax - w.ymin);
    double px = 720.0 / std::max(ww, wh);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(ww * px) << "\" height=\""
       << num(wh * px) << "\" viewBox=\"" << num(x0) << " " << num(-y0 - wh) << " " << num(ww)
       << " " << num(wh) << "\">\n";
    // y grows upward in the model, downward in svg
    os << "<g transform=\"scale(1,-1)\">\n";
    os << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(ww)
       << "\" height=\"" << num(wh)
       << "\" fill=\"white\" stroke=\"#444\" stroke-width=\"0.5%\"/>\n";

    os << "<g id=\"regions\">\n";
    if (scene.instance) {
        const Instance& inst = *scene.instance;
        const char* style = "fill=\"#cfe2ff\" stroke=\"#1d4ed8\" stroke-width=\"0.3%\"";
        if (inst.kind == Instance::Kind::UnitDisks) {
            for (auto& c : inst.disk_centers)
                os << "  <circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y)
                   << "\" r=\"1\" " << style << "/>\n";
        } else {
            for (auto& p : inst.polygons) {
                os << "  <polygon points=\"";
                for (size_t i = 0; i < p.vertices.size(); ++i)
                    os << (i ? " " : "") << num(p.vertices[i].x) << "," << num(p.vertices[i].y);
                os << "\" " << style << "/>\n";
            }
        }
    }
    os << "</g>\n";

    os << "<g id=\"grid\">\n";
    if (scene.grid) {
        const GridSpec& g = *scene.grid;
        // cap the line count so fine grids degrade to nothing instead of megabytes
        Rat nx = (w.xmax - w.xmin) / g.spacing, ny = (w.ymax - w.ymin) / g.spacing;
        if (nx <= 200 && ny <= 200) {
            const char* style = "stroke=\"#ddd\" stroke-width=\"0.1%\"";
            for (auto& x : g.grid_coords(w.xmin, w.xmax, g.origin.x))
                line(os, {x, w.ymin}, {x, w.ymax}, style);
            for (auto& y : g.grid_coords(w.ymin, w.ymax, g.origin.y))
                line(os, {w.xmin, y}, {w.xmax, y}, style);
        }
    }
    os << "</g>\n";

    os << "<g id=\"edges\">\n";
    for (auto& s : scene.edges)
        line(os, s.a, s.b, "stroke=\"#111\" stroke-width=\"0.35%\"");
    os << "</g>\n";

    os << "<g id=\"spans\">\n";
    for (auto& c : scene.cuts) {
        Segment s = c.axis == Axis::Vertical
                        ? Segment{{c.coord, c.window.ymin}, {c.coord, c.window.ymax}}
                        : Segment{{c.window.xmin, c.coord}, {c.window.xmax, c.coord}};
        line(os, s.a, s.b, "stroke=\"#f59e0b\" stroke-width=\"0.2%\" stroke-dasharray=\"2,1\"");
    }
    for (auto& s : scene.spans)
        line(os, s.a, s.b, "stroke=\"#16a34a\" stroke-width=\"0.5%\"");
    os << "</g>\n";

    os << "<g id=\"dark\">\n";
    for (auto& s : scene.dark)
        line(os, s.a, s.b, "stroke=\"#dc2626\" stroke-width=\"0.6%\"");
    os << "</g>\n";

    os << "</g>\n</svg>\n";
    return os.str();
}

void render_svg(const Scene& scene, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << render_svg(scene);
}

}  // namespace tspn
