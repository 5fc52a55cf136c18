#include "tspn/api.hpp"

#include <pybind11/pybind11.h>

// Thin JSON-string bridge: every entry point takes and returns JSON text, so
// the python side stays a plain json.loads/json.dumps wrapper.

namespace py = pybind11;
using namespace tspn;

namespace {

Instance inst_of(const std::string& s) { return instance_from_json(Json::parse(s)); }

}  // namespace

PYBIND11_MODULE(_tspn, m) {
    m.doc() = "exact-rational TSPN toolkit: tours, guillotine transforms, certificates";

    m.def(
        "solve",
        [](const std::string& inst, const std::string& method, double resolution, double eps,
           const std::string& demo_spacing, int m_, int M) {
            api::SolveOptions opt;
            opt.method = method;
            opt.resolution = resolution;
            opt.eps = eps;
            opt.demo_spacing = rat_from_string(demo_spacing);
            opt.m = m_;
            opt.M = M;
            return api::solve(inst_of(inst), opt).dump();
        },
        py::arg("instance"), py::arg("method") = "oracle", py::arg("resolution") = 0.05,
        py::arg("eps") = 1.0 / 3, py::arg("demo_spacing") = "1/4", py::arg("m") = 3,
        py::arg("M") = 1);

    m.def(
        "transform",
        [](const std::string& inst, int m_, int M, bool grid_repairs,
           const std::string& demo_spacing) {
            return api::transform(inst_of(inst), m_, M, grid_repairs,
                                  rat_from_string(demo_spacing))
                .dump();
        },
        py::arg("instance"), py::arg("m") = 3, py::arg("M") = 1, py::arg("grid_repairs") = false,
        py::arg("demo_spacing") = "1/4");

    m.def(
        "check",
        [](const std::string& scene, int m_, int M, const std::string& variant) {
            return api::check_scene(scene_from_json(Json::parse(scene)), m_, M, variant).dump();
        },
        py::arg("scene"), py::arg("m") = 3, py::arg("M") = 1, py::arg("variant") = "span_in_e");

    m.def(
        "certify",
        [](const std::string& claim, const std::string& inst) {
            Instance i = inst.empty() ? generate_counterexample(claim) : inst_of(inst);
            return api::certify_claim(claim, i).dump();
        },
        py::arg("claim"), py::arg("instance") = "");

    m.def(
        "render", [](const std::string& inst) { return api::render_instance(inst_of(inst)); },
        py::arg("instance"));

    m.def(
        "gen",
        [](const std::string& kind, int k, unsigned long seed, long box, const std::string& name) {
            return api::gen(kind, k, seed, box, name).dump();
        },
        py::arg("kind"), py::arg("k") = 4, py::arg("seed") = 1, py::arg("box") = 12,
        py::arg("name") = "");
}
