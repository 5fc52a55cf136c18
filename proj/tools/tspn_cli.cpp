#include "tspn/api.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace tspn;

namespace {

int resolve_threads(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("TSPN_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

void emit(const Json& out, const std::string& out_dir) {
    std::cout << out.dump(2) << "\n";
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream f(out_dir + "/result.json");
        f << out.dump(2) << "\n";
    }
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return Json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-rational TSPN toolkit: tours, guillotine transforms, certificates"};
    app.require_subcommand(1);

    std::string out_dir;
    int threads = 0;
    app.add_option("--out-dir", out_dir, "directory for result bundles");
    app.add_option("--threads", threads,
                   "worker threads (TSPN_THREADS fallback; results are thread-count independent)");

    std::string in_path, method = "oracle", variant = "span_in_e", claim, gen_kind, gen_name,
                out_path, demo_spacing = "1/4";
    double resolution = 0.05, eps = 1.0 / 3;
    int m = 3, M = 1, gen_k = 4;
    unsigned long gen_seed = 1;
    long gen_box = 12;
    bool grid_repairs = false;

    auto* solve = app.add_subcommand("solve", "compute a tour");
    solve->add_option("--in", in_path, "instance JSON")->required();
    solve->add_option("--method", method, "oracle | centers | dp");
    solve->add_option("--resolution", resolution, "oracle sample spacing");
    solve->add_option("--eps", eps, "heuristic epsilon");
    solve->add_option("--demo-spacing", demo_spacing, "demo grid spacing (dp)");
    solve->add_option("--m", m, "edge span order (dp)");
    solve->add_option("--M", M, "region span order (dp)");

    auto* transform = app.add_subcommand("transform", "impose the guillotine property on a tour");
    transform->add_option("--in", in_path, "instance JSON")->required();
    transform->add_flag("--grid", grid_repairs, "grid-repair pipeline");
    transform->add_option("--m", m, "edge span order");
    transform->add_option("--M", M, "region span order");
    transform->add_option("--demo-spacing", demo_spacing, "demo grid spacing");

    auto* check = app.add_subcommand("check", "check the guillotine property of a scene");
    check->add_option("--in", in_path, "scene JSON (edges, regions, window, grid)")->required();
    check->add_option("--m", m, "edge span order");
    check->add_option("--M", M, "region span order");
    check->add_option("--variant", variant, "span_in_e | both_sides");

    auto* certify = app.add_subcommand("certify", "regenerate a counterexample certificate");
    certify->add_option("--claim", claim, "localization | disconnected_region_span")->required();
    certify->add_option("--in", in_path, "instance JSON (default: the shipped counterexample)");

    auto* render = app.add_subcommand("render", "render an instance to SVG");
    render->add_option("--in", in_path, "instance JSON")->required();
    render->add_option("--out", out_path, "SVG path (default scene.svg in the out dir)");

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("kind", gen_kind, "random | counterexample")->required();
    gen->add_option("--k", gen_k, "number of disks (random)");
    gen->add_option("--seed", gen_seed, "RNG seed (random)");
    gen->add_option("--box", gen_box, "placement box side (random)");
    gen->add_option("--name", gen_name, "counterexample name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;  // usage errors are exit 1; --help is 0
    }

    try {
        Json config;
        config["threads"] = resolve_threads(threads);
        if (!out_dir.empty()) config["out_dir"] = out_dir;
        Json out;

        if (*solve) {
            api::SolveOptions opt;
            opt.method = method;
            opt.resolution = resolution;
            opt.eps = eps;
            opt.demo_spacing = rat_from_string(demo_spacing);
            opt.m = m;
            opt.M = M;
            config["command"] = "solve";
            config["in"] = in_path;
            config["method"] = method;
            config["resolution"] = resolution;
            config["eps"] = eps;
            config["demo_spacing"] = demo_spacing;
            config["m"] = m;
            config["M"] = M;
            out = api::solve(load_instance(in_path), opt);
        } else if (*transform) {
            config["command"] = "transform";
            config["in"] = in_path;
            config["grid"] = grid_repairs;
            config["m"] = m;
            config["M"] = M;
            config["demo_spacing"] = demo_spacing;
            out = api::transform(load_instance(in_path), m, M, grid_repairs,
                                 rat_from_string(demo_spacing));
        } else if (*check) {
            config["command"] = "check";
            config["in"] = in_path;
            config["m"] = m;
            config["M"] = M;
            config["variant"] = variant;
            out = api::check_scene(scene_from_json(load_json(in_path)), m, M, variant);
        } else if (*certify) {
            config["command"] = "certify";
            config["claim"] = claim;
            if (!in_path.empty()) config["in"] = in_path;
            Instance inst =
                in_path.empty() ? generate_counterexample(claim) : load_instance(in_path);
            out = api::certify_claim(claim, inst);
        } else if (*render) {
            config["command"] = "render";
            config["in"] = in_path;
            if (out_path.empty())
                out_path = (out_dir.empty() ? std::string(".") : out_dir) + "/scene.svg";
            config["out"] = out_path;
            if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
            std::ofstream svg(out_path);
            if (!svg) throw std::runtime_error("cannot write " + out_path);
            svg << api::render_instance(load_instance(in_path));
            out["svg"] = out_path;
        } else if (*gen) {
            config["command"] = "gen";
            config["kind"] = gen_kind;
            if (gen_kind == "random") {
                config["k"] = gen_k;
                config["seed"] = gen_seed;
                config["box"] = gen_box;
            } else {
                config["name"] = gen_name;
            }
            out = api::gen(gen_kind, gen_k, gen_seed, gen_box, gen_name);
        }

        out["config"] = config;
        emit(out, out_dir);
        if (out.contains("ok") && !out.at("ok").get<bool>()) return 2;
        return 0;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
}
