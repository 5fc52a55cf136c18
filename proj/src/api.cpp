#include "tspn/api.hpp"

#include "tspn/svg.hpp"

namespace tspn::api {

namespace {

EdgeSet rounded_tour_edges(const Tour& tour, const RoundedInstance& ri) {
    EdgeSet es;
    int n = (int)tour.points.size();
    for (int i = 0; i < n; ++i) {
        Point a = snap_into_hull(tour.points[i], ri.gamma_hulls[tour.order[i]], ri.grid);
        Point b = snap_into_hull(tour.points[(i + 1) % n], ri.gamma_hulls[tour.order[(i + 1) % n]],
                                 ri.grid);
        if (!(a == b)) es.add({a, b});
    }
    return es;
}

Tour base_tour(const Instance& inst, const SolveOptions& opt) {
    if (inst.k() <= 9) return brute_force_oracle(inst, opt.resolution);
    return centers_heuristic(inst, opt.eps);
}

}  // namespace

Json solve(const Instance& inst, const SolveOptions& opt) {
    Json j;
    if (opt.method == "oracle") {
        j["tour"] = tour_to_json(brute_force_oracle(inst, opt.resolution));
    } else if (opt.method == "centers") {
        j["tour"] = tour_to_json(centers_heuristic(inst, opt.eps));
    } else if (opt.method == "dp") {
        auto dg = derive_grid(inst, opt.demo_spacing, true);
        auto ri = grid_round_instance(inst, dg);
        auto r = dp_solve(ri, opt.m, opt.M);
        j["tour"] = tour_to_json(r.tour);
        j["graph_length"] = format_length(r.graph_length);
        j["cuts_made"] = r.cuts_made;
        j["edges"] = edge_set_to_json(r.edges);
    } else {
        throw std::invalid_argument("unknown method '" + opt.method + "'");
    }
    return j;
}

Json transform(const Instance& inst, int m, int M, bool grid_repairs, const Rat& demo_spacing) {
    SolveOptions opt;
    opt.resolution = 0.1;
    auto dg = derive_grid(inst, demo_spacing, true);
    auto ri = grid_round_instance(inst, dg);
    EdgeSet tour = rounded_tour_edges(base_tour(inst, opt), ri);
    if (tour.edges.size() == 1) {  // doubled segment for two regions
        Segment s = tour.edges[0].seg;
        tour.add(s);
    }
    Json j;
    j["input_length"] = format_length(tour.total_length());
    if (grid_repairs) {
        auto r = transform_grid_guillotine(tour, ri.gamma_hulls, ri.grid, m, M,
                                           ri.bounding_square);
        j["output_length"] = format_length(r.edges.total_length());
        j["cuts_made"] = r.cuts_made;
        j["repair_report"] = repair_report_to_json(r.report);
        j["ledger"] = ledger_to_json(r.ledger);
        j["certificate"] = guillotine_certificate_to_json(r.certificate);
        j["edges"] = edge_set_to_json(r.edges);
    } else {
        auto r = transform_to_guillotine(tour, ri.gamma_hulls, m, M, ri.bounding_square, ri.grid);
        j["output_length"] = format_length(r.edges.total_length());
        j["added_length"] = format_length(r.added_length);
        j["cuts_made"] = r.cuts_made;
        j["ledger"] = ledger_to_json(r.ledger);
        j["certificate"] = guillotine_certificate_to_json(r.certificate);
        j["edges"] = edge_set_to_json(r.edges);
    }
    return j;
}

Json check_scene(const SceneInput& scene, int m, int M, const std::string& variant) {
    CheckOptions opt;
    opt.m = m;
    opt.M = M;
    if (variant == "span_in_e")
        opt.variant = RegionGoodVariant::SpanInE;
    else if (variant == "both_sides")
        opt.variant = RegionGoodVariant::BothSidesObligation;
    else
        throw std::invalid_argument("unknown variant '" + variant + "'");
    auto res = check_guillotine(scene.edges, scene.regions, scene.window, scene.grid, opt);
    Json j;
    if (auto* cert = std::get_if<GuillotineCertificate>(&res)) {
        j["ok"] = true;
        j["certificate"] = guillotine_certificate_to_json(*cert);
    } else {
        auto& ref = std::get<RefusalWitness>(res);
        j["ok"] = false;
        j["refusal"] = Json{{"window", window_to_json(ref.window)}, {"reason", ref.reason}};
    }
    return j;
}

Json certify_claim(const std::string& claim, const Instance& inst) {
    Json j;
    try {
        Certificate c = certify(claim, inst);
        j["ok"] = true;
        j["certificate"] = certificate_to_json(c);
    } catch (const std::runtime_error& e) {
        j["ok"] = false;
        j["error"] = e.what();
    }
    return j;
}

std::string render_instance(const Instance& inst) {
    Scene scene;
    scene.instance = inst;
    scene.window = scene_window(scene);
    return render_svg(scene);
}

Json gen(const std::string& kind, int k, unsigned long seed, long box, const std::string& name) {
    if (kind == "random") return instance_to_json(generate_random(k, seed, box));
    if (kind == "counterexample") return instance_to_json(generate_counterexample(name));
    throw std::invalid_argument("unknown generator '" + kind + "'");
}

}  // namespace tspn::api
