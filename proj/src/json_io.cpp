#include "tspn/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tspn {

namespace {

Rat rat_field(const Json& j, const char* what) {
    if (!j.is_string()) {
        std::ostringstream os;
        os << what << " must be an exact rational string, got " << j.dump();
        throw std::invalid_argument(os.str());
    }
    return rat_from_string(j.get<std::string>());
}

}  // namespace

Json point_to_json(const Point& p) {
    return Json::array({rat_to_string(p.x), rat_to_string(p.y)});
}

Point point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("point must be a two element array");
    return {rat_field(j[0], "coordinate"), rat_field(j[1], "coordinate")};
}

Json segment_to_json(const Segment& s) {
    return Json::array({point_to_json(s.a), point_to_json(s.b)});
}

Json polygon_to_json(const Polygon& p) {
    Json out = Json::array();
    for (auto& v : p.vertices) out.push_back(point_to_json(v));
    return out;
}

Json instance_to_json(const Instance& inst) {
    Json j;
    j["kind"] = inst.kind == Instance::Kind::UnitDisks ? "unit_disks" : "disk_like_polygons";
    j["epsilon"] = rat_to_string(inst.epsilon);
    j["alpha"] = rat_to_string(inst.alpha);
    if (inst.kind == Instance::Kind::UnitDisks) {
        Json disks = Json::array();
        for (auto& c : inst.disk_centers) disks.push_back(Json{{"center", point_to_json(c)}});
        j["disks"] = disks;
    } else {
        Json polys = Json::array();
        for (auto& p : inst.polygons) polys.push_back(polygon_to_json(p));
        j["polygons"] = polys;
    }
    return j;
}

Instance instance_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
    Instance inst;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "unit_disks")
        inst.kind = Instance::Kind::UnitDisks;
    else if (kind == "disk_like_polygons")
        inst.kind = Instance::Kind::DiskLikePolygons;
    else
        throw std::invalid_argument("unknown instance kind '" + kind + "'");
    if (j.contains("epsilon")) inst.epsilon = rat_field(j.at("epsilon"), "epsilon");
    if (j.contains("alpha")) inst.alpha = rat_field(j.at("alpha"), "alpha");
    if (inst.epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    if (inst.kind == Instance::Kind::UnitDisks) {
        for (auto& d : j.at("disks")) inst.disk_centers.push_back(point_from_json(d.at("center")));
    } else {
        for (auto& pj : j.at("polygons")) {
            Polygon p;
            for (auto& vj : pj) p.vertices.push_back(point_from_json(vj));
            if (p.vertices.size() < 3)
                throw std::invalid_argument("polygon needs at least 3 vertices");
            inst.polygons.push_back(std::move(p));
        }
    }
    certify_disjoint(inst);
    return inst;
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << instance_to_json(inst).dump(2) << "\n";
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        size_t line = 1;
        for (size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        std::ostringstream os;
        os << path << ":" << line << ": " << e.what();
        throw std::runtime_error(os.str());
    }
    return instance_from_json(j);
}

Json cut_to_json(const Cut& cut) {
    Json j;
    j["axis"] = cut.axis == Axis::Vertical ? "vertical" : "horizontal";
    j["coord"] = rat_to_string(cut.coord);
    j["window"] = Json::array({rat_to_string(cut.window.xmin), rat_to_string(cut.window.ymin),
                               rat_to_string(cut.window.xmax), rat_to_string(cut.window.ymax)});
    return j;
}

Json span_report_to_json(const SpanReport& rep, const CutClass& cls) {
    Json j;
    j["cut"] = cut_to_json(rep.cut);
    j["sigma_m"] = rat_to_string(rep.sigma_m);
    j["Sigma_M"] = rat_to_string(rep.Sigma_M);
    j["delta_m"] = rat_to_string(rep.delta_m);
    j["Delta_M"] = rat_to_string(rep.Delta_M);
    j["Delta_halfM"] = rat_to_string(rep.Delta_halfM);
    j["span"] = rep.span_segment ? segment_to_json(*rep.span_segment) : Json();
    j["region_span"] =
        rep.region_span_segment ? segment_to_json(*rep.region_span_segment) : Json();
    Json dark = Json::array();
    for (auto& s : rep.dark_segments) dark.push_back(segment_to_json(s));
    j["dark"] = dark;
    Json rdark = Json::array();
    for (auto& s : rep.region_dark_segments) rdark.push_back(segment_to_json(s));
    j["region_dark"] = rdark;
    j["favorable_c"] = cls.favorable_c ? Json(rat_to_string(*cls.favorable_c)) : Json();
    j["weakly_favorable_c"] =
        cls.weakly_favorable_c ? Json(rat_to_string(*cls.weakly_favorable_c)) : Json();
    j["central"] = cls.central;
    j["weakly_central"] = cls.weakly_central;
    j["perfect"] = cls.perfect;
    return j;
}

Json window_to_json(const Window& w) {
    return Json::array(
        {rat_to_string(w.xmin), rat_to_string(w.ymin), rat_to_string(w.xmax), rat_to_string(w.ymax)});
}

Window window_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("window must be [xmin, ymin, xmax, ymax]");
    Window w{rat_field(j[0], "window"), rat_field(j[2], "window"), rat_field(j[1], "window"),
             rat_field(j[3], "window")};
    if (w.xmin >= w.xmax || w.ymin >= w.ymax) throw std::invalid_argument("empty window");
    return w;
}

Json grid_to_json(const GridSpec& g) {
    Json j;
    j["origin"] = point_to_json(g.origin);
    j["spacing"] = rat_to_string(g.spacing);
    if (g.demo) j["demo"] = true;
    return j;
}

GridSpec grid_from_json(const Json& j) {
    GridSpec g;
    g.origin = point_from_json(j.at("origin"));
    g.spacing = rat_field(j.at("spacing"), "spacing");
    if (g.spacing <= 0) throw std::invalid_argument("spacing must be positive");
    g.demo = j.value("demo", false);
    return g;
}

namespace {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Original: return "original";
        case Provenance::MSpan: return "m_span";
        case Provenance::RegionSpan: return "region_span";
        case Provenance::Connector: return "connector";
        case Provenance::ParityDuplicate: return "parity_duplicate";
    }
    return "original";
}

Provenance provenance_of(const std::string& s) {
    if (s == "original") return Provenance::Original;
    if (s == "m_span") return Provenance::MSpan;
    if (s == "region_span") return Provenance::RegionSpan;
    if (s == "connector") return Provenance::Connector;
    if (s == "parity_duplicate") return Provenance::ParityDuplicate;
    throw std::invalid_argument("unknown edge provenance '" + s + "'");
}

}  // namespace

Json edge_set_to_json(const EdgeSet& es) {
    Json out = Json::array();
    for (auto& e : es.edges) {
        Json j;
        j["segment"] = segment_to_json(e.seg);
        j["provenance"] = provenance_name(e.prov);
        out.push_back(j);
    }
    return out;
}

EdgeSet edge_set_from_json(const Json& j) {
    EdgeSet es;
    for (auto& ej : j) {
        Segment s;
        Provenance prov = Provenance::Original;
        if (ej.is_object()) {
            const Json& sj = ej.at("segment");
            s = {point_from_json(sj[0]), point_from_json(sj[1])};
            if (ej.contains("provenance")) prov = provenance_of(ej.at("provenance"));
        } else {
            s = {point_from_json(ej[0]), point_from_json(ej[1])};
        }
        es.add(s, prov);
    }
    return es;
}

Json tour_to_json(const Tour& t) {
    Json j;
    Json pts = Json::array();
    for (auto& p : t.points) pts.push_back(point_to_json(p));
    j["points"] = pts;
    j["order"] = t.order;
    j["length"] = format_length(t.length);
    j["gap"] = format_length(t.gap);
    return j;
}

Json repair_report_to_json(const RepairReport& r) {
    Json j;
    j["added_length"] = format_length(r.added_length);
    j["removed_length"] = format_length(r.removed_length);
    Json fixes = Json::array();
    for (auto& s : r.parity_fixes) fixes.push_back(segment_to_json(s));
    j["parity_fixes"] = fixes;
    Json moved = Json::array();
    for (auto& [from, to] : r.moved_points)
        moved.push_back(Json::array({point_to_json(from), point_to_json(to)}));
    j["moved_points"] = moved;
    return j;
}

Json ledger_to_json(const ChargeLedger& l) {
    Json j;
    Json recs = Json::array();
    for (auto& r : l.records) {
        Json rj;
        rj["target"] = r.target == ChargeRecord::Target::EdgePortion ? "edge" : "region_boundary";
        rj["target_index"] = r.target_index;
        rj["portion"] = segment_to_json(r.portion);
        rj["amount"] = rat_to_string(r.amount);
        rj["kind"] = r.kind == ChargeRecord::Kind::Direct ? "direct" : "indirect";
        rj["cut_id"] = r.cut_id;
        recs.push_back(rj);
    }
    j["records"] = recs;
    j["analytic_tail"] = format_length(l.analytic_tail);
    j["total"] = format_length(l.total());
    return j;
}

Json guillotine_certificate_to_json(const GuillotineCertificate& c) {
    Json j;
    Json nodes = Json::array();
    for (auto& n : c.nodes) {
        Json nj;
        nj["window"] = window_to_json(n.window);
        nj["leaf"] = n.leaf;
        if (n.cut) nj["cut"] = cut_to_json(*n.cut);
        nj["sigma"] = rat_to_string(n.sigma);
        nj["Sigma"] = rat_to_string(n.Sigma);
        nj["left"] = n.left;
        nj["right"] = n.right;
        nodes.push_back(nj);
    }
    j["nodes"] = nodes;
    j["root"] = c.root;
    return j;
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["name"] = c.name;
    if (c.name == "localization") {
        j["margin"] = format_length(c.margin);
        j["restricted_length"] = format_length(c.restricted_length);
        j["global_length"] = format_length(c.global_length);
    } else {
        j["D"] = format_length(c.D);
        if (c.cut) j["cut"] = cut_to_json(*c.cut);
    }
    return j;
}

Json scene_to_json(const SceneInput& s) {
    Json j;
    j["window"] = window_to_json(s.window);
    j["grid"] = grid_to_json(s.grid);
    j["edges"] = edge_set_to_json(s.edges);
    Json regs = Json::array();
    for (auto& r : s.regions) regs.push_back(polygon_to_json(r));
    j["regions"] = regs;
    return j;
}

SceneInput scene_from_json(const Json& j) {
    SceneInput s;
    s.window = window_from_json(j.at("window"));
    s.grid = grid_from_json(j.at("grid"));
    s.edges = edge_set_from_json(j.at("edges"));
    if (j.contains("regions"))
        for (auto& rj : j.at("regions")) {
            Polygon p;
            for (auto& vj : rj) p.vertices.push_back(point_from_json(vj));
            if (p.vertices.size() < 3)
                throw std::invalid_argument("polygon needs at least 3 vertices");
            s.regions.push_back(std::move(p));
        }
    return s;
}

std::string format_length(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace tspn
