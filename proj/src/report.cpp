#include "oppo/report.hpp"

#include <sstream>

namespace oppo {

namespace {

using nlohmann::json;

json arc_json(const Graph& g, Vertex x, Vertex y) {
    return json::array({g.label(x), g.label(y)});
}

json certificate_data(const Graph& g, const Certificate& c) {
    if (const auto* o = std::get_if<Orientation>(&c)) {
        json arcs = json::array();
        for (const Arc& a : o->arcs()) {
            arcs.push_back(arc_json(g, a.tail, a.head));
        }
        return {{"arcs", arcs}};
    }
    if (const auto* w = std::get_if<OddWalk>(&c)) {
        json walk = json::array();
        for (const ArcVar& v : w->walk) {
            walk.push_back(arc_json(g, v.x, v.y));
        }
        return {{"length", w->length()}, {"walk", walk}};
    }
    if (const auto* r = std::get_if<FlipRefutation>(&c)) {
        json vars = json::array();
        for (std::size_t i = 0; i < r->vars.size(); ++i) {
            vars.push_back({{"var", arc_json(g, r->vars[i].x, r->vars[i].y)},
                            {"side", r->side[i]},
                            {"component", r->component[i]}});
        }
        json branches = json::array();
        for (const auto& b : r->branches) {
            json cycle = json::array();
            for (Vertex v : b.cycle.cycle) {
                cycle.push_back(g.label(v));
            }
            branches.push_back({{"prefix", b.prefix}, {"cycle", cycle}});
        }
        return {{"kind", to_string(r->kind)},
                {"components", r->component_count},
                {"vars", vars},
                {"branches", branches}};
    }
    if (const auto* m = std::get_if<PatternMatch>(&c)) {
        return pattern_match_json(g, *m);
    }
    return nullptr;
}

}  // namespace

std::string certificate_kind(const Certificate& c) {
    switch (c.index()) {
        case 1:
            return "orientation";
        case 2:
            return "odd-walk";
        case 3:
            return "flip-refutation";
        case 4:
            return "pattern";
        default:
            return "none";
    }
}

json pattern_match_json(const Graph& g, const PatternMatch& m) {
    json roles = json::object();
    auto p = pattern_by_name(m.pattern);
    for (std::size_t i = 0; i < m.embedding.size(); ++i) {
        const std::string role = p ? p->roles[i] : std::to_string(i + 1);
        roles[role] = g.label(m.embedding[i]);
    }
    return {{"pattern", m.pattern}, {"embedding", roles}};
}

json verdict_to_json(const Graph& g, const Verdict& v) {
    json j = {{"schema", kVerdictSchema},
              {"class", to_string(v.graph_class)},
              {"decision", to_string(v.decision)},
              {"method", v.method},
              {"certificate",
               {{"kind", certificate_kind(v.certificate)}, {"data", certificate_data(g, v.certificate)}}},
              {"stats",
               {{"p4_count", v.stats.p4_count},
                {"aux_vertices", v.stats.aux_vertices},
                {"aux_components", v.stats.aux_components},
                {"flips_tried", v.stats.flips_tried}}}};
    if (v.witness) {
        j["witness"] = pattern_match_json(g, *v.witness);
    }
    return j;
}

std::string verdict_to_text(const Graph& g, const Verdict& v) {
    std::ostringstream out;
    out << "class:     " << to_string(v.graph_class) << "\n";
    out << "decision:  " << to_string(v.decision) << "\n";
    out << "method:    " << v.method << "\n";
    out << "stats:     " << v.stats.p4_count << " induced P4s, " << v.stats.aux_vertices
        << " aux vertices in " << v.stats.aux_components << " components, "
        << v.stats.flips_tried << " flip prefixes\n";
    out << "certificate: " << certificate_kind(v.certificate) << "\n";
    if (const auto* o = std::get_if<Orientation>(&v.certificate)) {
        for (const Arc& a : o->arcs()) {
            out << "  " << g.label(a.tail) << " -> " << g.label(a.head) << "\n";
        }
    } else if (const auto* w = std::get_if<OddWalk>(&v.certificate)) {
        out << "  odd closed walk of length " << w->length() << ":";
        for (const ArcVar& x : w->walk) {
            out << " " << g.label(x.x) << g.label(x.y);
        }
        out << "\n";
    } else if (const auto* r = std::get_if<FlipRefutation>(&v.certificate)) {
        out << "  " << r->component_count << " aux components, " << r->branches.size()
            << " exhausted branches\n";
        for (const auto& b : r->branches) {
            out << "  prefix ";
            for (auto f : b.prefix) {
                out << int(f);
            }
            out << " cycle";
            for (Vertex x : b.cycle.cycle) {
                out << " " << g.label(x);
            }
            out << "\n";
        }
    } else if (const auto* m = std::get_if<PatternMatch>(&v.certificate)) {
        out << "  " << pattern_match_json(g, *m).dump() << "\n";
    }
    if (v.witness) {
        out << "witness:   " << pattern_match_json(g, *v.witness).dump() << "\n";
    }
    return out.str();
}

}  // namespace oppo
