#pragma once

// JSON, DOT and plain-text exports.
//
// JSON shapes:
//   rational  "p/q" or "p"
//   vector    ["1", "-1/2", ...]
//   isometry  {"linear": [[...], ...], "translation": [...]}
//   subspace  {"point": vector, "directions": [vector, ...]}

#include "axial/rectangle.hpp"
#include "axial/verdict.hpp"

#include <json.hpp>

#include <sstream>

namespace axial {

using Json = nlohmann::json;

inline Json to_json(const QVector& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(x.str());
    return j;
}

inline QVector vector_from_json(const Json& j) {
    QVector v;
    for (const auto& x : j) v.push_back(Rational::parse(x.get<std::string>()));
    return v;
}

inline Json to_json(const Isometry& g) {
    Json rows = Json::array();
    for (int i = 0; i < g.dim(); ++i) rows.push_back(to_json(g.linear.row(i)));
    return {{"linear", rows}, {"translation", to_json(g.translation)}};
}

inline Isometry isometry_from_json(const Json& j) {
    std::vector<QVector> rows;
    for (const auto& r : j.at("linear")) rows.push_back(vector_from_json(r));
    QVector t = vector_from_json(j.at("translation"));
    return {QMatrix::from_rows(rows, static_cast<int>(t.size())), t};
}

inline Json to_json(const AffineSubspace& s) {
    Json dirs = Json::array();
    for (const auto& d : s.directions().basis()) dirs.push_back(to_json(d));
    return {{"point", to_json(s.basepoint())}, {"directions", dirs}};
}

inline AffineSubspace affine_from_json(const Json& j) {
    std::vector<QVector> dirs;
    for (const auto& d : j.at("directions")) dirs.push_back(vector_from_json(d));
    return AffineSubspace::parametric(vector_from_json(j.at("point")), dirs);
}

inline std::string invariant_summary(const Isometry& g) {
    auto bi = basic_invariants(g);
    if (bi.kind == Kind::elliptic)
        return std::string("e dim ") + std::to_string(bi.min.dim()) + " Fix " + bi.min.str();
    return std::string("h dim ") + std::to_string(bi.mov.dim()) + " Mov " + bi.mov.str();
}

// Name of a group element for presentations: root notation for reflections.
inline std::function<std::string(const Isometry&)> euclidean_labeler(const CoxeterContext& ctx) {
    const RootSystem* phi = &ctx.phi;
    return [phi](const Isometry& g) {
        if (auto r = as_group_reflection(g, *phi)) return reflection_label(*r);
        return invariant_summary(g);
    };
}

inline Json context_json(const CoxeterContext& ctx, const AxialData* axial = nullptr) {
    Json simple = Json::array();
    for (const auto& e : ctx.simple.entries)
        simple.push_back({{"root", to_json(e.root)}, {"notation", format_root(e.root)}, {"offset", e.offset.str()}});
    Json j{{"type", ctx.type.name()},
           {"class", ctx.cls.name()},
           {"simple_roots", simple},
           {"white", ctx.simple.diagram.white},
           {"axis_dir", to_json(ctx.axis_dir)},
           {"axis", to_json(ctx.axis)},
           {"w", to_json(ctx.w)}};
    if (ctx.symbolic_dir) j["symbolic_dir"] = to_json(*ctx.symbolic_dir);
    if (axial) {
        Json pts = Json::array();
        for (int i = -axial->k; i <= axial->k; ++i) {
            Json f = Json::array();
            for (const auto& v : axial->face(i)) f.push_back(to_json(v));
            pts.push_back({{"index", i}, {"point", to_json(axial->point(i))}, {"face", f}});
        }
        j["window"] = axial->k;
        j["axial_points"] = pts;
    }
    return j;
}

inline Json poset_json(const IntervalPoset& p) {
    Json nodes = Json::array();
    for (int u = 0; u < p.size(); ++u)
        nodes.push_back({{"id", u}, {"rank", p.rank[u]}, {"kind", kind_name(kind_of(p.nodes[u]))}, {"element", to_json(p.nodes[u])}});
    Json edges = Json::array();
    for (int u = 0; u < p.size(); ++u)
        for (const auto& e : p.up[u]) edges.push_back({{"from", u}, {"to", e.to}, {"label", p.gens[e.gen].label}});
    Json gens = Json::array();
    for (const auto& g : p.gens) gens.push_back(g.label);
    return {{"length", p.length},
            {"rank_sizes", p.rank_sizes()},
            {"generators", gens},
            {"nodes", nodes},
            {"edges", edges},
            {"rejected", p.rejected.size()},
            {"complete", p.complete}};
}

inline std::string poset_dot(const IntervalPoset& p) {
    std::ostringstream os;
    os << "digraph interval {\n  rankdir=BT;\n";
    for (int u = 0; u < p.size(); ++u)
        os << "  n" << u << " [label=\"" << invariant_summary(p.nodes[u]) << "\"];\n";
    for (int u = 0; u < p.size(); ++u)
        for (const auto& e : p.up[u]) os << "  n" << u << " -> n" << e.to << " [label=\"" << p.gens[e.gen].label << "\"];\n";
    os << "}\n";
    return os.str();
}

inline Json certificate_json(const BowtieCertificate& c, const std::function<std::string(const Isometry&)>& label) {
    Json checks = Json::array();
    for (const auto& ch : c.checks) checks.push_back({{"name", ch.name}, {"ok", ch.ok}, {"detail", ch.detail}});
    Json words = Json::array();
    for (const auto& w : c.words) {
        Json ws = Json::array();
        for (const auto& g : w) ws.push_back(label(g));
        words.push_back(ws);
    }
    Json U = Json::array();
    for (const auto& b : c.U.basis()) U.push_back(to_json(b));
    return {{"a", to_json(c.q.a)}, {"b", to_json(c.q.b)}, {"c", to_json(c.q.c)}, {"d", to_json(c.q.d)},
            {"U", U}, {"checks", checks}, {"words", words}, {"passed", c.passed}, {"failed", c.failed}};
}

inline Json verdict_json(const GarsideVerdict& v, const std::function<std::string(const Isometry&)>& label) {
    Json comps = Json::array();
    for (const auto& c : v.horizontal.components) comps.push_back({{"type", c.type}, {"roots", c.roots.size()}});
    Json j{{"type", v.type.name()},
           {"class", v.cls.name()},
           {"axis_dir", to_json(v.axis_dir)},
           {"horizontal_roots", v.horizontal.roots.size()},
           {"components", comps},
           {"reducible", v.reducible()},
           {"verdict", verdict_name(v.verdict)},
           {"expected", verdict_name(v.expected)},
           {"matches", v.matches()},
           {"note", v.note}};
    if (v.bowtie) {
        j["certificate"] = certificate_json(v.bowtie->cert, label);
        j["theta"] = to_json(v.bowtie->theta);
    }
    if (v.evidence)
        j["window"] = {{"k", v.evidence->k}, {"nodes", v.evidence->nodes}, {"rank_sizes", v.evidence->rank_sizes},
                       {"certified_bowties", v.evidence->certified}, {"unconfirmed_bowties", v.evidence->unconfirmed}};
    return j;
}

inline std::string presentation_text(const DualPresentation& p, const std::function<std::string(const Isometry&)>& label) {
    std::ostringstream os;
    for (const auto& r : p.relations)
        os << label(p.generators[r[0]]) << "*" << label(p.generators[r[1]]) << " = " << label(p.generators[r[2]]) << "*"
           << label(p.generators[r[0]]) << "\n";
    return os.str();
}

}  // namespace axial
