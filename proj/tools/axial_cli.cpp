// axial: axes, verdicts and windowed intervals of euclidean Coxeter elements.
//
// Exit codes: 0 success (for `verdict`, every row as expected), 1 a verdict
// mismatch or failed check, 2 usage error.

#include "axial/axial.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>

using namespace axial;

namespace {

struct Options {
    std::string type;
    std::string cls = "all";
    int window = 3;
    std::string format = "text";
    std::size_t budget = 1000000;
    int workers = 1;
    std::string export_path;
    bool finite = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_out(const Options& o, const std::string& text) {
    if (o.export_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.export_path);
    if (!f) throw std::runtime_error("cannot write " + o.export_path);
    f << text;
    std::cout << "wrote " << o.export_path << "\n";
}

DynkinType parse_type(const std::string& s) {
    try {
        return DynkinType::parse(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<std::pair<DynkinType, CoxeterClass>> select_rows(const Options& o) {
    if (o.type.empty() || o.type == "all") {
        if (o.cls != "all") throw UsageError("--class needs a single --type");
        return standard_rows();
    }
    DynkinType t = parse_type(o.type);
    if (o.cls == "all") return rows_for(t);
    try {
        CoxeterClass c = CoxeterClass::parse(o.cls);
        validate_class(t, c);
        return {{t, c}};
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::pair<DynkinType, CoxeterClass> single_row(const Options& o) {
    if (o.type.empty()) throw UsageError("--type is required");
    auto rows = select_rows(o);
    if (o.cls == "all" && rows.size() > 1) throw UsageError("type " + o.type + " has several classes; pass --class");
    return rows.front();
}

int cmd_axis(const Options& o) {
    auto [t, c] = single_row(o);
    auto ctx = build_context(t, c);
    auto ax = axial_data(ctx, o.window);
    if (o.format == "json") {
        write_out(o, context_json(ctx, &ax).dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << t.name() << " " << c.name() << "\n";
    os << "simple system:\n";
    for (int i = 0; i < ctx.simple.size(); ++i) {
        const auto& e = ctx.simple.entries[i];
        os << "  " << std::setw(2) << i << "  " << format_root(e.root) << "  offset " << e.offset
           << (i == ctx.simple.diagram.white ? "  (white)" : "") << "\n";
    }
    os << "axis direction (min-set): " << to_string(ctx.axis_dir) << "\n";
    if (ctx.symbolic_dir) {
        os << "axis direction (simple roots): " << to_string(*ctx.symbolic_dir) << "\n";
        os << "agreement: " << (parallel(*ctx.symbolic_dir, ctx.axis_dir) ? "yes" : "NO") << "\n";
    }
    os << "axis: " << ctx.axis.str() << "\n";
    os << "axial points (shift " << ax.shift << "):\n";
    for (int i = -ax.k; i <= ax.k; ++i) os << "  x" << i << " = " << to_string(ax.point(i)) << "\n";
    write_out(o, os.str());
    if (ctx.symbolic_dir && !parallel(*ctx.symbolic_dir, ctx.axis_dir)) return 1;
    return 0;
}

std::string component_list(const HorizontalSystem& h) {
    std::string s;
    for (std::size_t i = 0; i < h.components.size(); ++i)
        s += (i ? "+" : "") + h.components[i].type + "(" + std::to_string(h.components[i].roots.size()) + ")";
    return s.empty() ? "0" : s;
}

int cmd_verdict(const Options& o) {
    auto rows = select_rows(o);
    VerdictOptions vo;
    vo.k = o.window;
    std::vector<GarsideVerdict> out(rows.size());
    if (o.workers > 1) {
        std::vector<std::future<GarsideVerdict>> fs;
        for (const auto& [t, c] : rows) fs.push_back(std::async(std::launch::async, [=] { return main_verdict(t, c, vo); }));
        for (std::size_t i = 0; i < fs.size(); ++i) out[i] = fs[i].get();
    } else {
        for (std::size_t i = 0; i < rows.size(); ++i) out[i] = main_verdict(rows[i].first, rows[i].second, vo);
    }
    bool all_ok = std::all_of(out.begin(), out.end(), [](const GarsideVerdict& v) { return v.matches(); });
    if (o.format == "json") {
        Json j = Json::array();
        for (const auto& v : out) j.push_back(verdict_json(v, euclidean_labeler(build_context(v.type, v.cls))));
        write_out(o, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << std::left << std::setw(5) << "type" << std::setw(11) << "class" << std::setw(22) << "axis" << std::setw(22)
           << "horizontal" << std::setw(10) << "reducible" << std::setw(28) << "certificate" << std::setw(20) << "verdict"
           << "expected\n";
        for (const auto& v : out) {
            std::string cert = v.bowtie ? (v.bowtie->cert.passed ? "passed" : "FAILED " + v.bowtie->cert.failed)
                                        : (v.evidence ? "none (window: " + std::to_string(v.evidence->certified) + " bowties)"
                                                      : "none");
            os << std::left << std::setw(5) << v.type.name() << std::setw(11) << v.cls.name() << std::setw(22)
               << to_string(v.axis_dir) << std::setw(22) << component_list(v.horizontal) << std::setw(10)
               << (v.reducible() ? "yes" : "no") << std::setw(28) << cert << std::setw(20) << verdict_name(v.verdict)
               << (v.matches() ? "ok" : "MISMATCH") << "\n";
        }
        os << (all_ok ? "all rows match the expectation table\n" : "some rows do not match the expectation table\n");
        write_out(o, os.str());
    }
    return all_ok ? 0 : 1;
}

void report_poset(const Options& o, IntervalPoset& p, const WordChecker& chk,
                  const std::function<std::string(const Isometry&)>& label) {
    if (o.format == "dot") {
        write_out(o, poset_dot(p));
        return;
    }
    auto bs = find_bowties(p, chk);
    if (o.format == "json") {
        Json j = poset_json(p);
        Json cs = Json::array();
        for (const auto& c : bs.certified) cs.push_back(certificate_json(c, label));
        j["certified_bowties"] = cs;
        j["unconfirmed_bowties"] = bs.unconfirmed.size();
        write_out(o, j.dump(2) + "\n");
        return;
    }
    std::ostringstream os;
    os << "nodes " << p.size() << ", edges " << p.edge_count() << ", generators " << p.gens.size() << "\n";
    os << "rank sizes:";
    for (int r : p.rank_sizes()) os << " " << r;
    os << "\nrejected by length certification: " << p.rejected.size() << "\n";
    os << "bowtie candidates " << bs.candidates << ", certified " << bs.certified.size() << ", unconfirmed "
       << bs.unconfirmed.size() << (bs.truncated ? " (search truncated)" : "") << "\n";
    for (std::size_t i = 0; i < bs.certified.size() && i < 5; ++i) {
        os << "certified bowtie " << i << ":\n";
        for (const auto& w : bs.certified[i].words) {
            os << "   ";
            for (const auto& g : w) os << " " << label(g);
            os << "\n";
        }
    }
    write_out(o, os.str());
}

int cmd_interval(const Options& o) {
    if (o.type == "rect") {
        auto f = rectangle_fixture();
        auto p = fixture_interval(f);
        report_poset(o, p, f.checker(), [&](const Isometry& g) { return f.name_of(g); });
        return 0;
    }
    auto [t, c] = single_row(o);
    auto ctx = build_context(t, c);
    BuildOptions bo;
    bo.workers = o.workers;
    auto p = build_interval_window(ctx, o.window, bo);
    report_poset(o, p, euclidean_checker(ctx), euclidean_labeler(ctx));
    return 0;
}

int cmd_hurwitz(const Options& o) {
    Word start;
    LetterTest closure;
    std::function<std::string(const Isometry&)> label;
    RectangleFixture f;
    if (o.type == "rect") {
        f = rectangle_fixture();
        start = f.word({"r34", "t13", "r41"});
        closure = [&](const Isometry& g) { return f.is_generator(g); };
        label = [&](const Isometry& g) { return f.name_of(g); };
    } else if (o.finite) {
        auto fc = finite_coxeter(parse_type(o.type));
        for (const auto& a : fc.simple) start.push_back(reflection(a, 0));
        auto phi = std::make_shared<RootSystem>(fc.phi);
        label = [phi](const Isometry& g) {
            auto r = as_group_reflection(g, *phi);
            return r ? format_root(r->root) : invariant_summary(g);
        };
    } else {
        auto [t, c] = single_row(o);
        auto ctx = std::make_shared<CoxeterContext>(build_context(t, c));
        for (int v : default_order(ctx->simple)) start.push_back(ctx->simple.reflection_at(v));
        label = euclidean_labeler(*ctx);
        label = [ctx, label](const Isometry& g) { return label(g); };
    }
    auto orbit = hurwitz_orbit(start, o.budget, closure);
    auto pres = extract_dual_presentation(orbit);
    std::ostringstream os;
    if (!o.export_path.empty()) write_out(o, presentation_text(pres, label));
    os << "orbit size " << orbit.words.size() << (orbit.complete ? " (complete)" : " (budget exceeded, partial)") << "\n";
    os << "generators " << pres.generators.size() << ", Hurwitz relations " << pres.relations.size() << "\n";
    if (o.format == "json") {
        Json gens = Json::array();
        for (const auto& g : pres.generators) gens.push_back(label(g));
        Json j{{"orbit_size", orbit.words.size()}, {"complete", orbit.complete}, {"generators", gens},
               {"relations", pres.relations.size()}};
        std::cout << j.dump(2) << "\n";
    } else {
        if (o.export_path.empty()) os << presentation_text(pres, label);
        std::cout << os.str();
    }
    return 0;
}

int cmd_roots(const Options& o) {
    auto t = parse_type(o.type);
    auto sys = build_root_system(t);
    auto hs = decompose_irreducible(sys.roots, sys.ambient_dim);
    if (o.format == "json") {
        Json rs = Json::array();
        for (const auto& r : sys.roots) rs.push_back({{"root", to_json(r)}, {"notation", format_root(r)}});
        write_out(o, Json{{"type", t.name()}, {"count", sys.roots.size()}, {"ambient_dim", sys.ambient_dim}, {"roots", rs}}.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << t.name() << ": " << sys.roots.size() << " roots in dimension " << sys.ambient_dim << ", classified "
       << components_name(hs) << "\n";
    for (const auto& r : sys.roots) os << "  " << format_root(r) << "  " << to_string(r) << "\n";
    write_out(o, os.str());
    return 0;
}

int cmd_rect_demo(const Options&) {
    auto f = rectangle_fixture();
    std::cout << "corners p1..p4:";
    for (const auto& c : f.corners) std::cout << " " << to_string(c);
    std::cout << "\nw = rotation by pi about (1/2,1/2), word length d(1,w) = " << f.length(f.w) << "\n";
    auto facs = fixture_factorizations(f, f.length(f.w));
    std::cout << "minimal factorizations: " << facs.size() << "\n";
    auto orbit = hurwitz_orbit(facs.front(), 1000, [&](const Isometry& g) { return f.is_generator(g); });
    std::cout << "Hurwitz orbit of the first one: " << orbit.words.size() << (orbit.words == facs ? " (all of them)" : "")
              << "\n";
    auto p = fixture_interval(f);
    std::cout << "interval rank sizes:";
    for (int r : p.rank_sizes()) std::cout << " " << r;
    auto bs = find_bowties(p, f.checker());
    std::cout << "\nbowties: " << bs.certified.size() << " certified\n";
    for (const auto& c : bs.certified) {
        std::cout << "  (a,b : c,d) = (" << invariant_summary(c.q.a) << ", " << invariant_summary(c.q.b) << " : "
                  << f.name_of(c.q.c) << ", " << f.name_of(c.q.d) << ")\n";
        for (const auto& w : c.words) {
            std::cout << "   ";
            for (const auto& g : w) std::cout << " " << f.name_of(g);
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coxeter axes, horizontal roots and bowties in dual euclidean Artin intervals"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    if (const char* env = std::getenv("AXIAL_FORMAT")) o.format = env;
    app.add_option("--format", o.format, "text, json or dot (default from AXIAL_FORMAT)")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--workers", o.workers, "parallel workers")->check(CLI::PositiveNumber);

    auto common = [&](CLI::App* s, bool need_type) {
        auto* t = s->add_option("--type", o.type, "type such as B3, E8, A5; 'all' for every standard row");
        if (need_type) t->required();
        s->add_option("--class", o.cls, "bipartite, (p,q), or all");
        s->add_option("--window,-k", o.window, "axial window k")->check(CLI::Range(1, 1000));
        s->add_option("--export", o.export_path, "write output to this file");
    };
    auto* axis = app.add_subcommand("axis", "simple system, axis direction and axial points");
    common(axis, true);
    auto* verdict = app.add_subcommand("verdict", "lattice verdict per type and class");
    common(verdict, false);
    auto* interval = app.add_subcommand("interval", "windowed interval poset and its bowties (--type rect for the fixture)");
    common(interval, true);
    auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz orbit and dual presentation");
    common(hurwitz, true);
    hurwitz->add_option("--budget", o.budget, "orbit size budget")->check(CLI::PositiveNumber);
    hurwitz->add_flag("--finite", o.finite, "use the finite Coxeter group of the type");
    auto* roots = app.add_subcommand("roots", "dump a root system");
    roots->add_option("--type", o.type)->required();
    roots->add_option("--class", o.cls, "accepted for symmetry with the other subcommands; ignored");
    roots->add_option("--export", o.export_path);
    auto* rect = app.add_subcommand("rect-demo", "walk through the square fixture");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (*axis) return cmd_axis(o);
        if (*verdict) return cmd_verdict(o);
        if (*interval) return cmd_interval(o);
        if (*hurwitz) return cmd_hurwitz(o);
        if (*roots) return cmd_roots(o);
        if (*rect) return cmd_rect_demo(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const WindowInsufficient& e) {
        std::cerr << "window insufficient: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
