#pragma once

// Simple systems of the extended diagrams, Coxeter elements, the Coxeter
// axis, and axial vertices.
//
// The fundamental chamber is {x : <x, alpha_s> <= i_s} where i_s is 1 at the
// white vertex and 0 elsewhere, so the origin is the common fixed point of
// the linear simple reflections.

#include "axial/roots.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace axial {

// ---- classes --------------------------------------------------------------

struct CoxeterClass {
    bool bigon = false;
    int p = 0;
    int q = 0;

    static CoxeterClass bipartite() { return {}; }
    static CoxeterClass make_bigon(int p, int q) { return {true, p, q}; }

    // "bipartite", "p,q" or "(p,q)".
    static CoxeterClass parse(const std::string& s) {
        if (s == "bipartite" || s == "bip") return bipartite();
        std::string t;
        for (char c : s)
            if (c != '(' && c != ')' && c != ' ') t += c;
        auto comma = t.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad class '" + s + "'");
        try {
            return make_bigon(std::stoi(t.substr(0, comma)), std::stoi(t.substr(comma + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad class '" + s + "'");
        }
    }

    std::string name() const {
        if (!bigon) return "bipartite";
        return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }

    friend bool operator==(const CoxeterClass&, const CoxeterClass&) = default;
};

// Bigon classes of A_n: p + q = n + 1, p >= q >= 1.
inline std::vector<CoxeterClass> bigon_classes(int n) {
    std::vector<CoxeterClass> out;
    for (int q = 1; 2 * q <= n + 1; ++q) out.push_back(CoxeterClass::make_bigon(n + 1 - q, q));
    return out;
}

inline void validate_class(DynkinType t, CoxeterClass c) {
    t.validate();
    if (t.family == 'A') {
        if (!c.bigon) throw std::invalid_argument("type A needs a bigon class (p,q)");
        if (c.q < 1 || c.p < c.q || c.p + c.q != t.rank + 1)
            throw std::invalid_argument("bigon class " + c.name() + " invalid for " + t.name());
    } else if (c.bigon) {
        throw std::invalid_argument("bigon classes exist only for type A");
    }
}

// ---- diagrams -------------------------------------------------------------

struct DiagramEdge {
    int u;
    int v;
    int m;  // 3, 4, 6, or 0 for an infinite bond
};

struct ExtendedDiagram {
    int vertices = 0;
    std::vector<DiagramEdge> edges;
    int white = 0;

    std::vector<int> neighbours(int v) const {
        std::vector<int> out;
        for (const auto& e : edges) {
            if (e.u == v) out.push_back(e.v);
            if (e.v == v) out.push_back(e.u);
        }
        return out;
    }

    bool connected() const {
        std::vector<bool> seen(static_cast<std::size_t>(vertices), false);
        std::vector<int> st{0};
        seen[0] = true;
        while (!st.empty()) {
            int a = st.back();
            st.pop_back();
            for (int b : neighbours(a))
                if (!seen[b]) {
                    seen[b] = true;
                    st.push_back(b);
                }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }

    bool is_tree() const { return connected() && static_cast<int>(edges.size()) == vertices - 1; }

    // Two-colouring of a tree with the white vertex in part 1.
    std::vector<int> bipartition() const {
        if (!is_tree()) throw std::invalid_argument("diagram has a cycle");
        std::vector<int> col(static_cast<std::size_t>(vertices), -1);
        col[white] = 1;
        std::vector<int> st{white};
        while (!st.empty()) {
            int a = st.back();
            st.pop_back();
            for (int b : neighbours(a))
                if (col[b] < 0) {
                    col[b] = 1 - col[a];
                    st.push_back(b);
                }
        }
        return col;
    }
};

struct SimpleEntry {
    QVector root;
    Rational offset;

    Isometry reflection_isometry() const { return reflection(root, offset); }
};

struct SimpleSystem {
    DynkinType type;
    CoxeterClass cls;
    std::vector<SimpleEntry> entries;
    ExtendedDiagram diagram;

    int size() const { return static_cast<int>(entries.size()); }
    int ambient_dim() const { return static_cast<int>(entries.front().root.size()); }
    Isometry reflection_at(int s) const { return entries[s].reflection_isometry(); }
};

// Diagram read off the Gram matrix: cos^2 of 1/4, 1/2, 3/4 give m = 3, 4, 6.
inline ExtendedDiagram diagram_from_roots(const std::vector<SimpleEntry>& es, int white) {
    ExtendedDiagram d;
    d.vertices = static_cast<int>(es.size());
    d.white = white;
    for (int i = 0; i < d.vertices; ++i)
        for (int j = i + 1; j < d.vertices; ++j) {
            Rational ip = dot(es[i].root, es[j].root);
            if (ip.is_zero()) continue;
            if (ip.sign() > 0) throw std::invalid_argument("simple roots must have nonpositive inner products");
            Rational c2 = ip * ip / (dot(es[i].root, es[i].root) * dot(es[j].root, es[j].root));
            int m = 0;
            if (c2 == Rational(1, 4)) m = 3;
            else if (c2 == Rational(1, 2)) m = 4;
            else if (c2 == Rational(3, 4)) m = 6;
            else if (c2 == Rational(1)) m = 0;
            else throw std::invalid_argument("angle outside the crystallographic range");
            d.edges.push_back({i, j, m});
        }
    return d;
}

inline std::vector<QVector> parse_list(const std::vector<std::string>& names, const RootSystem& sys) {
    std::vector<QVector> out;
    for (const auto& s : names) out.push_back(parse_root_notation(s, sys));
    return out;
}

inline SimpleSystem assemble(DynkinType t, CoxeterClass c, const std::vector<QVector>& roots, int white) {
    SimpleSystem s;
    s.type = t;
    s.cls = c;
    for (int i = 0; i < static_cast<int>(roots.size()); ++i) s.entries.push_back({roots[i], i == white ? 1 : 0});
    s.diagram = diagram_from_roots(s.entries, white);
    return s;
}

// Roots of the reflections in the group generated by a simple system whose
// white root theta has offset 1. When theta is short, the long-root
// hyperplanes of the group sit only at multiples of |alpha|^2/|theta|^2, so
// those roots are divided by that ratio. A long or only-length theta leaves
// phi unchanged.
inline Rational reflection_scale(const QVector& alpha, const QVector& theta) {
    Rational ratio = dot(alpha, alpha) / dot(theta, theta);
    return ratio > Rational(1) ? ratio : Rational(1);
}

inline RootSystem group_root_system(const RootSystem& phi, const QVector& theta) {
    std::vector<QVector> roots;
    for (const auto& r : phi.roots) roots.push_back(reflection_scale(r, theta).reciprocal() * r);
    return make_root_system(phi.type, phi.ambient_dim, roots);
}

inline SimpleSystem standard_simple_system(DynkinType t, CoxeterClass c) {
    validate_class(t, c);
    RootSystem sys = build_root_system(t);
    int n = t.rank;
    int dim = sys.ambient_dim;
    std::vector<QVector> roots;
    int white = 0;
    auto e = [&](int i) { return unit_vector(dim, i); };
    auto sgn = [](int i) { return i % 2 ? Rational(-1) : Rational(1); };
    switch (t.family) {
        case 'C':
            roots.push_back(2 * e(0));
            for (int i = 1; i < n; ++i) roots.push_back(sgn(i) * (e(i - 1) + e(i)));
            roots.push_back(sgn(n) * (2 * e(n - 1)));
            white = n;
            break;
        case 'B':
        case 'D':
            roots.push_back(t.family == 'B' ? e(0) : e(0) - e(1));
            for (int i = 1; i < n; ++i) roots.push_back(sgn(i) * (e(i - 1) + e(i)));
            roots.push_back(sgn(n - 1) * (e(n - 2) - e(n - 1)));
            white = n - 1;
            break;
        case 'F':
            roots = parse_list({"3/124", "4/", "/34", "23/", "1/2"}, sys);
            white = 4;
            break;
        case 'E':
            if (n == 6) {
                roots = parse_list({"12/", "5/2", "/45", "4/3", "235678/14", "2345/1678", "134678/25"}, sys);
                white = 6;
            } else if (n == 7) {
                roots = parse_list({"/15", "12/", "45/123678", "78/", "16/234578", "34/", "/46", "2356/1478"}, sys);
                white = 0;
            } else {
                roots = parse_list({"12/", "/25", "5/6", "6/7", "78/", "/38", "34/", "28/134567", "2367/1458"}, sys);
                white = 7;
            }
            break;
        case 'G':
            roots = {make_vector({-1, 1, 0}), make_vector({2, -1, -1}), make_vector({-1, -1, 2})};
            white = 2;
            break;
        case 'A': {
            // Coordinates x_1..x_p, y_1..y_q. Order: source, x-swaps, y-swaps, sink.
            int p = c.p, q = c.q;
            auto x = [&](int i) { return e(i); };
            auto y = [&](int j) { return e(p + j); };
            roots.push_back(x(0) - y(0));
            for (int i = 0; i + 1 < p; ++i) roots.push_back(x(i + 1) - x(i));
            for (int j = 0; j + 1 < q; ++j) roots.push_back(y(j) - y(j + 1));
            roots.push_back(y(q - 1) - x(p - 1));
            white = static_cast<int>(roots.size()) - 1;
            break;
        }
        default: throw std::invalid_argument("unknown family");
    }
    for (const auto& r : roots)
        if (!sys.contains(r)) throw std::logic_error("simple root " + to_string(r) + " not in " + t.name());
    QVector theta = roots[white];
    for (auto& r : roots) r = reflection_scale(r, theta).reciprocal() * r;
    return assemble(t, c, roots, white);
}

// ---- orientations and Coxeter elements ------------------------------------

// forward[e] is true when edge e points from edges[e].u to edges[e].v, i.e.
// u is written to the left of v in the product.
struct AcyclicOrientation {
    std::vector<bool> forward;
    friend bool operator==(const AcyclicOrientation&, const AcyclicOrientation&) = default;
};

inline AcyclicOrientation orientation_from_order(const ExtendedDiagram& d, const std::vector<int>& order) {
    std::vector<int> pos(static_cast<std::size_t>(d.vertices));
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    AcyclicOrientation o;
    for (const auto& e : d.edges) o.forward.push_back(pos[e.u] < pos[e.v]);
    return o;
}

// Lexicographically smallest linear extension, or nothing if cyclic.
inline std::optional<std::vector<int>> linear_extension(const ExtendedDiagram& d, const AcyclicOrientation& o) {
    std::vector<int> indeg(static_cast<std::size_t>(d.vertices), 0);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(d.vertices));
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        int a = o.forward[i] ? d.edges[i].u : d.edges[i].v;
        int b = o.forward[i] ? d.edges[i].v : d.edges[i].u;
        out[a].push_back(b);
        ++indeg[b];
    }
    std::set<int> ready;
    for (int v = 0; v < d.vertices; ++v)
        if (!indeg[v]) ready.insert(v);
    std::vector<int> order;
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (int b : out[v])
            if (--indeg[b] == 0) ready.insert(b);
    }
    if (static_cast<int>(order.size()) != d.vertices) return std::nullopt;
    return order;
}

inline bool is_acyclic(const ExtendedDiagram& d, const AcyclicOrientation& o) { return linear_extension(d, o).has_value(); }

inline Isometry coxeter_element(const SimpleSystem& s, const std::vector<int>& order) {
    std::vector<bool> used(static_cast<std::size_t>(s.size()), false);
    if (static_cast<int>(order.size()) != s.size()) throw std::invalid_argument("ordering must use every vertex once");
    Isometry w = Isometry::identity(s.ambient_dim());
    for (int v : order) {
        if (v < 0 || v >= s.size() || used[v]) throw std::invalid_argument("ordering must use every vertex once");
        used[v] = true;
        w = w * s.reflection_at(v);
    }
    return w;
}

inline Isometry coxeter_element(const SimpleSystem& s, const std::vector<int>& order, const AcyclicOrientation& o) {
    if (!(orientation_from_order(s.diagram, order) == o)) throw std::invalid_argument("ordering inconsistent with orientation");
    return coxeter_element(s, order);
}

inline Isometry coxeter_element(const SimpleSystem& s, const AcyclicOrientation& o) {
    auto order = linear_extension(s.diagram, o);
    if (!order) throw std::invalid_argument("orientation has a directed cycle");
    return coxeter_element(s, *order);
}

inline std::vector<int> vertices_of_part(const SimpleSystem& s, int part) {
    auto col = s.diagram.bipartition();
    std::vector<int> out;
    for (int v = 0; v < s.size(); ++v)
        if (col[v] == part) out.push_back(v);
    return out;
}

// (w0, w1): products of the reflections in each part; w = w1 w0.
inline std::pair<Isometry, Isometry> bipartite_involutions(const SimpleSystem& s) {
    auto col = s.diagram.bipartition();
    Isometry w0 = Isometry::identity(s.ambient_dim());
    Isometry w1 = w0;
    for (int v = 0; v < s.size(); ++v) (col[v] ? w1 : w0) = (col[v] ? w1 : w0) * s.reflection_at(v);
    return {w0, w1};
}

inline std::vector<int> bipartite_order(const SimpleSystem& s) {
    auto p1 = vertices_of_part(s, 1);
    auto p0 = vertices_of_part(s, 0);
    p1.insert(p1.end(), p0.begin(), p0.end());
    return p1;
}

inline std::vector<int> default_order(const SimpleSystem& s) {
    if (s.cls.bigon) {
        std::vector<int> o(static_cast<std::size_t>(s.size()));
        std::iota(o.begin(), o.end(), 0);
        return o;
    }
    return bipartite_order(s);
}

inline bool is_source(const ExtendedDiagram& d, const AcyclicOrientation& o, int v) {
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        if (d.edges[i].u == v && !o.forward[i]) return false;
        if (d.edges[i].v == v && o.forward[i]) return false;
    }
    return true;
}

inline bool is_sink(const ExtendedDiagram& d, const AcyclicOrientation& o, int v) {
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        if (d.edges[i].u == v && o.forward[i]) return false;
        if (d.edges[i].v == v && !o.forward[i]) return false;
    }
    return true;
}

inline AcyclicOrientation sink_source_flip(const ExtendedDiagram& d, const AcyclicOrientation& o, int v) {
    if (!is_source(d, o, v) && !is_sink(d, o, v)) throw std::invalid_argument("vertex is neither a source nor a sink");
    AcyclicOrientation r = o;
    for (std::size_t i = 0; i < d.edges.size(); ++i)
        if (d.edges[i].u == v || d.edges[i].v == v) r.forward[i] = !r.forward[i];
    return r;
}

// Image of the hyperplane <x, alpha> = i under g, as (root, offset).
inline SimpleEntry transform_entry(const Isometry& g, const SimpleEntry& e) {
    QVector a = g.apply_linear(e.root);
    return {a, e.offset + dot(g.translation, a)};
}

// The simple system of the chamber r_v(sigma): every other root conjugated by r_v.
inline SimpleSystem flip_system(const SimpleSystem& s, int v) {
    SimpleSystem out = s;
    Isometry r = s.reflection_at(v);
    for (int u = 0; u < s.size(); ++u)
        if (u != v) out.entries[u] = transform_entry(r, s.entries[u]);
    return out;
}

inline long long count_acyclic_orientations(const ExtendedDiagram& d) {
    std::size_t e = d.edges.size();
    if (e > 40) throw std::invalid_argument("too many edges to enumerate");
    long long count = 0;
    for (unsigned long long mask = 0; mask < (1ULL << e); ++mask) {
        AcyclicOrientation o;
        for (std::size_t i = 0; i < e; ++i) o.forward.push_back((mask >> i) & 1ULL);
        if (is_acyclic(d, o)) ++count;
    }
    return count;
}

// ---- context ---------------------------------------------------------------

struct CoxeterContext {
    DynkinType type;
    CoxeterClass cls;
    RootSystem phi;
    SimpleSystem simple;
    Isometry w;
    AffineSubspace axis;  // a line inside the span of the roots
    QVector axis_dir;     // primitive integer, first nonzero entry positive
    std::optional<std::pair<Isometry, Isometry>> involutions;
    std::optional<QVector> symbolic_dir;

    int rank() const { return type.rank; }
    int dim() const { return phi.ambient_dim; }
    AffineSubspace essential() const { return AffineSubspace::linear(phi.span); }

    bool is_group_reflection(const Isometry& g) const { return as_group_reflection(g, phi).has_value(); }
};

// Full-support linear dependency among the simple roots, positive coefficients.
inline QVector simple_dependency(const SimpleSystem& s) {
    int dim = s.ambient_dim();
    int k = s.size();
    std::vector<QVector> rows(static_cast<std::size_t>(dim), QVector(static_cast<std::size_t>(k)));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < k; ++j) rows[i][j] = s.entries[j].root[i];
    auto sol = solve_linear(rows, zero_vector(dim), k);
    if (sol->kernel.dim() != 1) throw std::logic_error("simple roots do not have a unique dependency");
    QVector c = primitive_integer(sol->kernel.basis()[0]);
    for (const auto& x : c)
        if (x.sign() <= 0) throw std::logic_error("dependency is not of full support");
    return c;
}

// Sum over the bipartite part containing the first listed vertex of the
// dependency-weighted roots.
inline QVector axis_direction_symbolic(const SimpleSystem& s) {
    if (!s.diagram.is_tree()) throw std::invalid_argument("axis_direction_symbolic needs a tree diagram");
    auto col = s.diagram.bipartition();
    QVector c = simple_dependency(s);
    QVector sum = zero_vector(s.ambient_dim());
    for (int v = 0; v < s.size(); ++v)
        if (col[v] == col[0]) sum = sum + c[v] * s.entries[v].root;
    return sum;
}

inline CoxeterContext build_context(DynkinType t, CoxeterClass c) {
    CoxeterContext ctx;
    ctx.type = t;
    ctx.cls = c;
    ctx.simple = standard_simple_system(t, c);
    ctx.phi = group_root_system(build_root_system(t), ctx.simple.entries[ctx.simple.diagram.white].root);
    ctx.w = coxeter_element(ctx.simple, default_order(ctx.simple));
    if (!c.bigon) ctx.involutions = bipartite_involutions(ctx.simple);
    auto bi = basic_invariants(ctx.w);
    if (bi.kind != Kind::hyperbolic) throw std::logic_error(t.name() + ": Coxeter element is not hyperbolic");
    if (reflection_length(ctx.w) != t.rank + 1) throw std::logic_error(t.name() + ": Coxeter element has wrong length");
    auto axis = intersect_affine(bi.min, ctx.essential());
    if (!axis || axis->dim() != 1) throw std::logic_error(t.name() + ": min-set is not a line");
    ctx.axis = *axis;
    ctx.axis_dir = primitive_integer(axis->directions().basis()[0]);
    if (!c.bigon) ctx.symbolic_dir = axis_direction_symbolic(ctx.simple);
    return ctx;
}

inline bool is_horizontal(const QVector& alpha, const CoxeterContext& ctx) { return dot(alpha, ctx.axis_dir).is_zero(); }

enum class Direction { vertical, horizontal };

inline Direction classify_reflection(const Isometry& r, const CoxeterContext& ctx) {
    auto ar = as_group_reflection(r, ctx.phi);
    if (!ar) throw std::invalid_argument("not a reflection of the group");
    return is_horizontal(ar->root, ctx) ? Direction::horizontal : Direction::vertical;
}

// ---- axial data -------------------------------------------------------------

class WindowInsufficient : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AxialData {
    int k = 0;
    int shift = 2;                                 // w(x_i) = x_{i+shift}
    std::vector<QVector> points;                   // x_i for i = -k..k
    std::vector<std::vector<QVector>> vertex_sets;  // F_i for i = -k..k
    std::vector<std::vector<QVector>> chambers;     // vertices of sigma_i for i = -k..k-1

    const QVector& point(int i) const { return points.at(static_cast<std::size_t>(i + k)); }
    const std::vector<QVector>& face(int i) const { return vertex_sets.at(static_cast<std::size_t>(i + k)); }
    const std::vector<QVector>& chamber(int i) const { return chambers.at(static_cast<std::size_t>(i + k)); }

    // Axial vertices carried by indices lo..hi.
    std::vector<QVector> vertices(int lo, int hi) const {
        std::vector<QVector> out;
        for (int i = lo; i <= hi; ++i) {
            for (const auto& v : face(i)) out.push_back(v);
            if (i < k)
                for (const auto& v : chamber(i)) out.push_back(v);
        }
        std::sort(out.begin(), out.end(), lex_less);
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    std::vector<QVector> window_vertices() const { return vertices(-k, k); }
};

// Vertices of the fundamental chamber, indexed by the opposite simple root.
inline std::vector<QVector> chamber_vertices(const CoxeterContext& ctx) {
    const auto& s = ctx.simple;
    auto normals = ctx.phi.span.orthogonal_complement().basis();
    std::vector<QVector> out;
    for (int v = 0; v < s.size(); ++v) {
        std::vector<QVector> rows = normals;
        QVector rhs(normals.size());
        for (int u = 0; u < s.size(); ++u)
            if (u != v) {
                rows.push_back(s.entries[u].root);
                rhs.push_back(s.entries[u].offset);
            }
        auto sol = AffineSubspace::solutions(rows, rhs, ctx.dim());
        if (!sol || sol->dim() != 0) throw std::logic_error("chamber vertex is not a point");
        out.push_back(sol->basepoint());
    }
    return out;
}

inline std::vector<QVector> map_points(const Isometry& g, const std::vector<QVector>& pts) {
    std::vector<QVector> out;
    for (const auto& p : pts) out.push_back(g.apply(p));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// Reflect y into the fundamental chamber; returns the reflections used in order.
inline std::vector<int> fold_into_chamber(const CoxeterContext& ctx, QVector& y) {
    std::vector<int> used;
    const auto& s = ctx.simple;
    for (std::size_t guard = 0; guard < 100000; ++guard) {
        int bad = -1;
        for (int v = 0; v < s.size(); ++v)
            if (dot(y, s.entries[v].root) > s.entries[v].offset) {
                bad = v;
                break;
            }
        if (bad < 0) return used;
        y = s.reflection_at(bad).apply(y);
        used.push_back(bad);
    }
    throw std::logic_error("chamber folding did not terminate");
}

// Vertices of the chamber containing the generic point y.
inline std::vector<QVector> chamber_containing(const CoxeterContext& ctx, const QVector& y, const std::vector<QVector>& base_vertices) {
    QVector z = y;
    auto used = fold_into_chamber(ctx, z);
    std::vector<QVector> out;
    for (auto v : base_vertices) {
        for (auto it = used.rbegin(); it != used.rend(); ++it) v = ctx.simple.reflection_at(*it).apply(v);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

inline bool on_hyperplane(const QVector& x, const QVector& alpha, const Rational& i) { return dot(x, alpha) == i; }

// Parameter s with axis point base + s * dir.
inline QVector axis_point(const CoxeterContext& ctx, const Rational& s) {
    return ctx.axis.basepoint() + s * ctx.axis_dir;
}

inline Rational axis_param(const CoxeterContext& ctx, const QVector& x) {
    return dot(x - ctx.axis.basepoint(), ctx.axis_dir) / dot(ctx.axis_dir, ctx.axis_dir);
}

// Translation length of w along the axis in parameter units.
inline Rational axis_period(const CoxeterContext& ctx) {
    return axis_param(ctx, ctx.w.apply(ctx.axis.basepoint()));
}

// Vertices of the minimal face of the chamber `cham` containing x.
inline std::vector<QVector> face_through(const CoxeterContext& ctx, const QVector& x, const std::vector<QVector>& cham) {
    std::vector<QVector> out;
    for (const auto& v : cham) {
        bool ok = true;
        for (const auto& a : ctx.phi.positive_roots()) {
            Rational t = dot(x, a);
            if (t.is_integer() && dot(v, a) != t) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(v);
    }
    return out;
}

inline AxialData axial_data_bipartite(const CoxeterContext& ctx, int k) {
    auto col = ctx.simple.diagram.bipartition();
    auto verts = chamber_vertices(ctx);
    auto part_space = [&](int part) {
        std::vector<QVector> rows = ctx.phi.span.orthogonal_complement().basis();
        QVector rhs(rows.size());
        for (int v = 0; v < ctx.simple.size(); ++v)
            if (col[v] == part) {
                rows.push_back(ctx.simple.entries[v].root);
                rhs.push_back(ctx.simple.entries[v].offset);
            }
        return *AffineSubspace::solutions(rows, rhs, ctx.dim());
    };
    auto x0 = intersect_affine(part_space(0), ctx.axis);
    auto x1 = intersect_affine(part_space(1), ctx.axis);
    if (!x0 || !x1 || x0->dim() != 0 || x1->dim() != 0) throw std::logic_error("bipartite subspaces do not meet the axis in points");
    std::vector<QVector> f0, f1;
    for (int v = 0; v < ctx.simple.size(); ++v) (col[v] == 1 ? f0 : f1).push_back(verts[v]);
    std::sort(f0.begin(), f0.end(), lex_less);
    std::sort(f1.begin(), f1.end(), lex_less);

    std::map<int, QVector> pts{{0, x0->basepoint()}, {1, x1->basepoint()}};
    std::map<int, std::vector<QVector>> faces{{0, f0}, {1, f1}};
    Isometry wi = inverse(ctx.w);
    for (int i = 2; i <= k + 1; ++i) {
        pts[i] = ctx.w.apply(pts[i - 2]);
        faces[i] = map_points(ctx.w, faces[i - 2]);
    }
    for (int i = -1; i >= -k; --i) {
        pts[i] = wi.apply(pts[i + 2]);
        faces[i] = map_points(wi, faces[i + 2]);
    }
    AxialData a;
    a.k = k;
    a.shift = 2;
    for (int i = -k; i <= k; ++i) {
        a.points.push_back(pts[i]);
        a.vertex_sets.push_back(faces[i]);
    }
    for (int i = -k; i < k; ++i) {
        std::vector<QVector> c = faces[i];
        c.insert(c.end(), faces[i + 1].begin(), faces[i + 1].end());
        std::sort(c.begin(), c.end(), lex_less);
        a.chambers.push_back(c);
    }
    return a;
}

// Crossing parameters of vertical hyperplanes with the axis in [lo, hi].
inline std::vector<Rational> axis_crossings(const CoxeterContext& ctx, const Rational& lo, const Rational& hi) {
    std::set<Rational> out;
    for (const auto& a : ctx.phi.positive_roots()) {
        Rational da = dot(ctx.axis_dir, a);
        if (da.is_zero()) continue;
        Rational b = dot(ctx.axis.basepoint(), a);
        // b + s*da = i
        Rational v1 = b + lo * da, v2 = b + hi * da;
        Rational imin = (v1 < v2 ? v1 : v2), imax = (v1 < v2 ? v2 : v1);
        Rational i = imin.floor();
        if (i < imin) i += 1;
        for (; i <= imax; i += 1) out.insert((i - b) / da);
    }
    return {out.begin(), out.end()};
}

// Axial data from the chambers the axis passes through; index 0 is the first
// crossing at or after the axis basepoint.
inline AxialData axial_data_walk(const CoxeterContext& ctx, int k) {
    Rational tau = axis_period(ctx);
    if (tau.sign() < 0) throw std::logic_error("axis direction opposes the translation of w");
    Rational span = tau * Rational(k + 2);
    auto cr = axis_crossings(ctx, -span, span);
    auto zero = std::lower_bound(cr.begin(), cr.end(), Rational(0)) - cr.begin();
    if (zero - k < 0 || zero + k + 1 >= static_cast<long>(cr.size())) throw std::logic_error("axis crossing search too short");
    auto base = chamber_vertices(ctx);
    AxialData a;
    a.k = k;
    int per = 0;
    for (const auto& s : cr)
        if (s >= cr[zero] && s < cr[zero] + tau) ++per;
    a.shift = per;
    for (int i = -k; i <= k; ++i) {
        const Rational& s = cr[zero + i];
        QVector x = axis_point(ctx, s);
        QVector mid = axis_point(ctx, (s + cr[zero + i + 1]) / 2);
        auto cham = chamber_containing(ctx, mid, base);
        a.points.push_back(x);
        a.vertex_sets.push_back(face_through(ctx, x, cham));
        if (i < k) a.chambers.push_back(cham);
    }
    return a;
}

inline AxialData axial_data(const CoxeterContext& ctx, int k) {
    if (k < 1) throw std::invalid_argument("axial window k must be at least 1");
    if (ctx.involutions) return axial_data_bipartite(ctx, k);
    return axial_data_walk(ctx, k);
}

inline int linear_order(const Isometry& w) {
    QMatrix id = QMatrix::identity(w.dim());
    QMatrix p = w.linear;
    for (int e = 1; e <= 10000; ++e) {
        if (p == id) return e;
        p = p * w.linear;
    }
    throw std::logic_error("linear part has no finite order");
}

inline Isometry power(const Isometry& g, int e) {
    Isometry base = e < 0 ? inverse(g) : g;
    Isometry r = Isometry::identity(g.dim());
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r = r * base;
    return r;
}

inline AffineReflection transform_reflection(const Isometry& g, const AffineReflection& r) {
    auto e = transform_entry(g, {r.root, r.offset});
    return canonical_reflection(e.root, e.offset);
}

// Whether the hyperplane of r contains an axial vertex. Uses periodicity: w
// moves the axial configuration `shift` indices forward, and w^h is a
// translation along the axis.
inline bool in_R0(const AffineReflection& r, const CoxeterContext& ctx, const AxialData& axial) {
    if (axial.k < axial.shift) throw WindowInsufficient("in_R0 needs a window covering one period of w");
    auto base = axial.vertices(0, axial.shift);
    auto hits = [&](const AffineReflection& h) {
        return std::any_of(base.begin(), base.end(), [&](const QVector& v) { return on_hyperplane(v, h.root, h.offset); });
    };
    Rational da = dot(ctx.axis_dir, r.root);
    if (!da.is_zero()) {
        Rational s = (r.offset - dot(ctx.axis.basepoint(), r.root)) / da;
        Rational tau = axis_period(ctx);
        Rational s0 = axis_param(ctx, axial.point(0));
        Rational e = ((s - s0) / tau).floor();
        long long ee = std::stoll(e.str());
        return hits(transform_reflection(power(ctx.w, static_cast<int>(-ee)), r));
    }
    int h = linear_order(ctx.w);
    Isometry wi = inverse(ctx.w);
    AffineReflection cur = r;
    for (int e = 0; e < h; ++e) {
        if (hits(cur)) return true;
        cur = transform_reflection(wi, cur);
    }
    return false;
}

// Reflections through an axial vertex with index in [-k, k].
inline std::vector<AffineReflection> window_reflections(const CoxeterContext& ctx, const AxialData& axial) {
    std::vector<AffineReflection> out;
    auto pos = ctx.phi.positive_roots();
    for (const auto& v : axial.window_vertices())
        for (const auto& a : pos) {
            Rational i = dot(v, a);
            if (i.is_integer()) out.push_back({a, i});
        }
    std::sort(out.begin(), out.end(), [](const AffineReflection& x, const AffineReflection& y) {
        if (x.root != y.root) return lex_less(x.root, y.root);
        return x.offset < y.offset;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}


// ---- finite groups ----------------------------------------------------------

struct FiniteCoxeter {
    RootSystem phi;
    std::vector<QVector> simple;  // positive for a generic functional
    std::vector<Isometry> reflections;
    Isometry c;  // product of the simple reflections in order
};

inline FiniteCoxeter finite_coxeter(DynkinType t) {
    FiniteCoxeter f;
    f.phi = build_root_system(t);
    int n = f.phi.ambient_dim;
    QVector func = zero_vector(n);
    Rational scale = 1;
    for (int i = n - 1; i >= 0; --i) {
        func[i] = scale + Rational(i + 1, 7);
        scale *= 1000;
    }
    std::vector<QVector> pos;
    for (const auto& r : f.phi.roots)
        if (dot(r, func).sign() > 0) pos.push_back(r);
    for (const auto& r : pos) {
        bool decomposable = false;
        for (const auto& a : pos)
            if (!(a == r) && std::find(pos.begin(), pos.end(), r - a) != pos.end()) decomposable = true;
        if (!decomposable) f.simple.push_back(r);
    }
    if (static_cast<int>(f.simple.size()) != t.rank) throw std::logic_error("simple system has the wrong size");
    for (const auto& r : f.phi.positive_roots()) f.reflections.push_back(reflection(r, 0));
    f.c = Isometry::identity(n);
    for (const auto& a : f.simple) f.c = f.c * reflection(a, 0);
    return f;
}

}  // namespace axial
