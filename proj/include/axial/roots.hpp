#pragma once

// Finite root systems in the coordinates of the usual tables, the slash
// notation for roots, and irreducible decomposition.

#include "axial/isometry.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace axial {

struct DynkinType {
    char family = 'A';
    int rank = 1;

    static DynkinType make(char family, int rank) {
        DynkinType t{family, rank};
        t.validate();
        return t;
    }

    // Parses "B3", "E8", "A5".
    static DynkinType parse(const std::string& s) {
        if (s.size() < 2) throw std::invalid_argument("bad type '" + s + "'");
        char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(s.substr(1), &used);
            if (used != s.size() - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad type '" + s + "'");
        }
        return make(f, n);
    }

    void validate() const {
        bool ok = false;
        switch (family) {
            case 'A': ok = rank >= 1; break;
            case 'B': ok = rank >= 3; break;
            case 'C': ok = rank >= 2; break;
            case 'D': ok = rank >= 4; break;
            case 'E': ok = rank >= 6 && rank <= 8; break;
            case 'F': ok = rank == 4; break;
            case 'G': ok = rank == 2; break;
            default: break;
        }
        if (!ok) throw std::invalid_argument("invalid type " + name());
    }

    std::string name() const { return std::string(1, family) + std::to_string(rank); }

    friend bool operator==(const DynkinType&, const DynkinType&) = default;
    friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
};

inline bool is_canonical_sign(const QVector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return x.sign() > 0;
    return false;
}

inline QVector canonical_sign(const QVector& v) { return is_canonical_sign(v) ? v : -v; }

inline bool lex_less(const QVector& a, const QVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// All vectors with k entries equal to +-1 (the rest zero), optionally only
// those with an even number of minus signs.
inline std::vector<QVector> build_phi_k(int n, int k, bool even_only = false) {
    if (k < 1 || k > n) throw std::invalid_argument("build_phi_k: k out of range");
    std::vector<QVector> out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            for (int mask = 0; mask < (1 << k); ++mask) {
                if (even_only && __builtin_popcount(static_cast<unsigned>(mask)) % 2) continue;
                QVector v = zero_vector(n);
                for (int j = 0; j < k; ++j) v[idx[j]] = (mask >> j) & 1 ? -1 : 1;
                out.push_back(std::move(v));
            }
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

struct RootSystem {
    DynkinType type;
    int ambient_dim = 0;
    std::vector<QVector> roots;  // sorted lexicographically
    LinearSubspace span;
    std::unordered_set<QVector> lookup;

    bool contains(const QVector& v) const { return lookup.count(v) > 0; }
    std::size_t size() const { return roots.size(); }

    std::vector<QVector> positive_roots() const {
        std::vector<QVector> out;
        for (const auto& r : roots)
            if (is_canonical_sign(r)) out.push_back(r);
        return out;
    }

    // Root of this system parallel to v with canonical sign, if any.
    std::optional<QVector> root_parallel_to(const QVector& v) const {
        for (const auto& r : roots)
            if (is_canonical_sign(r) && parallel(r, v)) return r;
        return std::nullopt;
    }

    std::set<Rational> squared_lengths() const {
        std::set<Rational> s;
        for (const auto& r : roots) s.insert(dot(r, r));
        return s;
    }
};

inline RootSystem make_root_system(DynkinType t, int ambient, std::vector<QVector> roots) {
    std::sort(roots.begin(), roots.end(), lex_less);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    RootSystem s;
    s.type = t;
    s.ambient_dim = ambient;
    s.span = LinearSubspace::span(roots, ambient);
    s.lookup = std::unordered_set<QVector>(roots.begin(), roots.end());
    s.roots = std::move(roots);
    return s;
}

inline std::vector<QVector> scaled(const std::vector<QVector>& vs, const Rational& c) {
    std::vector<QVector> out;
    for (const auto& v : vs) out.push_back(c * v);
    return out;
}

inline std::vector<QVector> e8_roots() {
    auto r = build_phi_k(8, 2);
    auto h = scaled(build_phi_k(8, 8, true), Rational(1, 2));
    r.insert(r.end(), h.begin(), h.end());
    return r;
}

inline RootSystem build_root_system(DynkinType t) {
    t.validate();
    int n = t.rank;
    std::vector<QVector> r;
    switch (t.family) {
        case 'B': {
            r = build_phi_k(n, 2);
            auto s = build_phi_k(n, 1);
            r.insert(r.end(), s.begin(), s.end());
            return make_root_system(t, n, r);
        }
        case 'C': {
            r = build_phi_k(n, 2);
            auto s = scaled(build_phi_k(n, 1), 2);
            r.insert(r.end(), s.begin(), s.end());
            return make_root_system(t, n, r);
        }
        case 'D': return make_root_system(t, n, build_phi_k(n, 2));
        case 'F': {
            r = build_phi_k(4, 2);
            auto s = scaled(build_phi_k(4, 1), 2);
            auto q = build_phi_k(4, 4);
            r.insert(r.end(), s.begin(), s.end());
            r.insert(r.end(), q.begin(), q.end());
            return make_root_system(t, 4, r);
        }
        case 'E': {
            for (auto& v : e8_roots()) {
                if (n <= 7 && v[6] != v[7]) continue;
                if (n == 6 && v[5] != v[6]) continue;
                r.push_back(v);
            }
            return make_root_system(t, 8, r);
        }
        case 'A': {
            // Roots of C_{n+1} orthogonal to (1,...,1): the e_i - e_j.
            for (auto& v : build_phi_k(n + 1, 2)) {
                Rational s;
                for (auto& x : v) s += x;
                if (s.is_zero()) r.push_back(v);
            }
            return make_root_system(t, n + 1, r);
        }
        case 'G': {
            for (auto v : {make_vector({1, -1, 0}), make_vector({0, 1, -1}), make_vector({1, 0, -1}),
                           make_vector({2, -1, -1}), make_vector({-1, 2, -1}), make_vector({-1, -1, 2})}) {
                r.push_back(v);
                r.push_back(-v);
            }
            return make_root_system(t, 3, r);
        }
        default: throw std::invalid_argument("unknown family");
    }
}

inline QVector coroot(const QVector& alpha) { return coroot_of(alpha); }

// ---- slash notation -------------------------------------------------------

class NotationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline std::string strip_notation(const std::string& s) {
    std::string body = s;
    if (body.rfind("r_{", 0) == 0) {
        if (body.empty() || body.back() != '}') throw NotationError("malformed root notation '" + s + "'");
        body = body.substr(3, body.size() - 4);
    } else if (body.rfind("r_", 0) == 0) {
        body = body.substr(2);
    }
    return body;
}

inline QVector parse_root_notation(const std::string& s, const RootSystem& sys) {
    std::string body = strip_notation(s);
    if (!body.empty() && body.front() == '(') {
        // Coordinate form "(a,b,...)" for roots the slash notation cannot express.
        if (body.back() != ')') throw NotationError("malformed root vector '" + s + "'");
        QVector v;
        std::string cur;
        for (std::size_t i = 1; i < body.size(); ++i) {
            char c = body[i];
            if (c == ',' || c == ')') {
                v.push_back(Rational::parse(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (static_cast<int>(v.size()) != sys.ambient_dim) throw NotationError("root vector has wrong length '" + s + "'");
        if (!sys.contains(v)) throw NotationError(to_string(v) + " is not a root of " + sys.type.name());
        return v;
    }
    auto slash = body.find('/');
    if (slash == std::string::npos || body.find('/', slash + 1) != std::string::npos)
        throw NotationError("root notation needs exactly one slash: '" + s + "'");
    std::vector<int> pos, neg;
    std::set<int> seen;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (i == slash) continue;
        char c = body[i];
        if (c < '1' || c > '9') throw NotationError("bad index character in '" + s + "'");
        int k = c - '1';
        if (k >= sys.ambient_dim) throw NotationError("index out of range in '" + s + "'");
        if (!seen.insert(k).second) throw NotationError("repeated index in '" + s + "'");
        (i < slash ? pos : neg).push_back(k);
    }
    std::size_t count = pos.size() + neg.size();
    if (count == 0) throw NotationError("empty root notation '" + s + "'");
    std::optional<Rational> c;
    for (const auto& r : sys.roots) {
        std::size_t nz = 0;
        Rational a;
        for (const auto& x : r)
            if (!x.is_zero()) {
                ++nz;
                a = x.sign() > 0 ? x : -x;
            }
        if (nz == count) {
            c = a;
            break;
        }
    }
    if (!c) throw NotationError("no root of " + sys.type.name() + " has " + std::to_string(count) + " nonzero entries");
    QVector v = zero_vector(sys.ambient_dim);
    for (int k : pos) v[k] = *c;
    for (int k : neg) v[k] = -*c;
    if (!sys.contains(v)) throw NotationError("'" + s + "' gives " + to_string(v) + ", not a root of " + sys.type.name());
    return v;
}

inline std::string format_root(const QVector& v) {
    std::optional<Rational> common;
    bool uniform = true;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        Rational a = x.sign() > 0 ? x : -x;
        if (common && *common != a) uniform = false;
        common = a;
    }
    if (!uniform || v.size() > 9 || !common) {
        std::string s = "r_{(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
        return s + ")}";
    }
    std::string p, m;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].sign() > 0) p += static_cast<char>('1' + i);
        if (v[i].sign() < 0) m += static_cast<char>('1' + i);
    }
    return "r_{" + p + "/" + m + "}";
}

// ---- decomposition --------------------------------------------------------

struct RootComponent {
    std::string type;  // e.g. "A2", or "?" when unclassified
    int rank = 0;
    std::vector<QVector> roots;
};

inline std::string classify_component(const std::vector<QVector>& roots, int ambient) {
    int rank = LinearSubspace::span(roots, ambient).dim();
    std::size_t count = roots.size();
    std::map<Rational, std::size_t> lengths;
    for (const auto& r : roots) ++lengths[dot(r, r)];
    auto name = [](char f, int k) { return std::string(1, f) + std::to_string(k); };
    if (lengths.size() == 1) {
        if (count == static_cast<std::size_t>(rank * (rank + 1))) return name('A', rank);
        if (rank >= 4 && count == static_cast<std::size_t>(2 * rank * (rank - 1))) return name('D', rank);
        if (rank == 6 && count == 72) return "E6";
        if (rank == 7 && count == 126) return "E7";
        if (rank == 8 && count == 240) return "E8";
    } else if (lengths.size() == 2) {
        std::size_t shorts = lengths.begin()->second;
        std::size_t longs = lengths.rbegin()->second;
        if (rank == 2 && count == 12) return "G2";
        if (rank == 4 && count == 48) return "F4";
        if (rank >= 2 && count == static_cast<std::size_t>(2 * rank * rank)) {
            if (shorts == static_cast<std::size_t>(2 * rank)) return name(rank == 2 ? 'C' : 'B', rank);
            if (longs == static_cast<std::size_t>(2 * rank)) return name('C', rank);
        }
    }
    return "?";
}

// Connected components of the non-orthogonality graph, largest rank first.
inline std::vector<RootComponent> decompose_irreducible(const std::vector<QVector>& input, int ambient) {
    std::vector<QVector> roots = input;
    std::sort(roots.begin(), roots.end(), lex_less);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    std::vector<int> comp(roots.size(), -1);
    int nc = 0;
    for (std::size_t s = 0; s < roots.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < roots.size(); ++b)
                if (comp[b] < 0 && !dot(roots[a], roots[b]).is_zero()) {
                    comp[b] = nc;
                    stack.push_back(b);
                }
        }
        ++nc;
    }
    std::vector<RootComponent> out(static_cast<std::size_t>(nc));
    for (std::size_t i = 0; i < roots.size(); ++i) out[comp[i]].roots.push_back(roots[i]);
    for (auto& c : out) {
        c.rank = LinearSubspace::span(c.roots, ambient).dim();
        c.type = classify_component(c.roots, ambient);
    }
    std::stable_sort(out.begin(), out.end(), [](const RootComponent& a, const RootComponent& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        return lex_less(a.roots.front(), b.roots.front());
    });
    return out;
}

inline std::string components_name(const std::vector<RootComponent>& cs) {
    if (cs.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? "+" : "") + cs[i].type;
    return s;
}

// ---- bases ---------------------------------------------------------------

// Coefficients of v in the basis `simple`, or nothing if v is outside their span.
inline std::optional<QVector> expand_in(const std::vector<QVector>& simple, const QVector& v) {
    int n = static_cast<int>(v.size());
    int k = static_cast<int>(simple.size());
    std::vector<QVector> rows(static_cast<std::size_t>(n), QVector(static_cast<std::size_t>(k)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) rows[i][j] = simple[j][i];
    auto sol = solve_linear(rows, v, k);
    if (!sol || sol->kernel.dim() != 0) return std::nullopt;
    return sol->particular;
}

inline QVector highest_root(const RootSystem& sys, const std::vector<QVector>& simple) {
    if (LinearSubspace::span(simple, sys.ambient_dim).dim() != static_cast<int>(simple.size()) ||
        static_cast<int>(simple.size()) != sys.span.dim())
        throw std::invalid_argument("highest_root: not a base");
    std::optional<QVector> best;
    Rational best_sum;
    for (const auto& r : sys.roots) {
        auto c = expand_in(simple, r);
        if (!c) throw std::invalid_argument("highest_root: not a base");
        int sgn = 0;
        Rational sum;
        for (const auto& x : *c) {
            if (!x.is_integer()) throw std::invalid_argument("highest_root: not a base");
            if (x.sign() != 0) {
                if (sgn != 0 && sgn != x.sign()) throw std::invalid_argument("highest_root: not a base");
                sgn = x.sign();
            }
            sum += x;
        }
        if (!best || sum > best_sum) {
            best = r;
            best_sum = sum;
        }
    }
    return *best;
}

// ---- group reflections ----------------------------------------------------

struct AffineReflection {
    QVector root;  // canonical sign
    Rational offset;

    Isometry isometry() const { return reflection(root, offset); }
    friend bool operator==(const AffineReflection&, const AffineReflection&) = default;
};

inline AffineReflection canonical_reflection(const QVector& alpha, const Rational& i) {
    if (is_canonical_sign(alpha)) return {alpha, i};
    return {-alpha, -i};
}

// Reads g as r_{alpha,i} with alpha in sys and i an integer, if it is one.
inline std::optional<AffineReflection> as_group_reflection(const Isometry& g, const RootSystem& sys) {
    if (g.dim() != sys.ambient_dim) return std::nullopt;
    auto bi = basic_invariants(g);
    if (bi.kind != Kind::elliptic || bi.mov.dim() != 1) return std::nullopt;
    if (!(g * g).is_identity()) return std::nullopt;
    auto alpha = sys.root_parallel_to(bi.mov.directions().basis()[0]);
    if (!alpha) return std::nullopt;
    Rational i = dot(bi.min.basepoint(), *alpha);
    if (!i.is_integer()) return std::nullopt;
    if (reflection(*alpha, i) != g) return std::nullopt;
    return AffineReflection{*alpha, i};
}

}  // namespace axial
