#pragma once

// The unit square with its four side reflections and four corner-to-corner
// translations, generating a group in which w = rotation by pi about the
// centre has 24 factorizations of length 3.

#include "axial/interval.hpp"

#include <map>
#include <memory>

namespace axial {

struct RectangleFixture {
    std::vector<QVector> corners;  // p1..p4
    std::vector<Generator> gens;   // r12, r34, r23, r41, t13, t31, t24, t42
    Isometry w;
    LengthOracle length;

    std::string name_of(const Isometry& g) const {
        for (const auto& x : gens)
            if (x.g == g) return x.label;
        return "?";
    }
    bool is_generator(const Isometry& g) const {
        return std::any_of(gens.begin(), gens.end(), [&](const Generator& x) { return x.g == g; });
    }
    Isometry named(const std::string& s) const {
        for (const auto& x : gens)
            if (x.label == s) return x.g;
        throw std::invalid_argument("no generator " + s);
    }
    Word word(const std::vector<std::string>& names) const {
        Word out;
        for (const auto& s : names) out.push_back(named(s));
        return out;
    }
    WordChecker checker() const {
        auto self = *this;
        return {[self](const Isometry& g) { return self.is_generator(g); }, length};
    }
};

// Word length over the generators, by BFS out to `radius`; farther elements get radius + 1.
inline LengthOracle ball_length(const std::vector<Generator>& gens, int dim, int radius) {
    auto dist = std::make_shared<std::unordered_map<Isometry, int, IsometryHash>>();
    std::vector<Isometry> frontier{Isometry::identity(dim)};
    (*dist)[frontier[0]] = 0;
    for (int d = 1; d <= radius; ++d) {
        std::vector<Isometry> next;
        for (const auto& u : frontier)
            for (const auto& g : gens) {
                Isometry v = u * g.g;
                if (dist->emplace(v, d).second) next.push_back(v);
            }
        frontier = std::move(next);
    }
    return [dist, radius](const Isometry& g) {
        auto it = dist->find(g);
        return it == dist->end() ? radius + 1 : it->second;
    };
}

inline RectangleFixture rectangle_fixture() {
    RectangleFixture f;
    f.corners = {make_vector({0, 1}), make_vector({1, 1}), make_vector({1, 0}), make_vector({0, 0})};
    const auto& p = f.corners;
    auto side = [&](int i, int j, const std::string& name) {
        // The side through p_i, p_j is axis-parallel; reflect across it.
        QVector normal = p[i][0] == p[j][0] ? make_vector({1, 0}) : make_vector({0, 1});
        AffineReflection r{normal, dot(p[i], normal)};
        f.gens.push_back({r.isometry(), name, r, coroot_of(normal)});
    };
    auto shift = [&](int i, int j, const std::string& name) {
        f.gens.push_back({Isometry::translate(p[j] - p[i]), name, std::nullopt, {}});
    };
    side(0, 1, "r12");
    side(2, 3, "r34");
    side(1, 2, "r23");
    side(3, 0, "r41");
    shift(0, 2, "t13");
    shift(2, 0, "t31");
    shift(1, 3, "t24");
    shift(3, 1, "t42");
    f.w = {QMatrix::identity(2), make_vector({1, 1})};
    f.w.linear(0, 0) = -1;
    f.w.linear(1, 1) = -1;
    f.length = ball_length(f.gens, 2, 4);
    return f;
}

// The fixture interval is finite, so the poset is all of [1,w].
inline IntervalPoset fixture_interval(const RectangleFixture& f) {
    auto p = build_interval(f.w, f.gens, f.length);
    p.complete = true;
    return p;
}

// All words of the given length over the fixture generators evaluating to w.
inline std::vector<Word> fixture_factorizations(const RectangleFixture& f, int len) {
    std::vector<Word> out;
    std::vector<int> idx(static_cast<std::size_t>(len), 0);
    int g = static_cast<int>(f.gens.size());
    while (true) {
        Word w;
        for (int i : idx) w.push_back(f.gens[i].g);
        if (product(w, 2) == f.w) out.push_back(w);
        int pos = len - 1;
        while (pos >= 0 && ++idx[pos] == g) idx[pos--] = 0;
        if (pos < 0) break;
    }
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

}  // namespace axial
