#include "lefschetz/ends/exhaustion.hpp"

#include "lefschetz/linalg/error.hpp"

#include <algorithm>

namespace lefschetz::ends {

using simplicial::Simplex;

namespace {

SimplicialComplex path(int from, int to) {
    std::vector<Simplex> s{{from}};
    for (int i = from; i < to; ++i) s.push_back({i, i + 1});
    return SimplicialComplex::from_simplices(std::move(s));
}

Vertex ring_vertex(int height, int i) { return 3 * height + ((i % 3) + 3) % 3; }

SimplicialComplex cylinder_band(int from, int to) {
    std::vector<Simplex> s;
    for (int h = from; h <= to; ++h)
        for (int i = 0; i < 3; ++i) s.push_back({ring_vertex(h, i), ring_vertex(h, i + 1)});
    for (int h = from; h < to; ++h)
        for (int i = 0; i < 3; ++i) {
            s.push_back({ring_vertex(h, i), ring_vertex(h, i + 1), ring_vertex(h + 1, i)});
            s.push_back({ring_vertex(h, i + 1), ring_vertex(h + 1, i), ring_vertex(h + 1, i + 1)});
        }
    return SimplicialComplex::from_simplices(std::move(s));
}

SimplicialComplex relabel(const SimplicialComplex& k, int scale, int offset) {
    std::vector<Simplex> out;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const Simplex& s : k.simplices(d)) {
            Simplex t;
            for (Vertex v : s) t.push_back(scale * v + offset);
            out.push_back(std::move(t));
        }
    return SimplicialComplex::from_simplices(std::move(out));
}

SimplicialComplex join_disjoint(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Simplex> out;
    for (const SimplicialComplex* k : {&a, &b})
        for (int d = 0; d <= k->dimension(); ++d)
            for (const Simplex& s : k->simplices(d)) out.push_back(s);
    return SimplicialComplex::from_simplices(std::move(out));
}

void require_level(int n) { require(n >= 1, "exhaustion levels start at 1; got " + std::to_string(n)); }

}  // namespace

SimplicialComplex ExhaustedComplex::at(int n) const {
    require_level(n);
    if (max_level && n > *max_level)
        throw PreconditionError("generator exhausted: " + name + " has no level " + std::to_string(n) + " (last level " +
                                std::to_string(*max_level) + ")");
    return level(n);
}

ExhaustedComplex line() {
    ExhaustedComplex x;
    x.name = "line";
    x.level = [](int n) { return path(-n, n); };
    x.compactification = [](int n) -> std::optional<Compactification> {
        return Compactification{path(-n - 1, n + 1), SimplicialComplex::from_simplices({{-n - 1}, {n + 1}})};
    };
    return x;
}

ExhaustedComplex ray() {
    ExhaustedComplex x;
    x.name = "ray";
    x.level = [](int n) { return path(0, n); };
    x.compactification = [](int n) -> std::optional<Compactification> {
        return Compactification{path(0, n + 1), SimplicialComplex::from_simplices({{n + 1}})};
    };
    return x;
}

ExhaustedComplex cylinder() {
    ExhaustedComplex x;
    x.name = "cylinder";
    x.level = [](int n) { return cylinder_band(-n, n); };
    x.compactification = [](int n) -> std::optional<Compactification> {
        SimplicialComplex closure = cylinder_band(-n - 1, n + 1);
        std::vector<Vertex> rim;
        for (int i = 0; i < 3; ++i) rim.push_back(ring_vertex(-n - 1, i)), rim.push_back(ring_vertex(n + 1, i));
        return Compactification{closure, closure.full_subcomplex(rim)};
    };
    return x;
}

ExhaustedComplex binary_tree() {
    ExhaustedComplex x;
    x.name = "tree";
    x.max_level = 16;
    x.level = [](int n) {
        std::vector<Simplex> s{{1}};
        const int limit = 1 << (n - 1);  // vertices of depth < n are 1 .. 2^n - 1
        for (int v = 1; v < limit; ++v) s.push_back({v, 2 * v}), s.push_back({v, 2 * v + 1});
        return SimplicialComplex::from_simplices(std::move(s));
    };
    x.compactification = [](int) -> std::optional<Compactification> { return std::nullopt; };
    return x;
}

ExhaustedComplex disjoint_union(const ExhaustedComplex& a, const ExhaustedComplex& b) {
    ExhaustedComplex x;
    x.name = a.name + "+" + b.name;
    if (a.max_level || b.max_level)
        x.max_level = std::min(a.max_level.value_or(b.max_level.value_or(0)), b.max_level.value_or(a.max_level.value_or(0)));
    x.window_margin = std::max(a.window_margin, b.window_margin);
    x.level = [a, b](int n) { return join_disjoint(relabel(a.level(n), 2, 0), relabel(b.level(n), 2, 1)); };
    x.compactification = [a, b](int n) -> std::optional<Compactification> {
        auto ca = a.compactification ? a.compactification(n) : std::nullopt;
        auto cb = b.compactification ? b.compactification(n) : std::nullopt;
        if (!ca || !cb) return std::nullopt;
        return Compactification{join_disjoint(relabel(ca->closure, 2, 0), relabel(cb->closure, 2, 1)),
                                join_disjoint(relabel(ca->boundary, 2, 0), relabel(cb->boundary, 2, 1))};
    };
    return x;
}

ExhaustedComplex from_levels(std::string name, std::vector<SimplicialComplex> levels) {
    require(!levels.empty(), "exhaustion needs at least one level");
    for (std::size_t i = 0; i + 1 < levels.size(); ++i)
        require(levels[i].is_subcomplex_of(levels[i + 1]),
                "exhaustion is not increasing: level " + std::to_string(i + 1) + " is not inside level " + std::to_string(i + 2));
    ExhaustedComplex x;
    x.name = std::move(name);
    x.max_level = static_cast<int>(levels.size());
    x.level = [levels = std::move(levels)](int n) { return levels.at(static_cast<std::size_t>(n - 1)); };
    return x;
}

ExhaustedComplex from_files(std::string name, const std::vector<std::string>& paths) {
    std::vector<SimplicialComplex> levels;
    for (const auto& p : paths) levels.push_back(simplicial::read_complex_file(p));
    return from_levels(std::move(name), std::move(levels));
}

std::vector<std::string> exhaustion_names() { return {"cylinder", "line", "ray", "tree"}; }

ExhaustedComplex exhaustion_by_name(const std::string& name) {
    if (auto plus = name.find('+'); plus != std::string::npos)
        return disjoint_union(exhaustion_by_name(name.substr(0, plus)), exhaustion_by_name(name.substr(plus + 1)));
    if (name == "line") return line();
    if (name == "ray") return ray();
    if (name == "cylinder") return cylinder();
    if (name == "tree" || name == "binary-tree") return binary_tree();
    throw PreconditionError("unknown exhaustion '" + name + "' (expected line, ray, cylinder, tree or a+b)");
}

}  // namespace lefschetz::ends
