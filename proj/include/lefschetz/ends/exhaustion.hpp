#pragma once

#include "lefschetz/simplicial/complex.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lefschetz::ends {

using simplicial::SimplicialComplex;
using simplicial::Vertex;

/// Finite compactification of the level-n piece: a complex containing K_n whose
/// subcomplex `boundary` plays the role of the points at infinity; the region
/// between K_n and the boundary is a collar.
struct Compactification {
    SimplicialComplex closure;
    SimplicialComplex boundary;
};

/// An infinite locally finite complex presented by its exhaustion K_1 ⊂ K_2 ⊂ ...
/// Components of X minus K_n are read off the full subcomplex of K_m (m > n) on
/// the vertices outside K_n; `window_margin` is the smallest m - n for which
/// this is faithful.
struct ExhaustedComplex {
    std::string name;
    std::function<SimplicialComplex(int)> level;
    std::optional<int> max_level;
    int window_margin = 1;
    std::function<std::optional<Compactification>(int)> compactification;

    /// K_n; throws PreconditionError past max_level ("generator exhausted").
    SimplicialComplex at(int n) const;
};

/// Path on the vertices -n..n.
ExhaustedComplex line();
/// Path on 0..n.
ExhaustedComplex ray();
/// Triangulated S^1 x R: rings of three vertices at heights -n..n.
ExhaustedComplex cylinder();
/// Rooted binary tree in heap numbering (root 1, children 2v and 2v + 1);
/// K_n holds the vertices of depth < n, so X minus K_n has 2^n components.
ExhaustedComplex binary_tree();
/// Disjoint union, vertices relabelled v -> 2v and v -> 2v + 1.
ExhaustedComplex disjoint_union(const ExhaustedComplex& a, const ExhaustedComplex& b);
/// One complex per level, read from the simplicial text format.
ExhaustedComplex from_files(std::string name, const std::vector<std::string>& paths);
ExhaustedComplex from_levels(std::string name, std::vector<SimplicialComplex> levels);

/// "line", "ray", "cylinder", "tree", or "<a>+<b>" for a disjoint union.
ExhaustedComplex exhaustion_by_name(const std::string& name);
std::vector<std::string> exhaustion_names();

}  // namespace lefschetz::ends
