#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lefschetz::simplicial {

using Vertex = int;
/// Vertices in strictly increasing order.
using Simplex = std::vector<Vertex>;

/// Finite abstract simplicial complex, closed under taking faces. Simplices of
/// each dimension are stored in lexicographic order, which fixes the cochain
/// bases used everywhere downstream.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Face closure of the given simplices. Each input simplex is sorted;
    /// repeated vertices inside a simplex are rejected.
    static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

    bool empty() const noexcept { return by_dim_.empty(); }
    /// -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

    /// Simplices of dimension `dim` (an empty list outside 0..dimension()).
    const std::vector<Simplex>& simplices(int dim) const;
    std::size_t count(int dim) const { return simplices(dim).size(); }
    std::size_t total_count() const;

    bool contains(const Simplex& s) const;
    bool contains_vertex(Vertex v) const;
    std::optional<std::size_t> index_of(const Simplex& s) const;

    bool is_subcomplex_of(const SimplicialComplex& other) const;
    /// Subcomplex such that every simplex of `other` spanned by its vertices belongs to it.
    bool is_full_subcomplex_of(const SimplicialComplex& other) const;
    /// The full subcomplex of *this spanned by the given vertices.
    SimplicialComplex full_subcomplex(const std::vector<Vertex>& vertices) const;

    long euler_characteristic() const;

    /// Maximal simplices, lexicographic within each dimension, highest dimension first.
    std::vector<Simplex> facets() const;

    bool operator==(const SimplicialComplex& other) const { return by_dim_ == other.by_dim_; }

private:
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<Simplex, std::size_t>> index_;
    std::vector<Vertex> vertices_;
};

/// A vertex map sending every simplex of the source onto a simplex of the target.
class SimplicialMap {
public:
    /// The empty map between empty complexes.
    SimplicialMap() = default;
    /// Throws PreconditionError if a vertex is unmapped, mapped outside the
    /// target, or some simplex has a non-simplex image.
    SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::map<Vertex, Vertex> vertex_map);

    static SimplicialMap identity(const SimplicialComplex& k);
    /// Self-map of `k` from a vertex map.
    static SimplicialMap self_map(const SimplicialComplex& k, std::map<Vertex, Vertex> vertex_map);

    const SimplicialComplex& source() const noexcept { return source_; }
    const SimplicialComplex& target() const noexcept { return target_; }
    const std::map<Vertex, Vertex>& vertex_map() const noexcept { return map_; }
    bool is_self_map() const { return source_ == target_; }

    Vertex operator()(Vertex v) const { return map_.at(v); }

    /// Image of an oriented simplex: the sorted target simplex and the sign of
    /// the sorting permutation, or nothing when the image collapses.
    std::optional<std::pair<Simplex, int>> oriented_image(const Simplex& s) const;

    /// Whether every simplex of `sub` lands in `target_sub`.
    bool maps_into(const SimplicialComplex& sub, const SimplicialComplex& target_sub) const;

private:
    SimplicialComplex source_;
    SimplicialComplex target_;
    std::map<Vertex, Vertex> map_;
};

/// (this after first): x -> second(first(x)).
SimplicialMap compose(const SimplicialMap& second, const SimplicialMap& first);

/// Text format: one simplex per line as whitespace-separated vertex ids,
/// '#' starts a comment, blank lines are ignored.
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex parse_complex_string(const std::string& text);
SimplicialComplex read_complex_file(const std::string& path);
void write_complex(std::ostream& out, const SimplicialComplex& k);

/// Map format: one "source target" vertex pair per line.
SimplicialMap parse_map(std::istream& in, const SimplicialComplex& source, const SimplicialComplex& target);
SimplicialMap parse_map_string(const std::string& text, const SimplicialComplex& source,
                               const SimplicialComplex& target);

}  // namespace lefschetz::simplicial
