#pragma once

#include "lefschetz/simplicial/complex.hpp"

namespace lefschetz::simplicial::catalog {

SimplicialComplex point();
/// Boundary of an m-gon, vertices 0..m-1 in cyclic order (m >= 3).
SimplicialComplex polygon(int m);
/// Cone over polygon(m) with apex m.
SimplicialComplex disk(int m);
/// Boundary of the 3-simplex on vertices 0..3.
SimplicialComplex tetrahedron_boundary();
/// Seven-vertex torus with triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
SimplicialComplex seven_vertex_torus();
/// m x n grid torus (m, n >= 3); vertex (i, j) has id grid_vertex(i, j, n).
SimplicialComplex grid_torus(int m, int n);
inline Vertex grid_vertex(int i, int j, int n) { return i * n + j; }

/// Sphere with poles and three latitude rings of m vertices each (m >= 3).
/// Ids: north 0, upper ring 1..m, middle ring m+1..2m, lower ring 2m+1..3m,
/// south 3m+1. The triangulation is symmetric under rotating all rings by one
/// step and under swapping the hemispheres.
struct RingSphere {
    int m;
    Vertex north() const { return 0; }
    Vertex upper(int i) const { return 1 + wrap(i); }
    Vertex middle(int i) const { return 1 + m + wrap(i); }
    Vertex lower(int i) const { return 1 + 2 * m + wrap(i); }
    Vertex south() const { return 1 + 3 * m; }
    int wrap(int i) const { return ((i % m) + m) % m; }

    SimplicialComplex complex() const;
    /// Every ring rotated by `steps` positions; poles fixed.
    std::map<Vertex, Vertex> rotation(int steps) const;
    /// z -> -z: poles swapped, upper and lower rings swapped, middle ring fixed.
    std::map<Vertex, Vertex> reflection() const;
    /// Full subcomplex on the south pole and the lower ring.
    SimplicialComplex south_cap() const;
    /// Full subcomplex on the north pole and the upper ring.
    SimplicialComplex north_cap() const;
};

/// i -> i + steps on polygon(m).
std::map<Vertex, Vertex> polygon_rotation(int m, int steps);
/// i -> -i on polygon(m).
std::map<Vertex, Vertex> polygon_reflection(int m);

}  // namespace lefschetz::simplicial::catalog
