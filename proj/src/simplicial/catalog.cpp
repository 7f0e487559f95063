#include "lefschetz/simplicial/catalog.hpp"

#include "lefschetz/linalg/error.hpp"

namespace lefschetz::simplicial::catalog {

SimplicialComplex point() { return SimplicialComplex::from_simplices({{0}}); }

SimplicialComplex polygon(int m) {
    require(m >= 3, "polygon needs at least 3 vertices");
    std::vector<Simplex> edges;
    for (int i = 0; i < m; ++i) edges.push_back({i, (i + 1) % m});
    return SimplicialComplex::from_simplices(std::move(edges));
}

SimplicialComplex disk(int m) {
    require(m >= 3, "disk needs at least 3 boundary vertices");
    std::vector<Simplex> triangles;
    for (int i = 0; i < m; ++i) triangles.push_back({i, (i + 1) % m, m});
    return SimplicialComplex::from_simplices(std::move(triangles));
}

SimplicialComplex tetrahedron_boundary() {
    return SimplicialComplex::from_simplices({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex seven_vertex_torus() {
    std::vector<Simplex> triangles;
    for (int i = 0; i < 7; ++i) {
        triangles.push_back({i, (i + 1) % 7, (i + 3) % 7});
        triangles.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::from_simplices(std::move(triangles));
}

SimplicialComplex grid_torus(int m, int n) {
    require(m >= 3 && n >= 3, "grid torus needs at least 3 x 3 vertices");
    std::vector<Simplex> triangles;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            Vertex a = grid_vertex(i, j, n);
            Vertex b = grid_vertex((i + 1) % m, j, n);
            Vertex c = grid_vertex((i + 1) % m, (j + 1) % n, n);
            Vertex d = grid_vertex(i, (j + 1) % n, n);
            triangles.push_back({a, b, c});
            triangles.push_back({a, d, c});
        }
    return SimplicialComplex::from_simplices(std::move(triangles));
}

SimplicialComplex RingSphere::complex() const {
    require(m >= 3, "ring sphere needs rings of at least 3 vertices");
    std::vector<Simplex> t;
    for (int i = 0; i < m; ++i) {
        t.push_back({north(), upper(i), upper(i + 1)});
        t.push_back({south(), lower(i), lower(i + 1)});
        // The two bands are mirror images so that the reflection is simplicial.
        t.push_back({upper(i), upper(i + 1), middle(i + 1)});
        t.push_back({upper(i), middle(i), middle(i + 1)});
        t.push_back({lower(i), lower(i + 1), middle(i + 1)});
        t.push_back({lower(i), middle(i), middle(i + 1)});
    }
    return SimplicialComplex::from_simplices(std::move(t));
}

std::map<Vertex, Vertex> RingSphere::rotation(int steps) const {
    std::map<Vertex, Vertex> f{{north(), north()}, {south(), south()}};
    for (int i = 0; i < m; ++i) {
        f[upper(i)] = upper(i + steps);
        f[middle(i)] = middle(i + steps);
        f[lower(i)] = lower(i + steps);
    }
    return f;
}

std::map<Vertex, Vertex> RingSphere::reflection() const {
    std::map<Vertex, Vertex> f{{north(), south()}, {south(), north()}};
    for (int i = 0; i < m; ++i) {
        f[upper(i)] = lower(i);
        f[lower(i)] = upper(i);
        f[middle(i)] = middle(i);
    }
    return f;
}

SimplicialComplex RingSphere::south_cap() const {
    std::vector<Vertex> vs{south()};
    for (int i = 0; i < m; ++i) vs.push_back(lower(i));
    return complex().full_subcomplex(vs);
}

SimplicialComplex RingSphere::north_cap() const {
    std::vector<Vertex> vs{north()};
    for (int i = 0; i < m; ++i) vs.push_back(upper(i));
    return complex().full_subcomplex(vs);
}

std::map<Vertex, Vertex> polygon_rotation(int m, int steps) {
    std::map<Vertex, Vertex> f;
    for (int i = 0; i < m; ++i) f[i] = (((i + steps) % m) + m) % m;
    return f;
}

std::map<Vertex, Vertex> polygon_reflection(int m) {
    std::map<Vertex, Vertex> f;
    for (int i = 0; i < m; ++i) f[i] = (m - i) % m;
    return f;
}

}  // namespace lefschetz::simplicial::catalog
