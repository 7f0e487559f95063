#include "lefschetz/flows/catalog.hpp"

#include "lefschetz/linalg/error.hpp"
#include "lefschetz/simplicial/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace lefschetz::flows::catalog {

namespace scat = simplicial::catalog;
using linalg::Interval;
using linalg::RationalMatrix;
using simplicial::Vertex;

namespace {

Rational rational_lcm(const Rational& x, const Rational& y) {
    // Smallest positive T with T/x and T/y integers, for x, y > 0.
    Integer num = boost::multiprecision::lcm(numerator(x), numerator(y));
    Integer den = boost::multiprecision::gcd(denominator(x), denominator(y));
    return Rational(num, den);
}

std::vector<Vertex> vertex_set(const SimplicialComplex& k) { return k.vertices(); }

bool is_integer_value(const Rational& q) { return denominator(q) == 1; }

Point scale(const Point& p, const std::vector<Interval>& factors) {
    Point out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i] * factors[i];
    return out;
}

std::vector<SimplicialMap> compose_all(const SimplicialMap& sigma, const std::vector<std::map<Vertex, Vertex>>& maps) {
    std::vector<SimplicialMap> out;
    for (const auto& m : maps)
        out.push_back(simplicial::compose(SimplicialMap::self_map(sigma.source(), m), sigma));
    return out;
}

std::map<Vertex, Vertex> grid_shift(int n, int di, int dj) {
    std::map<Vertex, Vertex> f;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            f[scat::grid_vertex(i, j, n)] = scat::grid_vertex(((i + di) % n + n) % n, ((j + dj) % n + n) % n, n);
    return f;
}

}  // namespace

FlowSystem s1_gradient(const Rational& rate, bool reflect) {
    require(rate > 0, "gradient rate must be positive");
    const int m = 6;
    FlowSystem s;
    s.id = "s1-gradient";
    s.manifold = "circle";
    s.description = std::string("height gradient on S^1, sigma = ") + (reflect ? "reflection" : "id");
    s.triangulation = scat::polygon(m);
    s.sigma_simplicial = SimplicialMap::self_map(s.triangulation, reflect ? scat::polygon_reflection(m)
                                                                          : scat::polygon_rotation(m, 0));
    s.sigma_order = reflect ? 2 : 1;
    TangentMatrix sig = TangentMatrix::constant(RationalMatrix{{Rational(reflect ? -1 : 1)}});
    s.fixed_points.push_back({"source", 0, true, TangentMatrix::diagonal_exp({rate}), sig, 1, true});
    s.fixed_points.push_back({"sink", 3, true, TangentMatrix::diagonal_exp({-rate}), sig, 1, false});

    // Coordinate u = tan(theta / 2); the flow is u -> e^{rate t} u.
    s.flow = [rate](const Point& p, const Rational& t, unsigned bits) {
        return scale(p, {linalg::exp_enclosure(rate * t, bits)});
    };
    s.sigma = [reflect](const Point& p, unsigned) { return reflect ? Point{-p[0]} : p; };
    s.sample_points = {{-2}, {Rational(1, 3)}, {Rational(3, 2)}};
    s.composite_fixed_points = [rate](const Rational& time) {
        require(time * rate != 0, "phi^s sigma is the identity");
        return std::vector<std::string>{"source", "sink"};
    };
    std::vector<std::map<Vertex, Vertex>> rotations;
    for (int k = 1; k < m; ++k) rotations.push_back(scat::polygon_rotation(m, k));
    s.homotopic_representatives = compose_all(s.sigma_simplicial, rotations);
    // Closed invariant sets: unions of stationary points and closed arcs between them.
    s.flow_invariant = [](const SimplicialComplex& k) {
        auto vs = vertex_set(k);
        auto has = [&](Vertex v) { return std::binary_search(vs.begin(), vs.end(), v); };
        for (auto arc : {std::pair{1, 2}, std::pair{4, 5}}) {
            bool a = has(arc.first), b = has(arc.second);
            if (a != b) return false;
            if (a && !(has(0) && has(3))) return false;
        }
        return true;
    };
    s.regions = {{"none", SimplicialComplex{}},
                 {"source", s.triangulation.full_subcomplex({0})},
                 {"sink", s.triangulation.full_subcomplex({3})}};
    return s;
}

FlowSystem s1_rotation(const Rational& speed, int sigma_steps, int vertices) {
    require(speed != 0, "rotation speed must be nonzero");
    FlowSystem s;
    s.id = "s1-rotation";
    s.manifold = "circle";
    s.description = "rigid rotation of S^1, sigma = rotation by " + std::to_string(sigma_steps) + " steps";
    s.triangulation = scat::polygon(vertices);
    s.sigma_simplicial = SimplicialMap::self_map(s.triangulation, scat::polygon_rotation(vertices, sigma_steps));
    s.sigma_order = vertices / std::gcd(((sigma_steps % vertices) + vertices) % vertices, vertices);
    s.orbit_floor = 1 / abs(speed);
    const Rational turn(sigma_steps, vertices);
    // Coordinate: angle in turns.
    s.flow = [speed](const Point& p, const Rational& t, unsigned) { return Point{p[0] + Interval(speed * t)}; };
    s.sigma = [turn](const Point& p, unsigned) { return Point{p[0] + Interval(turn)}; };
    s.sample_points = {{0}, {Rational(1, 7)}, {Rational(5, 3)}};
    s.composite_fixed_points = [speed, turn](const Rational& time) {
        require(!is_integer_value(speed * time + turn), "phi^s sigma is the identity");
        return std::vector<std::string>{};
    };
    std::vector<std::map<Vertex, Vertex>> rotations;
    for (int k = 1; k < vertices; ++k) rotations.push_back(scat::polygon_rotation(vertices, k));
    s.homotopic_representatives = compose_all(s.sigma_simplicial, rotations);
    const std::size_t total = s.triangulation.total_count();
    s.flow_invariant = [total](const SimplicialComplex& k) { return k.empty() || k.total_count() == total; };
    s.regions = {{"none", SimplicialComplex{}}};
    return s;
}

FlowSystem s2_rotation(const Rational& speed, SphereSymmetry symmetry, const Rational& turn, int ring) {
    require(speed != 0, "rotation speed must be nonzero");
    scat::RingSphere sphere{ring};
    FlowSystem s;
    s.id = "s2-rotation";
    s.manifold = "sphere";
    s.triangulation = sphere.complex();
    s.orbit_floor = 1 / abs(speed);
    const bool reflect = symmetry == SphereSymmetry::reflection;
    int steps = 0;
    if (reflect) {
        s.description = "rotation of S^2 about the polar axis, sigma = z -> -z";
        s.sigma_simplicial = SimplicialMap::self_map(s.triangulation, sphere.reflection());
        s.sigma_order = 2;
    } else {
        Rational step_count = turn * ring;
        require(is_integer_value(step_count), "sigma rotation must move the rings by whole steps");
        steps = static_cast<int>(numerator(step_count).convert_to<long>() % ring);
        s.description = "rotation of S^2 about the polar axis, sigma = rotation by " + to_string(turn) + " turn";
        s.sigma_simplicial = SimplicialMap::self_map(s.triangulation, sphere.rotation(steps));
        s.sigma_order = ring / std::gcd((steps % ring + ring) % ring, ring);
    }
    const Rational sigma_turn = reflect ? Rational(0) : Rational(steps, ring);
    TangentMatrix flow_t = TangentMatrix::rotation(speed, 0);
    TangentMatrix sig = reflect ? TangentMatrix::identity(2) : TangentMatrix::rotation(0, sigma_turn);
    const Rational delta = 1 / abs(speed);
    s.fixed_points.push_back({"north", sphere.north(), !reflect, flow_t, sig, delta, false});
    s.fixed_points.push_back({"south", sphere.south(), !reflect, flow_t, sig, delta, false});

    auto rotate = [](const Point& p, const TangentMatrix& r, const Rational& t, unsigned bits) {
        auto m = r.evaluate(t, bits);
        return Point{m(0, 0) * p[0] + m(0, 1) * p[1], m(1, 0) * p[0] + m(1, 1) * p[1], p[2]};
    };
    s.flow = [rotate, flow_t](const Point& p, const Rational& t, unsigned bits) { return rotate(p, flow_t, t, bits); };
    if (reflect) {
        s.sigma = [](const Point& p, unsigned) { return Point{p[0], p[1], -p[2]}; };
    } else {
        TangentMatrix r = TangentMatrix::rotation(0, sigma_turn);
        s.sigma = [rotate, r](const Point& p, unsigned bits) { return rotate(p, r, Rational(0), bits); };
    }
    s.sample_points = {{Rational(1, 2), Rational(1, 3), Rational(2, 3)}, {-1, 2, 0}, {Rational(3, 5), Rational(4, 5), 0}};
    s.composite_fixed_points = [speed, sigma_turn, reflect](const Rational& time) {
        require(!is_integer_value(speed * time + sigma_turn), "phi^s sigma has a positive-dimensional fixed set");
        return reflect ? std::vector<std::string>{} : std::vector<std::string>{"north", "south"};
    };
    std::vector<std::map<Vertex, Vertex>> rotations;
    for (int k = 1; k < ring; ++k) rotations.push_back(sphere.rotation(k));
    s.homotopic_representatives = compose_all(s.sigma_simplicial, rotations);
    SimplicialMap latitude_step = SimplicialMap::self_map(s.triangulation, sphere.rotation(1));
    s.flow_invariant = [latitude_step](const SimplicialComplex& k) { return latitude_step.maps_into(k, k); };
    std::vector<Vertex> caps{sphere.north(), sphere.south()};
    for (int i = 0; i < ring; ++i) {
        caps.push_back(sphere.upper(i));
        caps.push_back(sphere.lower(i));
    }
    s.regions = {{"none", SimplicialComplex{}},
                 {"south-cap", sphere.south_cap()},
                 {"north-cap", sphere.north_cap()},
                 {"both-caps", s.triangulation.full_subcomplex(caps)}};
    return s;
}

FlowSystem t2_translation(const Rational& a, const Rational& b, int shift_i, int shift_j, int grid) {
    require(a != 0 || b != 0, "translation velocity must be nonzero");
    FlowSystem s;
    s.id = "t2-translation";
    s.manifold = "torus";
    s.description = "linear flow on T^2 with velocity (" + to_string(a) + ", " + to_string(b) + "), sigma = shift (" +
                    std::to_string(shift_i) + ", " + std::to_string(shift_j) + ")";
    s.triangulation = scat::grid_torus(grid, grid);
    s.sigma_simplicial = SimplicialMap::self_map(s.triangulation, grid_shift(grid, shift_i, shift_j));
    auto order = [grid](int d) { return grid / std::gcd(((d % grid) + grid) % grid, grid); };
    s.sigma_order = std::lcm(order(shift_i), order(shift_j));
    if (a == 0) s.orbit_floor = 1 / abs(b);
    else if (b == 0) s.orbit_floor = 1 / abs(a);
    else s.orbit_floor = rational_lcm(1 / abs(a), 1 / abs(b));
    const Rational si(shift_i, grid), sj(shift_j, grid);
    s.flow = [a, b](const Point& p, const Rational& t, unsigned) {
        return Point{p[0] + Interval(a * t), p[1] + Interval(b * t)};
    };
    s.sigma = [si, sj](const Point& p, unsigned) { return Point{p[0] + Interval(si), p[1] + Interval(sj)}; };
    s.sample_points = {{0, 0}, {Rational(1, 3), Rational(2, 5)}, {Rational(-7, 4), 3}};
    s.composite_fixed_points = [a, b, si, sj](const Rational& time) {
        require(!(is_integer_value(a * time + si) && is_integer_value(b * time + sj)), "phi^s sigma is the identity");
        return std::vector<std::string>{};
    };
    std::vector<std::map<Vertex, Vertex>> shifts;
    for (int k = 1; k < grid; ++k) {
        shifts.push_back(grid_shift(grid, k, 0));
        shifts.push_back(grid_shift(grid, 0, k));
    }
    s.homotopic_representatives = compose_all(s.sigma_simplicial, shifts);
    SimplicialComplex tri = s.triangulation;
    s.flow_invariant = [a, b, grid, tri](const SimplicialComplex& k) {
        if (k.empty() || k.total_count() == tri.total_count()) return true;
        if (a != 0 && b != 0) return false;
        SimplicialMap step = SimplicialMap::self_map(tri, b == 0 ? grid_shift(grid, 1, 0) : grid_shift(grid, 0, 1));
        return step.maps_into(k, k);
    };
    std::vector<Vertex> circle;
    for (int i = 0; i < grid; ++i) circle.push_back(b == 0 ? scat::grid_vertex(i, 0, grid) : scat::grid_vertex(0, i, grid));
    s.regions = {{"none", SimplicialComplex{}}};
    if (a == 0 || b == 0) s.regions.emplace("circle", s.triangulation.full_subcomplex(circle));
    return s;
}

FlowSystem t2_gradient(const Rational& rate_x, const Rational& rate_y, bool negate, int grid) {
    require(rate_x > 0 && rate_y > 0, "gradient rates must be positive");
    require(grid >= 4 && grid % 2 == 0, "gradient torus needs an even grid of size at least 4");
    FlowSystem s;
    s.id = "t2-gradient";
    s.manifold = "torus";
    s.description = std::string("product of circle gradients on T^2, sigma = ") + (negate ? "negation" : "id");
    s.triangulation = scat::grid_torus(grid, grid);
    std::map<Vertex, Vertex> neg;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            neg[scat::grid_vertex(i, j, grid)] = scat::grid_vertex((grid - i) % grid, (grid - j) % grid, grid);
    s.sigma_simplicial = SimplicialMap::self_map(s.triangulation, negate ? neg : grid_shift(grid, 0, 0));
    s.sigma_order = negate ? 2 : 1;
    TangentMatrix sig = TangentMatrix::constant(Rational(negate ? -1 : 1) * RationalMatrix::identity(2));
    const int h = grid / 2;
    s.fixed_points.push_back({"source", scat::grid_vertex(0, 0, grid), true,
                              TangentMatrix::diagonal_exp({rate_x, rate_y}), sig, 1, true});
    s.fixed_points.push_back({"saddle-x", scat::grid_vertex(0, h, grid), true,
                              TangentMatrix::diagonal_exp({rate_x, -rate_y}), sig, 1, true});
    s.fixed_points.push_back({"saddle-y", scat::grid_vertex(h, 0, grid), true,
                              TangentMatrix::diagonal_exp({-rate_x, rate_y}), sig, 1, true});
    s.fixed_points.push_back({"sink", scat::grid_vertex(h, h, grid), true,
                              TangentMatrix::diagonal_exp({-rate_x, -rate_y}), sig, 1, false});
    s.flow = [rate_x, rate_y](const Point& p, const Rational& t, unsigned bits) {
        return scale(p, {linalg::exp_enclosure(rate_x * t, bits), linalg::exp_enclosure(rate_y * t, bits)});
    };
    s.sigma = [negate](const Point& p, unsigned) { return negate ? Point{-p[0], -p[1]} : p; };
    s.sample_points = {{1, 2}, {Rational(-1, 3), Rational(5, 2)}, {0, Rational(-4, 3)}};
    s.composite_fixed_points = [](const Rational& time) {
        require(time != 0, "phi^s sigma is the identity");
        return std::vector<std::string>{"source", "saddle-x", "saddle-y", "sink"};
    };
    std::vector<std::map<Vertex, Vertex>> shifts;
    for (int k = 1; k < grid; ++k) {
        shifts.push_back(grid_shift(grid, k, 0));
        shifts.push_back(grid_shift(grid, 0, k));
    }
    s.homotopic_representatives = compose_all(s.sigma_simplicial, shifts);
    std::set<Vertex> stationary;
    for (const auto& x : s.fixed_points) stationary.insert(x.vertex);
    const std::size_t total = s.triangulation.total_count();
    s.flow_invariant = [stationary, total](const SimplicialComplex& k) {
        if (k.total_count() == total) return true;
        return std::all_of(k.vertices().begin(), k.vertices().end(), [&](Vertex v) { return stationary.count(v) > 0; });
    };
    s.regions = {{"none", SimplicialComplex{}},
                 {"sink", s.triangulation.full_subcomplex({scat::grid_vertex(h, h, grid)})},
                 {"source", s.triangulation.full_subcomplex({scat::grid_vertex(0, 0, grid)})}};
    return s;
}

std::vector<std::string> flow_ids() {
    return {"s1-gradient", "s1-rotation", "s2-rotation", "t2-gradient", "t2-translation"};
}

namespace {

std::vector<std::string> words(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

Rational rational_param(const Params& p, const std::string& key, const Rational& fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : parse_rational(it->second);
}

int int_param(const Params& p, const std::string& key, int fallback) {
    Rational q = rational_param(p, key, Rational(fallback));
    require(is_integer_value(q), "parameter '" + key + "' must be an integer");
    return numerator(q).convert_to<int>();
}

void check_known(const Params& p, const std::set<std::string>& known, const std::string& id) {
    for (const auto& [k, v] : p)
        require(known.count(k) > 0, "flow '" + id + "' has no parameter '" + k + "'");
}

}  // namespace

FlowSystem make_flow(const std::string& id, const Params& params) {
    auto sigma = words(params.count("sigma") ? params.at("sigma") : "id");
    require(!sigma.empty(), "empty sigma specification");
    const std::string& kind = sigma[0];
    auto bad_sigma = [&] { return PreconditionError("flow '" + id + "' does not support sigma '" + params.at("sigma") + "'"); };
    if (id == "s1-gradient") {
        check_known(params, {"rate", "sigma"}, id);
        if (kind != "id" && kind != "reflection") throw bad_sigma();
        return s1_gradient(rational_param(params, "rate", 1), kind == "reflection");
    }
    if (id == "s1-rotation") {
        check_known(params, {"speed", "sigma", "vertices"}, id);
        int steps = 0;
        if (kind == "steps" && sigma.size() == 2) steps = numerator(parse_rational(sigma[1])).convert_to<int>();
        else if (kind != "id") throw bad_sigma();
        return s1_rotation(rational_param(params, "speed", 1), steps, int_param(params, "vertices", 6));
    }
    if (id == "s2-rotation") {
        check_known(params, {"speed", "sigma", "ring"}, id);
        const Rational speed = rational_param(params, "speed", 1);
        const int ring = int_param(params, "ring", 6);
        if (kind == "reflection") return s2_rotation(speed, SphereSymmetry::reflection, 0, ring);
        if (kind == "id") return s2_rotation(speed, SphereSymmetry::rotation, 0, ring);
        if (kind == "rotation" && sigma.size() == 2)
            return s2_rotation(speed, SphereSymmetry::rotation, parse_rational(sigma[1]), ring);
        throw bad_sigma();
    }
    if (id == "t2-translation") {
        check_known(params, {"velocity", "sigma", "grid"}, id);
        auto v = words(params.count("velocity") ? params.at("velocity") : "1 0");
        require(v.size() == 2, "velocity needs two components");
        int di = 0, dj = 0;
        if (kind == "shift" && sigma.size() == 3) {
            di = numerator(parse_rational(sigma[1])).convert_to<int>();
            dj = numerator(parse_rational(sigma[2])).convert_to<int>();
        } else if (kind != "id") {
            throw bad_sigma();
        }
        return t2_translation(parse_rational(v[0]), parse_rational(v[1]), di, dj, int_param(params, "grid", 4));
    }
    if (id == "t2-gradient") {
        check_known(params, {"rate", "rate_y", "sigma", "grid"}, id);
        if (kind != "id" && kind != "negate") throw bad_sigma();
        Rational rx = rational_param(params, "rate", 1);
        return t2_gradient(rx, rational_param(params, "rate_y", rx), kind == "negate", int_param(params, "grid", 4));
    }
    throw PreconditionError("unknown flow '" + id + "'");
}

}  // namespace lefschetz::flows::catalog
