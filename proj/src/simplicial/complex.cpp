#include "lefschetz/simplicial/complex.hpp"

#include "lefschetz/linalg/error.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace lefschetz::simplicial {

namespace {

const std::vector<Simplex> kNoSimplices;

std::string describe(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
    std::set<Simplex> all;
    for (auto& s : simplices) {
        if (s.empty()) continue;
        std::sort(s.begin(), s.end());
        require(std::adjacent_find(s.begin(), s.end()) == s.end(), "simplex " + describe(s) + " repeats a vertex");
        // Every nonempty subset is a face.
        const std::size_t n = s.size();
        require(n < 24, "simplex too large");
        for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1UL << i)) face.push_back(s[i]);
            all.insert(std::move(face));
        }
    }
    SimplicialComplex k;
    for (const auto& s : all) {
        std::size_t d = s.size() - 1;
        if (k.by_dim_.size() <= d) k.by_dim_.resize(d + 1);
        k.by_dim_[d].push_back(s);
    }
    k.index_.resize(k.by_dim_.size());
    for (std::size_t d = 0; d < k.by_dim_.size(); ++d)
        for (std::size_t i = 0; i < k.by_dim_[d].size(); ++i) k.index_[d].emplace(k.by_dim_[d][i], i);
    if (!k.by_dim_.empty())
        for (const auto& v : k.by_dim_[0]) k.vertices_.push_back(v[0]);
    return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
    if (dim < 0 || dim > dimension()) return kNoSimplices;
    return by_dim_[static_cast<std::size_t>(dim)];
}

std::size_t SimplicialComplex::total_count() const {
    std::size_t n = 0;
    for (const auto& level : by_dim_) n += level.size();
    return n;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    if (s.empty() || s.size() > by_dim_.size()) return std::nullopt;
    const auto& idx = index_[s.size() - 1];
    auto it = idx.find(s);
    if (it == idx.end()) return std::nullopt;
    return it->second;
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s).has_value(); }

bool SimplicialComplex::contains_vertex(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    for (const auto& level : by_dim_)
        for (const auto& s : level)
            if (!other.contains(s)) return false;
    return true;
}

bool SimplicialComplex::is_full_subcomplex_of(const SimplicialComplex& other) const {
    if (!is_subcomplex_of(other)) return false;
    for (int d = 0; d <= other.dimension(); ++d)
        for (const auto& s : other.simplices(d)) {
            bool spanned = std::all_of(s.begin(), s.end(), [&](Vertex v) { return contains_vertex(v); });
            if (spanned && !contains(s)) return false;
        }
    return true;
}

SimplicialComplex SimplicialComplex::full_subcomplex(const std::vector<Vertex>& vertices) const {
    std::set<Vertex> keep(vertices.begin(), vertices.end());
    std::vector<Simplex> kept;
    for (const auto& level : by_dim_)
        for (const auto& s : level)
            if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return keep.count(v) > 0; })) kept.push_back(s);
    return from_simplices(std::move(kept));
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(by_dim_[d].size());
    return chi;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    // A simplex is maximal iff it is not a codimension-one face of anything.
    std::set<Simplex> faces;
    for (int d = 1; d <= dimension(); ++d)
        for (const auto& s : simplices(d))
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                faces.insert(std::move(face));
            }
    std::vector<Simplex> out;
    for (int d = dimension(); d >= 0; --d)
        for (const auto& s : simplices(d))
            if (!faces.count(s)) out.push_back(s);
    return out;
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::map<Vertex, Vertex> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertex_map)) {
    for (Vertex v : source_.vertices()) {
        auto it = map_.find(v);
        require(it != map_.end(), "vertex " + std::to_string(v) + " has no image");
        require(target_.contains_vertex(it->second),
                "vertex " + std::to_string(v) + " maps to " + std::to_string(it->second) + " outside the target");
    }
    for (int d = 1; d <= source_.dimension(); ++d)
        for (const auto& s : source_.simplices(d)) {
            Simplex image;
            for (Vertex v : s) image.push_back(map_.at(v));
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            require(target_.contains(image), "image of simplex " + describe(s) + " is not a simplex of the target");
        }
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& k) {
    std::map<Vertex, Vertex> m;
    for (Vertex v : k.vertices()) m.emplace(v, v);
    return {k, k, std::move(m)};
}

SimplicialMap SimplicialMap::self_map(const SimplicialComplex& k, std::map<Vertex, Vertex> vertex_map) {
    return {k, k, std::move(vertex_map)};
}

std::optional<std::pair<Simplex, int>> SimplicialMap::oriented_image(const Simplex& s) const {
    Simplex image;
    image.reserve(s.size());
    for (Vertex v : s) image.push_back(map_.at(v));
    // Insertion sort, counting transpositions for the orientation sign.
    int sign = 1;
    for (std::size_t i = 1; i < image.size(); ++i)
        for (std::size_t j = i; j > 0 && image[j - 1] >= image[j]; --j) {
            if (image[j - 1] == image[j]) return std::nullopt;
            std::swap(image[j - 1], image[j]);
            sign = -sign;
        }
    return std::make_pair(std::move(image), sign);
}

bool SimplicialMap::maps_into(const SimplicialComplex& sub, const SimplicialComplex& target_sub) const {
    for (int d = 0; d <= sub.dimension(); ++d)
        for (const auto& s : sub.simplices(d)) {
            Simplex image;
            for (Vertex v : s) image.push_back(map_.at(v));
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (!target_sub.contains(image)) return false;
        }
    return true;
}

SimplicialMap compose(const SimplicialMap& second, const SimplicialMap& first) {
    require(first.target() == second.source(), "compose: target and source differ");
    std::map<Vertex, Vertex> m;
    for (const auto& [v, w] : first.vertex_map()) m.emplace(v, second(w));
    return {first.source(), second.target(), std::move(m)};
}

namespace {

// Integers on one line after stripping comments; nullopt for blank lines.
std::optional<std::vector<long>> parse_line(const std::string& raw, int line_no) {
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream fields(line);
    std::vector<long> out;
    std::string token;
    while (fields >> token) {
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) throw ParseError("expected a vertex id, got '" + token + "'", line_no);
        out.push_back(value);
    }
    if (out.empty()) return std::nullopt;
    return out;
}

}  // namespace

SimplicialComplex parse_complex(std::istream& in) {
    std::vector<Simplex> simplices;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto values = parse_line(raw, line_no);
        if (!values) continue;
        Simplex s(values->begin(), values->end());
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ParseError("simplex repeats a vertex", line_no);
        simplices.push_back(std::move(s));
    }
    return SimplicialComplex::from_simplices(std::move(simplices));
}

SimplicialComplex parse_complex_string(const std::string& text) {
    std::istringstream in(text);
    return parse_complex(in);
}

SimplicialComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open complex file '" + path + "'", 0);
    return parse_complex(in);
}

void write_complex(std::ostream& out, const SimplicialComplex& k) {
    for (const auto& f : k.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << '\n';
    }
}

SimplicialMap parse_map(std::istream& in, const SimplicialComplex& source, const SimplicialComplex& target) {
    std::map<Vertex, Vertex> m;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto values = parse_line(raw, line_no);
        if (!values) continue;
        if (values->size() != 2) throw ParseError("expected 'source target' vertex pair", line_no);
        if (!m.emplace(static_cast<Vertex>((*values)[0]), static_cast<Vertex>((*values)[1])).second)
            throw ParseError("vertex " + std::to_string((*values)[0]) + " mapped twice", line_no);
    }
    return {source, target, std::move(m)};
}

SimplicialMap parse_map_string(const std::string& text, const SimplicialComplex& source,
                               const SimplicialComplex& target) {
    std::istringstream in(text);
    return parse_map(in, source, target);
}

}  // namespace lefschetz::simplicial
