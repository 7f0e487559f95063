#include "lefschetz/filtered/filtered.hpp"

#include "lefschetz/linalg/error.hpp"

#include <algorithm>

namespace lefschetz::filtered {

using nlohmann::ordered_json;

namespace {

std::vector<std::size_t> indices_with(const std::vector<int>& weights, auto predicate) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (predicate(weights[i])) out.push_back(i);
    return out;
}

RationalMatrix coordinate_columns(std::size_t dim, const std::vector<std::size_t>& idx) {
    return linalg::select_columns(RationalMatrix::identity(dim), idx);
}

}  // namespace

bool preserves_filtration(const std::vector<int>& weights, const RationalMatrix& map) {
    if (map.rows() != weights.size() || map.cols() != weights.size()) return false;
    for (std::size_t i = 0; i < weights.size(); ++i)
        for (std::size_t j = 0; j < weights.size(); ++j)
            if (weights[i] < weights[j] && map(i, j) != 0) return false;
    return true;
}

FilteredSpace::FilteredSpace(std::vector<int> weights, RationalMatrix endomorphism, std::optional<RationalMatrix> involution)
    : weights_(std::move(weights)), e_(std::move(endomorphism)), involution_(std::move(involution)) {
    require(!weights_.empty(), "filtered space needs positive dimension");
    require(e_.rows() == weights_.size() && e_.is_square(), "endomorphism size differs from the dimension");
    require(preserves_filtration(weights_, e_), "endomorphism does not preserve the filtration");
    if (involution_) {
        require(involution_->rows() == weights_.size() && involution_->is_square(), "involution size differs from the dimension");
        require((*involution_) * (*involution_) == RationalMatrix::identity(weights_.size()), "involution does not square to the identity");
        require(preserves_filtration(weights_, *involution_), "involution does not preserve the filtration");
    }
}

FilteredSpace FilteredSpace::from_jumps(std::size_t dimension, const std::vector<std::size_t>& jumps, RationalMatrix endomorphism,
                                        std::optional<RationalMatrix> involution) {
    for (std::size_t i = 0; i < jumps.size(); ++i) {
        require(jumps[i] > 0 && jumps[i] < dimension, "jump positions must lie strictly between 0 and the dimension");
        require(i == 0 || jumps[i - 1] < jumps[i], "jump positions must increase");
    }
    std::vector<int> weights(dimension);
    for (std::size_t i = 0; i < dimension; ++i)
        weights[i] = static_cast<int>(std::count_if(jumps.begin(), jumps.end(), [&](std::size_t j) { return j > i; }));
    return FilteredSpace(std::move(weights), std::move(endomorphism), std::move(involution));
}

std::vector<int> FilteredSpace::jumps() const {
    std::vector<int> w = weights_;
    std::sort(w.begin(), w.end(), std::greater<>());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
}

RationalMatrix FilteredSpace::step(int k) const {
    return coordinate_columns(dimension(), indices_with(weights_, [k](int w) { return w >= k; }));
}

std::vector<GradedPiece> graded(const FilteredSpace& m) {
    std::vector<GradedPiece> out;
    for (int k : m.jumps()) {
        // Work inside V^k: restrict, then pass to the quotient by V^{k+1}.
        RationalMatrix vk = m.step(k);
        RationalMatrix local = linalg::restrict_to(m.endomorphism(), vk);
        std::vector<std::size_t> inside = indices_with(m.weights(), [k](int w) { return w >= k; });
        std::vector<std::size_t> deeper, top;
        for (std::size_t c = 0; c < inside.size(); ++c) (m.weights()[inside[c]] > k ? deeper : top).push_back(c);
        RationalMatrix sub = coordinate_columns(inside.size(), deeper);
        RationalMatrix complement = coordinate_columns(inside.size(), top);
        GradedPiece piece;
        piece.weight = k;
        piece.endomorphism = linalg::induced_on_quotient(local, sub, complement);
        if (m.involution())
            piece.involution = linalg::induced_on_quotient(linalg::restrict_to(*m.involution(), vk), sub, complement);
        out.push_back(std::move(piece));
    }
    std::size_t total = 0;
    for (const auto& p : out) total += p.endomorphism.rows();
    ensure(total == m.dimension(), "graded pieces do not add up to the dimension");
    return out;
}

VerificationReport graded_trace_identity(const FilteredSpace& m) {
    std::vector<GradedPiece> pieces = graded(m);
    Rational gr = 0;
    ordered_json blocks = ordered_json::array();
    for (const auto& p : pieces) {
        Rational t = trace(p.endomorphism);
        gr += t;
        ordered_json b{{"weight", p.weight}, {"dimension", p.endomorphism.rows()}, {"trace", to_string(t)}};
        if (p.involution) b["involution_trace"] = to_string(trace(*p.involution));
        blocks.push_back(b);
    }
    VerificationReport r = make_report("gr-trace", gr, "graded-pieces->induced-quotient-traces", trace(m.endomorphism()),
                                       "ambient-trace");
    r.detail["dimension"] = m.dimension();
    r.detail["pieces"] = blocks;
    if (m.involution()) r.detail["involution_trace"] = to_string(trace(*m.involution()));
    return r;
}

}  // namespace lefschetz::filtered
