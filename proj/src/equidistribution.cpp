#include "cgeo/equidistribution.hpp"

#include "cgeo/error.hpp"

namespace cgeo {

VertexPattern opposite(const VertexPattern& chi) {
    VertexPattern out(chi.size());
    for (std::size_t i = 0; i < chi.size(); ++i) out[i] = 1 - chi[i];
    return out;
}

VertexScanner::VertexScanner(const std::vector<ExactScalar>& sigmas, const Rational& epsilon)
    : eps_(epsilon), one_minus_eps_(Rational(1) - epsilon) {
    // Up to 1/2 the two neighbourhoods of a coordinate stay disjoint.
    if (sgn(epsilon) <= 0 || epsilon > make_rational(1, 2))
        fail(ErrorCode::precondition, "epsilon must lie in (0, 1/2]");
    for (const auto& s : sigmas) {
        if (s.is_rational()) fail(ErrorCode::precondition, "vertex search needs irrational turns, got " + s.str());
        sigmas_.emplace_back(s);
    }
}

std::optional<VertexPattern> VertexScanner::classify(std::int64_t m) const {
    VertexPattern chi(sigmas_.size());
    Integer mm = m;
    for (std::size_t j = 0; j < sigmas_.size(); ++j) {
        Integer k = sigmas_[j].floor_times(mm);
        if (sigmas_[j].sign_shifted(mm, k, eps_) < 0) chi[j] = 0;
        else if (sigmas_[j].sign_shifted(mm, k, one_minus_eps_) > 0) chi[j] = 1;
        else return std::nullopt;
    }
    return chi;
}

void VertexScanner::scan(std::int64_t m_max, std::int64_t step,
                         const std::function<bool(std::int64_t, const VertexPattern&)>& on_hit) const {
    if (step < 1) fail(ErrorCode::precondition, "step must be >= 1");
    for (std::int64_t m = step; m <= m_max; m += step) {
        auto chi = classify(m);
        if (chi && !on_hit(m, *chi)) return;
    }
}

std::map<VertexPattern, std::vector<std::int64_t>> vertex_hits(const std::vector<ExactScalar>& sigmas,
                                                              const Rational& epsilon, std::int64_t m_max,
                                                              std::int64_t step) {
    std::map<VertexPattern, std::vector<std::int64_t>> out;
    VertexScanner(sigmas, epsilon).scan(m_max, step, [&](std::int64_t m, const VertexPattern& chi) {
        out[chi].push_back(m);
        return true;
    });
    return out;
}

std::optional<std::int64_t> find_T(const std::vector<ExactScalar>& sigmas, const std::vector<int>& P,
                                   const Rational& epsilon, std::int64_t step, std::int64_t m_max) {
    VertexPattern want(sigmas.size(), 0);
    for (int j : P) {
        if (j < 0 || j >= static_cast<int>(sigmas.size())) fail(ErrorCode::precondition, "coordinate out of range");
        want[j] = 1;
    }
    std::optional<std::int64_t> found;
    VertexScanner(sigmas, epsilon).scan(m_max, step, [&](std::int64_t m, const VertexPattern& chi) {
        if (chi != want) return true;
        found = m;
        return false;
    });
    return found;
}

std::set<VertexPattern> reachable_vertices(const std::vector<ExactScalar>& sigmas, const Rational& epsilon,
                                           std::int64_t m_max, std::int64_t step) {
    std::set<VertexPattern> out;
    std::size_t all = sigmas.size() < 20 ? (std::size_t{1} << sigmas.size()) : SIZE_MAX;
    VertexScanner(sigmas, epsilon).scan(m_max, step, [&](std::int64_t, const VertexPattern& chi) {
        out.insert(chi);
        return out.size() < all;
    });
    return out;
}

}  // namespace cgeo
