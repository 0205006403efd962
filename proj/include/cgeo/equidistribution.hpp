#pragma once

#include "cgeo/exact.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace cgeo {

// chi in {0,1}^k: coordinate j near 1 when chi[j] = 1, near 0 otherwise.
using VertexPattern = std::vector<int>;

VertexPattern opposite(const VertexPattern& chi);

// Scans m = step, 2 step, ... <= m_max and reports the vertex (if any) that
// m * sigmas lies within epsilon of, componentwise. The callback returns
// false to stop the scan.
class VertexScanner {
public:
    VertexScanner(const std::vector<ExactScalar>& sigmas, const Rational& epsilon);
    std::optional<VertexPattern> classify(std::int64_t m) const;
    void scan(std::int64_t m_max, std::int64_t step,
              const std::function<bool(std::int64_t, const VertexPattern&)>& on_hit) const;

private:
    std::vector<ScaledScalar> sigmas_;
    Rational eps_, one_minus_eps_;
};

std::map<VertexPattern, std::vector<std::int64_t>> vertex_hits(const std::vector<ExactScalar>& sigmas,
                                                              const Rational& epsilon, std::int64_t m_max,
                                                              std::int64_t step = 1);

// P lists coordinates (0-based) that must sit near 1.
std::optional<std::int64_t> find_T(const std::vector<ExactScalar>& sigmas, const std::vector<int>& P,
                                   const Rational& epsilon, std::int64_t step, std::int64_t m_max);

std::set<VertexPattern> reachable_vertices(const std::vector<ExactScalar>& sigmas, const Rational& epsilon,
                                           std::int64_t m_max, std::int64_t step = 1);

}  // namespace cgeo
