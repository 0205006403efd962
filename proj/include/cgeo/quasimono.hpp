#pragma once

#include "cgeo/equidistribution.hpp"
#include "cgeo/iteration.hpp"

#include <optional>
#include <string>

namespace cgeo {

std::int64_t chi_c(const GeodesicSpec& spec, std::int64_t m);
std::int64_t m1(const GeodesicSpec& spec);

struct AlphaBeta {
    ExactScalar alpha;
    std::optional<ExactScalar> beta;  // absent when P covers every irrational coordinate
};
// P indexes the irrational rotation turns (0-based); minima run over 1 <= m <= m1.
AlphaBeta alpha_beta(const GeodesicSpec& spec, const std::vector<int>& P, std::int64_t m1_value);
AlphaBeta alpha_beta(const GeodesicSpec& spec, int A);

struct QuasiMonoCert {
    int A = 0;
    std::vector<int> P;
    VertexPattern chi;
    std::int64_t T = 0;
    std::int64_t K1 = 0, K2 = 0;
    Rational epsilon;        // the epsilon' actually used for T
    std::int64_t m1 = 0;
    std::int64_t n = 0;
    ExactScalar alpha;
    std::optional<ExactScalar> beta;
};

// Returns nullopt when no vertex with |P| >= [(k+1)/2] is hit within m_max.
std::optional<QuasiMonoCert> certificate(const GeodesicSpec& spec, const Rational& epsilon, std::int64_t m_max);

struct CertViolation {
    std::int64_t m;
    std::string which;  // "K1" or "K2"
    std::int64_t difference;
};
struct CertReport {
    std::int64_t checked_to = 0;
    std::vector<CertViolation> violations;
    bool ok() const { return violations.empty(); }
};
CertReport verify_certificate(const GeodesicSpec& spec, const QuasiMonoCert& cert, std::int64_t check_to);

std::int64_t max_jump(const GeodesicSpec& spec, const QuasiMonoCert& cert);

}  // namespace cgeo
