#pragma once

#include "cgeo/morse.hpp"
#include "cgeo/quasimono.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cgeo {

// Case split of [m s1] + [m s2] when s1 + s2 = q/p.
struct FloorSplitReport {
    std::int64_t checked = 0;
    std::int64_t below = 0;      // {m s1} < {mq/p}: sum equals [mq/p]
    std::int64_t above = 0;      // {m s1} > {mq/p}: sum equals [mq/p] - 1
    std::int64_t multiples = 0;  // p | m, always the second branch
    std::optional<std::int64_t> first_below;
    std::optional<std::int64_t> first_failure;
    bool ok() const { return !first_failure; }
};
FloorSplitReport floor_split_check(std::int64_t p, std::int64_t q, const ExactScalar& sigma1, std::int64_t m_max);

// One hypothetical single-geodesic configuration on a 4-manifold:
// P_c ~ R(s1) <> R(s2) <> G with i(c) = i1.
struct CaseSpec {
    int d = 0, h = 0;
    std::string g_label;
    Block G;
    int i1 = 0;
    bool reversible = false;
};
std::vector<CaseSpec> enumerate_dim4_cases(bool reversible);

struct AuditBounds {
    std::vector<int> q_ladder{32, 128, 512, 2048};
    std::int64_t separation_m_max = 1000000;
};

// Outcome of one admissible k-vector assignment within a case.
struct BranchResult {
    std::size_t kindex = 0;  // position in admissible_kassignments
    KAssignment kassign;
    std::string route;       // "identity", "morse", "separation" or "open"
    std::optional<Rational> mean_index;
    std::optional<Rational> sigma_sum;
    std::optional<ExactScalar> sigma1, sigma2;
    int q_max = 0;
    std::optional<MorseWitness> witness;
    std::string detail;
    bool killed() const { return route != "open"; }
};

struct Verdict {
    CaseSpec cs;
    std::optional<ExactScalar> sample;
    bool contradiction = false;
    std::vector<BranchResult> branches;
    // First witness over the branches that reached the Morse stage.
    std::optional<MorseWitness> first_witness() const;
};

GeodesicSpec build_case_spec(const CaseSpec& cs, const ExactScalar& s1, const ExactScalar& s2);
Verdict audit_case(const CaseSpec& cs, const std::optional<ExactScalar>& sample, const AuditBounds& bounds = {});
// Recomputes a killed branch from scratch; true when the same conclusion is reached.
bool replay(const CaseSpec& cs, const BranchResult& branch);

std::vector<ExactScalar> shipped_samples();

struct AuditSummary {
    bool reversible = false;
    std::vector<Verdict> verdicts;
    bool all_contradiction() const;
};
AuditSummary audit_all(bool reversible, const std::vector<ExactScalar>& samples, const AuditBounds& bounds = {});

struct RationalAuditRow {
    int two_eta = 0;
    Rational epsilon;
    bool below_bound = false;
    bool matches_epsilon_dh = false;
    // 2eta <= dh-2: closed form (p(d-2) - 2mh)/D and its bound (h-1)(d-2)/D.
    std::optional<Rational> decomposition;
    bool decomposition_ok = true;
    // 2eta >= dh: the reduction to a smaller argument holds.
    std::optional<bool> reduction_ok;
    bool ok() const;
};
struct RationalAuditReport {
    int d = 0, h = 0, D = 0;
    Rational bound;
    std::vector<RationalAuditRow> rows;
    bool ok() const;
};
RationalAuditReport rational_audit(int d, int h);

// Completely non-degenerate single geodesic: r irrational rotations and
// hyperbolic blocks, i(c) = d - 1 and M_q = b_q in every degree.
struct NondegCase {
    int r = 0, h_plus = 0, h_minus = 0;
    std::optional<ExactScalar> sample;
    std::string route;  // "identity", "parity", "bott", "count", "gap" or "open"
    std::optional<Rational> sigma_sum;
    std::vector<ExactScalar> sigmas;
    std::int64_t T = 0, R = 0, R_tilde = 0;  // T is the offending iterate on the "bott" route
    int r1 = 0;
    std::int64_t betti_value = 0, morse_value = 0;
    bool separation_inequality = false;  // the index bound at T that forces h < 1
    bool h_lt_1 = false;
    std::string detail;
    bool contradiction() const { return route != "open"; }
};
struct NondegReport {
    int d = 0, h = 0;
    bool reversible = false;
    std::vector<NondegCase> cases;
    bool all_contradiction() const;
};
NondegReport nondegenerate_audit(int d, int h, const std::vector<ExactScalar>& samples, bool reversible = false,
                                 std::int64_t m_max = 1000000);

}  // namespace cgeo
