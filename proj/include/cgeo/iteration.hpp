#pragma once

#include "cgeo/normal_form.hpp"

#include <cstdint>
#include <vector>

namespace cgeo {

class GeodesicSpec {
public:
    GeodesicSpec(Decomposition dec, int manifold_dim, int i1);

    const Decomposition& dec() const { return dec_; }
    const Counts& counts() const { return dec_.counts(); }
    int manifold_dim() const { return manifold_dim_; }
    int i1() const { return i1_; }
    int lambda() const { return lambda_; }

    // Turns of the R blocks in block order, and their irrational subset.
    const std::vector<ExactScalar>& rot_turns() const { return rot_turns_; }
    std::vector<ExactScalar> irrational_rot_turns() const;

    std::int64_t index(std::int64_t m) const;
    std::int64_t nullity(std::int64_t m) const;
    // chi_c(m) = m lambda + 2 sum_j [m sigma_j]; floors of irrational turns only differ.
    std::int64_t chi(std::int64_t m) const;
    // sum_j [m sigma_j] over all rotations.
    std::int64_t rot_floor_sum(std::int64_t m) const;

private:
    Decomposition dec_;
    int manifold_dim_;
    int i1_;
    int lambda_;
    std::vector<ExactScalar> rot_turns_;
    std::vector<ScaledScalar> rot_scaled_;
    std::vector<Rational> rot_rational_;                // rational rotation turns
    std::vector<Rational> n2_nontrivial_rational_;
    std::vector<Rational> n2_trivial_rational_;
};

ExactScalar mean_index(const GeodesicSpec& spec);

struct Period {
    std::int64_t n0;
    std::int64_t n;
};
Period analytical_period(const GeodesicSpec& spec);

bool sigma_parity_check(const GeodesicSpec& spec, std::int64_t T);

struct MonotoneReport {
    bool guaranteed;         // i1 + p_0 + p_- >= q_0 + q_+ + r + 2(r_* - k_*)
    bool dimension_sufficient;  // i1 >= manifold_dim - 2
};
MonotoneReport is_monotone_guaranteed(const GeodesicSpec& spec);

struct IndexRow {
    std::int64_t m, index, nullity;
    friend bool operator==(const IndexRow&, const IndexRow&) = default;
};
std::vector<IndexRow> index_table(const GeodesicSpec& spec, std::int64_t m_max);

// C with |i(c^m) - m * mean_index| <= C for every m.
std::int64_t mean_index_deviation_bound(const GeodesicSpec& spec);

}  // namespace cgeo
