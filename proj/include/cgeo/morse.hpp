#pragma once

#include "cgeo/betti.hpp"
#include "cgeo/iteration.hpp"

#include <optional>
#include <string>

namespace cgeo {

// Critical-module data of c^m for m = 1..n; entry m-1 serves every m' = m mod n.
struct KEntry {
    std::int64_t m;
    int epsilon;   // (-1)^{i(c^m) - i(c)}
    std::int64_t nu;
    std::vector<std::int64_t> kvec;  // indices 0..nu
    friend bool operator==(const KEntry&, const KEntry&) = default;
};

struct KAssignment {
    std::int64_t n = 0;
    std::vector<KEntry> entries;
    const KEntry& at(std::int64_t m) const { return entries[static_cast<std::size_t>((m - 1) % n)]; }
    friend bool operator==(const KAssignment&, const KAssignment&) = default;
};

struct GeodesicModel {
    GeodesicSpec spec;
    KAssignment kassign;
};

// Empty string when the assignment satisfies every critical-module constraint.
std::string check_kassignment(const GeodesicSpec& spec, const KAssignment& ka, int cap = 1);
std::vector<KAssignment> admissible_kassignments(const GeodesicSpec& spec, int cap = 1);

struct MorseNumbers {
    std::vector<std::int64_t> M;            // M_0 .. M_{q_max}
    std::vector<std::int64_t> m_caps;       // per model: iterates beyond this have index > q_max
    bool reversible = false;
};
// m_cap, when given, applies to every model and is checked against the index table.
MorseNumbers morse_numbers(const std::vector<GeodesicModel>& models, int q_max, bool reversible,
                           std::optional<std::int64_t> m_cap = std::nullopt);

// Least m_cap with i(c^m) > q_max for every m > m_cap, from the mean-index bound.
std::int64_t certified_m_cap(const GeodesicSpec& spec, int q_max);

struct MorseWitness {
    std::string check;  // "weak", "strong", "lacunary", "parity"
    int q;
    std::int64_t M, b;
    std::int64_t value;  // alternating sum for "strong", M_q - b_q otherwise
};

struct MorseReport {
    int q_max = 0;
    std::optional<MorseWitness> weak, strong, lacunary, parity;
    // Parity of the degrees where M vanishes identically, when one does.
    std::optional<int> lacunary_parity;
    bool ok() const { return !weak && !strong && !lacunary && !parity; }
    std::optional<MorseWitness> first() const;
};
MorseReport morse_check(const std::vector<std::int64_t>& M, const std::vector<std::int64_t>& b, int q_max,
                        bool reversible = false);

Rational chi_hat(const GeodesicModel& model);
ExactScalar identity_residual(const std::vector<GeodesicModel>& models, int d, int h, bool reversible);

struct KappaResult {
    Rational kappa;
    Rational rhs;    // alternating Betti sum
    Rational lhs_b;  // B(d,h)(i + p)
    bool violation;  // kappa negative or not an integer (or odd, in the reversible form)
};
KappaResult theorem43_kappa(int d, int h, std::int64_t i_cn, std::int64_t p_c, std::int64_t mu,
                            bool reversible = false);

}  // namespace cgeo
