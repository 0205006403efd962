#pragma once

#include "cgeo/exact.hpp"

#include <cstdint>
#include <vector>

namespace cgeo {

// Betti numbers of (Lambda M / S^1, Lambda^0 M / S^1) over Q for H*(M;Q) = T_{d,h+1}(x).
struct BettiTable {
    int d = 0, h = 0;
    int q_max = 0;
    std::vector<std::int64_t> values;  // b_0 .. b_{q_max}
    std::int64_t operator[](int q) const { return values.at(static_cast<std::size_t>(q)); }
};

void require_valid_dh(int d, int h);
int big_d(int d, int h);  // D = d(h+1) - 2

// Coefficients of the Poincare series by truncated power-series arithmetic.
BettiTable betti_series(int d, int h, int q_max);
std::int64_t betti_closed(int d, int h, int q);
BettiTable betti_table(int d, int h, int q_max);  // closed form, tabulated

Rational B_constant(int d, int h);
Rational epsilon_dh(int d, int h, std::int64_t k);

struct PartialSum {
    std::int64_t direct = 0;        // summed from the table
    Rational closed;                // closed-form value
    Rational epsilon;               // the fractional correction term
    bool matches = false;           // direct == closed, and every alternative form agrees
    bool epsilon_in_bound = false;
};
// Odd d: sum of b_q over q <= k (all even degrees). Even d: sum of odd-degree b_q
// over q <= k; with signed_sum the alternating sum sum (-1)^q b_q is returned in
// direct and closed instead.
PartialSum partial_sum(int d, int h, std::int64_t k, bool signed_sum = false);

// Sum of b_{2j-1} over 0 <= 2j-1 <= dh-3, with its closed value dh(h-1)/4.
struct OddDegreeSum {
    std::int64_t direct;
    Rational closed;
};
OddDegreeSum odd_degree_sum(int d, int h);

}  // namespace cgeo
