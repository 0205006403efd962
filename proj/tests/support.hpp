#pragma once

#include "cgeo/iteration.hpp"

#include <algorithm>
#include <random>

namespace cgeo::testing {

inline ExactScalar sq(std::uint64_t n, long num = 1, long den = 1) { return ExactScalar::sqrt_of(n, make_rational(num, den)); }
inline ExactScalar rq(long num, long den = 1) { return ExactScalar(make_rational(num, den)); }

// Irrational turn {a/b + (c/e) sqrt(n)} away from 1/2.
inline ExactScalar random_irrational_turn(std::mt19937_64& rng) {
    static const std::uint64_t radicands[] = {2, 3, 5, 6, 7, 10, 11};
    std::uniform_int_distribution<long> small(1, 9), sgn(0, 1);
    std::uniform_int_distribution<std::size_t> pick(0, std::size(radicands) - 1);
    ExactScalar x = rq(small(rng), small(rng) + 1) + sq(radicands[pick(rng)], sgn(rng) ? small(rng) : -small(rng), small(rng));
    return frac_exact(x);
}

inline ExactScalar random_rational_turn(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> den(3, 12);
    for (;;) {
        long q = den(rng);
        long p = std::uniform_int_distribution<long>(1, q - 1)(rng);
        if (2 * p != q) return rq(p, q);
    }
}

// Exact omega-index i_w(c) at w = exp(2 pi i t), 0 < t < 1, for the block
// contributions of the iteration formula: N1(1,a) with a >= 0 add one away
// from 1, R(s) subtracts one on [s, 1-s] when s < 1/2 and adds one on (1-s, s)
// otherwise, q_0 + q_+ drop at -1 and nontrivial N2 drop at their angles.
inline std::int64_t omega_index(const GeodesicSpec& spec, const ExactScalar& t) {
    const Counts& k = spec.counts();
    std::int64_t v = spec.i1() + k.p_minus + k.p_zero;
    if (t == rq(1, 2)) v -= k.q_zero + k.q_plus;
    for (const auto& s : spec.rot_turns()) {
        ExactScalar lo = s, hi = rq(1) - s;
        if (s < rq(1, 2)) {
            if (lo <= t && t <= hi) v -= 1;
        } else if (hi < t && t < lo) {
            v += 1;
        }
    }
    for (const auto& b : spec.dec().blocks())
        if (auto* n2 = std::get_if<N2Block>(&b); n2 && n2->nontrivial) {
            const ExactScalar& a = n2->turn.value();
            if (t == a || t == rq(1) - a) v -= 1;
        }
    return v;
}

// Geodesics have nonnegative omega-indices on the whole circle; checked at
// every breakpoint and every gap between consecutive breakpoints.
inline bool realizable(const GeodesicSpec& spec) {
    if (spec.i1() + spec.counts().p_minus + spec.counts().p_zero < 0 || spec.i1() < 0) return false;
    std::vector<ExactScalar> pts{rq(0), rq(1, 2), rq(1)};
    for (const auto& s : spec.rot_turns()) {
        pts.push_back(s);
        pts.push_back(rq(1) - s);
    }
    for (const auto& b : spec.dec().blocks())
        if (auto* n2 = std::get_if<N2Block>(&b)) {
            pts.push_back(n2->turn.value());
            pts.push_back(rq(1) - n2->turn.value());
        }
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (i > 0 && omega_index(spec, pts[i]) < 0) return false;
        if (pts[i] < pts[i + 1] && omega_index(spec, (pts[i] + pts[i + 1]) / make_rational(2)) < 0) return false;
    }
    return true;
}

inline Block random_block(std::mt19937_64& rng, bool with_n2) {
    int kind = std::uniform_int_distribution<int>(0, with_n2 ? 5 : 4)(rng);
    int a = std::uniform_int_distribution<int>(-1, 1)(rng);
    bool irr = std::uniform_int_distribution<int>(0, 2)(rng) != 0;
    switch (kind) {
    case 0: return N1Plus{a};
    case 1: return N1Minus{a};
    case 2:
    case 3: return Rot{Turn(irr ? random_irrational_turn(rng) : random_rational_turn(rng))};
    case 4: return Hyp{1};
    default: return N2Block{Turn(irr ? random_irrational_turn(rng) : random_rational_turn(rng)), a >= 0};
    }
}

// Random spec with the parity-consistent initial index; min_i1 raises it.
inline GeodesicSpec random_spec(std::mt19937_64& rng, bool with_n2 = true, int max_blocks = 4, int min_i1 = 0) {
    for (;;) {
        int nb = std::uniform_int_distribution<int>(1, max_blocks)(rng);
        std::vector<Block> blocks;
        for (int i = 0; i < nb; ++i) blocks.push_back(random_block(rng, with_n2));
        if (std::uniform_int_distribution<int>(0, 4)(rng) == 0) blocks.push_back(Hyp{-1});
        Decomposition dec(blocks);
        int parity = index_parity(dec);
        int i1 = min_i1 + std::uniform_int_distribution<int>(0, 4)(rng);
        if (i1 % 2 != parity) ++i1;
        GeodesicSpec spec(dec, dec.counts().dimension() + 1, i1);
        if (realizable(spec)) return spec;
    }
}

}  // namespace cgeo::testing
