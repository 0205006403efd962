#pragma once

#include "cgeo/exact.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cgeo {

// N1(1,a): a=+1 counts into p_-, a=0 (identity) into p_0, a=-1 into p_+.
struct N1Plus {
    int a;
};
// N1(-1,b): b=+1 counts into q_-, b=0 (minus identity) into q_0, b=-1 into q_+.
struct N1Minus {
    int b;
};
struct Rot {
    Turn turn;
};
// 4x4 block N2(omega, B); only the rotation and the triviality flag matter.
struct N2Block {
    Turn turn;
    bool nontrivial;
    // Classifies from the off-diagonal entries: nontrivial iff (b2-b3) sin(theta) < 0.
    static N2Block from_entries(Turn turn, const Rational& b2, const Rational& b3);
};
struct Hyp {
    int sign;
};

using Block = std::variant<N1Plus, N1Minus, Rot, N2Block, Hyp>;

struct Counts {
    int p_minus = 0, p_zero = 0, p_plus = 0;
    int q_minus = 0, q_zero = 0, q_plus = 0;
    int r = 0, k = 0;
    int r_star = 0, k_star = 0;
    int r_zero = 0, k_zero = 0;
    int h_plus = 0, h_minus = 0;

    // Left-hand side of the dimension identity; equals dim M - 1 for a geodesic.
    int dimension() const;
    friend bool operator==(const Counts&, const Counts&) = default;
};

class Decomposition {
public:
    Decomposition() = default;
    explicit Decomposition(std::vector<Block> blocks);
    const std::vector<Block>& blocks() const { return blocks_; }
    const Counts& counts() const { return counts_; }

private:
    std::vector<Block> blocks_;
    Counts counts_;
};

Counts counts(const std::vector<Block>& blocks);
Counts counts(const Decomposition& dec);

// Human-readable violations; empty means valid.
std::vector<std::string> validate(const std::vector<Block>& blocks, std::optional<int> manifold_dim = std::nullopt);

int index_parity(const Decomposition& dec);

enum class Kind { rational, irrational };
Kind classify(const Decomposition& dec);

struct SigmaSP {
    int sigma, s, p;
    friend bool operator==(const SigmaSP&, const SigmaSP&) = default;
};
SigmaSP invariants_sigma_s_p(const Decomposition& dec);

int nu_one(const Decomposition& dec);

std::string describe(const Block& b);

}  // namespace cgeo
