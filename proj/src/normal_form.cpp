#include "cgeo/normal_form.hpp"

#include "cgeo/error.hpp"

namespace cgeo {

N2Block N2Block::from_entries(Turn turn, const Rational& b2, const Rational& b3) {
    // sin(2 pi t) > 0 exactly when t < 1/2.
    int sin_sign = sign(turn.value() - ExactScalar(make_rational(1, 2))) < 0 ? 1 : -1;
    int diff = sgn(b2 - b3);
    if (diff == 0) fail(ErrorCode::invalid, "N2 block with b2 = b3 is not a normal form");
    return N2Block{std::move(turn), diff * sin_sign < 0};
}

int Counts::dimension() const {
    return p_minus + p_zero + p_plus + q_minus + q_zero + q_plus + r + 2 * r_star + 2 * r_zero + h_minus + h_plus;
}

Counts counts(const std::vector<Block>& blocks) {
    Counts c;
    for (const auto& b : blocks) {
        if (auto* x = std::get_if<N1Plus>(&b)) {
            (x->a > 0 ? c.p_minus : x->a == 0 ? c.p_zero : c.p_plus)++;
        } else if (auto* x = std::get_if<N1Minus>(&b)) {
            (x->b > 0 ? c.q_minus : x->b == 0 ? c.q_zero : c.q_plus)++;
        } else if (auto* x = std::get_if<Rot>(&b)) {
            c.r++;
            if (!x->turn.is_rational()) c.k++;
        } else if (auto* x = std::get_if<N2Block>(&b)) {
            bool irr = !x->turn.is_rational();
            if (x->nontrivial) {
                c.r_star++;
                if (irr) c.k_star++;
            } else {
                c.r_zero++;
                if (irr) c.k_zero++;
            }
        } else if (auto* x = std::get_if<Hyp>(&b)) {
            (x->sign > 0 ? c.h_plus : c.h_minus)++;
        }
    }
    return c;
}

Counts counts(const Decomposition& dec) { return dec.counts(); }

std::vector<std::string> validate(const std::vector<Block>& blocks, std::optional<int> manifold_dim) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& b = blocks[i];
        std::string at = "blocks[" + std::to_string(i) + "]: ";
        if (auto* x = std::get_if<N1Plus>(&b); x && (x->a < -1 || x->a > 1))
            out.push_back(at + "N1(1,a) needs a in {-1,0,1}");
        if (auto* x = std::get_if<N1Minus>(&b); x && (x->b < -1 || x->b > 1))
            out.push_back(at + "N1(-1,b) needs b in {-1,0,1}");
        if (auto* x = std::get_if<Hyp>(&b); x && x->sign != 1 && x->sign != -1)
            out.push_back(at + "hyperbolic sign must be +1 or -1");
    }
    Counts c = counts(blocks);
    if (c.h_minus > 1) out.push_back("h_minus <= 1 violated (h_minus = " + std::to_string(c.h_minus) + ")");
    if (manifold_dim && c.dimension() != *manifold_dim - 1)
        out.push_back("dimension mismatch: blocks give d = " + std::to_string(c.dimension()) +
                      " but manifold dimension " + std::to_string(*manifold_dim) + " needs d = " +
                      std::to_string(*manifold_dim - 1));
    return out;
}

Decomposition::Decomposition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    auto v = validate(blocks_);
    if (!v.empty()) fail(ErrorCode::invalid, v.front());
    counts_ = cgeo::counts(blocks_);
}

int index_parity(const Decomposition& dec) {
    const Counts& c = dec.counts();
    return (c.p_minus + c.p_zero + c.q_minus + c.q_zero + c.q_plus + c.r + c.h_minus) % 2;
}

Kind classify(const Decomposition& dec) { return dec.counts().k >= 1 ? Kind::irrational : Kind::rational; }

SigmaSP invariants_sigma_s_p(const Decomposition& dec) {
    const Counts& c = dec.counts();
    return SigmaSP{
        c.r + c.p_plus + c.p_zero + c.q_minus + c.q_zero,
        c.r + c.p_minus + c.p_zero + c.q_plus + c.q_zero + 2 * (c.r_star - c.k_star),
        c.p_zero + c.p_minus + c.q_zero + c.q_plus + c.r + 2 * c.r_star,
    };
}

int nu_one(const Decomposition& dec) {
    const Counts& c = dec.counts();
    return c.p_minus + c.p_plus + 2 * c.p_zero;
}

std::string describe(const Block& b) {
    if (auto* x = std::get_if<N1Plus>(&b)) return "N1(1," + std::to_string(x->a) + ")";
    if (auto* x = std::get_if<N1Minus>(&b)) return "N1(-1," + std::to_string(x->b) + ")";
    if (auto* x = std::get_if<Rot>(&b)) return "R(" + x->turn.value().str() + ")";
    if (auto* x = std::get_if<N2Block>(&b))
        return std::string("N2(") + x->turn.value().str() + (x->nontrivial ? ",nontrivial)" : ",trivial)");
    auto* h = std::get_if<Hyp>(&b);
    return h->sign > 0 ? "H(2)" : "H(-2)";
}

}  // namespace cgeo
