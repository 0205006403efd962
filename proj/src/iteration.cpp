#include "cgeo/iteration.hpp"

#include "cgeo/error.hpp"

#include <numeric>

namespace cgeo {

namespace {

bool divides(const Rational& t, std::int64_t m) {
    // m t is an integer
    Integer mm = m;
    return mpz_divisible_p(mm.get_mpz_t(), t.get_den_mpz_t()) != 0;
}

int phi_rational(const Rational& t, std::int64_t m) { return divides(t, m) ? 0 : 1; }

std::int64_t to_i64(const Integer& z) {
    if (!z.fits_slong_p()) fail(ErrorCode::internal, "index value exceeds 64 bits");
    return z.get_si();
}

}  // namespace

GeodesicSpec::GeodesicSpec(Decomposition dec, int manifold_dim, int i1)
    : dec_(std::move(dec)), manifold_dim_(manifold_dim), i1_(i1) {
    if (manifold_dim_ < 2) fail(ErrorCode::invalid, "manifold dimension must be >= 2");
    if (i1_ < 0) fail(ErrorCode::invalid, "initial index must be >= 0");
    auto v = validate(dec_.blocks(), manifold_dim_);
    if (!v.empty()) fail(ErrorCode::invalid, v.front());
    if (i1_ % 2 != index_parity(dec_))
        fail(ErrorCode::invalid, "initial index " + std::to_string(i1_) + " has the wrong parity for these blocks (need " +
                                     (index_parity(dec_) ? "odd" : "even") + ")");
    const Counts& c = dec_.counts();
    lambda_ = i1_ + c.p_minus + c.p_zero - c.r;
    for (const auto& b : dec_.blocks()) {
        if (auto* x = std::get_if<Rot>(&b)) {
            rot_turns_.push_back(x->turn.value());
            rot_scaled_.emplace_back(x->turn.value());
            if (x->turn.is_rational()) rot_rational_.push_back(x->turn.value().base());
        } else if (auto* x = std::get_if<N2Block>(&b); x && x->turn.is_rational()) {
            (x->nontrivial ? n2_nontrivial_rational_ : n2_trivial_rational_).push_back(x->turn.value().base());
        }
    }
}

std::vector<ExactScalar> GeodesicSpec::irrational_rot_turns() const {
    std::vector<ExactScalar> out;
    for (const auto& t : rot_turns_)
        if (!t.is_rational()) out.push_back(t);
    return out;
}

std::int64_t GeodesicSpec::rot_floor_sum(std::int64_t m) const {
    Integer s = 0, mm = m;
    for (const auto& x : rot_scaled_) s += x.floor_times(mm);
    return to_i64(s);
}

std::int64_t GeodesicSpec::index(std::int64_t m) const {
    if (m < 1) fail(ErrorCode::precondition, "iterate m must be >= 1");
    const Counts& c = dec_.counts();
    // E(m sigma) = [m sigma] + phi(m sigma); phi is 1 unless m sigma is an integer.
    std::int64_t ceil_sum = rot_floor_sum(m);
    for (const auto& t : rot_turns_) ceil_sum += t.is_rational() ? phi_rational(t.base(), m) : 1;
    std::int64_t phi_n2 = 0;
    for (const auto& t : n2_nontrivial_rational_) phi_n2 += phi_rational(t, m);
    std::int64_t even = (m % 2 == 0) ? 1 : 0;
    return m * lambda_ + 2 * ceil_sum - c.r - c.p_minus - c.p_zero - even * (c.q_zero + c.q_plus) + 2 * phi_n2 -
           2 * (c.r_star - c.k_star);
}

std::int64_t GeodesicSpec::nullity(std::int64_t m) const {
    if (m < 1) fail(ErrorCode::precondition, "iterate m must be >= 1");
    const Counts& c = dec_.counts();
    std::int64_t varsigma = (c.r - c.k) + (c.r_star - c.k_star) + (c.r_zero - c.k_zero);
    for (const auto& t : rot_rational_) varsigma -= phi_rational(t, m);
    for (const auto& t : n2_nontrivial_rational_) varsigma -= phi_rational(t, m);
    for (const auto& t : n2_trivial_rational_) varsigma -= phi_rational(t, m);
    std::int64_t even = (m % 2 == 0) ? 1 : 0;
    return nu_one(dec_) + even * (c.q_minus + 2 * c.q_zero + c.q_plus) + 2 * varsigma;
}

std::int64_t GeodesicSpec::chi(std::int64_t m) const { return m * lambda_ + 2 * rot_floor_sum(m); }

ExactScalar mean_index(const GeodesicSpec& spec) {
    ExactScalar s(spec.lambda());
    for (const auto& t : spec.rot_turns()) s += t * Rational(2);
    return s;
}

Period analytical_period(const GeodesicSpec& spec) {
    const Counts& c = spec.counts();
    Integer L = 1;
    if (c.q_minus + c.q_zero + c.q_plus + c.h_minus > 0) L = 2;
    for (const auto& b : spec.dec().blocks()) {
        const Turn* t = nullptr;
        if (auto* x = std::get_if<Rot>(&b)) t = &x->turn;
        if (auto* x = std::get_if<N2Block>(&b)) t = &x->turn;
        if (t && t->is_rational()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), t->denominator().get_mpz_t());
    }
    if (!L.fits_slong_p() || L > 100000000) fail(ErrorCode::precondition, "analytical period bound too large");
    std::int64_t l = L.get_si();
    std::int64_t n0 = 1, best = spec.nullity(1);
    for (std::int64_t m = 2; m <= l; ++m) {
        std::int64_t v = spec.nullity(m);
        if (v > best) {
            best = v;
            n0 = m;
        }
    }
    bool even = true;
    for (std::int64_t m = 1; m <= l && even; ++m) even = (spec.index(m + n0) - spec.index(m)) % 2 == 0;
    Period p{n0, even ? n0 : 2 * n0};
    if (p.n == 2 * p.n0 && !(c.q_minus == 0 && c.h_minus == 1 && p.n0 % 2 == 1))
        fail(ErrorCode::internal, "doubled period without q_- = 0, h_- = 1, n0 odd");
    return p;
}

bool sigma_parity_check(const GeodesicSpec& spec, std::int64_t T) {
    Period p = analytical_period(spec);
    if (T <= 0 || T % (2 * p.n) != 0)
        fail(ErrorCode::precondition, "T = " + std::to_string(T) + " is not an even multiple of n = " + std::to_string(p.n));
    int sigma = invariants_sigma_s_p(spec.dec()).sigma;
    std::int64_t v = spec.index(T) + spec.nullity(p.n) - sigma;
    return v % 2 == 0;
}

MonotoneReport is_monotone_guaranteed(const GeodesicSpec& spec) {
    const Counts& c = spec.counts();
    return MonotoneReport{
        spec.i1() + c.p_zero + c.p_minus >= c.q_zero + c.q_plus + c.r + 2 * (c.r_star - c.k_star),
        spec.i1() >= spec.manifold_dim() - 2,
    };
}

std::vector<IndexRow> index_table(const GeodesicSpec& spec, std::int64_t m_max) {
    if (m_max < 1) fail(ErrorCode::precondition, "m_max must be >= 1");
    std::vector<IndexRow> rows;
    rows.reserve(static_cast<std::size_t>(m_max));
    for (std::int64_t m = 1; m <= m_max; ++m) rows.push_back({m, spec.index(m), spec.nullity(m)});
    return rows;
}

std::int64_t mean_index_deviation_bound(const GeodesicSpec& spec) {
    const Counts& c = spec.counts();
    return 2 * c.r + c.p_minus + c.p_zero + c.q_zero + c.q_plus + 2 * (c.r_star - c.k_star) + c.r;
}

}  // namespace cgeo
