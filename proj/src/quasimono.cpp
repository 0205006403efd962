#include "cgeo/quasimono.hpp"

#include "cgeo/error.hpp"

#include <algorithm>

namespace cgeo {

namespace {

void require_positive_mean(const GeodesicSpec& spec) {
    if (sign(mean_index(spec)) <= 0)
        fail(ErrorCode::precondition, "mean index " + mean_index(spec).str() + " is not positive");
}

}  // namespace

std::int64_t chi_c(const GeodesicSpec& spec, std::int64_t m) {
    require_positive_mean(spec);
    return spec.chi(m);
}

std::int64_t m1(const GeodesicSpec& spec) {
    require_positive_mean(spec);
    std::int64_t tau = spec.i1() + 4 * spec.manifold_dim() + 2 * spec.counts().k;
    // chi_c(m) >= m ihat - 2r, so every m >= (tau + 2r)/ihat already clears tau.
    ExactScalar ihat = mean_index(spec);
    Rational top(tau + 2 * spec.counts().r);
    // least integer M with M ihat >= tau + 2r
    Integer M = 1;
    while (sign(ihat * Rational(M) - ExactScalar(top)) < 0) M *= 2;
    Integer lo = M / 2, hi = M;  // lo fails (or is 0), hi passes
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (sign(ihat * Rational(mid) - ExactScalar(top)) >= 0) hi = mid;
        else lo = mid;
    }
    if (!hi.fits_slong_p()) fail(ErrorCode::precondition, "m1 bound exceeds 64 bits");
    for (std::int64_t m = hi.get_si() - 1; m >= 1; --m)
        if (spec.chi(m) < tau) return m + 1;
    return 1;
}

AlphaBeta alpha_beta(const GeodesicSpec& spec, const std::vector<int>& P, std::int64_t m1_value) {
    auto sig = spec.irrational_rot_turns();
    int k = static_cast<int>(sig.size());
    std::vector<bool> inP(k, false);
    for (int j : P) {
        if (j < 0 || j >= k) fail(ErrorCode::precondition, "coordinate out of range");
        inP[j] = true;
    }
    if (P.empty() || static_cast<int>(P.size()) > k) fail(ErrorCode::precondition, "need 1 <= A <= k");
    std::optional<ExactScalar> alpha, beta;
    for (int j = 0; j < k; ++j) {
        auto& slot = inP[j] ? alpha : beta;
        for (std::int64_t m = 1; m <= m1_value; ++m) {
            ExactScalar f = frac_exact(sig[j] * Rational(m));
            if (!slot || f < *slot) slot = f;
        }
    }
    return AlphaBeta{*alpha, beta};
}

AlphaBeta alpha_beta(const GeodesicSpec& spec, int A) {
    std::vector<int> P;
    for (int j = 0; j < A; ++j) P.push_back(j);
    return alpha_beta(spec, P, m1(spec));
}

std::optional<QuasiMonoCert> certificate(const GeodesicSpec& spec, const Rational& epsilon, std::int64_t m_max) {
    require_positive_mean(spec);
    auto sig = spec.irrational_rot_turns();
    int k = static_cast<int>(sig.size());
    if (k < 1) fail(ErrorCode::precondition, "certificate needs an irrational rotation");
    Rational eps = epsilon;
    Rational quarter = make_rational(1, 4);
    if (sgn(eps) <= 0) fail(ErrorCode::precondition, "epsilon must be positive");
    if (eps >= quarter) eps = make_rational(1, 5);
    const Counts& c = spec.counts();
    std::int64_t n = analytical_period(spec).n;
    std::int64_t m1v = m1(spec);

    auto reach = reachable_vertices(sig, eps, m_max, n);
    std::vector<VertexPattern> cands;
    for (const auto& chi : reach) {
        int a = static_cast<int>(std::count(chi.begin(), chi.end(), 1));
        if (a >= (k + 1) / 2) cands.push_back(chi);
    }
    std::stable_sort(cands.begin(), cands.end(), [](const VertexPattern& x, const VertexPattern& y) {
        auto a = std::count(x.begin(), x.end(), 1), b = std::count(y.begin(), y.end(), 1);
        if (a != b) return a > b;
        return x < y;
    });
    for (const auto& chi : cands) {
        std::vector<int> P;
        for (int j = 0; j < k; ++j)
            if (chi[j]) P.push_back(j);
        AlphaBeta ab = alpha_beta(spec, P, m1v);
        ExactScalar e(eps);
        if (ab.alpha < e) e = ab.alpha;
        if (ab.beta && *ab.beta < e) e = *ab.beta;
        // The scanner takes a rational epsilon; use a rational just below e when e is irrational.
        Rational er = e.is_rational() ? e.base() : Rational(0);
        if (!e.is_rational()) {
            Integer den = 2;
            while (true) {
                Rational cand(floor_exact(e * Rational(den)), den);
                cand.canonicalize();
                if (sgn(cand) > 0) {
                    er = cand;
                    break;
                }
                den *= 2;
            }
        }
        auto T = find_T(sig, P, er, n, m_max);
        if (!T) continue;
        QuasiMonoCert cert;
        cert.A = static_cast<int>(P.size());
        cert.P = P;
        cert.chi = chi;
        cert.T = *T;
        cert.epsilon = er;
        cert.m1 = m1v;
        cert.n = n;
        cert.alpha = ab.alpha;
        cert.beta = ab.beta;
        int lam = spec.lambda();
        cert.K1 = lam + (c.q_zero + c.q_plus) + 2 * (c.r - c.k) + 2 * (c.r_star - c.k_star) + 2 * cert.A;
        cert.K2 = lam - (c.q_zero + c.q_plus) + 2 * c.k - 2 * (c.r_star - c.k_star) - 2 * cert.A;
        if (cert.K1 + cert.K2 != 2 * (spec.i1() + c.p_minus + c.p_zero))
            fail(ErrorCode::internal, "K1 + K2 identity failed");
        return cert;
    }
    return std::nullopt;
}

CertReport verify_certificate(const GeodesicSpec& spec, const QuasiMonoCert& cert, std::int64_t check_to) {
    CertReport rep;
    rep.checked_to = check_to;
    std::int64_t iT = spec.index(cert.T);
    for (std::int64_t m = 1; m < cert.T; ++m) {
        std::int64_t d = iT - spec.index(m);
        if (d < cert.K2) rep.violations.push_back({m, "K2", d});
    }
    for (std::int64_t m = cert.T + 1; m <= check_to; ++m) {
        std::int64_t d = spec.index(m) - iT;
        if (d < cert.K1) rep.violations.push_back({m, "K1", d});
    }
    return rep;
}

std::int64_t max_jump(const GeodesicSpec& spec, const QuasiMonoCert& cert) {
    const Counts& c = spec.counts();
    if (cert.A != c.k) fail(ErrorCode::precondition, "maximal jump needs A = k");
    std::int64_t jump = spec.index(cert.T + 1) - spec.index(cert.T);
    std::int64_t expect =
        spec.i1() + c.p_minus + c.p_zero + c.q_zero + c.q_plus + c.r + 2 * (c.r_star - c.k_star);
    if (jump != expect)
        fail(ErrorCode::internal, "maximal jump " + std::to_string(jump) + " differs from " + std::to_string(expect));
    return jump;
}

}  // namespace cgeo
