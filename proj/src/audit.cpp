#include "cgeo/audit.hpp"

#include "cgeo/error.hpp"

#include <numeric>

namespace cgeo {

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) {
    Rational q(Integer(static_cast<long>(n)), Integer(static_cast<long>(d)));
    q.canonicalize();
    return q;
}

ExactScalar placeholder_turn() { return ExactScalar::sqrt_of(2) - ExactScalar(1); }

bool in_open_unit(const ExactScalar& x) { return sign(x) > 0 && sign(x - ExactScalar(1)) < 0; }

std::vector<std::pair<std::string, Block>> g_menu() {
    std::vector<std::pair<std::string, Block>> out;
    for (int a : {-1, 0, 1}) out.emplace_back("N1(1," + std::to_string(a) + ")", N1Plus{a});
    for (int b : {-1, 0, 1}) out.emplace_back("N1(-1," + std::to_string(b) + ")", N1Minus{b});
    for (auto [p, q] : {std::pair{1, 3}, {2, 3}, {1, 4}, {3, 4}, {1, 5}, {2, 5}, {1, 6}, {5, 6}}) {
        Turn t(ExactScalar(R(p, q)));
        out.emplace_back("R(" + std::to_string(p) + "/" + std::to_string(q) + ")", Rot{t});
    }
    return out;
}

// Everything except the two irrational turns is fixed by the case, so the
// index is lambda_eff * m + 2([m s1] + [m s2]) + (periodic terms) and the mean
// index is lambda_eff + 2(s1 + s2).
Rational lambda_eff(const GeodesicSpec& ph, const ExactScalar& turn_sum) {
    ExactScalar l = mean_index(ph) - ExactScalar(Rational(2)) * turn_sum;
    if (!l.is_rational()) fail(ErrorCode::internal, "mean index offset is not rational");
    return l.base();
}

std::vector<std::int64_t> betti_values(int d, int h, int q_max) { return betti_table(d, h, q_max).values; }

bool same_witness(const std::optional<MorseWitness>& a, const std::optional<MorseWitness>& b) {
    if (!a || !b) return !a && !b;
    return a->check == b->check && a->q == b->q && a->M == b->M && a->b == b->b && a->value == b->value;
}

struct SigmaPair {
    ExactScalar s1, s2;
};

// s1 = lo + (hi - lo) s, s2 = S - s1 with lo = max(0, S-1), hi = min(1, S).
SigmaPair instantiate(const Rational& S, const ExactScalar& s) {
    Rational lo = S > 1 ? S - 1 : Rational(0);
    Rational hi = S < 1 ? S : Rational(1);
    ExactScalar s1 = ExactScalar(lo) + s * (hi - lo);
    return {s1, ExactScalar(S) - s1};
}

void require_sample(const ExactScalar& s) {
    if (s.is_rational() || !in_open_unit(s)) fail(ErrorCode::precondition, "sample " + s.str() + " must be irrational in (0,1)");
}

}  // namespace

FloorSplitReport floor_split_check(std::int64_t p, std::int64_t q, const ExactScalar& sigma1, std::int64_t m_max) {
    if (p < 1 || q < 1) fail(ErrorCode::precondition, "p and q must be positive");
    if (std::gcd(p, q) != 1) fail(ErrorCode::precondition, "p and q must be coprime");
    if (sigma1.is_rational() || !in_open_unit(sigma1)) fail(ErrorCode::precondition, "sigma1 must be irrational in (0,1)");
    ExactScalar sigma2 = ExactScalar(R(q, p)) - sigma1;
    if (!in_open_unit(sigma2)) fail(ErrorCode::precondition, "sigma2 = q/p - sigma1 = " + sigma2.str() + " is not in (0,1)");
    ScaledScalar a(sigma1), b(sigma2);
    FloorSplitReport rep;
    for (std::int64_t m = 1; m <= m_max; ++m) {
        Integer mm(static_cast<long>(m));
        Integer f1 = a.floor_times(mm), f2 = b.floor_times(mm);
        Rational mq = R(m, 1) * R(q, p);
        Integer fl = floor_rational(mq);
        Rational fr = mq - Rational(fl);
        int s = a.sign_shifted(mm, f1, fr);
        if (s == 0) fail(ErrorCode::internal, "irrational fractional part met a rational one");
        Integer expect = s < 0 ? fl : fl - 1;
        if (s < 0) {
            ++rep.below;
            if (!rep.first_below) rep.first_below = m;
        } else {
            ++rep.above;
        }
        if (m % p == 0) {
            ++rep.multiples;
            if (s < 0 && !rep.first_failure) rep.first_failure = m;
        }
        if (f1 + f2 != expect && !rep.first_failure) rep.first_failure = m;
        ++rep.checked;
    }
    return rep;
}

std::vector<CaseSpec> enumerate_dim4_cases(bool reversible) {
    std::vector<CaseSpec> out;
    ExactScalar ph = placeholder_turn();
    for (auto [d, h] : {std::pair{4, 1}, {2, 2}}) {
        for (int i1 = 0; i1 <= d - 1; ++i1) {
            for (const auto& [label, G] : g_menu()) {
                CaseSpec cs{d, h, label, G, i1, reversible};
                Decomposition dec({Rot{Turn(ph)}, Rot{Turn(ph)}, G});
                if (index_parity(dec) != i1 % 2) continue;
                out.push_back(cs);
            }
        }
    }
    return out;
}

GeodesicSpec build_case_spec(const CaseSpec& cs, const ExactScalar& s1, const ExactScalar& s2) {
    return GeodesicSpec(Decomposition({Rot{Turn(s1)}, Rot{Turn(s2)}, cs.G}), cs.d * cs.h, cs.i1);
}

std::optional<MorseWitness> Verdict::first_witness() const {
    for (const auto& b : branches)
        if (b.witness) return b.witness;
    return std::nullopt;
}

namespace {

// Identity stage shared by audit and replay. Returns the sigma sum when the
// branch survives it, otherwise fills the branch and returns nullopt.
std::optional<Rational> identity_stage(const CaseSpec& cs, const GeodesicSpec& ph, BranchResult& br) {
    Rational B = B_constant(cs.d, cs.h);
    Rational chi = chi_hat(GeodesicModel{ph, br.kassign});
    Rational ihat = (cs.reversible ? Rational(2) : Rational(1)) * chi / B;
    br.mean_index = ihat;
    if (sgn(ihat) <= 0) {
        br.route = "identity";
        br.detail = "identity forces mean index " + to_string(ihat) + " <= 0";
        return std::nullopt;
    }
    ExactScalar p = placeholder_turn();
    Rational S = (ihat - lambda_eff(ph, p + p)) / 2;
    br.sigma_sum = S;
    if (sgn(S) <= 0 || S >= 2) {
        br.route = "identity";
        br.detail = "identity forces s1 + s2 = " + to_string(S) + " outside (0,2)";
        return std::nullopt;
    }
    return S;
}

MorseReport run_morse(const CaseSpec& cs, const GeodesicSpec& spec, const KAssignment& ka, int q_max) {
    MorseNumbers mn = morse_numbers({GeodesicModel{spec, ka}}, q_max, cs.reversible);
    return morse_check(mn.M, betti_values(cs.d, cs.h, q_max), q_max, cs.reversible);
}

}  // namespace

Verdict audit_case(const CaseSpec& cs, const std::optional<ExactScalar>& sample, const AuditBounds& bounds) {
    Verdict v{cs, sample, false, {}};
    if (!sample) return v;
    require_sample(*sample);
    ExactScalar p = placeholder_turn();
    GeodesicSpec ph = build_case_spec(cs, p, p);
    auto kas = admissible_kassignments(ph);
    for (std::size_t k = 0; k < kas.size(); ++k) {
        BranchResult br;
        br.kindex = k;
        br.kassign = kas[k];
        auto S = identity_stage(cs, ph, br);
        if (!S) {
            v.branches.push_back(std::move(br));
            continue;
        }
        SigmaPair sp = instantiate(*S, *sample);
        br.sigma1 = sp.s1;
        br.sigma2 = sp.s2;
        GeodesicSpec spec = build_case_spec(cs, sp.s1, sp.s2);
        std::string bad = check_kassignment(spec, br.kassign);
        if (!bad.empty()) fail(ErrorCode::internal, "k-vectors changed with the turns: " + bad);
        br.route = "open";
        for (int q : bounds.q_ladder) {
            MorseReport rep = run_morse(cs, spec, br.kassign, q);
            br.q_max = q;
            if (!rep.ok()) {
                br.route = "morse";
                br.witness = rep.first();
                break;
            }
        }
        if (br.route == "open") {
            // A quasi-monotone separation at T makes every degree up to
            // i(c^T) + nu(c^T) checkable; go there when it is beyond the ladder.
            auto cert = certificate(spec, R(1, 8), bounds.separation_m_max);
            if (cert) {
                std::int64_t q = spec.index(cert->T) + spec.nullity(cert->T) + 2;
                br.detail = "separation at T=" + std::to_string(cert->T);
                if (q > br.q_max && q < (1 << 20)) {
                    MorseReport rep = run_morse(cs, spec, br.kassign, static_cast<int>(q));
                    br.q_max = static_cast<int>(q);
                    if (!rep.ok()) {
                        br.route = "separation";
                        br.witness = rep.first();
                    }
                }
            } else {
                br.detail = "no separation within " + std::to_string(bounds.separation_m_max);
            }
        }
        if (br.witness) {
            const auto& w = *br.witness;
            br.detail = w.check + " check fails at q=" + std::to_string(w.q) + ": M=" + std::to_string(w.M) +
                        ", b=" + std::to_string(w.b) + (br.detail.empty() ? "" : " (" + br.detail + ")");
        }
        v.branches.push_back(std::move(br));
    }
    v.contradiction = !v.branches.empty();
    for (const auto& b : v.branches) v.contradiction = v.contradiction && b.killed();
    return v;
}

bool replay(const CaseSpec& cs, const BranchResult& branch) {
    if (!branch.killed()) return false;
    ExactScalar p = placeholder_turn();
    GeodesicSpec ph = build_case_spec(cs, p, p);
    if (!check_kassignment(ph, branch.kassign).empty()) return false;
    BranchResult fresh;
    fresh.kassign = branch.kassign;
    auto S = identity_stage(cs, ph, fresh);
    if (branch.route == "identity") return !S && fresh.mean_index == branch.mean_index;
    if (!S || !branch.sigma1 || !branch.sigma2 || *S != branch.sigma_sum) return false;
    GeodesicSpec spec = build_case_spec(cs, *branch.sigma1, *branch.sigma2);
    if (!check_kassignment(spec, branch.kassign).empty()) return false;
    GeodesicModel model{spec, branch.kassign};
    if (!identity_residual({model}, cs.d, cs.h, cs.reversible).is_zero()) return false;
    MorseReport rep = run_morse(cs, spec, branch.kassign, branch.q_max);
    return same_witness(rep.first(), branch.witness);
}

std::vector<ExactScalar> shipped_samples() {
    return {ExactScalar::sqrt_of(2) - ExactScalar(1), ExactScalar::sqrt_of(3) - ExactScalar(1),
            (ExactScalar::sqrt_of(5) - ExactScalar(1)) * R(1, 2)};
}

bool AuditSummary::all_contradiction() const {
    if (verdicts.empty()) return false;
    for (const auto& v : verdicts)
        if (!v.contradiction) return false;
    return true;
}

AuditSummary audit_all(bool reversible, const std::vector<ExactScalar>& samples, const AuditBounds& bounds) {
    AuditSummary s;
    s.reversible = reversible;
    for (const auto& cs : enumerate_dim4_cases(reversible)) {
        if (samples.empty()) {
            s.verdicts.push_back(audit_case(cs, std::nullopt, bounds));
            continue;
        }
        for (const auto& x : samples) s.verdicts.push_back(audit_case(cs, x, bounds));
    }
    return s;
}

bool RationalAuditRow::ok() const {
    return below_bound && matches_epsilon_dh && decomposition_ok && reduction_ok.value_or(true);
}

bool RationalAuditReport::ok() const {
    for (const auto& r : rows)
        if (!r.ok()) return false;
    return !rows.empty();
}

RationalAuditReport rational_audit(int d, int h) {
    if (d < 2 || d % 2 != 0 || h < 2) fail(ErrorCode::precondition, "rational audit needs even d >= 2 and h >= 2");
    RationalAuditReport rep;
    rep.d = d;
    rep.h = h;
    rep.D = big_d(d, h);
    const int D = rep.D, dh = d * h;
    rep.bound = R(dh - (d - 2), dh + (d - 2));
    Rational slope = R(2, d) + R(d - 2, dh);
    auto eps = [&](int x) -> Rational { return frac_rational(R(x, dh)) - slope * R(x, D) - frac_rational(R(x, d)); };
    for (int x = 0; x <= D - 2; x += 2) {
        RationalAuditRow row;
        row.two_eta = x;
        row.epsilon = eps(x);
        row.below_bound = row.epsilon < rep.bound;
        row.matches_epsilon_dh = epsilon_dh(d, h, d - 1 + x) == row.epsilon;
        if (x <= dh - 2) {
            int p = x / d, m2 = x % d;
            Rational val = R(p * (d - 2) - m2 * h, D);
            row.decomposition = val;
            row.decomposition_ok = val == row.epsilon && val <= R((h - 1) * (d - 2), D);
        } else if (d == 2) {
            row.reduction_ok = row.epsilon <= eps(dh - 2);
        } else {
            int m2 = x - dh;
            Rational red = eps(m2) - slope * R(dh, D);
            row.reduction_ok = m2 <= d - 4 && red == row.epsilon && row.epsilon <= eps(m2);
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

bool NondegReport::all_contradiction() const {
    if (cases.empty()) return false;
    for (const auto& c : cases)
        if (!c.contradiction()) return false;
    return true;
}

namespace {

void nondeg_separation(NondegCase& nc, int d, int h, const GeodesicSpec& spec, const KAssignment& ka,
                       std::int64_t m_max) {
    auto cert = certificate(spec, R(1, 8), m_max);
    if (!cert) {
        nc.route = "open";
        nc.detail = "no separation within " + std::to_string(m_max);
        return;
    }
    std::int64_t n = cert->n;
    std::int64_t floor_R = d == 2 ? 2 * h + 1 : 2 * (d - 1) + d * (h - 1) + 1;
    std::optional<std::int64_t> T;
    VertexScanner scanner(spec.irrational_rot_turns(), cert->epsilon);
    scanner.scan(m_max, 2 * n, [&](std::int64_t m, const VertexPattern& chi) {
        if (chi != cert->chi || spec.index(m) < floor_R) return true;
        T = m;
        return false;
    });
    if (!T) {
        nc.route = "open";
        nc.detail = "no even separation with i(c^T) >= " + std::to_string(floor_R) + " within " + std::to_string(m_max);
        return;
    }
    QuasiMonoCert c2 = *cert;
    c2.T = *T;
    nc.T = *T;
    nc.R = spec.index(*T);
    nc.r1 = cert->A;
    int r = nc.r;
    std::int64_t shift = 2 * nc.r1 - r;
    int window = 0;
    if (d == 2) {
        nc.R_tilde = nc.R + shift - (nc.R % 2 != 0 ? 1 : 0);
    } else {
        nc.R_tilde = nc.R + shift - (d - 1);
        window = d == 3 ? 3 : 5;
    }
    int q_max = static_cast<int>(nc.R_tilde + std::max(window, 1) + 1);
    CertReport cr = verify_certificate(spec, c2, std::max<std::int64_t>(certified_m_cap(spec, q_max) + 1, *T + 1));
    if (!cr.ok()) {
        nc.route = "open";
        nc.detail = "separation fails at m=" + std::to_string(cr.violations.front().m);
        return;
    }
    MorseNumbers mn = morse_numbers({GeodesicModel{spec, ka}}, q_max, false);
    auto b = betti_values(d, h, q_max);
    if (d == 2) {
        for (std::int64_t j = 0; j <= nc.R_tilde; ++j) {
            nc.betti_value += b[static_cast<std::size_t>(j)];
            nc.morse_value += mn.M[static_cast<std::size_t>(j)];
        }
        // i(c^T) < mean_index * T - (2 r1 - r) + 2 eps, and equating the
        // Betti count with the iterate count turns this into h < 2 eps.
        ExactScalar lhs(R(nc.R + shift));
        ExactScalar rhs = mean_index(spec) * Rational(*T) + ExactScalar(Rational(2) * cert->epsilon);
        nc.separation_inequality = lhs < rhs;
        nc.h_lt_1 = nc.separation_inequality && Rational(2) * cert->epsilon < 1;
        nc.route = nc.betti_value != nc.morse_value ? "count" : "open";
        nc.detail = "sum_{j<=" + std::to_string(nc.R_tilde) + "} b_j = " + std::to_string(nc.betti_value) +
                    " but the iterates contribute " + std::to_string(nc.morse_value);
    } else {
        for (int j = 1; j <= window; ++j) {
            nc.betti_value += b[static_cast<std::size_t>(nc.R_tilde + j)];
            nc.morse_value += mn.M[static_cast<std::size_t>(nc.R_tilde + j)];
        }
        nc.route = (nc.betti_value >= 2 && nc.morse_value <= 1) ? "gap" : "open";
        nc.detail = "b over degrees " + std::to_string(nc.R_tilde + 1) + ".." + std::to_string(nc.R_tilde + window) +
                    " sums to " + std::to_string(nc.betti_value) + " but M sums to " + std::to_string(nc.morse_value);
    }
}

}  // namespace

NondegReport nondegenerate_audit(int d, int h, const std::vector<ExactScalar>& samples, bool reversible,
                                 std::int64_t m_max) {
    require_valid_dh(d, h);
    NondegReport rep;
    rep.d = d;
    rep.h = h;
    rep.reversible = reversible;
    const int dim = d * h, i1 = d - 1;
    const std::int64_t bott_scan = 10000;
    ExactScalar p = placeholder_turn();
    for (int r = 1; r <= dim - 1; ++r) {
        for (int hm = 0; hm <= 1; ++hm) {
            int hp = dim - 1 - r - hm;
            if (hp < 0) continue;
            std::vector<Block> blocks;
            for (int j = 0; j < r; ++j) blocks.push_back(Rot{Turn(p)});
            for (int j = 0; j < hp; ++j) blocks.push_back(Hyp{1});
            for (int j = 0; j < hm; ++j) blocks.push_back(Hyp{-1});
            Decomposition dec(blocks);
            if (index_parity(dec) != i1 % 2) continue;
            GeodesicSpec ph(dec, dim, i1);
            auto kas = admissible_kassignments(ph);
            if (kas.size() != 1) fail(ErrorCode::internal, "non-degenerate iterates admit one k-vector choice");
            std::vector<std::optional<ExactScalar>> runs(samples.begin(), samples.end());
            if (runs.empty()) runs.push_back(std::nullopt);
            for (const auto& s : runs) {
                NondegCase nc;
                nc.r = r;
                nc.h_plus = hp;
                nc.h_minus = hm;
                nc.sample = s;
                if (reversible) {
                    // M_q = b_q with every M_q even, yet b_{d-1} = 1.
                    nc.route = "parity";
                    nc.betti_value = betti_closed(d, h, d - 1);
                    nc.detail = "b_" + std::to_string(d - 1) + " = " + std::to_string(nc.betti_value) +
                                " is odd but reversible Morse numbers are even";
                    rep.cases.push_back(std::move(nc));
                    continue;
                }
                if (!s) {
                    nc.route = "open";
                    nc.detail = "no sample";
                    rep.cases.push_back(std::move(nc));
                    continue;
                }
                require_sample(*s);
                Rational ihat = chi_hat(GeodesicModel{ph, kas[0]}) / B_constant(d, h);
                ExactScalar psum = p * Rational(r);
                Rational S = (ihat - lambda_eff(ph, psum)) / 2;
                nc.sigma_sum = S;
                if (sgn(ihat) <= 0 || sgn(S) <= 0 || S >= r) {
                    nc.route = "identity";
                    nc.detail = "identity forces mean index " + to_string(ihat) + " and turn sum " + to_string(S);
                    rep.cases.push_back(std::move(nc));
                    continue;
                }
                if (r == 1) {
                    nc.route = "identity";
                    nc.detail = "identity forces the only turn to be rational: " + to_string(S);
                    rep.cases.push_back(std::move(nc));
                    continue;
                }
                // s_j = mu + t w_j s with weights summing to zero.
                Rational mu = S / r;
                std::vector<std::int64_t> w;
                for (int j = 1; j < r; ++j) w.push_back(j);
                w.push_back(-static_cast<std::int64_t>(r) * (r - 1) / 2);
                Rational room = mu < Rational(1) - mu ? mu : Rational(1) - mu;
                Rational t = room / Rational(2 * std::max<std::int64_t>(r * (r - 1) / 2, r - 1));
                std::vector<Block> real;
                for (int j = 0; j < r; ++j) {
                    nc.sigmas.push_back(ExactScalar(mu) + *s * (t * Rational(w[static_cast<std::size_t>(j)])));
                    real.push_back(Rot{Turn(nc.sigmas.back())});
                }
                for (int j = 0; j < hp; ++j) real.push_back(Hyp{1});
                for (int j = 0; j < hm; ++j) real.push_back(Hyp{-1});
                GeodesicSpec spec(Decomposition(real), dim, i1);
                // i(c^m) sums the nonnegative omega-indices over m-th roots of
                // unity, so i(c^m) >= i(c) for every realizable geodesic.
                for (std::int64_t m = 2; m <= bott_scan; ++m) {
                    if (spec.index(m) < i1) {
                        nc.route = "bott";
                        nc.T = m;
                        nc.morse_value = spec.index(m);
                        nc.detail = "i(c^" + std::to_string(m) + ") = " + std::to_string(nc.morse_value) +
                                    " < i(c) = " + std::to_string(i1);
                        break;
                    }
                }
                if (nc.route.empty()) nondeg_separation(nc, d, h, spec, kas[0], m_max);
                rep.cases.push_back(std::move(nc));
            }
        }
    }
    return rep;
}

}  // namespace cgeo
