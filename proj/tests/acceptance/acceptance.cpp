// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include "support.hpp"

#include "cgeo/audit.hpp"
#include "cgeo/betti.hpp"
#include "cgeo/morse.hpp"
#include "cgeo/quasimono.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

using namespace cgeo;
using cgeo::testing::rq;
using cgeo::testing::sq;

namespace {

// Collects the first few failures of a criterion.
struct Check {
    int failures = 0;
    std::ostringstream first;
    std::string note;
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (failures++ < 3) first << (failures > 1 ? "; " : "") << what;
    }
};

const std::pair<int, int> even_cases[] = {{2, 2}, {2, 3}, {2, 5}, {4, 1}, {4, 2}, {6, 1}, {8, 2}};

// Lattice count of t^{d-1} (sum_i t^{2i} + sum_{i>=1} t^{iD}) sum_{j<h} t^{jd}.
std::int64_t series_count(int d, int h, int q) {
    int x = q - (d - 1);
    if (x < 0) return 0;
    int D = d * (h + 1) - 2;
    std::int64_t n = 0;
    for (int j = 0; j < h; ++j) {
        int rest = x - j * d;
        if (rest < 0) continue;
        if (rest % 2 == 0) ++n;
        if (rest >= D && rest % D == 0) ++n;
    }
    return n;
}

// Sphere loop spaces: 2 on k(d-1) with k >= 2 (odd d) or k >= 3 odd (even d), else 1 on d-1+2N_0.
std::int64_t sphere(int d, int q) {
    if (q < d - 1 || (q - (d - 1)) % 2 != 0) return 0;
    if (q % (d - 1) != 0) return 1;
    int k = q / (d - 1);
    bool twice = d % 2 == 1 ? k >= 2 : (k >= 3 && k % 2 == 1);
    return twice ? 2 : 1;
}

Rational frac(const Rational& v) {
    Integer f = v.get_num() / v.get_den();
    if (sgn(v) < 0 && f * v.get_den() != v.get_num()) f -= 1;
    return v - Rational(f);
}

std::string str(std::int64_t x) { return std::to_string(x); }

void criterion1(Check& c) {
    c.expect(B_constant(4, 1) == make_rational(-2, 3), "B(4,1)");
    c.expect(B_constant(2, 2) == make_rational(-3, 2), "B(2,2)");
    c.expect(B_constant(3, 1) == 1, "B(3,1)");
}

void criterion2(Check& c) {
    BettiTable t = betti_table(2, 2, 101);
    c.expect(t[1] == 1 && t[3] == 2, "(2,2) low degrees");
    for (int q = 5; q <= 101; q += 2) c.expect(t[q] == 3, "(2,2) b_" + str(q));
    for (int q = 0; q <= 101; q += 2) c.expect(t[q] == 0, "(2,2) even b_" + str(q));
    for (int d : {3, 4}) {
        BettiTable s = betti_table(d, 1, 200);
        for (int q = 0; q <= 200; ++q) c.expect(s[q] == sphere(d, q), "(" + str(d) + ",1) b_" + str(q));
    }
}

void criterion3(Check& c) {
    for (auto [d, h] : even_cases) {
        BettiTable s = betti_series(d, h, 2000);
        for (int q = 0; q <= 2000; ++q) {
            c.expect(betti_closed(d, h, q) == s[q], "closed vs series (" + str(d) + "," + str(h) + ") q=" + str(q));
            c.expect(s[q] == series_count(d, h, q), "series vs lattice (" + str(d) + "," + str(h) + ") q=" + str(q));
        }
    }
}

void criterion4(Check& c) {
    std::vector<std::pair<int, int>> cases(std::begin(even_cases), std::end(even_cases));
    cases.insert(cases.end(), {{3, 1}, {5, 1}});
    std::int64_t checked = 0;
    for (auto [d, h] : cases) {
        const int K = 10000;
        int k0 = (d % 2 == 0 && h >= 2) ? h * d - 1 : d - 1;
        std::int64_t running = 0;
        for (int k = 0; k <= K; ++k) {
            running += d % 2 == 1 ? sphere(d, k) : series_count(d, h, k);
            if (k < k0) continue;
            PartialSum ps = partial_sum(d, h, k);
            std::string at = "(" + str(d) + "," + str(h) + ") k=" + str(k);
            c.expect(ps.direct == running, "direct sum " + at);
            c.expect(ps.matches && ps.closed == Rational(running), "closed form " + at);
            c.expect(ps.epsilon_in_bound, "epsilon bound " + at);
            if (d % 2 == 0 && h >= 2) {
                Rational e = epsilon_dh(d, h, k);
                c.expect(-Rational(h + 2) < e && e < 1, "epsilon range " + at);
            }
            ++checked;
        }
    }
    for (int d = 2; d <= 12; d += 2)
        for (int h = 2; h <= 6; ++h) {
            std::int64_t direct = 0;
            for (int q = 1; q <= d * h - 3; q += 2) direct += series_count(d, h, q);
            OddDegreeSum o = odd_degree_sum(d, h);
            Rational want = make_rational(d * h * (h - 1), 4);
            c.expect(o.direct == direct && o.closed == want && Rational(direct) == want,
                     "odd-degree sum (" + str(d) + "," + str(h) + ")");
        }
    c.note = str(checked) + " partial sums";
}

GeodesicSpec step1() {
    return GeodesicSpec(Decomposition({Rot{Turn(rq(4, 3) - sq(2, 1, 2))}, Rot{Turn(sq(2, 1, 2))}, N1Plus{-1}}), 4, 0);
}

void criterion5(Check& c) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1000; ++t) {
        GeodesicSpec s = cgeo::testing::random_spec(rng);
        std::string at = "spec " + str(t);
        c.expect(s.index(1) == s.i1(), "i(c) " + at);
        Period p = analytical_period(s);
        for (std::int64_t m = 1; m <= 1000; ++m) {
            std::int64_t i = s.index(m);
            c.expect(i >= s.i1(), "Bott bound " + at + " m=" + str(m));
            c.expect((s.index(m + p.n) - i) % 2 == 0, "parity period " + at + " m=" + str(m));
            c.expect(s.nullity(m + p.n) == s.nullity(m), "nullity period " + at + " m=" + str(m));
        }
        // Roots-of-unity oracle on the first iterates.
        for (std::int64_t m = 2; m <= 12; ++m) {
            std::int64_t v = s.i1();
            for (std::int64_t k = 1; k < m; ++k) v += cgeo::testing::omega_index(s, rq(k, m));
            c.expect(s.index(m) == v, "oracle " + at + " m=" + str(m));
        }
    }
    GeodesicSpec s1 = step1();
    for (std::int64_t k = 1; k <= 200; ++k) {
        c.expect(s1.index(3 * k) == 2 * k, "i(c^3k) k=" + str(k));
        for (std::int64_t j : {1, 2}) {
            std::int64_t i = s1.index(3 * k + j);
            c.expect(2 * k <= i && i <= 2 * k + 2, "bracket k=" + str(k));
        }
    }
}

void criterion6(Check& c) {
    std::mt19937_64 rng(6);
    int done = 0;
    while (done < 100) {
        std::int64_t p = std::uniform_int_distribution<std::int64_t>(1, 12)(rng);
        std::int64_t q = std::uniform_int_distribution<std::int64_t>(1, 2 * p - 1)(rng);
        if (std::gcd(p, q) != 1) continue;
        ExactScalar s1 = cgeo::testing::random_irrational_turn(rng);
        ExactScalar s2 = rq(q, p) - s1;
        if (sign(s2) <= 0 || s2 >= rq(1)) continue;
        std::string at = "p=" + str(p) + " q=" + str(q) + " s1=" + s1.str();
        FloorSplitReport r = floor_split_check(p, q, s1, 10000);
        c.expect(r.ok() && r.checked == 10000, "report " + at);
        for (std::int64_t m = 1; m <= 10000; ++m) {
            Integer f1 = floor_exact(s1 * Rational(m)), f2 = floor_exact(s2 * Rational(m));
            Integer sum = f1 + f2;
            std::int64_t base = m * q / p;
            if (m % p == 0) {
                c.expect(sum == base - 1, "multiple " + at + " m=" + str(m));
            } else {
                bool below = frac_exact(s1 * Rational(m)) < ExactScalar(make_rational(m * q % p, p));
                c.expect(sum == (below ? base : base - 1), "split " + at + " m=" + str(m));
            }
        }
        ++done;
    }
}

bool completely_nondegenerate(const GeodesicSpec& s) {
    for (const auto& b : s.dec().blocks()) {
        if (std::holds_alternative<Hyp>(b)) continue;
        auto* r = std::get_if<Rot>(&b);
        if (!r || r->turn.value().is_rational()) return false;
    }
    return true;
}

void criterion7(Check& c) {
    std::vector<std::pair<std::string, GeodesicSpec>> specs{
        {"sum 4/3 with sqrt2/2", step1()},
        {"sum 4/3 with sqrt3-1",
         GeodesicSpec(Decomposition({Rot{Turn(rq(7, 3) - sq(3))}, Rot{Turn(sq(3) - rq(1))}, N1Plus{-1}}), 4, 0)},
        {"independent pair",
         GeodesicSpec(Decomposition({Rot{Turn(sq(2) - rq(1))}, Rot{Turn(sq(3) - rq(1))}, Hyp{1}}), 4, 2)},
        {"single turn", GeodesicSpec(Decomposition({Rot{Turn(sq(2, 1, 2))}}), 2, 1)},
        {"turn with hyperbolic", GeodesicSpec(Decomposition({Rot{Turn(sq(2, 1, 2))}, Hyp{1}}), 3, 1)},
        {"three turns", GeodesicSpec(Decomposition({Rot{Turn(sq(2) - rq(1))}, Rot{Turn(sq(3) - rq(1))},
                                                    Rot{Turn(sq(5, 1, 2) - rq(1, 2))}}),
                                     4, 3)},
        {"turns with N1(1,0)",
         GeodesicSpec(Decomposition({Rot{Turn(sq(2, 1, 2))}, Rot{Turn(sq(3) - rq(1))}, N1Plus{0}}), 4, 1)},
    };
    int certs = 0, cor24 = 0, jumps = 0;
    for (const auto& [name, s] : specs) {
        auto cert = certificate(s, make_rational(1, 8), 1000000);
        c.expect(cert.has_value(), "no certificate: " + name);
        if (!cert) continue;
        ++certs;
        const Counts& k = s.counts();
        CertReport rep = verify_certificate(s, *cert, 10 * cert->T);
        c.expect(rep.ok() && rep.checked_to == 10 * cert->T, "separation bounds: " + name);
        c.expect(cert->K1 + cert->K2 == 2 * (s.i1() + k.p_minus + k.p_zero), "K1+K2: " + name);
        // Direct sweep of both separation inequalities.
        std::int64_t iT = s.index(cert->T);
        for (std::int64_t m = 1; m <= 10 * cert->T; ++m) {
            if (m > cert->T) c.expect(s.index(m) - iT >= cert->K1, "K1 sweep: " + name);
            if (m < cert->T) c.expect(iT - s.index(m) >= cert->K2, "K2 sweep: " + name);
        }
        if (completely_nondegenerate(s)) {
            ++cor24;
            std::int64_t g = 2 * cert->A - k.r;
            c.expect(cert->K1 == s.i1() + g && cert->K2 == s.i1() - g, "non-degenerate K: " + name);
            for (std::int64_t m = 1; m <= 10 * cert->T; ++m) {
                if (m > cert->T) c.expect(s.index(m) - iT >= s.i1() + g, "upper separation: " + name);
                if (m < cert->T) c.expect(iT - s.index(m) >= s.i1() - g, "lower separation: " + name);
            }
        }
        if (cert->A == k.k) {
            ++jumps;
            std::int64_t want = s.i1() + k.p_minus + k.p_zero + k.q_zero + k.q_plus + k.r + 2 * (k.r_star - k.k_star);
            std::int64_t got = max_jump(s, *cert);
            c.expect(got == want && got == s.index(cert->T + 1) - iT, "jump: " + name);
        }
    }
    c.expect(certs >= 5, "fewer than five certificates");
    c.expect(cor24 >= 1 && jumps >= 1, "no applicable separation or jump sample");
    c.note = str(certs) + " certificates, " + str(cor24) + " non-degenerate, " + str(jumps) + " jumps";
}

void criterion8(Check& c) {
    std::mt19937_64 rng(8);
    int found = 0, tries = 0;
    while (found < 200 && tries < 200000) {
        ++tries;
        GeodesicSpec s = cgeo::testing::random_spec(rng, true, 4, 4);
        const Counts& k = s.counts();
        bool cond = s.i1() + k.p_zero + k.p_minus >= k.q_zero + k.q_plus + k.r + 2 * (k.r_star - k.k_star);
        c.expect(is_monotone_guaranteed(s).guaranteed == cond, "condition mismatch");
        if (!cond) continue;
        ++found;
        std::int64_t prev = s.index(1);
        for (std::int64_t m = 2; m <= 1000; ++m) {
            std::int64_t i = s.index(m);
            c.expect(i >= prev, "decrease at m=" + str(m));
            prev = i;
        }
    }
    c.expect(found == 200, "only " + str(found) + " specs satisfy the condition");
}

void criterion9(Check& c) {
    int pairs = 0;
    for (int d = 2; d <= 20; d += 2)
        for (int h = 2; h <= 10; ++h) {
            RationalAuditReport r = rational_audit(d, h);
            int D = d * (h + 1) - 2;
            Rational bound = make_rational(d * h - (d - 2), d * h + (d - 2));
            std::string at = "(" + str(d) + "," + str(h) + ")";
            c.expect(r.ok() && r.bound == bound && static_cast<int>(r.rows.size()) == D / 2, "report " + at);
            for (const auto& row : r.rows) {
                Rational x = row.two_eta;
                Rational e = frac(x / (d * h)) - (make_rational(2, d) + make_rational(d - 2, d * h)) * x / D -
                             frac(x / d);
                c.expect(row.epsilon == e && e < bound, at + " 2eta=" + str(row.two_eta));
            }
            ++pairs;
        }
    c.note = str(pairs) + " (d,h) pairs";
}

void criterion10(Check& c) {
    int verdicts = 0, branches = 0, parity = 0;
    for (bool rev : {false, true}) {
        AuditSummary s = audit_all(rev, shipped_samples());
        c.expect(s.all_contradiction(), std::string(rev ? "reversible" : "irreversible") + " grid has open cases");
        for (const auto& v : s.verdicts) {
            ++verdicts;
            for (const auto& br : v.branches) {
                ++branches;
                c.expect(replay(v.cs, br), "replay " + v.cs.g_label + " i1=" + str(v.cs.i1));
                if (rev && br.witness && br.witness->check == "parity") ++parity;
            }
            if (rev && v.cs.d == 2 && v.cs.i1 == 0) {
                bool b1 = false;
                for (const auto& br : v.branches)
                    b1 = b1 || (br.witness && br.witness->check == "parity" && br.witness->q == 1 &&
                                br.witness->b == 1 && br.witness->M % 2 == 0);
                c.expect(b1, "reversible i(c)=0 lacks the b_1 parity witness");
            }
        }
    }
    c.expect(parity > 0, "no parity witnesses");
    for (auto [d, h] : {std::pair{4, 1}, {2, 2}}) {
        NondegReport r = nondegenerate_audit(d, h, {}, true);
        bool ok = r.all_contradiction() && !r.cases.empty();
        for (const auto& nc : r.cases) ok = ok && nc.route == "parity" && betti_closed(d, h, d - 1) == 1;
        c.expect(ok, "reversible non-degenerate parity (" + str(d) + "," + str(h) + ")");
    }
    c.note = str(verdicts) + " verdicts, " + str(branches) + " branches replayed, " + str(parity) + " parity witnesses";
}

void criterion11(Check& c) {
    KappaResult k = theorem43_kappa(2, 2, 1, 1, 2);
    std::int64_t rhs = betti_closed(2, 2, 2) - betti_closed(2, 2, 3);
    c.expect(rhs == -2 && k.rhs == -2, "alternating sum");
    c.expect(k.lhs_b == -3, "B(i+p)");
    c.expect(k.kappa == -1, "kappa");
    c.expect(k.violation, "violation flag");
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
        {"constants", criterion1},
        {"Betti tables", criterion2},
        {"series vs closed form", criterion3},
        {"partial-sum identities", criterion4},
        {"index iteration", criterion5},
        {"floor-sum case split", criterion6},
        {"quasi-monotonicity", criterion7},
        {"monotonicity", criterion8},
        {"rational audit", criterion9},
        {"dim-4 audit", criterion10},
        {"kappa identity", criterion11},
    };
    int failed = 0, n = 0;
    for (const auto& [name, run] : criteria) {
        ++n;
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = c.failures == 0;
        failed += !ok;
        std::printf("criterion %2d %-24s %s  %.2f s", n, name, ok ? "PASS" : "FAIL", secs);
        if (!c.note.empty()) std::printf("  [%s]", c.note.c_str());
        if (!ok) std::printf("  %d failures: %s", c.failures, c.first.str().c_str());
        std::printf("\n");
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", n - failed, n);
    return failed == 0 ? 0 : 1;
}
