#include "cgeo/morse.hpp"

#include "cgeo/error.hpp"

#include <functional>

namespace cgeo {

namespace {

std::vector<std::vector<std::int64_t>> kvec_options(std::int64_t nu, int epsilon, int cap) {
    if (nu == 0) return {{epsilon > 0 ? 1 : 0}};
    std::vector<std::vector<std::int64_t>> out;
    for (int lo = 0; lo <= (epsilon > 0 ? 1 : 0); ++lo) {
        for (int hi = 0; hi + lo <= 1; ++hi) {
            std::vector<std::int64_t> v(static_cast<std::size_t>(nu + 1), 0);
            v[0] = lo;
            v[nu] += hi;
            if (lo + hi == 1 || nu == 1) {
                out.push_back(v);
                continue;
            }
            // interior entries 1..nu-1 range over 0..cap
            std::function<void(std::int64_t)> fill = [&](std::int64_t j) {
                if (j == nu) {
                    out.push_back(v);
                    return;
                }
                for (int x = 0; x <= cap; ++x) {
                    v[j] = x;
                    fill(j + 1);
                }
                v[j] = 0;
            };
            fill(1);
        }
    }
    return out;
}

}  // namespace

std::string check_kassignment(const GeodesicSpec& spec, const KAssignment& ka, int cap) {
    Period p = analytical_period(spec);
    if (ka.n != p.n || static_cast<std::int64_t>(ka.entries.size()) != p.n)
        return "k-vectors must cover one analytical period n = " + std::to_string(p.n);
    for (const auto& e : ka.entries) {
        std::string at = "m=" + std::to_string(e.m) + ": ";
        std::int64_t nu = spec.nullity(e.m);
        int eps = ((spec.index(e.m) - spec.i1()) % 2 == 0) ? 1 : -1;
        if (e.nu != nu || e.epsilon != eps) return at + "nullity or sign does not match the iteration formulas";
        if (static_cast<std::int64_t>(e.kvec.size()) != nu + 1)
            return at + "k-vector needs " + std::to_string(nu + 1) + " entries";
        for (auto x : e.kvec)
            if (x < 0) return at + "negative k entry";
        if (nu == 0) {
            if (e.kvec[0] != (eps > 0 ? 1 : 0)) return at + "non-degenerate iterate has k_0 = " + std::to_string(eps > 0 ? 1 : 0);
            continue;
        }
        std::int64_t ends = e.kvec[0] + e.kvec[nu];
        if (ends > 1) return at + "k_0 + k_nu <= 1 violated";
        for (std::int64_t j = 1; j < nu; ++j) {
            if (ends == 1 && e.kvec[j] != 0) return at + "interior entries must vanish when k_0 + k_nu = 1";
            if (e.kvec[j] > cap) return at + "interior entry above cap";
        }
        if (eps < 0 && e.kvec[0] != 0) return at + "k_0 must vanish when epsilon = -1";
        for (const auto& f : ka.entries) {
            if (f.m >= e.m) break;
            if (e.m % f.m == 0 && f.nu == e.nu && f.epsilon == e.epsilon && f.kvec != e.kvec)
                return at + "must repeat the k-vector of m=" + std::to_string(f.m) + " (same nullity and sign)";
        }
    }
    return {};
}

std::vector<KAssignment> admissible_kassignments(const GeodesicSpec& spec, int cap) {
    if (cap < 1) fail(ErrorCode::precondition, "cap must be >= 1");
    std::int64_t n = analytical_period(spec).n;
    std::vector<KEntry> base;
    std::vector<std::vector<std::vector<std::int64_t>>> opts;
    for (std::int64_t m = 1; m <= n; ++m) {
        KEntry e{m, ((spec.index(m) - spec.i1()) % 2 == 0) ? 1 : -1, spec.nullity(m), {}};
        opts.push_back(kvec_options(e.nu, e.epsilon, cap));
        base.push_back(std::move(e));
    }
    std::vector<KAssignment> out;
    KAssignment cur{n, base};
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == base.size()) {
            out.push_back(cur);
            return;
        }
        const KEntry& e = base[i];
        for (std::size_t j = 0; j < i; ++j) {
            const KEntry& f = cur.entries[j];
            if (e.m % f.m == 0 && f.nu == e.nu && f.epsilon == e.epsilon) {
                cur.entries[i].kvec = f.kvec;
                rec(i + 1);
                return;
            }
        }
        for (const auto& v : opts[i]) {
            cur.entries[i].kvec = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::int64_t certified_m_cap(const GeodesicSpec& spec, int q_max) {
    ExactScalar ihat = mean_index(spec);
    if (sign(ihat) <= 0) fail(ErrorCode::precondition, "mean index " + ihat.str() + " is not positive");
    std::int64_t C = mean_index_deviation_bound(spec);
    Integer cap = floor_exact(ExactScalar(Rational(q_max + C)) / ihat);
    if (!cap.fits_slong_p()) fail(ErrorCode::precondition, "iterate bound exceeds 64 bits");
    return std::max<std::int64_t>(cap.get_si(), 0);
}

MorseNumbers morse_numbers(const std::vector<GeodesicModel>& models, int q_max, bool reversible,
                           std::optional<std::int64_t> m_cap) {
    if (q_max < 0) fail(ErrorCode::precondition, "q_max must be >= 0");
    MorseNumbers out;
    out.M.assign(static_cast<std::size_t>(q_max) + 1, 0);
    out.reversible = reversible;
    for (const auto& model : models) {
        std::string bad = check_kassignment(model.spec, model.kassign, 1 << 20);
        if (!bad.empty()) fail(ErrorCode::invalid, bad);
        std::int64_t cert = certified_m_cap(model.spec, q_max);
        std::int64_t cap = cert;
        if (m_cap) {
            for (std::int64_t m = *m_cap + 1; m <= cert; ++m)
                if (model.spec.index(m) <= q_max)
                    fail(ErrorCode::precondition, "m_cap " + std::to_string(*m_cap) + " misses iterate m=" +
                                                      std::to_string(m) + " with index <= q_max");
            cap = std::min(cap, *m_cap);
        }
        for (std::int64_t m = 1; m <= cap; ++m) {
            std::int64_t i = model.spec.index(m);
            const auto& kv = model.kassign.at(m).kvec;
            for (std::size_t l = 0; l < kv.size(); ++l) {
                std::int64_t q = i + static_cast<std::int64_t>(l);
                if (q >= 0 && q <= q_max) out.M[static_cast<std::size_t>(q)] += (reversible ? 2 : 1) * kv[l];
            }
        }
        out.m_caps.push_back(cap);
    }
    return out;
}

std::optional<MorseWitness> MorseReport::first() const {
    std::optional<MorseWitness> best;
    for (const auto* w : {&parity, &weak, &lacunary, &strong})
        if (*w && (!best || (*w)->q < best->q)) best = *w;
    return best;
}

MorseReport morse_check(const std::vector<std::int64_t>& M, const std::vector<std::int64_t>& b, int q_max,
                        bool reversible) {
    if (static_cast<int>(M.size()) <= q_max || static_cast<int>(b.size()) <= q_max)
        fail(ErrorCode::precondition, "tables shorter than q_max");
    MorseReport rep;
    rep.q_max = q_max;
    std::int64_t S = 0;
    for (int q = 0; q <= q_max; ++q) {
        std::int64_t diff = M[q] - b[q];
        if (!rep.weak && diff < 0) rep.weak = MorseWitness{"weak", q, M[q], b[q], diff};
        S = diff - S;
        if (!rep.strong && S < 0) rep.strong = MorseWitness{"strong", q, M[q], b[q], S};
    }
    for (int par = 0; par < 2 && !rep.lacunary_parity; ++par) {
        bool vanish = true;
        for (int q = par; q <= q_max && vanish; q += 2) vanish = M[q] == 0 && b[q] == 0;
        if (vanish) rep.lacunary_parity = par;
    }
    if (rep.lacunary_parity) {
        // Equality on the other parity is forced in every degree below q_max.
        for (int q = 1 - *rep.lacunary_parity; q < q_max; q += 2) {
            if (M[q] == b[q]) continue;
            if (!rep.lacunary) rep.lacunary = MorseWitness{"lacunary", q, M[q], b[q], M[q] - b[q]};
            if (reversible && b[q] % 2 != 0 && !rep.parity)
                rep.parity = MorseWitness{"parity", q, M[q], b[q], M[q] - b[q]};
        }
    }
    return rep;
}

Rational chi_hat(const GeodesicModel& model) {
    Rational s = 0;
    for (const auto& e : model.kassign.entries) {
        std::int64_t i = model.spec.index(e.m);
        for (std::size_t l = 0; l < e.kvec.size(); ++l) {
            int sg = ((i + static_cast<std::int64_t>(l)) % 2 == 0) ? 1 : -1;
            s += Rational(sg * e.kvec[l]);
        }
    }
    return s / Rational(model.kassign.n);
}

ExactScalar identity_residual(const std::vector<GeodesicModel>& models, int d, int h, bool reversible) {
    ExactScalar sum;
    for (const auto& model : models) {
        ExactScalar ihat = mean_index(model.spec);
        if (sign(ihat) <= 0) fail(ErrorCode::precondition, "mean index " + ihat.str() + " is not positive");
        sum += ExactScalar(chi_hat(model)) / ihat;
    }
    if (reversible) sum *= Rational(2);
    return sum - ExactScalar(B_constant(d, h));
}

KappaResult theorem43_kappa(int d, int h, std::int64_t i_cn, std::int64_t p_c, std::int64_t mu, bool reversible) {
    require_valid_dh(d, h);
    if (mu < -1) fail(ErrorCode::precondition, "mu must be >= -1");
    if (p_c < 0) fail(ErrorCode::precondition, "p(c) must be >= 0");
    if ((i_cn + p_c) % 2 != 0) fail(ErrorCode::precondition, "i(c^n) + p(c) must be even");
    if ((mu + 1 - p_c) % 2 != 0) fail(ErrorCode::precondition, "mu + 1 - p(c) must be even");
    KappaResult r;
    r.rhs = 0;
    for (std::int64_t j = std::max<std::int64_t>(mu - p_c + 1, 0); j <= i_cn + mu; ++j)
        r.rhs += Rational((j % 2 == 0 ? 1 : -1) * betti_closed(d, h, static_cast<int>(j)));
    r.lhs_b = B_constant(d, h) * Rational(i_cn + p_c);
    r.kappa = (r.rhs - r.lhs_b) * Rational(((i_cn + mu) % 2 == 0) ? 1 : -1);
    bool integer = r.kappa.get_den() == 1;
    r.violation = !integer || sgn(r.kappa) < 0 || (reversible && integer && r.kappa.get_num() % 2 != 0);
    return r;
}

}  // namespace cgeo
