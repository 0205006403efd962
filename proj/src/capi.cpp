#include "cgeo/cgeo.h"

#include "cgeo/audit.hpp"
#include "cgeo/error.hpp"
#include "cgeo/specfile.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <sstream>

using nlohmann::json;
using namespace cgeo;

struct cg_spec {
    SpecFile sf;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

cg_status status_of(ErrorCode c) {
    switch (c) {
    case ErrorCode::parse: return CG_ERR_PARSE;
    case ErrorCode::invalid: return CG_ERR_INVALID;
    case ErrorCode::precondition: return CG_ERR_PRECONDITION;
    case ErrorCode::not_found: return CG_ERR_NOT_FOUND;
    case ErrorCode::internal: return CG_ERR_INTERNAL;
    }
    return CG_ERR_INTERNAL;
}

template <class F>
cg_status guard(F&& f) {
    last_error.clear();
    try {
        f();
        return CG_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        last_error = e.what();
        return CG_ERR_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) throw Error(ErrorCode::precondition, std::string(what) + " must not be null");
}

cg_status argument_error(const std::string& what) {
    last_error = what;
    return CG_ERR_ARGUMENT;
}

std::string rat(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const char* text, const char* what) {
    need(text, what);
    ExactScalar x = ExactScalar::parse(text);
    if (!x.is_rational()) fail(ErrorCode::parse, std::string(what) + ": expected a rational p/q");
    return x.base();
}

std::string pattern_str(const VertexPattern& v) {
    std::string s;
    for (int x : v) s += static_cast<char>('0' + x);
    return s;
}

json witness_json(const std::optional<MorseWitness>& w) {
    if (!w) return nullptr;
    return {{"check", w->check}, {"q", w->q}, {"M", w->M}, {"b", w->b}, {"value", w->value}};
}

std::string witness_text(const std::optional<MorseWitness>& w) {
    if (!w) return "-";
    return w->check + "@q=" + std::to_string(w->q) + ":M=" + std::to_string(w->M) + ",b=" + std::to_string(w->b);
}

std::string finish(const json& j) { return j.dump(2) + "\n"; }

std::vector<ExactScalar> parse_samples(const char* samples_json) {
    if (!samples_json) return shipped_samples();
    return samples_from_json(samples_json);
}

}  // namespace

extern "C" {

const char* cg_last_error(void) { return last_error.c_str(); }

const char* cg_version(void) { return "1.0.0"; }

void cg_string_free(char* s) { std::free(s); }

cg_status cg_spec_from_json(const char* text, cg_spec** out) {
    if (!text || !out) return argument_error("json and out must not be null");
    return guard([&] { *out = new cg_spec{spec_from_json(text)}; });
}

void cg_spec_free(cg_spec* spec) { delete spec; }

cg_status cg_spec_to_json(const cg_spec* spec, char** out) {
    if (!spec || !out) return argument_error("spec and out must not be null");
    return guard([&] { *out = dup(spec_to_json(spec->sf) + "\n"); });
}

cg_status cg_spec_index(const cg_spec* spec, int64_t m, int64_t* out) {
    if (!spec || !out) return argument_error("spec and out must not be null");
    if (m < 1) return argument_error("m must be >= 1");
    return guard([&] { *out = spec->sf.spec.index(m); });
}

cg_status cg_spec_nullity(const cg_spec* spec, int64_t m, int64_t* out) {
    if (!spec || !out) return argument_error("spec and out must not be null");
    if (m < 1) return argument_error("m must be >= 1");
    return guard([&] { *out = spec->sf.spec.nullity(m); });
}

cg_status cg_spec_mean_index(const cg_spec* spec, char** out) {
    if (!spec || !out) return argument_error("spec and out must not be null");
    return guard([&] { *out = dup(mean_index(spec->sf.spec).str()); });
}

cg_status cg_spec_period(const cg_spec* spec, int64_t* n0, int64_t* n) {
    if (!spec || !n0 || !n) return argument_error("spec, n0 and n must not be null");
    return guard([&] {
        Period p = analytical_period(spec->sf.spec);
        *n0 = p.n0;
        *n = p.n;
    });
}

cg_status cg_iterate(const cg_spec* spec, int64_t m_max, cg_format fmt, char** out) {
    if (!spec || !out) return argument_error("spec and out must not be null");
    if (m_max < 1) return argument_error("mmax must be >= 1");
    return guard([&] {
        auto rows = index_table(spec->sf.spec, m_max);
        if (fmt == CG_FORMAT_JSON) {
            json j = json::array();
            for (const auto& r : rows) j.push_back({{"m", r.m}, {"index", r.index}, {"nullity", r.nullity}});
            *out = dup(finish(j));
            return;
        }
        std::ostringstream os;
        os << "m\tindex\tnullity\n";
        for (const auto& r : rows) os << r.m << '\t' << r.index << '\t' << r.nullity << '\n';
        *out = dup(os.str());
    });
}

cg_status cg_period_report(const cg_spec* spec, cg_format fmt, char** out) {
    if (!spec || !out) return argument_error("spec and out must not be null");
    return guard([&] {
        Period p = analytical_period(spec->sf.spec);
        if (fmt == CG_FORMAT_JSON) {
            *out = dup(finish({{"n0", p.n0}, {"n", p.n}}));
            return;
        }
        *out = dup("n0\tn\n" + std::to_string(p.n0) + "\t" + std::to_string(p.n) + "\n");
    });
}

cg_status cg_meanindex_report(const cg_spec* spec, cg_format fmt, char** out) {
    if (!spec || !out) return argument_error("spec and out must not be null");
    return guard([&] {
        ExactScalar mi = mean_index(spec->sf.spec);
        MonotoneReport mono = is_monotone_guaranteed(spec->sf.spec);
        std::int64_t C = mean_index_deviation_bound(spec->sf.spec);
        if (fmt == CG_FORMAT_JSON) {
            *out = dup(finish({{"mean_index", mi.str()},
                               {"positive", sign(mi) > 0},
                               {"deviation_bound", C},
                               {"monotone_guaranteed", mono.guaranteed}}));
            return;
        }
        std::ostringstream os;
        os << "mean_index\t" << mi.str() << "\npositive\t" << (sign(mi) > 0 ? "yes" : "no") << "\ndeviation_bound\t"
           << C << "\nmonotone_guaranteed\t" << (mono.guaranteed ? "yes" : "no") << '\n';
        *out = dup(os.str());
    });
}

cg_status cg_betti_value(int d, int h, int q, int64_t* out) {
    if (!out) return argument_error("out must not be null");
    return guard([&] { *out = betti_closed(d, h, q); });
}

cg_status cg_B_constant(int d, int h, char** out) {
    if (!out) return argument_error("out must not be null");
    return guard([&] { *out = dup(rat(B_constant(d, h))); });
}

cg_status cg_betti(int d, int h, int q_max, int sums, cg_format fmt, char** out, int* violated) {
    if (!out) return argument_error("out must not be null");
    if (q_max < 0) return argument_error("qmax must be >= 0");
    return guard([&] {
        BettiTable t = betti_table(d, h, q_max);
        std::int64_t k_min = (d % 2 == 1 || h == 1) ? d - 1 : static_cast<std::int64_t>(h) * d - 1;
        bool bad = false;
        json rows = json::array();
        std::ostringstream os;
        os << "q\tb_q" << (sums ? "\tsum\tclosed\tresidual" : "") << '\n';
        for (int q = 0; q <= q_max; ++q) {
            json row = {{"q", q}, {"b", t[q]}};
            os << q << '\t' << t[q];
            if (sums) {
                if (q >= k_min) {
                    PartialSum ps = partial_sum(d, h, q);
                    Rational res = Rational(ps.direct) - ps.closed;
                    bad = bad || !ps.matches || !ps.epsilon_in_bound;
                    row["sum"] = ps.direct;
                    row["closed"] = rat(ps.closed);
                    row["residual"] = rat(res);
                    os << '\t' << ps.direct << '\t' << rat(ps.closed) << '\t' << rat(res);
                } else {
                    os << "\t-\t-\t-";
                }
            }
            os << '\n';
            rows.push_back(row);
        }
        if (violated) *violated = bad;
        *out = dup(fmt == CG_FORMAT_JSON ? finish({{"d", d}, {"h", h}, {"B", rat(B_constant(d, h))}, {"rows", rows}})
                                         : os.str());
    });
}

cg_status cg_vertices(const cg_spec* spec, const char* sigmas_json, const char* eps, int64_t m_max, int64_t step,
                      int witnesses, cg_format fmt, char** out) {
    if (!out) return argument_error("out must not be null");
    if (!spec && !sigmas_json) return argument_error("need a spec or a list of turns");
    if (m_max < 1 || step < 1) return argument_error("mmax and step must be >= 1");
    return guard([&] {
        std::vector<ExactScalar> sig = sigmas_json ? samples_from_json(sigmas_json) : spec->sf.spec.irrational_rot_turns();
        if (sig.empty()) fail(ErrorCode::precondition, "no irrational turns to scan");
        Rational e = parse_rational(eps, "eps");
        auto hits = vertex_hits(sig, e, m_max, step);
        json j = json::array();
        std::ostringstream os;
        os << "vertex\thits\tfirst\n";
        for (const auto& [chi, ms] : hits) {
            std::vector<std::int64_t> first(ms.begin(), ms.begin() + std::min<std::size_t>(ms.size(), witnesses));
            j.push_back({{"vertex", pattern_str(chi)}, {"hits", ms.size()}, {"first", first}});
            os << pattern_str(chi) << '\t' << ms.size() << '\t';
            for (std::size_t i = 0; i < first.size(); ++i) os << (i ? "," : "") << first[i];
            os << '\n';
        }
        *out = dup(fmt == CG_FORMAT_JSON ? finish(j) : os.str());
    });
}

cg_status cg_quasimono(const cg_spec* spec, const char* eps, int64_t m_max, int64_t check_factor, char** out,
                       int* violated) {
    if (!spec || !out) return argument_error("spec and out must not be null");
    if (m_max < 1 || check_factor < 1) return argument_error("mmax and check factor must be >= 1");
    return guard([&] {
        const GeodesicSpec& s = spec->sf.spec;
        Rational e = parse_rational(eps, "eps");
        auto cert = certificate(s, e, m_max);
        json j;
        j["mean_index"] = mean_index(s).str();
        j["m1"] = m1(s);
        if (!cert) {
            j["certificate"] = nullptr;
            j["message"] = "no vertex with enough coordinates near 1 within " + std::to_string(m_max);
            if (violated) *violated = 1;
            *out = dup(finish(j));
            return;
        }
        CertReport rep = verify_certificate(s, *cert, check_factor * cert->T);
        json c = {{"A", cert->A},
                  {"P", cert->P},
                  {"chi", pattern_str(cert->chi)},
                  {"T", cert->T},
                  {"index_T", s.index(cert->T)},
                  {"K1", cert->K1},
                  {"K2", cert->K2},
                  {"epsilon", rat(cert->epsilon)},
                  {"n", cert->n},
                  {"alpha", cert->alpha.str()},
                  {"beta", cert->beta ? json(cert->beta->str()) : json(nullptr)}};
        const Counts& k = s.counts();
        c["K1_plus_K2"] = cert->K1 + cert->K2;
        c["K1_plus_K2_expected"] = 2 * (s.i1() + k.p_minus + k.p_zero);
        j["certificate"] = c;
        json viol = json::array();
        for (std::size_t i = 0; i < rep.violations.size() && i < 20; ++i)
            viol.push_back({{"m", rep.violations[i].m}, {"which", rep.violations[i].which},
                            {"difference", rep.violations[i].difference}});
        j["verification"] = {{"checked_to", rep.checked_to}, {"ok", rep.ok()}, {"violations", viol}};
        if (cert->A == k.k) j["max_jump"] = max_jump(s, *cert);
        if (violated) *violated = !rep.ok();
        *out = dup(finish(j));
    });
}

cg_status cg_morse(const char* models_json, int q_max, int reversible, cg_format fmt, char** out, int* violated) {
    if (!models_json || !out) return argument_error("models and out must not be null");
    if (q_max < 0) return argument_error("qmax must be >= 0");
    return guard([&] {
        ModelsFile mf = models_from_json(models_json);
        bool rev = reversible < 0 ? mf.reversible : reversible != 0;
        MorseNumbers mn = morse_numbers(mf.models, q_max, rev);
        BettiTable b = betti_table(mf.d, mf.h, q_max);
        MorseReport rep = morse_check(mn.M, b.values, q_max, rev);
        if (violated) *violated = !rep.ok();
        if (fmt == CG_FORMAT_JSON) {
            json j;
            j["d"] = mf.d;
            j["h"] = mf.h;
            j["reversible"] = rev;
            j["q_max"] = q_max;
            j["M"] = mn.M;
            j["b"] = b.values;
            j["m_caps"] = mn.m_caps;
            j["checks"] = {{"weak", witness_json(rep.weak)},
                           {"strong", witness_json(rep.strong)},
                           {"lacunary", witness_json(rep.lacunary)},
                           {"parity", witness_json(rep.parity)}};
            j["lacunary_parity"] = rep.lacunary_parity ? json(*rep.lacunary_parity) : json(nullptr);
            j["ok"] = rep.ok();
            *out = dup(finish(j));
            return;
        }
        std::ostringstream os;
        os << "q\tM\tb\n";
        for (int q = 0; q <= q_max; ++q) os << q << '\t' << mn.M[q] << '\t' << b[q] << '\n';
        os << "\ncheck\tstatus\twitness\n";
        for (auto [name, w] : {std::pair{"weak", &rep.weak}, {"strong", &rep.strong}, {"lacunary", &rep.lacunary},
                               {"parity", &rep.parity}})
            os << name << '\t' << (*w ? "violated" : "pass") << '\t' << witness_text(*w) << '\n';
        *out = dup(os.str());
    });
}

cg_status cg_identity(const char* models_json, int reversible, cg_format fmt, char** out, int* violated) {
    if (!models_json || !out) return argument_error("models and out must not be null");
    return guard([&] {
        ModelsFile mf = models_from_json(models_json);
        bool rev = reversible < 0 ? mf.reversible : reversible != 0;
        ExactScalar res = identity_residual(mf.models, mf.d, mf.h, rev);
        if (violated) *violated = !res.is_zero();
        json models = json::array();
        std::ostringstream os;
        os << "model\tchi_hat\tmean_index\n";
        for (std::size_t i = 0; i < mf.models.size(); ++i) {
            Rational chi = chi_hat(mf.models[i]);
            std::string mi = mean_index(mf.models[i].spec).str();
            models.push_back({{"chi_hat", rat(chi)}, {"mean_index", mi}});
            os << i << '\t' << rat(chi) << '\t' << mi << '\n';
        }
        os << "B\t" << rat(B_constant(mf.d, mf.h)) << "\nresidual\t" << res.str() << '\n';
        *out = dup(fmt == CG_FORMAT_JSON ? finish({{"models", models},
                                                   {"B", rat(B_constant(mf.d, mf.h))},
                                                   {"reversible", rev},
                                                   {"residual", res.str()},
                                                   {"holds", res.is_zero()}})
                                         : os.str());
    });
}

cg_status cg_kappa(int d, int h, int64_t i_cn, int64_t p_c, int64_t mu, int reversible, cg_format fmt, char** out,
                   int* violated) {
    if (!out) return argument_error("out must not be null");
    return guard([&] {
        KappaResult k = theorem43_kappa(d, h, i_cn, p_c, mu, reversible != 0);
        if (violated) *violated = k.violation;
        if (fmt == CG_FORMAT_JSON) {
            *out = dup(finish({{"kappa", rat(k.kappa)},
                               {"alternating_betti_sum", rat(k.rhs)},
                               {"B_times_i_plus_p", rat(k.lhs_b)},
                               {"violation", k.violation}}));
            return;
        }
        std::ostringstream os;
        os << "kappa\t" << rat(k.kappa) << "\nalternating_betti_sum\t" << rat(k.rhs) << "\nB_times_i_plus_p\t"
           << rat(k.lhs_b) << "\nviolation\t" << (k.violation ? "yes" : "no") << '\n';
        *out = dup(os.str());
    });
}

cg_status cg_audit_dim4(int reversible, const char* samples_json, cg_format fmt, char** out, int* violated) {
    if (!out) return argument_error("out must not be null");
    return guard([&] {
        AuditSummary s = audit_all(reversible != 0, parse_samples(samples_json));
        std::size_t open = 0, replay_failures = 0;
        json verdicts = json::array();
        std::ostringstream os;
        os << "d\th\tG\ti1\tsample\toutcome\tbranches\twitness\n";
        for (const auto& v : s.verdicts) {
            if (!v.contradiction) ++open;
            json branches = json::array();
            for (const auto& b : v.branches) {
                bool replayed = b.killed() && replay(v.cs, b);
                if (b.killed() && !replayed) ++replay_failures;
                json kv = json::array();
                for (const auto& e : b.kassign.entries) kv.push_back(e.kvec);
                branches.push_back({{"kvectors", kv},
                                    {"route", b.route},
                                    {"mean_index", b.mean_index ? json(rat(*b.mean_index)) : json(nullptr)},
                                    {"sigma_sum", b.sigma_sum ? json(rat(*b.sigma_sum)) : json(nullptr)},
                                    {"sigma1", b.sigma1 ? json(b.sigma1->str()) : json(nullptr)},
                                    {"sigma2", b.sigma2 ? json(b.sigma2->str()) : json(nullptr)},
                                    {"q_max", b.q_max},
                                    {"witness", witness_json(b.witness)},
                                    {"replayed", replayed},
                                    {"detail", b.detail}});
            }
            std::string sample = v.sample ? v.sample->str() : "-";
            std::string outcome = v.contradiction ? "Contradiction" : "Inconclusive";
            verdicts.push_back({{"d", v.cs.d},
                                {"h", v.cs.h},
                                {"G", v.cs.g_label},
                                {"i1", v.cs.i1},
                                {"sample", sample},
                                {"outcome", outcome},
                                {"branches", branches}});
            os << v.cs.d << '\t' << v.cs.h << '\t' << v.cs.g_label << '\t' << v.cs.i1 << '\t' << sample << '\t'
               << outcome << '\t' << v.branches.size() << '\t' << witness_text(v.first_witness()) << '\n';
        }
        bool all = s.all_contradiction() && replay_failures == 0;
        std::string summary = all ? "all cases: Contradiction"
                                  : std::to_string(open) + " of " + std::to_string(s.verdicts.size()) +
                                        " cases: Inconclusive";
        if (replay_failures) summary += "; " + std::to_string(replay_failures) + " witnesses failed to replay";
        os << summary << '\n';
        if (violated) *violated = !all;
        *out = dup(fmt == CG_FORMAT_JSON ? finish({{"reversible", s.reversible},
                                                   {"cases", s.verdicts.size()},
                                                   {"all_contradiction", all},
                                                   {"interior_k_cap", 1},
                                                   {"summary", summary},
                                                   {"verdicts", verdicts}})
                                         : os.str());
    });
}

cg_status cg_audit_rational(int d, int h, cg_format fmt, char** out, int* violated) {
    if (!out) return argument_error("out must not be null");
    return guard([&] {
        RationalAuditReport r = rational_audit(d, h);
        if (violated) *violated = !r.ok();
        json rows = json::array();
        std::ostringstream os;
        os << "2eta\tepsilon\tbelow_bound\tmatches\tdecomposition\treduction\n";
        for (const auto& row : r.rows) {
            std::string dec = row.decomposition ? rat(*row.decomposition) + (row.decomposition_ok ? "" : "!") : "-";
            std::string red = row.reduction_ok ? (*row.reduction_ok ? "ok" : "fail") : "-";
            rows.push_back({{"two_eta", row.two_eta},
                            {"epsilon", rat(row.epsilon)},
                            {"below_bound", row.below_bound},
                            {"matches_epsilon_dh", row.matches_epsilon_dh},
                            {"decomposition", row.decomposition ? json(rat(*row.decomposition)) : json(nullptr)},
                            {"decomposition_ok", row.decomposition_ok},
                            {"reduction_ok", row.reduction_ok ? json(*row.reduction_ok) : json(nullptr)}});
            os << row.two_eta << '\t' << rat(row.epsilon) << '\t' << (row.below_bound ? "yes" : "no") << '\t'
               << (row.matches_epsilon_dh ? "yes" : "no") << '\t' << dec << '\t' << red << '\n';
        }
        std::string summary = std::string(r.ok() ? "all " : "not all ") + std::to_string(r.rows.size()) +
                              " values below " + rat(r.bound);
        os << summary << '\n';
        *out = dup(fmt == CG_FORMAT_JSON ? finish({{"d", d}, {"h", h}, {"D", r.D}, {"bound", rat(r.bound)},
                                                   {"ok", r.ok()}, {"rows", rows}})
                                         : os.str());
    });
}

cg_status cg_audit_nondeg(int d, int h, const char* samples_json, int reversible, int64_t m_max, cg_format fmt,
                          char** out, int* violated) {
    if (!out) return argument_error("out must not be null");
    if (m_max < 1) return argument_error("mmax must be >= 1");
    return guard([&] {
        NondegReport r = nondegenerate_audit(d, h, parse_samples(samples_json), reversible != 0, m_max);
        if (violated) *violated = !r.all_contradiction();
        json cases = json::array();
        std::ostringstream os;
        os << "r\th_plus\th_minus\tsample\troute\tT\tR\tR_tilde\tbetti\tmorse\tdetail\n";
        for (const auto& c : r.cases) {
            std::string sample = c.sample ? c.sample->str() : "-";
            json sig = json::array();
            for (const auto& s : c.sigmas) sig.push_back(s.str());
            cases.push_back({{"r", c.r},
                             {"h_plus", c.h_plus},
                             {"h_minus", c.h_minus},
                             {"sample", sample},
                             {"route", c.route},
                             {"sigma_sum", c.sigma_sum ? json(rat(*c.sigma_sum)) : json(nullptr)},
                             {"sigmas", sig},
                             {"T", c.T},
                             {"R", c.R},
                             {"R_tilde", c.R_tilde},
                             {"r1", c.r1},
                             {"betti_value", c.betti_value},
                             {"morse_value", c.morse_value},
                             {"separation_inequality", c.separation_inequality},
                             {"h_lt_1", c.h_lt_1},
                             {"detail", c.detail}});
            os << c.r << '\t' << c.h_plus << '\t' << c.h_minus << '\t' << sample << '\t' << c.route << '\t' << c.T
               << '\t' << c.R << '\t' << c.R_tilde << '\t' << c.betti_value << '\t' << c.morse_value << '\t'
               << c.detail << '\n';
        }
        std::string summary = r.all_contradiction() ? "all cases: Contradiction" : "some cases: Inconclusive";
        os << summary << '\n';
        *out = dup(fmt == CG_FORMAT_JSON ? finish({{"d", d}, {"h", h}, {"reversible", reversible != 0},
                                                   {"all_contradiction", r.all_contradiction()}, {"cases", cases}})
                                         : os.str());
    });
}

cg_status cg_audit_floor_split(int64_t p, int64_t q, const char* sigma1, int64_t m_max, cg_format fmt, char** out,
                           int* violated) {
    if (!out || !sigma1) return argument_error("sigma1 and out must not be null");
    if (m_max < 1) return argument_error("mmax must be >= 1");
    return guard([&] {
        FloorSplitReport r = floor_split_check(p, q, ExactScalar::parse(sigma1), m_max);
        if (violated) *violated = !r.ok();
        auto opt = [](const std::optional<std::int64_t>& x) { return x ? json(*x) : json(nullptr); };
        if (fmt == CG_FORMAT_JSON) {
            *out = dup(finish({{"checked", r.checked},
                               {"below", r.below},
                               {"above", r.above},
                               {"multiples", r.multiples},
                               {"first_below", opt(r.first_below)},
                               {"first_failure", opt(r.first_failure)},
                               {"ok", r.ok()}}));
            return;
        }
        std::ostringstream os;
        os << "checked\t" << r.checked << "\nbelow\t" << r.below << "\nabove\t" << r.above << "\nmultiples\t"
           << r.multiples << "\nfirst_below\t" << (r.first_below ? std::to_string(*r.first_below) : "-")
           << "\nfirst_failure\t" << (r.first_failure ? std::to_string(*r.first_failure) : "-") << '\n';
        *out = dup(os.str());
    });
}

}  // extern "C"
