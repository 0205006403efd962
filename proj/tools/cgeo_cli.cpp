#include "cgeo/cgeo.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;
constexpr int exit_internal = 3;

struct InputError {
    std::string what;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError{path + ": cannot open"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int report_status(cg_status s, const std::string& context) {
    std::cerr << "error: " << (context.empty() ? "" : context + ": ") << cg_last_error() << '\n';
    return s == CG_ERR_INTERNAL ? exit_internal : exit_input;
}

// Prints the output string and maps status and violation flag to an exit code.
int emit(cg_status s, char*& out, const int& violated, const std::string& context = {}) {
    if (s != CG_OK) return report_status(s, context);
    if (out) std::fputs(out, stdout);
    cg_string_free(out);
    return violated ? exit_violation : exit_ok;
}

class SpecHandle {
public:
    explicit SpecHandle(const std::string& path) : path_(path) {
        std::string text = slurp(path);
        status_ = cg_spec_from_json(text.c_str(), &spec_);
    }
    ~SpecHandle() { cg_spec_free(spec_); }
    SpecHandle(const SpecHandle&) = delete;
    SpecHandle& operator=(const SpecHandle&) = delete;
    bool ok() const { return status_ == CG_OK; }
    int fail() const { return report_status(status_, path_); }
    const cg_spec* get() const { return spec_; }

private:
    std::string path_;
    cg_spec* spec_ = nullptr;
    cg_status status_ = CG_OK;
};

cg_format format_of(const std::string& f) { return f == "json" ? CG_FORMAT_JSON : CG_FORMAT_TSV; }

void add_format(CLI::App* app, std::string& fmt) {
    app->add_option("--format", fmt, "Output format")->check(CLI::IsMember({"tsv", "json"}))->default_val("tsv");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Index iteration, loop-space Betti numbers and case audits for closed geodesics"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cg_version()));
    int code = exit_ok;

    std::string fmt = "tsv", spec_path, models_path, samples_path, turns_path, eps = "1/8", sigma1;
    std::int64_t m_max = 0, sep_max = 1000000, lemma_max = 10000, step = 1, check_factor = 10, icn = 0, pc = 0, mu = 0, p = 0, q = 0;
    int d = 0, h = 0, q_max = 0, witnesses = 5;
    bool sums = false, reversible = false;

    auto* iterate = app.add_subcommand("iterate", "Index and nullity of c^m for m = 1..mmax");
    iterate->add_option("--spec", spec_path, "Spec file (JSON)")->required()->check(CLI::ExistingFile);
    iterate->add_option("--mmax", m_max, "Largest iterate")->required()->check(CLI::PositiveNumber);
    add_format(iterate, fmt);
    iterate->callback([&] {
        SpecHandle s(spec_path);
        if (!s.ok()) {
            code = s.fail();
            return;
        }
        char* out = nullptr;
        code = emit(cg_iterate(s.get(), m_max, format_of(fmt), &out), out, 0);
    });

    auto* period = app.add_subcommand("period", "Analytical period");
    period->add_option("--spec", spec_path, "Spec file (JSON)")->required()->check(CLI::ExistingFile);
    add_format(period, fmt);
    period->callback([&] {
        SpecHandle s(spec_path);
        if (!s.ok()) {
            code = s.fail();
            return;
        }
        char* out = nullptr;
        code = emit(cg_period_report(s.get(), format_of(fmt), &out), out, 0);
    });

    auto* meanindex = app.add_subcommand("meanindex", "Exact mean index and monotonicity test");
    meanindex->add_option("--spec", spec_path, "Spec file (JSON)")->required()->check(CLI::ExistingFile);
    add_format(meanindex, fmt);
    meanindex->callback([&] {
        SpecHandle s(spec_path);
        if (!s.ok()) {
            code = s.fail();
            return;
        }
        char* out = nullptr;
        code = emit(cg_meanindex_report(s.get(), format_of(fmt), &out), out, 0);
    });

    auto* betti = app.add_subcommand("betti", "Betti numbers of the free loop space");
    betti->add_option("--d", d, "Degree of the generator")->required();
    betti->add_option("--h", h, "Truncation height")->required();
    betti->add_option("--qmax", q_max, "Largest degree")->required()->check(CLI::NonNegativeNumber);
    betti->add_flag("--sums", sums, "Add partial-sum columns checked against the closed form");
    add_format(betti, fmt);
    betti->callback([&] {
        char* out = nullptr;
        int violated = 0;
        code = emit(cg_betti(d, h, q_max, sums, format_of(fmt), &out, &violated), out, violated);
    });

    auto* vertices = app.add_subcommand("vertices", "Iterates whose fractional parts sit near cube vertices");
    auto* vspec = vertices->add_option("--spec", spec_path, "Spec file (JSON)")->check(CLI::ExistingFile);
    auto* vturns = vertices->add_option("--turns", turns_path, "JSON array of exact turns")->check(CLI::ExistingFile);
    vspec->excludes(vturns);
    vertices->add_option("--eps", eps, "Corner size p/q")->default_val("1/8");
    vertices->add_option("--mmax", m_max, "Largest iterate")->required()->check(CLI::PositiveNumber);
    vertices->add_option("--step", step, "Scan multiples of step")->default_val(1)->check(CLI::PositiveNumber);
    vertices->add_option("--witnesses", witnesses, "Hits listed per vertex")->default_val(5);
    add_format(vertices, fmt);
    vertices->callback([&] {
        if (spec_path.empty() && turns_path.empty()) throw InputError{"vertices needs --spec or --turns"};
        std::string turns = turns_path.empty() ? std::string() : slurp(turns_path);
        char* out = nullptr;
        if (spec_path.empty()) {
            code = emit(cg_vertices(nullptr, turns.c_str(), eps.c_str(), m_max, step, witnesses, format_of(fmt), &out),
                        out, 0, turns_path);
            return;
        }
        SpecHandle s(spec_path);
        if (!s.ok()) {
            code = s.fail();
            return;
        }
        code = emit(cg_vertices(s.get(), nullptr, eps.c_str(), m_max, step, witnesses, format_of(fmt), &out), out, 0);
    });

    auto* quasimono = app.add_subcommand("quasimono", "Quasi-monotonicity certificate (JSON)");
    quasimono->add_option("--spec", spec_path, "Spec file (JSON)")->required()->check(CLI::ExistingFile);
    quasimono->add_option("--eps", eps, "Corner size p/q")->default_val("1/8");
    quasimono->add_option("--mmax", m_max, "Search bound for T")->required()->check(CLI::PositiveNumber);
    quasimono->add_option("--check-factor", check_factor, "Verify up to this multiple of T")
        ->default_val(10)
        ->check(CLI::PositiveNumber);
    quasimono->callback([&] {
        SpecHandle s(spec_path);
        if (!s.ok()) {
            code = s.fail();
            return;
        }
        char* out = nullptr;
        int violated = 0;
        code = emit(cg_quasimono(s.get(), eps.c_str(), m_max, check_factor, &out, &violated), out, violated);
    });

    auto* morse = app.add_subcommand("morse", "Morse-type numbers against Betti numbers");
    morse->add_option("--models", models_path, "Models file (JSON)")->required()->check(CLI::ExistingFile);
    morse->add_option("--qmax", q_max, "Largest degree")->required()->check(CLI::NonNegativeNumber);
    auto* mrev = morse->add_flag("--reversible", reversible, "Reversible metric (overrides the file)");
    add_format(morse, fmt);
    morse->callback([&] {
        std::string text = slurp(models_path);
        char* out = nullptr;
        int violated = 0;
        int rev = mrev->count() ? 1 : -1;
        code = emit(cg_morse(text.c_str(), q_max, rev, format_of(fmt), &out, &violated), out, violated, models_path);
    });

    auto* identity =
        app.add_subcommand("identity", "Mean index identity for a models file, or the kappa form with --d --h");
    auto* imodels = identity->add_option("--models", models_path, "Models file (JSON)")->check(CLI::ExistingFile);
    auto* id_d = identity->add_option("--d", d, "Degree of the generator");
    identity->add_option("--h", h, "Truncation height");
    identity->add_option("--icn", icn, "Index of c^n");
    identity->add_option("--pc", pc, "p(c)");
    identity->add_option("--mu", mu, "Degree bound mu");
    auto* irev = identity->add_flag("--reversible", reversible, "Reversible metric");
    imodels->excludes(id_d);
    add_format(identity, fmt);
    identity->callback([&] {
        char* out = nullptr;
        int violated = 0;
        if (!models_path.empty()) {
            std::string text = slurp(models_path);
            int rev = irev->count() ? 1 : -1;
            code = emit(cg_identity(text.c_str(), rev, format_of(fmt), &out, &violated), out, violated, models_path);
            return;
        }
        if (!id_d->count()) throw InputError{"identity needs --models or --d --h --icn --pc --mu"};
        code = emit(cg_kappa(d, h, icn, pc, mu, reversible, format_of(fmt), &out, &violated), out, violated);
    });

    auto* audit = app.add_subcommand("audit", "Mechanical case audits");
    audit->require_subcommand(1);

    auto* dim4 = audit->add_subcommand("dim4", "Single geodesic on a 4-manifold");
    dim4->add_flag("--reversible", reversible, "Reversible grid");
    dim4->add_option("--samples", samples_path, "JSON array of exact samples")->check(CLI::ExistingFile);
    add_format(dim4, fmt);
    dim4->callback([&] {
        std::string text = samples_path.empty() ? std::string() : slurp(samples_path);
        char* out = nullptr;
        int violated = 0;
        code = emit(cg_audit_dim4(reversible, samples_path.empty() ? nullptr : text.c_str(), format_of(fmt), &out,
                                  &violated),
                    out, violated, samples_path);
    });

    auto* rational = audit->add_subcommand("rational", "Rational single geodesic inequality");
    rational->add_option("--d", d, "Degree of the generator")->required();
    rational->add_option("--h", h, "Truncation height")->required();
    add_format(rational, fmt);
    rational->callback([&] {
        char* out = nullptr;
        int violated = 0;
        code = emit(cg_audit_rational(d, h, format_of(fmt), &out, &violated), out, violated);
    });

    auto* nondeg = audit->add_subcommand("nondeg", "Completely non-degenerate single geodesic");
    nondeg->add_option("--d", d, "Degree of the generator")->required();
    nondeg->add_option("--h", h, "Truncation height")->required();
    nondeg->add_flag("--reversible", reversible, "Reversible metric");
    nondeg->add_option("--samples", samples_path, "JSON array of exact samples")->check(CLI::ExistingFile);
    nondeg->add_option("--mmax", sep_max, "Separation search bound")->capture_default_str()->check(CLI::PositiveNumber);
    add_format(nondeg, fmt);
    nondeg->callback([&] {
        std::string text = samples_path.empty() ? std::string() : slurp(samples_path);
        char* out = nullptr;
        int violated = 0;
        code = emit(cg_audit_nondeg(d, h, samples_path.empty() ? nullptr : text.c_str(), reversible, sep_max,
                                    format_of(fmt), &out, &violated),
                    out, violated, samples_path);
    });

    auto* floorsplit = audit->add_subcommand("floorsplit", "Floor-sum split for two turns summing to q/p");
    floorsplit->add_option("--p", p, "Denominator")->required()->check(CLI::PositiveNumber);
    floorsplit->add_option("--q", q, "Numerator")->required();
    floorsplit->add_option("--sigma1", sigma1, "Exact irrational turn")->required();
    floorsplit->add_option("--mmax", lemma_max, "Largest m")->capture_default_str()->check(CLI::PositiveNumber);
    add_format(floorsplit, fmt);
    floorsplit->callback([&] {
        char* out = nullptr;
        int violated = 0;
        code = emit(cg_audit_floor_split(p, q, sigma1.c_str(), lemma_max, format_of(fmt), &out, &violated), out, violated);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_input;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what << '\n';
        return exit_input;
    }
    return code;
}
