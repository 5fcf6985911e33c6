#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "asres/checker.hpp"
#include "asres/error.hpp"
#include "asres/generators.hpp"
#include "asres/serialize.hpp"

namespace asres::cli {

namespace {

namespace fs = std::filesystem;

struct Range {
    int lo = 0;
    int hi = -1;
};

struct RunConfig {
    std::optional<int> m0, d, n;
    std::string grid_n, grid_d, grid_m0;
    long wmax = -1;
    std::string field = "rational";
    std::optional<std::uint32_t> prime;
    std::string out_dir;
    std::string format = "json";
    std::string which = "minimal";
    std::string exactness = "auto";
    std::string input;
    bool quiet = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Range parse_range(const std::string& text, const char* flag) {
    Range r;
    auto colon = text.find(':');
    try {
        std::size_t used = 0;
        if (colon == std::string::npos) {
            r.lo = r.hi = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
        } else {
            r.lo = std::stoi(text.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument(text);
            std::string rest = text.substr(colon + 1);
            r.hi = std::stoi(rest, &used);
            if (used != rest.size()) throw std::invalid_argument(text);
        }
    } catch (const std::logic_error&) {
        throw UsageError(std::string(flag) + " expects a:b, got '" + text + "'");
    }
    if (r.lo > r.hi) throw UsageError(std::string(flag) + " range is empty: '" + text + "'");
    return r;
}

FieldChoice resolve_field(const RunConfig& cfg) {
    std::uint32_t p = kDefaultPrime;
    if (const char* env = std::getenv(kPrimeEnv); env && *env) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (*end != '\0' || v == 0 || v > 0x7fffffffUL)
            throw UsageError(std::string(kPrimeEnv) + " is not a valid prime: '" + env + "'");
        p = static_cast<std::uint32_t>(v);
    }
    if (cfg.prime) p = *cfg.prime;
    if (cfg.field == "rational") {
        if (!is_prime(p)) throw UsageError("prime " + std::to_string(p) + " is not prime");
        FieldChoice f = FieldChoice::rational();
        f.prime = p;  // used above the rational size limit
        return f;
    }
    return FieldChoice::modular(p);
}

/// Parameter triples selected by the config, in (n, d, m0) order.
/// Triples rejected by make_params are reported on `err` and skipped in grid mode.
std::vector<ASParams> select_params(const RunConfig& cfg, std::ostream& err) {
    const bool grid = !cfg.grid_n.empty() || !cfg.grid_d.empty() || !cfg.grid_m0.empty();
    if (!grid) {
        if (!cfg.m0 || !cfg.d || !cfg.n) throw UsageError("give --m0, --d and --n, or a grid");
        return {make_params(*cfg.m0, *cfg.d, *cfg.n)};
    }
    if (cfg.m0 || cfg.d || cfg.n) throw UsageError("--m0/--d/--n cannot be combined with grid flags");
    if (cfg.grid_n.empty() || cfg.grid_d.empty()) throw UsageError("grid mode needs --grid-n and --grid-d");
    Range rn = parse_range(cfg.grid_n, "--grid-n");
    Range rd = parse_range(cfg.grid_d, "--grid-d");
    const bool auto_m0 = cfg.grid_m0.empty() || cfg.grid_m0 == "auto";
    Range rm = auto_m0 ? Range{} : parse_range(cfg.grid_m0, "--grid-m0");
    std::vector<ASParams> out;
    for (int n = rn.lo; n <= rn.hi; ++n)
        for (int d = rd.lo; d <= rd.hi; ++d) {
            const int lo = auto_m0 ? n + 1 : rm.lo;
            const int hi = auto_m0 ? 4 * n + 1 : rm.hi;
            for (int m0 = lo; m0 <= hi; ++m0) {
                if (auto_m0 && std::gcd(m0, d) != 1) continue;
                try {
                    out.push_back(make_params(m0, d, n));
                } catch (const Error& e) {
                    err << "skip m0=" << m0 << " d=" << d << " n=" << n << ": " << e.what() << "\n";
                }
            }
        }
    if (out.empty()) throw UsageError("grid selects no valid parameter set");
    return out;
}

std::string file_stem(const ASParams& p) {
    return "m0_" + std::to_string(p.m0) + "_d_" + std::to_string(p.d) + "_n_" + std::to_string(p.n);
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw UsageError("cannot create output directory '" + dir + "'");
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path.string() + "'");
    f << text;
    f.close();
    if (!f) throw UsageError("cannot write '" + path.string() + "'");
}

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
    s << ")";
    return s.str();
}

// ---------------------------------------------------------------- build

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto all = select_params(cfg, err);
    if (!cfg.out_dir.empty()) ensure_dir(cfg.out_dir);
    int status = kExitOk;
    Json summary = Json::array();
    out << std::left << std::setw(26) << "semigroup" << std::setw(24) << "cone ranks" << std::setw(26) << "betti"
        << std::setw(8) << "cancel" << "generator weights\n";
    for (const auto& p : all) {
        Artifact a = make_artifact(p);
        const Complex& R = a.minimal.complex;
        if (!composition_defects(a.cone).empty() || !composition_defects(R).empty() || !unit_entries(R).empty()) {
            err << p.label() << ": internal check failed after construction\n";
            status = kExitFailure;
        }
        std::vector<std::size_t> betti;
        for (int s = 1; s <= R.length(); ++s) betti.push_back(R.module(s).rank());
        std::vector<long> gen_weights = R.module(1).weights();
        auto cone_ranks = a.cone.ranks();
        cone_ranks.erase(cone_ranks.begin());
        out << std::setw(26) << p.label() << std::setw(24) << join(cone_ranks) << std::setw(26) << join(betti)
            << std::setw(8) << a.minimal.provenance.size() << join(gen_weights) << "\n";
        if (!a.sign_flips.empty() && !cfg.quiet) out << "  sign flips: " << join(a.sign_flips) << "\n";
        Json doc = artifact_to_json(a);
        if (!cfg.out_dir.empty()) write_file(fs::path(cfg.out_dir) / (file_stem(p) + ".json"), dump(doc));
        summary.push_back(Json{{"params", doc["params"]}, {"summary", doc["summary"]}, {"sign_flips", a.sign_flips}});
    }
    if (!cfg.out_dir.empty() && all.size() > 1) write_file(fs::path(cfg.out_dir) / "summary.json", dump(summary));
    return status;
}

// --------------------------------------------------------------- verify

VerifyOptions verify_options(const RunConfig& cfg, const ASParams& p) {
    VerifyOptions o;
    o.wmax = cfg.wmax;
    o.field = resolve_field(cfg);
    if (cfg.exactness == "auto") {
        o.exactness_cone = p.n <= 3;
        o.exactness_minimal = p.n <= 4;
    } else {
        o.exactness_cone = o.exactness_minimal = cfg.exactness == "on";
    }
    return o;
}

int verify_input(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ifstream f(cfg.input, std::ios::binary);
    if (!f) throw UsageError("cannot read '" + cfg.input + "'");
    std::vector<std::string> failures;
    std::optional<Artifact> a;
    try {
        a = artifact_from_json(Json::parse(f));
    } catch (const nlohmann::json::exception& e) {
        failures.push_back(std::string("load: ") + e.what());
    } catch (const Error& e) {
        failures.push_back(std::string("load: ") + e.what());
    }
    if (a) {
        const ASParams& p = a->params;
        const FieldChoice field = resolve_field(cfg);
        const long wmax = cfg.wmax >= 0 ? cfg.wmax : p.default_wmax();
        auto check_weights = [&](const Complex& c, const std::string& which) {
            for (int s = 0; s <= c.length(); ++s)
                for (std::size_t i = 0; i < c.module(s).rank(); ++i)
                    if (c.module(s).weight(i) != basis_weight(p, c.module(s).at(i)))
                        failures.push_back("weights: " + which + " position " + std::to_string(s) + " element " +
                                           c.module(s).at(i).str());
        };
        check_weights(a->cone, "cone");
        check_weights(a->minimal.complex, "minimal");
        const bool exact_cone = cfg.exactness == "on" || (cfg.exactness == "auto" && p.n <= 3);
        const bool exact_min = cfg.exactness == "on" || (cfg.exactness == "auto" && p.n <= 4);
        for (const auto& m : verify_loaded(a->cone, exact_cone ? wmax : -1, field)) failures.push_back("cone " + m);
        for (const auto& m : verify_loaded(a->minimal.complex, exact_min ? wmax : -1, field))
            failures.push_back("minimal " + m);
        for (const auto& u : unit_entries(a->minimal.complex))
            failures.push_back("minimality: unit entry at position " + std::to_string(u.position));
        const Complex& R = a->minimal.complex;
        for (int s = 1; s <= p.n; ++s) {
            long actual = s <= R.length() ? static_cast<long>(R.module(s).rank()) : 0;
            if (actual != betti_formula(p, s)) failures.push_back("betti: beta_" + std::to_string(s) + " mismatch");
        }
        if (R.length() > p.n) failures.push_back("betti: resolution longer than n");
        out << p.label() << " (loaded from " << cfg.input << ")\n";
    }
    for (const auto& m : failures) out << "FAIL " << m << "\n";
    out << (failures.empty() ? "PASS" : "FAIL") << "\n";
    (void)err;
    return failures.empty() ? kExitOk : kExitFailure;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.input.empty()) {
        if (cfg.m0 || cfg.d || cfg.n || !cfg.grid_n.empty()) throw UsageError("--input cannot be combined with parameters");
        return verify_input(cfg, out, err);
    }
    auto all = select_params(cfg, err);
    if (!cfg.out_dir.empty()) ensure_dir(cfg.out_dir);
    int status = kExitOk;
    Json merged = Json::array();
    out << std::left << std::setw(26) << "semigroup" << std::setw(26) << "betti" << std::setw(8) << "wmax"
        << "result\n";
    for (const auto& p : all) {
        VerificationReport rep = verify_all(p, verify_options(cfg, p));
        out << std::setw(26) << p.label() << std::setw(26) << join(rep.betti_actual) << std::setw(8) << rep.wmax
            << (rep.passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& f : rep.failures) out << "  " << f << "\n";
        if (!rep.passed()) status = kExitFailure;
        Json doc = report_to_json(rep);
        if (!cfg.out_dir.empty()) write_file(fs::path(cfg.out_dir) / (file_stem(p) + ".report.json"), dump(doc));
        merged.push_back(Json{{"label", p.label()}, {"passed", rep.passed()}, {"failures", rep.failures}});
    }
    if (!cfg.out_dir.empty() && all.size() > 1) write_file(fs::path(cfg.out_dir) / "summary.json", dump(merged));
    return status;
}

// --------------------------------------------------------------- export

int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto all = select_params(cfg, err);
    const FieldChoice field = resolve_field(cfg);
    if (!cfg.out_dir.empty()) ensure_dir(cfg.out_dir);
    for (const auto& p : all) {
        Artifact a = make_artifact(p);
        std::string text, ext;
        if (cfg.format == "json") {
            text = dump(artifact_to_json(a));
            ext = ".json";
        } else {
            const bool minimal = cfg.which == "minimal";
            text = cas_script(minimal ? a.minimal.complex : a.cone, field,
                              (minimal ? "minimal resolution of " : "cone resolution of ") + p.label());
            ext = minimal ? ".m2" : ".cone.m2";
        }
        if (cfg.out_dir.empty())
            out << text;
        else
            write_file(fs::path(cfg.out_dir) / (file_stem(p) + ext), text);
    }
    return kExitOk;
}

// ---------------------------------------------------------------- betti

int cmd_betti(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    for (const auto& p : select_params(cfg, err)) {
        std::vector<long> b;
        for (int s = 1; s <= p.n; ++s) b.push_back(betti_formula(p, s));
        out << std::left << std::setw(26) << p.label() << join(b) << "\n";
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Free resolutions of arithmetic-sequence monomial curves", "asres"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool with_format) {
        sub->add_option("--m0", cfg.m0, "first generator m0 (> n)");
        sub->add_option("--d", cfg.d, "common difference d (>= 1)");
        sub->add_option("--n", cfg.n, "embedding dimension minus one (>= 2)");
        sub->add_option("--grid-n", cfg.grid_n, "range a:b of n");
        sub->add_option("--grid-d", cfg.grid_d, "range a:b of d");
        sub->add_option("--grid-m0", cfg.grid_m0, "range a:b of m0, or 'auto' for [n+1, 4n+1] with gcd(m0,d)=1");
        sub->add_option("--field", cfg.field, "field for rank computations")
            ->check(CLI::IsMember({"rational", "prime"}));
        sub->add_option("--prime", cfg.prime, "prime for the prime field");
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_flag("--quiet", cfg.quiet, "less output");
        if (with_format) sub->add_option("--format", cfg.format, "export format")->check(CLI::IsMember({"json", "cas"}));
    };

    auto* build = app.add_subcommand("build", "build the cone and minimal resolutions and print a summary");
    add_common(build, false);
    auto* verify = app.add_subcommand("verify", "run every check and report");
    add_common(verify, false);
    verify->add_option("--wmax", cfg.wmax, "largest weight for exactness (default delta_0 + 3 m_n)");
    verify->add_option("--exactness", cfg.exactness, "graded exactness: auto (n <= 4), on, off")
        ->check(CLI::IsMember({"auto", "on", "off"}));
    verify->add_option("--input", cfg.input, "verify an exported JSON document instead of building");
    auto* exp = app.add_subcommand("export", "write the canonical JSON or a Macaulay2 script");
    add_common(exp, true);
    exp->add_option("--complex", cfg.which, "complex for the CAS script")->check(CLI::IsMember({"minimal", "cone"}));
    auto* betti = app.add_subcommand("betti", "closed-form Betti numbers only");
    add_common(betti, false);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*build) return cmd_build(cfg, out, err);
        if (*verify) return cmd_verify(cfg, out, err);
        if (*exp) return cmd_export(cfg, out, err);
        return cmd_betti(cfg, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.is_usage_error() ? kExitUsage : kExitFailure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace asres::cli
