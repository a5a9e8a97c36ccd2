// artin-randlab: sampling, classification, exact evaluation, Monte Carlo
// sweeps, oracle verification and the (2,2)-free sequence for random Artin
// group defining graphs. See README for the CSV schema and file formats.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "artin/classify.hpp"
#include "artin/exact.hpp"
#include "artin/graph_io.hpp"
#include "artin/growth.hpp"
#include "artin/montecarlo.hpp"
#include "artin/oracle.hpp"
#include "artin/predicates.hpp"
#include "artin/verify.hpp"

namespace {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string opt12(const std::optional<double>& v) { return v ? fmt12(*v) : ""; }

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw artin::IoError("cannot open output file: " + out_path);
    f << text;
    if (!f) throw artin::IoError("write failed: " + out_path);
}

// The shared result schema of exact/estimate/sweep. Blank fields stay blank
// in CSV and null in JSON.
struct ResultRow {
    std::optional<std::int64_t> n;
    std::optional<std::uint64_t> m;
    std::string predicate;
    std::optional<double> exact;
    std::optional<double> p_hat;
    std::optional<double> ci_low;
    std::optional<double> ci_high;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<double> asymptote;
};

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
    std::string out = "n,m,predicate,exact,p_hat,ci_low,ci_high,samples,seed,asymptote\n";
    for (const auto& r : rows) {
        out += r.n ? std::to_string(*r.n) : "";
        out += ',';
        out += r.m ? std::to_string(*r.m) : "";
        out += ',';
        out += r.predicate;
        out += ',';
        out += opt12(r.exact);
        out += ',';
        out += opt12(r.p_hat);
        out += ',';
        out += opt12(r.ci_low);
        out += ',';
        out += opt12(r.ci_high);
        out += ',';
        out += r.samples ? std::to_string(*r.samples) : "";
        out += ',';
        out += r.seed ? std::to_string(*r.seed) : "";
        out += ',';
        out += opt12(r.asymptote);
        out += '\n';
    }
    return out;
}

std::string rows_to_json(const std::vector<ResultRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json o;
        o["n"] = r.n ? nlohmann::ordered_json(*r.n) : nullptr;
        o["m"] = r.m ? nlohmann::ordered_json(*r.m) : nullptr;
        o["predicate"] = r.predicate;
        o["exact"] = r.exact ? nlohmann::ordered_json(*r.exact) : nullptr;
        o["p_hat"] = r.p_hat ? nlohmann::ordered_json(*r.p_hat) : nullptr;
        o["ci_low"] = r.ci_low ? nlohmann::ordered_json(*r.ci_low) : nullptr;
        o["ci_high"] = r.ci_high ? nlohmann::ordered_json(*r.ci_high) : nullptr;
        o["samples"] = r.samples ? nlohmann::ordered_json(*r.samples) : nullptr;
        o["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nullptr;
        o["asymptote"] = r.asymptote ? nlohmann::ordered_json(*r.asymptote) : nullptr;
        arr.push_back(std::move(o));
    }
    return arr.dump() + "\n";
}

std::string emit_rows(const std::vector<ResultRow>& rows, const std::string& format) {
    return format == "json" ? rows_to_json(rows) : rows_to_csv(rows);
}

// "start:stop:step" (inclusive of aligned endpoints) or a single integer.
std::vector<int> parse_range(const std::string& text) {
    std::vector<int> values;
    const auto to_int = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw artin::Error("bad range component \"" + s + "\" in \"" + text + "\"");
        }
    };
    const std::size_t c1 = text.find(':');
    if (c1 == std::string::npos) {
        values.push_back(to_int(text));
        return values;
    }
    const std::size_t c2 = text.find(':', c1 + 1);
    const int start = to_int(text.substr(0, c1));
    const int stop = to_int(c2 == std::string::npos ? text.substr(c1 + 1)
                                                    : text.substr(c1 + 1, c2 - c1 - 1));
    const int step = c2 == std::string::npos ? 1 : to_int(text.substr(c2 + 1));
    if (step <= 0) throw artin::Error("range step must be positive in \"" + text + "\"");
    if (stop < start) throw artin::Error("range stop must be >= start in \"" + text + "\"");
    for (int v = start; v <= stop; v += step) values.push_back(v);
    return values;
}

std::string read_input_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw artin::IoError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct CommonOpts {
    std::string format = "csv";
    std::string out;
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_threads = true) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out, "output path (default: stdout)");
    if (with_threads)
        cmd->add_option("--threads", opts.threads,
                        "worker count (default: ARTIN_RANDLAB_THREADS or hardware)");
}

std::uint64_t resolve_m(const std::optional<std::uint64_t>& m_opt, const std::string& growth_str,
                        int n) {
    if (m_opt) return *m_opt;
    return artin::GrowthSpec::parse(growth_str).eval(n);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random Artin group laboratory"};
    app.require_subcommand(1);
    bool require_seed = false;
    app.add_flag("--require-seed", require_seed,
                 "fail when a randomized command relies on the default seed");

    int exit_status = 0;

    // ---- sample ----
    auto* sample = app.add_subcommand("sample", "draw graphs uniformly from G^{n,m}");
    struct {
        int n = 0;
        std::optional<std::uint64_t> m;
        std::string growth;
        std::uint64_t seed = 1;
        std::uint64_t count = 1;
        CommonOpts common;
    } sample_opts;
    auto* sample_n = sample->add_option("--n", sample_opts.n, "rank")->required();
    auto* sample_m = sample->add_option("--m", sample_opts.m, "alphabet maximum");
    auto* sample_growth = sample->add_option("--growth", sample_opts.growth,
                                             "growth spec, e.g. \"1*N^3/2\"");
    sample_m->excludes(sample_growth);
    sample_growth->excludes(sample_m);
    auto* sample_seed = sample->add_option("--seed", sample_opts.seed, "RNG seed")
                            ->capture_default_str();
    sample->add_option("--count", sample_opts.count, "number of graphs")->capture_default_str();
    add_common(sample, sample_opts.common, false);
    (void)sample_n;
    sample->callback([&] {
        if (require_seed && sample_seed->count() == 0)
            throw artin::Error("--require-seed is set: pass --seed explicitly");
        if (!sample_opts.m && sample_opts.growth.empty())
            throw artin::Error("one of --m or --growth is required");
        const std::uint64_t m = resolve_m(sample_opts.m, sample_opts.growth, sample_opts.n);
        const artin::SampleSpace space(sample_opts.n, m);
        std::string out;
        for (std::uint64_t i = 0; i < sample_opts.count; ++i)
            out += artin::encode(artin::sample_graph(space, sample_opts.seed, i)) + "\n";
        write_output(out, sample_opts.common.out);
    });

    // ---- classify ----
    auto* classify = app.add_subcommand("classify", "class membership report for a graph file");
    struct {
        std::string file;
        std::uint64_t budget = artin::kDefaultCliqueBudget;
        CommonOpts common;
    } classify_opts;
    classify->add_option("file", classify_opts.file, "graph file (\"-\" for stdin)")->required();
    classify->add_option("--budget", classify_opts.budget, "maximal-clique budget")
        ->capture_default_str();
    classify->add_option("--out", classify_opts.common.out, "output path (default: stdout)");
    classify->callback([&] {
        const artin::DefiningGraph g = artin::decode(read_input_file(classify_opts.file));
        const artin::ClassReport report = artin::classify_all(g, classify_opts.budget);
        write_output(report.to_json() + "\n", classify_opts.common.out);
    });

    // ---- exact ----
    auto* exact = app.add_subcommand("exact", "closed-form values");
    struct {
        std::string formula;
        std::string n_range;
        std::optional<std::uint64_t> m;
        std::string growth;
        std::uint64_t k = 1;
        CommonOpts common;
    } exact_opts;
    exact->add_option("--formula", exact_opts.formula, "formula name")
        ->required()
        ->check(CLI::IsMember({"forbidden", "22free", "adj2-mean", "adj2-second",
                               "second-moment-lb", "markov-ub", "cone-bound", "join-bound",
                               "limit"}));
    exact->add_option("--n", exact_opts.n_range, "rank or range start:stop:step");
    auto* exact_m = exact->add_option("--m", exact_opts.m, "alphabet maximum");
    auto* exact_growth =
        exact->add_option("--growth", exact_opts.growth, "growth spec, e.g. \"1*N^2\"");
    exact_m->excludes(exact_growth);
    exact_growth->excludes(exact_m);
    exact->add_option("--k", exact_opts.k, "forbidden label count (forbidden/limit)")
        ->capture_default_str();
    add_common(exact, exact_opts.common, false);
    exact->callback([&] {
        std::vector<ResultRow> rows;
        if (exact_opts.formula == "limit") {
            ResultRow r;
            r.predicate = "limit";
            r.exact = artin::limit_forbidden(exact_opts.k);
            rows.push_back(r);
        } else {
            if (exact_opts.n_range.empty()) throw artin::Error("--n is required");
            if (!exact_opts.m && exact_opts.growth.empty())
                throw artin::Error("one of --m or --growth is required");
            for (int n : parse_range(exact_opts.n_range)) {
                const std::uint64_t m = resolve_m(exact_opts.m, exact_opts.growth, n);
                ResultRow r;
                r.n = n;
                r.m = m;
                r.predicate = exact_opts.formula;
                if (exact_opts.formula == "forbidden")
                    r.exact = artin::prob_forbidden_labels(n, m, exact_opts.k).value();
                else if (exact_opts.formula == "22free")
                    r.exact = artin::prob_22_free_exact(n, m).value();
                else if (exact_opts.formula == "adj2-mean")
                    r.exact = artin::to_double(artin::adjacent_two_mean(n, m));
                else if (exact_opts.formula == "adj2-second")
                    r.exact = artin::to_double(artin::adjacent_two_moments(n, m).second_moment);
                else if (exact_opts.formula == "second-moment-lb")
                    r.exact = artin::second_moment_lower_bound(n, m).value();
                else if (exact_opts.formula == "markov-ub")
                    r.exact = artin::markov_upper_bound(n, m).value();
                else if (exact_opts.formula == "cone-bound")
                    r.exact = artin::cone_upper_bound(n, m).value();
                else if (exact_opts.formula == "join-bound")
                    r.exact = artin::join_upper_bound(n, m).value();
                rows.push_back(r);
            }
        }
        write_output(emit_rows(rows, exact_opts.common.format), exact_opts.common.out);
    });

    // ---- estimate ----
    auto* est = app.add_subcommand("estimate", "Monte Carlo class probability");
    struct {
        std::string predicate;
        int n = 0;
        std::optional<std::uint64_t> m;
        std::string growth;
        std::uint64_t samples = 0;
        std::uint64_t seed = 1;
        double confidence = 0.99;
        CommonOpts common;
    } est_opts;
    est->add_option("--predicate", est_opts.predicate, "class predicate name")->required();
    est->add_option("--n", est_opts.n, "rank")->required();
    auto* est_m = est->add_option("--m", est_opts.m, "alphabet maximum");
    auto* est_growth = est->add_option("--growth", est_opts.growth, "growth spec");
    est_m->excludes(est_growth);
    est_growth->excludes(est_m);
    est->add_option("--samples", est_opts.samples, "sample count")->required();
    auto* est_seed = est->add_option("--seed", est_opts.seed, "RNG seed")->capture_default_str();
    est->add_option("--confidence", est_opts.confidence, "CI confidence level")
        ->capture_default_str();
    add_common(est, est_opts.common);
    est->callback([&] {
        if (require_seed && est_seed->count() == 0)
            throw artin::Error("--require-seed is set: pass --seed explicitly");
        if (!est_opts.m && est_opts.growth.empty())
            throw artin::Error("one of --m or --growth is required");
        const artin::GraphPredicate pred = artin::predicate_by_name(est_opts.predicate);
        const std::uint64_t m = resolve_m(est_opts.m, est_opts.growth, est_opts.n);
        const artin::Estimate e =
            artin::estimate(pred, artin::SampleSpace(est_opts.n, m), est_opts.samples,
                            est_opts.seed, est_opts.confidence, est_opts.common.threads);
        ResultRow r;
        r.n = e.n;
        r.m = e.m;
        r.predicate = e.predicate;
        r.exact = artin::exact_probability_closed_form(pred.name, e.n, e.m);
        r.p_hat = e.p_hat;
        r.ci_low = e.ci_low;
        r.ci_high = e.ci_high;
        r.samples = e.samples;
        r.seed = e.seed;
        if (!est_opts.growth.empty())
            r.asymptote = artin::asymptote_for(pred.name, artin::GrowthSpec::parse(est_opts.growth));
        write_output(emit_rows({r}, est_opts.common.format), est_opts.common.out);
    });

    // ---- sweep ----
    auto* sw = app.add_subcommand("sweep", "estimates along a growth function");
    struct {
        std::string growth;
        std::string predicate;
        std::string n_range;
        std::uint64_t samples = 0;
        std::uint64_t seed = 1;
        double confidence = 0.99;
        CommonOpts common;
    } sw_opts;
    sw->add_option("--growth", sw_opts.growth, "growth spec, e.g. \"1*N^2\"")->required();
    sw->add_option("--predicate", sw_opts.predicate, "class predicate name")->required();
    sw->add_option("--n", sw_opts.n_range, "rank range start:stop:step")->required();
    sw->add_option("--samples", sw_opts.samples, "sample count per rank")->required();
    auto* sw_seed = sw->add_option("--seed", sw_opts.seed, "RNG seed")->capture_default_str();
    sw->add_option("--confidence", sw_opts.confidence, "CI confidence level")
        ->capture_default_str();
    add_common(sw, sw_opts.common);
    sw->callback([&] {
        if (require_seed && sw_seed->count() == 0)
            throw artin::Error("--require-seed is set: pass --seed explicitly");
        const artin::GraphPredicate pred = artin::predicate_by_name(sw_opts.predicate);
        const artin::GrowthSpec growth = artin::GrowthSpec::parse(sw_opts.growth);
        const auto rows = artin::sweep(growth, pred, parse_range(sw_opts.n_range),
                                       sw_opts.samples, sw_opts.seed, sw_opts.confidence,
                                       sw_opts.common.threads);
        std::vector<ResultRow> out;
        for (const auto& row : rows) {
            ResultRow r;
            r.n = row.n;
            r.m = row.m;
            r.predicate = row.est.predicate;
            r.exact = row.exact;
            r.p_hat = row.est.p_hat;
            r.ci_low = row.est.ci_low;
            r.ci_high = row.est.ci_high;
            r.samples = row.est.samples;
            r.seed = row.est.seed;
            r.asymptote = row.asymptote;
            out.push_back(r);
        }
        write_output(emit_rows(out, sw_opts.common.format), sw_opts.common.out);
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "closed forms vs the enumeration oracle");
    struct {
        std::uint64_t budget = 2'000'000;
        unsigned threads = 0;
    } verify_opts;
    verify->add_option("--budget", verify_opts.budget, "enumeration budget (graphs)")
        ->capture_default_str();
    verify->add_option("--threads", verify_opts.threads, "worker count");
    verify->callback([&] {
        const auto checks =
            artin::run_verification(artin::default_verify_grid(),
                                    artin::EnumBudget{verify_opts.budget}, verify_opts.threads);
        std::size_t passed = 0, failed = 0, skipped = 0;
        std::string out;
        for (const auto& c : checks) {
            switch (c.status) {
                case artin::VerifyCheck::Status::Pass:
                    out += c.name + ": " + c.detail + " PASS\n";
                    ++passed;
                    break;
                case artin::VerifyCheck::Status::Fail:
                    out += c.name + ": " + c.detail + " FAIL\n";
                    ++failed;
                    break;
                case artin::VerifyCheck::Status::Skip:
                    out += c.name + ": SKIPPED (" + c.detail + ")\n";
                    ++skipped;
                    break;
                case artin::VerifyCheck::Status::Info:
                    out += "info " + c.name + ": " + c.detail + "\n";
                    break;
            }
        }
        out += "verify: " + std::to_string(passed) + " passed, " + std::to_string(failed) +
               " failed, " + std::to_string(skipped) + " skipped\n";
        std::cout << out;
        if (skipped > 0)
            std::cerr << "warning: " << skipped
                      << " check(s) skipped; raise --budget to run them\n";
        if (failed > 0) exit_status = 2;
    });

    // ---- conjecture ----
    auto* conj = app.add_subcommand("conjecture",
                                 "(2,2)-free probability along m = floor(N^(3/2))");
    struct {
        std::string n_range = "3:190:1";
        CommonOpts common;
    } conj_opts;
    conj->add_option("--n", conj_opts.n_range, "rank range start:stop:step")
        ->capture_default_str();
    add_common(conj, conj_opts.common, false);
    conj->callback([&] {
        const artin::GrowthSpec growth = artin::GrowthSpec::power(1, artin::Rational(3, 2));
        const double ref_one_minus_einv = 1.0 - std::exp(-1.0);
        const double ref_einv_half = std::exp(-0.5);
        if (conj_opts.common.format == "json") {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (int n : parse_range(conj_opts.n_range)) {
                const std::uint64_t m = growth.eval(n);
                const double v = artin::prob_22_free_exact(n, m).value();
                nlohmann::ordered_json o;
                o["n"] = n;
                o["m"] = m;
                o["value"] = v;
                o["dist_to_1_minus_exp_neg1"] = std::fabs(v - ref_one_minus_einv);
                o["dist_to_exp_neg_half"] = std::fabs(v - ref_einv_half);
                arr.push_back(std::move(o));
            }
            write_output(arr.dump() + "\n", conj_opts.common.out);
            return;
        }
        std::string out = "n,m,value,dist_to_1_minus_exp_neg1,dist_to_exp_neg_half\n";
        for (int n : parse_range(conj_opts.n_range)) {
            const std::uint64_t m = growth.eval(n);
            const double v = artin::prob_22_free_exact(n, m).value();
            out += std::to_string(n) + ',' + std::to_string(m) + ',' + fmt12(v) + ',' +
                   fmt12(std::fabs(v - ref_one_minus_einv)) + ',' +
                   fmt12(std::fabs(v - ref_einv_half)) + '\n';
        }
        write_output(out, conj_opts.common.out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const artin::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const artin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_status;
}
