#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "mnm/error.hpp"
#include "mnm/exact.hpp"
#include "mnm/hoops.hpp"
#include "mnm/inference.hpp"
#include "mnm/montecarlo.hpp"
#include "mnm/oeis.hpp"
#include "mnm/series.hpp"
#include "mnm/svg_plot.hpp"
#include "mnm/table_io.hpp"

namespace mnm::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NetworkError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string g15(double v) { return fmt("%.15g", v); }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, sep);) {
        parts.push_back(part);
    }
    return parts;
}

std::vector<unsigned> parse_counts(const std::string& text) {
    std::vector<unsigned> counts;
    for (const auto& part : split(text, ',')) {
        std::size_t used = 0;
        long v = -1;
        try {
            v = std::stol(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != part.size() || v < 0) {
            throw DomainError("bad count '" + part + "'");
        }
        counts.push_back(static_cast<unsigned>(v));
    }
    if (counts.empty()) {
        throw DomainError("--counts needs at least one player");
    }
    return counts;
}

GameConfig parse_config(const std::string& counts_text, const std::string& biases_text) {
    GameConfig config = GameConfig::fair(parse_counts(counts_text));
    if (!biases_text.empty()) {
        config.head_probs.clear();
        for (const auto& part : split(biases_text, ',')) {
            try {
                config.head_probs.push_back(ExactRational::parse(part));
            } catch (const ParseError& e) {
                throw DomainError(e.what());
            }
        }
    }
    config.validate();
    return config;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
    return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) {
        throw IoError("error writing '" + path + "'");
    }
}

// exact ----------------------------------------------------------------------

struct ExactArgs {
    unsigned k = 0;
    std::string method = "finite";
    double tol = 1e-15;
    std::string counts;
    std::string biases;
};

void print_series(std::ostream& out, const SeriesValue& v) {
    out << g15(v.value) << " ± " << fmt("%.3g", v.error_bound) << " (" << v.terms_used << " terms)\n";
}

int cmd_exact(const ExactArgs& a, std::ostream& out) {
    if (!a.counts.empty()) {
        if (a.method != "recurrence") {
            throw DomainError("--counts/--biases need --method recurrence");
        }
        const GameConfig config = parse_config(a.counts, a.biases);
        const ExactRational p = tie_prob_recurrence(GameState{config.counts}, config);
        out << p << " ≈ " << g15(p.to_double()) << '\n';
        return kExitOk;
    }
    if (a.k == 0) {
        throw DomainError("k must be >= 1");
    }
    if (a.method == "finite" || a.method == "recurrence") {
        const ExactRational p = a.method == "finite" ? tie_prob_finite_sum(a.k)
                                                     : tie_prob_recurrence(GameState{{a.k, a.k}},
                                                                           GameConfig::fair({a.k, a.k}));
        out << p << " ≈ " << g15(p.to_double()) << '\n';
    } else if (a.method == "series") {
        print_series(out, tie_prob_series(a.k, a.tol));
    } else {
        print_series(out, tie_prob_hypergeometric(a.k, a.tol));
    }
    return kExitOk;
}

// table ----------------------------------------------------------------------

struct TableArgs {
    unsigned kmax = 0;
    std::string output;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
    if (a.kmax == 0) {
        throw DomainError("kmax must be >= 1");
    }
    const auto rows = tie_table(a.kmax);
    std::ofstream file = open_output(a.output);
    write_table_csv(file, rows);
    finish_output(file, a.output);
    out << "wrote " << rows.size() << " rows to " << a.output << '\n';
    return kExitOk;
}

// fit ------------------------------------------------------------------------

struct FitArgs {
    unsigned kmin = 0;
    unsigned kmax = 0;
    std::vector<unsigned> predict_k;
    std::string csv;
};

int cmd_fit(const FitArgs& a, std::ostream& out) {
    if (a.kmin == 0 || a.kmax <= a.kmin) {
        throw DomainError("fit needs 1 <= kmin < kmax");
    }
    unsigned top = a.kmax;
    for (const unsigned k : a.predict_k) {
        if (k == 0) {
            throw DomainError("--predict values must be >= 1");
        }
        top = std::max(top, k);
    }
    const auto exact = tie_prob_diagonal(top);
    std::map<unsigned, double> probs;
    for (unsigned k = a.kmin; k <= a.kmax; ++k) {
        probs[k] = exact[k].to_double();
    }
    const FitResult fit = loglog_fit(probs, a.kmin, a.kmax);
    out << "fit over k = " << a.kmin << ".." << a.kmax << " (" << (a.kmax - a.kmin + 1) << " points)\n"
        << "slope      " << g15(fit.slope) << '\n'
        << "intercept  " << g15(fit.intercept) << '\n'
        << "amplitude  " << g15(fit.amplitude) << '\n'
        << "rss        " << fmt("%.6g", fit.residual_sum_squares) << '\n';
    for (const unsigned k : a.predict_k) {
        const double predicted = predict(fit, k);
        const double truth = exact[k].to_double();
        out << "k=" << k << " predicted=" << fmt("%.6g", predicted) << " exact=" << fmt("%.6g", truth)
            << " rel_err=" << fmt("%.4g", std::abs(predicted - truth) / truth * 100.0) << "%\n";
    }
    if (!a.csv.empty()) {
        std::ofstream file = open_output(a.csv);
        file << "k,log_k,log_p,fitted\n";
        for (const auto& [k, p] : probs) {
            const double lk = std::log(static_cast<double>(k));
            file << k << ',' << fmt("%.17g", lk) << ',' << fmt("%.17g", std::log(p)) << ','
                 << fmt("%.17g", fit.intercept + fit.slope * lk) << '\n';
        }
        finish_output(file, a.csv);
    }
    return kExitOk;
}

// simulate -------------------------------------------------------------------

struct SimulateArgs {
    std::string counts;
    std::string biases;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    std::string variant = "raw";
    unsigned workers = 1;
    std::string histogram;
    bool compare_exact = false;
};

void print_run(std::ostream& out, const char* label, const RunSummary& r) {
    out << label << " mean=" << fmt("%.6g", r.mean) << " max=" << r.max << '\n';
}

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
    SimPlan plan;
    plan.config = parse_config(a.counts, a.biases);
    plan.trials = a.trials;
    plan.master_seed = a.seed;
    plan.variant = a.variant == "reduced" ? Variant::reduced : Variant::raw;
    const SimStats s = run_plan(plan, a.workers);

    out << "trials       " << s.trials << '\n'
        << "ties         " << s.ties << '\n'
        << "tie_rate     " << fmt("%.6g", s.tie_rate) << '\n'
        << "tie_ci95     [" << fmt("%.6g", s.tie_ci_low) << ", " << fmt("%.6g", s.tie_ci_high) << "]\n"
        << "mean_rounds  " << fmt("%.6g", s.mean_rounds) << '\n'
        << "max_rounds   " << s.rounds_histogram.rbegin()->first << '\n'
        << "mean_decided " << fmt("%.6g", s.mean_decided_round) << '\n'
        << "max_decided  " << s.max_decided_round << '\n';
    for (std::size_t i = 0; i < s.head_run.size(); ++i) {
        const std::string head = "head_run[" + std::to_string(i) + "]";
        const std::string tail = "tail_run[" + std::to_string(i) + "]";
        print_run(out, head.c_str(), s.head_run[i]);
        print_run(out, tail.c_str(), s.tail_run[i]);
    }
    print_run(out, "head_run[any]", s.head_run_any);
    print_run(out, "tail_run[any]", s.tail_run_any);
    if (s.same_outcome_run) {
        print_run(out, "same_outcome_run", *s.same_outcome_run);
    } else {
        out << "same_outcome_run n/a (reduced variant)\n";
    }
    if (a.compare_exact) {
        const ExactRational exact = tie_prob_recurrence(GameState{plan.config.counts}, plan.config);
        const bool inside = s.tie_ci_low <= exact.to_double() && exact.to_double() <= s.tie_ci_high;
        out << "exact        " << exact << " ≈ " << g15(exact.to_double()) << (inside ? " (inside CI)" : " (outside CI)")
            << '\n';
    }
    if (!a.histogram.empty()) {
        std::ofstream file = open_output(a.histogram);
        file << "rounds,count\n";
        for (const auto& [r, c] : s.rounds_histogram) {
            file << r << ',' << c << '\n';
        }
        finish_output(file, a.histogram);
    }
    return kExitOk;
}

// hoops ----------------------------------------------------------------------

struct HoopsArgs {
    double p_bird = 0.5;
    double p_magic = 0.5;
    unsigned bird = 1;
    unsigned magic = 1;
};

int cmd_hoops(const HoopsArgs& a, std::ostream& out) {
    const HoopsParams params{a.p_bird, a.p_magic};
    params.validate();
    const double rec = bird_win_recurrence({a.bird, a.magic}, params);
    out << "bird_win " << g15(rec) << '\n';
    if (a.bird == 1 && a.magic == 1) {
        out << "closed_form " << g15(bird_win_closed(params)) << '\n';
    }
    return kExitOk;
}

struct HoopsIntegralArgs {
    std::string contour_csv;
    unsigned contour_n = 101;
};

int cmd_hoops_integrals(const HoopsIntegralArgs& a, std::ostream& out) {
    const QuadratureResult favored = bird_favored_area();
    const QuadratureResult expected = bird_expected_win();
    out << "favored_area " << fmt("%.6f", favored.value) << " (grid " << favored.grid << ", ln 2 = "
        << fmt("%.6f", std::log(2.0)) << ")\n"
        << "expected_win " << fmt("%.6f", expected.value) << " (grid " << expected.grid << ", pi^2/6 - 1 = "
        << fmt("%.6f", std::acos(-1.0) * std::acos(-1.0) / 6.0 - 1.0) << ")\n";
    if (!a.contour_csv.empty()) {
        if (a.contour_n < 2) {
            throw DomainError("--contour-n must be >= 2");
        }
        std::ofstream file = open_output(a.contour_csv);
        file << "p_bird,p_magic,bird_win\n";
        const double h = 1.0 / (a.contour_n - 1);
        for (unsigned j = 0; j < a.contour_n; ++j) {
            for (unsigned i = 0; i < a.contour_n; ++i) {
                const double pb = i * h;
                const double pm = j * h;
                file << fmt("%.6g", pb) << ',' << fmt("%.6g", pm) << ',';
                if (pb == 0.0 && pm == 0.0) {
                    file << "nan\n";
                } else {
                    file << fmt("%.9g", bird_win_closed({pb, pm})) << '\n';
                }
            }
        }
        finish_output(file, a.contour_csv);
    }
    return kExitOk;
}

// oeis -----------------------------------------------------------------------

struct OeisArgs {
    unsigned n = 8;
    bool online = false;
    std::string fixture;
};

std::string fetch_bfile() {
    const char* env = std::getenv(kOeisUrlEnv);
    const std::string base = env != nullptr && *env != '\0' ? env : kOeisBaseUrl;
    const std::string path = "/" + std::string(kTieSequenceId) + "/b" + std::string(kTieSequenceId.substr(1)) + ".txt";
    httplib::Client client(base);
    client.set_connection_timeout(10, 0);
    client.set_read_timeout(10, 0);
    client.set_follow_location(true);
    const auto res = client.Get(path);
    if (!res) {
        throw NetworkError("fetching " + base + path + " failed: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw NetworkError("fetching " + base + path + " returned HTTP " + std::to_string(res->status));
    }
    return res->body;
}

int cmd_oeis(const OeisArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n == 0) {
        throw DomainError("n must be >= 1");
    }
    std::string text;
    std::string source;
    if (a.online) {
        try {
            text = fetch_bfile();
        } catch (const NetworkError& e) {
            err << "error: " << e.what() << "\nhint: run without --online to check against the bundled b-file\n";
            return kExitNetwork;
        }
        source = "online";
    } else if (!a.fixture.empty()) {
        std::ifstream in(a.fixture);
        if (!in) {
            throw IoError("cannot read '" + a.fixture + "'");
        }
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        source = a.fixture;
    } else {
        text = std::string(bundled_tie_sequence_bfile());
        source = "bundled";
    }
    const OeisCheckReport report = check_terms(kTieSequenceId, oeis_terms(a.n), parse_bfile(text));
    out << "sequence      " << report.sequence_id << " (" << source << ")\n"
        << "terms_checked " << report.terms_checked << '\n'
        << "matched       " << (report.matched ? "true" : "false") << '\n';
    if (report.first_mismatch) {
        out << "first_mismatch index=" << report.first_mismatch->index << " ours=" << report.first_mismatch->ours
            << " theirs=" << report.first_mismatch->theirs << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}

// plot -----------------------------------------------------------------------

struct PlotArgs {
    std::string input;
    std::string output;
    bool loglog = false;
};

int cmd_plot(const PlotArgs& a, std::ostream& out) {
    std::ifstream in(a.input);
    if (!in) {
        throw IoError("cannot read '" + a.input + "'");
    }
    std::vector<TableRow> rows;
    try {
        rows = read_table_csv(in);
    } catch (const ParseError& e) {
        throw IoError(a.input + ": " + e.what());
    }
    if (rows.empty()) {
        throw IoError(a.input + ": table has no rows");
    }
    std::ofstream file = open_output(a.output);
    file << render_scatter_svg(rows, a.loglog);
    finish_output(file, a.output);
    out << "wrote " << a.output << " (" << rows.size() << " points" << (a.loglog ? ", log-log" : "") << ")\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tie probabilities of the M&M coin-flip game", "mnm"};
    app.require_subcommand(1);

    ExactArgs exact;
    auto* exact_cmd = app.add_subcommand("exact", "Tie probability P(k,k) by one of four methods");
    exact_cmd->add_option("k", exact.k, "M&Ms per player");
    exact_cmd->add_option("-m,--method", exact.method, "finite | recurrence | series | hyp")
        ->check(CLI::IsMember({"finite", "recurrence", "series", "hyp"}));
    exact_cmd->add_option("--tol", exact.tol, "Truncation tolerance for series methods");
    exact_cmd->add_option("--counts", exact.counts, "Comma-separated starting counts (recurrence only)");
    exact_cmd->add_option("--biases", exact.biases, "Comma-separated head probabilities, e.g. 1/3,0.25");

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "Write the exact tie table for k = 1..kmax as CSV");
    table_cmd->add_option("kmax", table.kmax, "Largest k")->required();
    table_cmd->add_option("-o,--output", table.output, "CSV path")->required();

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "Least-squares log-log fit of exact tie probabilities");
    fit_cmd->add_option("kmin", fit.kmin)->required();
    fit_cmd->add_option("kmax", fit.kmax)->required();
    fit_cmd->add_option("--predict", fit.predict_k, "k values to extrapolate to");
    fit_cmd->add_option("--csv", fit.csv, "Write (k, log k, log P, fitted) to this path");

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo simulation of the game");
    sim_cmd->add_option("--counts", sim.counts, "Comma-separated starting counts")->required();
    sim_cmd->add_option("--biases", sim.biases, "Comma-separated head probabilities");
    sim_cmd->add_option("--trials", sim.trials)->check(CLI::PositiveNumber);
    sim_cmd->add_option("--seed", sim.seed);
    sim_cmd->add_option("--variant", sim.variant)->check(CLI::IsMember({"raw", "reduced"}));
    sim_cmd->add_option("--workers", sim.workers, "Worker threads (0 = all cores)");
    sim_cmd->add_option("--histogram", sim.histogram, "Write the rounds histogram as CSV");
    sim_cmd->add_flag("--compare-exact", sim.compare_exact, "Also print the exact tie probability");

    HoopsArgs hoops;
    auto* hoops_cmd = app.add_subcommand("hoops", "Probability Bird wins the free-throw duel");
    hoops_cmd->add_option("p_bird", hoops.p_bird)->required();
    hoops_cmd->add_option("p_magic", hoops.p_magic)->required();
    hoops_cmd->add_option("b", hoops.bird, "Baskets Bird needs");
    hoops_cmd->add_option("m", hoops.magic, "Baskets Magic needs");

    HoopsIntegralArgs integrals;
    auto* integrals_cmd = app.add_subcommand("hoops-integrals", "Uniform-prior integrals of the hoops game");
    integrals_cmd->add_option("--contour-csv", integrals.contour_csv, "Write Bird's win probability on a grid");
    integrals_cmd->add_option("--contour-n", integrals.contour_n, "Grid points per axis");

    OeisArgs oeis;
    auto* oeis_cmd = app.add_subcommand("oeis", "Check 3^(2k-1) P(k,k) against OEIS A084771");
    oeis_cmd->add_option("n", oeis.n, "Number of terms");
    oeis_cmd->add_flag("--online", oeis.online, "Fetch the b-file from OEIS (MNM_OEIS_URL overrides the host)");
    oeis_cmd->add_option("--fixture", oeis.fixture, "Compare against this b-file instead of the bundled one");

    PlotArgs plot;
    auto* plot_cmd = app.add_subcommand("plot", "Render a table CSV as an SVG scatter plot");
    plot_cmd->add_option("input", plot.input)->required();
    plot_cmd->add_option("output", plot.output)->required();
    plot_cmd->add_flag("--loglog", plot.loglog);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (exact_cmd->parsed()) return cmd_exact(exact, out);
        if (table_cmd->parsed()) return cmd_table(table, out);
        if (fit_cmd->parsed()) return cmd_fit(fit, out);
        if (sim_cmd->parsed()) return cmd_simulate(sim, out);
        if (hoops_cmd->parsed()) return cmd_hoops(hoops, out);
        if (integrals_cmd->parsed()) return cmd_hoops_integrals(integrals, out);
        if (oeis_cmd->parsed()) return cmd_oeis(oeis, out, err);
        if (plot_cmd->parsed()) return cmd_plot(plot, out);
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConvergenceError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}

}  // namespace mnm::cli
