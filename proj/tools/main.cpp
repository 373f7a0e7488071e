#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "gg/approx.hpp"
#include "gg/covering.hpp"
#include "gg/haar.hpp"
#include "gg/lattice.hpp"
#include "gg/report.hpp"

namespace {

// Exit codes: 0 success, 1 assertion or contract failure, 2 usage,
// 3 resource budget, 4 conjecture finding.
enum ExitCode { kOk = 0, kContract = 1, kUsage = 2, kBudget = 3, kFinding = 4 };

struct CommonOpts {
    std::string out;
    std::string format = "csv";
};

int write_text(const CommonOpts& opts, const std::string& name, const std::string& body) {
    if (opts.out.empty()) {
        std::cout << body;
        return kOk;
    }
    std::filesystem::create_directories(opts.out);
    std::ofstream f(std::filesystem::path(opts.out) / name, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file " << name << "\n";
        return kContract;
    }
    f << body;
    return f.good() ? kOk : kContract;
}

gg::GateSet parse_set(const std::string& s) {
    if (s == "S") return gg::GateSet::S;
    if (s == "T") return gg::GateSet::T;
    throw CLI::ValidationError("--set", "expected S or T");
}

std::vector<double> parse_eps_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    if (out.empty()) throw CLI::ValidationError("--eps", "empty list");
    return out;
}

int run_enumerate(const std::string& set_name, int t_max, const CommonOpts& opts) {
    gg::GateSet set = parse_set(set_name);
    std::vector<gg::Shell> shells = gg::enumerate_shells(set, t_max);

    std::vector<gg::EnumerateSummaryRow> rows;
    bool all_ok = true;
    std::int64_t running = 0;
    for (const gg::Shell& sh : shells) {
        gg::EnumerateSummaryRow row;
        row.t = sh.t;
        row.enumerated_u = static_cast<std::int64_t>(sh.elems.size());
        row.closed_form_u = gg::u_count(set, sh.t);
        running += row.enumerated_u;
        row.enumerated_v = running;
        row.closed_form_v = gg::v_count(set, sh.t);
        row.ok = row.enumerated_u == row.closed_form_u && row.enumerated_v == row.closed_form_v;
        all_ok = all_ok && row.ok;
        rows.push_back(row);
    }

    int rc = kOk;
    if (opts.out.empty()) {
        std::ostringstream shells_csv;
        gg::write_shells_csv(shells_csv, shells);
        rc = write_text(opts, "", shells_csv.str());
    } else {
        for (const gg::Shell& sh : shells) {
            std::ostringstream one;
            gg::write_shells_csv(one, {&sh, 1});
            rc = write_text(opts, "shells_" + set_name + "_t" + std::to_string(sh.t) + ".csv",
                            one.str());
            if (rc != kOk) break;
        }
    }
    if (rc != kOk) return rc;

    if (opts.format == "json") {
        rc = write_text(opts, "enumerate_summary.json", gg::enumerate_summary_json(set, rows));
    } else {
        std::ostringstream sum;
        gg::write_enumerate_summary_csv(sum, rows);
        rc = write_text(opts, "enumerate_summary.csv", sum.str());
    }
    if (rc != kOk) return rc;
    if (!all_ok) {
        std::cerr << "count mismatch against closed forms\n";
        return kContract;
    }
    return kOk;
}

int run_synthesize(const std::string& set_name, const std::string& target_spec, bool random,
                   std::uint64_t seed, double eps, int t_max, const CommonOpts& opts) {
    gg::GateSet set = parse_set(set_name);
    gg::Psu2Point target;
    if (random) {
        target = gg::haar_point(seed, 0);
    } else {
        std::vector<double> coords = parse_eps_list(target_spec);
        if (coords.size() != 4) throw CLI::ValidationError("--target", "expected 4 reals");
        target = gg::Psu2Point::from_raw({coords[0], coords[1], coords[2], coords[3]});
    }

    gg::GateSystem sys(set, t_max);
    gg::SynthesisResult res = gg::nearest_gate(sys, target, t_max);
    bool covered = res.achieved_distance < eps;
    int rc = write_text(opts, "synthesize.json", gg::synthesis_json(res, set, eps, covered));
    if (rc != kOk) return rc;
    return covered ? kOk : kBudget;
}

int run_covering(int t_lo, int t_hi, std::int64_t probes, std::uint64_t seed,
                 const std::string& variant_name, double n_exponent, const CommonOpts& opts) {
    gg::RadiusVariant variant =
        variant_name == "c5" ? gg::RadiusVariant::C5Polylog : gg::RadiusVariant::C4Exact;
    auto rows = gg::conjecture_report(t_lo, t_hi, probes, seed, variant, n_exponent);

    int rc;
    if (opts.format == "json") {
        rc = write_text(opts, "covering.json",
                        gg::conjecture_json(rows, probes, seed, variant_name));
    } else {
        std::ostringstream csv;
        gg::write_conjecture_csv(csv, rows);
        rc = write_text(opts, "covering.csv", csv.str());
    }
    if (rc != kOk) return rc;

    std::ostringstream scaling;
    gg::write_scaling_csv(scaling, rows);
    rc = write_text(opts, "covering_scaling.csv", scaling.str());
    if (rc != kOk) return rc;

    if (!opts.out.empty()) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& r : rows)
            pts.emplace_back(r.t, std::log(r.sampled_lower_bound) / std::log(5.0));
        std::ofstream svg(std::filesystem::path(opts.out) / "covering_scaling.svg",
                          std::ios::binary);
        gg::write_svg_scatter(svg, pts, "log5 sampled covering radius vs t");
    }

    for (const auto& r : rows)
        if (!r.consistent) {
            std::cerr << "FINDING: sampled lower bound exceeds conjectured radius at t=" << r.t
                      << "\n";
            return kFinding;
        }
    return kOk;
}

int run_efficiency(const std::string& set_name, const std::string& eps_spec, std::int64_t probes,
                   std::uint64_t seed, int t_max, const CommonOpts& opts) {
    gg::GateSet set = parse_set(set_name);
    std::vector<double> eps_list = parse_eps_list(eps_spec);
    gg::GateSystem sys(set, t_max);
    gg::EfficiencyReport rep = gg::efficiency_table(sys, eps_list, probes, seed);

    int rc;
    if (opts.format == "json") {
        rc = write_text(opts, "efficiency_" + set_name + ".json", gg::efficiency_json(rep));
    } else {
        std::ostringstream csv;
        gg::write_efficiency_csv(csv, rep);
        rc = write_text(opts, "efficiency_" + set_name + ".csv", csv.str());
    }
    if (rc != kOk) return rc;

    std::ostringstream plot;
    gg::write_efficiency_plot_csv(plot, rep);
    rc = write_text(opts, "efficiency_" + set_name + "_plot.csv", plot.str());
    if (rc != kOk) return rc;

    for (const auto& row : rep.rows)
        if (row.covered && row.packing < 1.0) {
            std::cerr << "FINDING: packing bound violated at eps=" << gg::fmt_g(row.eps) << "\n";
            return kFinding;
        }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"golden gate sets on PSU(2): enumeration, synthesis, covering experiments"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --workers appear after the subcommand

    int workers = 0;
    app.add_option("--workers", workers, "worker threads (0 = library default)");

    CommonOpts opts;
    std::string set_name = "S";
    int t = 2, t_max = 6;
    std::int64_t probes = 10000;
    std::uint64_t seed = 1;
    double eps = 0.1, n_exponent = 1.0;
    std::string eps_spec = "0.4,0.3,0.2";
    std::string target_spec;
    std::string variant = "c4";
    bool random_target = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", opts.out, "output directory (default: stdout)");
        cmd->add_option("--format", opts.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* c_enum = app.add_subcommand("enumerate", "enumerate height shells, check counts");
    c_enum->add_option("--set", set_name, "gate set S or T");
    c_enum->add_option("--t-max", t_max, "largest height")->required();
    add_common(c_enum);

    CLI::App* c_syn = app.add_subcommand("synthesize", "nearest gate word for a target");
    c_syn->add_option("--set", set_name, "gate set S or T");
    c_syn->add_option("--target", target_spec, "target as x1,x2,x3,x4");
    c_syn->add_flag("--random", random_target, "draw the target from the Haar stream");
    c_syn->add_option("--seed", seed, "seed for --random");
    c_syn->add_option("--eps", eps, "required accuracy");
    c_syn->add_option("--t-max", t_max, "search height limit");
    add_common(c_syn);

    CLI::App* c_cov = app.add_subcommand("covering", "covering-radius conjecture table");
    c_cov->add_option("--t", t, "first height");
    c_cov->add_option("--t-max", t_max, "last height");
    c_cov->add_option("--probes", probes, "Haar probes per height");
    c_cov->add_option("--seed", seed, "probe seed");
    c_cov->add_option("--n-exponent", n_exponent, "exponent n for the polylog radius variant");
    c_cov->add_option("--variant", variant, "c4 (radius 2*5^{-t/4}) or c5 (t^n 5^{-t/4})")
        ->check(CLI::IsMember({"c4", "c5"}));
    add_common(c_cov);

    CLI::App* c_eff = app.add_subcommand("efficiency", "empirical efficiency table");
    c_eff->add_option("--set", set_name, "gate set S or T");
    c_eff->add_option("--eps", eps_spec, "strictly decreasing eps list, comma separated");
    c_eff->add_option("--probes", probes, "Haar probes");
    c_eff->add_option("--seed", seed, "probe seed");
    c_eff->add_option("--t-max", t_max, "enumeration height limit");
    add_common(c_eff);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

#ifdef _OPENMP
    if (workers > 0) omp_set_num_threads(workers);
#endif

    try {
        if (app.got_subcommand(c_enum)) return run_enumerate(set_name, t_max, opts);
        if (app.got_subcommand(c_syn)) {
            if (!random_target && target_spec.empty()) {
                std::cerr << "synthesize: need --target or --random\n";
                return kUsage;
            }
            return run_synthesize(set_name, target_spec, random_target, seed, eps, t_max, opts);
        }
        if (app.got_subcommand(c_cov))
            return run_covering(t, t_max, probes, seed, variant, n_exponent, opts);
        if (app.got_subcommand(c_eff))
            return run_efficiency(set_name, eps_spec, probes, seed, t_max, opts);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const gg::budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kContract;
    }
    return kUsage;
}
