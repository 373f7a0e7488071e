#include "gg/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace gg {

using nlohmann::json;

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

double log5(double x) { return std::log(x) / std::log(5.0); }

json word_json(const GateWord& w) {
    json body = json::array();
    for (Gen g : w.body) body.push_back(gen_name(g));
    return {{"prefix", prefix_name(w.prefix)}, {"body", body}, {"display", w.str()}};
}

}  // namespace

void write_conjecture_csv(std::ostream& os, std::span<const ConjectureRow> rows) {
    os << "t,points,conjectured_radius,sampled_lower_bound,ratio,consistent,n_inv_quarter\n";
    for (const ConjectureRow& r : rows)
        os << r.t << ',' << r.point_count << ',' << fmt_g(r.conjectured_radius) << ','
           << fmt_g(r.sampled_lower_bound) << ',' << fmt_g(r.ratio) << ','
           << (r.consistent ? 1 : 0) << ',' << fmt_g(r.n_inv_quarter) << '\n';
}

std::string conjecture_json(std::span<const ConjectureRow> rows, std::int64_t probes,
                            std::uint64_t seed, const std::string& variant) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["report"] = "covering";
    j["probes"] = probes;
    j["seed"] = seed;
    j["variant"] = variant;
    j["rows"] = json::array();
    for (const ConjectureRow& r : rows)
        j["rows"].push_back({{"t", r.t},
                             {"points", r.point_count},
                             {"conjectured_radius", r.conjectured_radius},
                             {"sampled_lower_bound", r.sampled_lower_bound},
                             {"ratio", r.ratio},
                             {"consistent", r.consistent},
                             {"n_inv_quarter", r.n_inv_quarter}});
    return j.dump(2) + "\n";
}

void write_scaling_csv(std::ostream& os, std::span<const ConjectureRow> rows) {
    os << "t,log5_points,log5_radius\n";
    for (const ConjectureRow& r : rows)
        os << r.t << ',' << fmt_g(log5(static_cast<double>(r.point_count))) << ','
           << fmt_g(log5(r.sampled_lower_bound)) << '\n';
}

void write_efficiency_csv(std::ostream& os, const EfficiencyReport& rep) {
    os << "eps,covered,t_eps,v_size,k_hat,k_lower_traj,k_upper_traj,k_conditional,"
          "packing,frac_height_3log,frac_height_4log\n";
    for (const EfficiencyRow& r : rep.rows)
        os << fmt_g(r.eps) << ',' << (r.covered ? 1 : 0) << ',' << r.t_eps << ',' << r.v_size
           << ',' << fmt_g(r.k_hat) << ',' << fmt_g(r.k_lower_traj) << ','
           << fmt_g(r.k_upper_traj) << ',' << fmt_g(r.k_conditional) << ',' << fmt_g(r.packing)
           << ',' << fmt_g(r.frac_height_3log) << ',' << fmt_g(r.frac_height_4log) << '\n';
}

std::string efficiency_json(const EfficiencyReport& rep) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["report"] = "efficiency";
    j["gate_set"] = to_string(rep.set);
    j["t_max"] = rep.t_max;
    j["probes"] = rep.probes;
    j["seed"] = rep.seed;
    j["c_fit"] = rep.c_fit;
    j["rows"] = json::array();
    for (const EfficiencyRow& r : rep.rows) {
        json row = {{"eps", r.eps},
                    {"covered", r.covered},
                    {"t_eps", r.t_eps},
                    {"k_conditional", r.k_conditional},
                    {"frac_height_3log", r.frac_height_3log},
                    {"frac_height_4log", r.frac_height_4log}};
        if (r.covered) {
            row["v_size"] = r.v_size;
            row["k_hat"] = r.k_hat;
            row["k_lower_traj"] = r.k_lower_traj;
            row["k_upper_traj"] = r.k_upper_traj;
            row["packing"] = r.packing;
        }
        j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
}

void write_efficiency_plot_csv(std::ostream& os, const EfficiencyReport& rep) {
    os << "log5_inv_eps,log5_v_size\n";
    for (const EfficiencyRow& r : rep.rows)
        if (r.covered)
            os << fmt_g(log5(1.0 / r.eps)) << ','
               << fmt_g(log5(static_cast<double>(r.v_size))) << '\n';
}

std::string synthesis_json(const SynthesisResult& res, GateSet set, double eps, bool covered) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["report"] = "synthesize";
    j["gate_set"] = to_string(set);
    j["eps"] = eps;
    j["target"] = {res.target[0], res.target[1], res.target[2], res.target[3]};
    j["word"] = word_json(res.word);
    j["height"] = res.height;
    j["distance"] = res.achieved_distance;
    j["t_searched"] = res.t_searched;
    j["covered"] = covered;
    return j.dump(2) + "\n";
}

void write_enumerate_summary_csv(std::ostream& os, std::span<const EnumerateSummaryRow> rows) {
    os << "t,enumerated_u,closed_form_u,enumerated_v,closed_form_v,ok\n";
    for (const EnumerateSummaryRow& r : rows)
        os << r.t << ',' << r.enumerated_u << ',' << r.closed_form_u << ',' << r.enumerated_v
           << ',' << r.closed_form_v << ',' << (r.ok ? 1 : 0) << '\n';
}

std::string enumerate_summary_json(GateSet set, std::span<const EnumerateSummaryRow> rows) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["report"] = "enumerate";
    j["gate_set"] = to_string(set);
    j["rows"] = json::array();
    for (const EnumerateSummaryRow& r : rows)
        j["rows"].push_back({{"t", r.t},
                             {"enumerated_u", r.enumerated_u},
                             {"closed_form_u", r.closed_form_u},
                             {"enumerated_v", r.enumerated_v},
                             {"closed_form_v", r.closed_form_v},
                             {"ok", r.ok}});
    return j.dump(2) + "\n";
}

void write_svg_scatter(std::ostream& os, std::span<const std::pair<double, double>> pts,
                       const std::string& title) {
    const int w = 640, h = 480, margin = 60;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!pts.empty()) {
        xmin = xmax = pts[0].first;
        ymin = ymax = pts[0].second;
        for (auto& [x, y] : pts) {
            xmin = std::min(xmin, x), xmax = std::max(xmax, x);
            ymin = std::min(ymin, y), ymax = std::max(ymax, y);
        }
        if (xmax == xmin) xmax = xmin + 1;
        if (ymax == ymin) ymax = ymin + 1;
    }
    auto sx = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (w - 2 * margin); };
    auto sy = [&](double y) { return h - margin - (y - ymin) / (ymax - ymin) * (h - 2 * margin); };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << title
       << "</text>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << h - margin << "\" x2=\"" << w - margin
       << "\" y2=\"" << h - margin << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
       << h - margin << "\" stroke=\"black\"/>\n";
    for (auto& [x, y] : pts)
        os << "<circle cx=\"" << fmt_g(sx(x)) << "\" cy=\"" << fmt_g(sy(y))
           << "\" r=\"3\" fill=\"steelblue\"/>\n";
    os << "</svg>\n";
}

}  // namespace gg
