#include "doctest.h"

#include <sstream>

#include "json.hpp"

#include "gg/report.hpp"

using namespace gg;
using nlohmann::json;

TEST_CASE("double formatting is fixed") {
    CHECK(fmt_g(0.4) == "0.4");
    CHECK(fmt_g(1.0 / 3.0) == "0.333333333333");
    CHECK(fmt_g(2e-7) == "2e-07");
}

TEST_CASE("covering report emitters") {
    std::vector<ConjectureRow> rows(2);
    rows[0] = {2, 148, 0.894, 0.31, 0.347, true, 0.287};
    rows[1] = {3, 748, 0.598, 0.35, 0.585, true, 0.191};

    std::ostringstream csv;
    write_conjecture_csv(csv, rows);
    CHECK(csv.str().find("t,points,conjectured_radius") == 0);
    CHECK(csv.str().find("2,148,0.894,0.31,0.347,1,0.287\n") != std::string::npos);

    json j = json::parse(conjecture_json(rows, 1000, 7, "c4"));
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][1]["points"] == 748);

    std::ostringstream scaling;
    write_scaling_csv(scaling, rows);
    CHECK(scaling.str().find("t,log5_points,log5_radius\n") == 0);
}

TEST_CASE("efficiency report emitters") {
    EfficiencyReport rep;
    rep.set = GateSet::T;
    rep.t_max = 5;
    rep.probes = 100;
    rep.seed = 3;
    rep.c_fit = 0.25;
    EfficiencyRow covered;
    covered.eps = 0.4;
    covered.covered = true;
    covered.t_eps = 2;
    covered.v_size = 148;
    covered.k_hat = 1.8;
    covered.packing = 11.0;
    EfficiencyRow missed;
    missed.eps = 0.001;
    missed.covered = false;
    missed.t_eps = 5;
    missed.k_conditional = 1.6;
    rep.rows = {covered, missed};

    json j = json::parse(efficiency_json(rep));
    CHECK(j["gate_set"] == "T");
    CHECK(j["rows"][0]["v_size"] == 148);
    CHECK_FALSE(j["rows"][1].contains("k_hat"));  // NOT-COVERED rows keep formula columns only
    CHECK(j["rows"][1]["covered"] == false);

    std::ostringstream plot;
    write_efficiency_plot_csv(plot, rep);
    // only the covered row contributes a plot point
    CHECK(plot.str() == "log5_inv_eps,log5_v_size\n" + fmt_g(std::log(1.0 / 0.4) / std::log(5.0)) +
                            "," + fmt_g(std::log(148.0) / std::log(5.0)) + "\n");
}

TEST_CASE("svg scatter stays well formed") {
    std::vector<std::pair<double, double>> pts = {{1, 2}, {3, 4}, {5, 4.5}};
    std::ostringstream svg;
    write_svg_scatter(svg, pts, "demo");
    std::string s = svg.str();
    CHECK(s.find("<svg") == 0);
    CHECK(s.rfind("</svg>\n") == s.size() - 7);
    CHECK(std::count(s.begin(), s.end(), '\n') > 5);
    std::size_t circles = 0;
    for (std::size_t p = s.find("<circle"); p != std::string::npos; p = s.find("<circle", p + 1))
        ++circles;
    CHECK(circles == 3);
}
