#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gg/approx.hpp"
#include "gg/covering.hpp"
#include "gg/lattice.hpp"

namespace gg {

inline constexpr int kSchemaVersion = 1;

// Fixed "%.12g" rendering; every emitter funnels doubles through here so
// repeated runs are byte-identical.
std::string fmt_g(double v);

void write_conjecture_csv(std::ostream& os, std::span<const ConjectureRow> rows);
std::string conjecture_json(std::span<const ConjectureRow> rows, std::int64_t probes,
                            std::uint64_t seed, const std::string& variant);

// (t, log5 N, log5 radius) triples for the scaling figure.
void write_scaling_csv(std::ostream& os, std::span<const ConjectureRow> rows);

void write_efficiency_csv(std::ostream& os, const EfficiencyReport& rep);
std::string efficiency_json(const EfficiencyReport& rep);

// (log5(1/eps), log5 |V(t_eps)|) pairs, covered rows only.
void write_efficiency_plot_csv(std::ostream& os, const EfficiencyReport& rep);

std::string synthesis_json(const SynthesisResult& res, GateSet set, double eps, bool covered);

struct EnumerateSummaryRow {
    int t = 0;
    std::int64_t enumerated_u = 0;
    std::int64_t closed_form_u = 0;
    std::int64_t enumerated_v = 0;
    std::int64_t closed_form_v = 0;
    bool ok = false;
};

void write_enumerate_summary_csv(std::ostream& os, std::span<const EnumerateSummaryRow> rows);
std::string enumerate_summary_json(GateSet set, std::span<const EnumerateSummaryRow> rows);

// Minimal scatter plot, one <circle> per point.
void write_svg_scatter(std::ostream& os, std::span<const std::pair<double, double>> pts,
                       const std::string& title);

}  // namespace gg
