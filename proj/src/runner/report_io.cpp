#include "pplus/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace pplus {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

std::string series_csv(const ExpectationSeries& series) {
    std::string out = "t,p_A,below_threshold\n";
    for (std::size_t i = 0; i < series.t_grid.size(); ++i) {
        const bool below = std::abs(series.values[i]) <= series.zero_report.threshold;
        out += format_real(series.t_grid[i]) + "," + format_real(series.values[i]) + ","
               + (below ? "1" : "0") + "\n";
    }
    return out;
}

std::string scan_csv(const ScanReport& report) {
    std::string out = "a_t,a_x,a_y,a_z,classification,checked,quantity,value\n";
    for (const ScanRow& row : report.rows) {
        out += format_real(row.a.t) + "," + format_real(row.a.x) + "," + format_real(row.a.y) + ","
               + format_real(row.a.z) + "," + to_string(row.classification) + ","
               + (row.checked ? "1" : "0") + "," + to_string(report.quantity) + ","
               + format_real(row.value) + "\n";
    }
    return out;
}

std::string spectrum_csv(const std::vector<cplx>& samples) {
    std::string out = "lambda_x,lambda_y,ratio\n";
    for (const cplx& lam : samples) {
        const double ratio = lam.real() != 0.0 ? -lam.imag() / lam.real()
                                               : std::numeric_limits<double>::quiet_NaN();
        out += format_real(lam.real()) + "," + format_real(lam.imag()) + "," + format_real(ratio) + "\n";
    }
    return out;
}

std::string tails_csv(const TailsResult& result) {
    std::string out = "t,outside_probability\n";
    for (std::size_t i = 0; i < result.t_values.size(); ++i) {
        out += format_real(result.t_values[i]) + "," + format_real(result.outside_probability[i]) + "\n";
    }
    return out;
}

json to_json(const GridSpec& g) {
    return json{{"mode", g.mode == GridMode::OneDReduced ? "one_d" : "three_d"},
                {"u_max", g.u_max},
                {"n", g.n}};
}

GridSpec grid_spec_from_json(const json& j) {
    GridSpec g;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "one_d") {
        g.mode = GridMode::OneDReduced;
    } else if (mode == "three_d") {
        g.mode = GridMode::ThreeD;
    } else {
        throw std::invalid_argument("grid mode must be one_d or three_d");
    }
    g.u_max = j.at("u_max").get<double>();
    g.n = j.at("n").get<int>();
    if (g.u_max <= 0.0 || g.n <= 0) throw std::invalid_argument("grid: u_max and n must be positive");
    return g;
}

json to_json(const StateSpec& s) {
    json weights = json::array();
    for (const cplx& w : s.j3_weights) weights.push_back(json::array({w.real(), w.imag()}));
    json out{{"family", s.family},
             {"center", {s.center.x(), s.center.y(), s.center.z()}},
             {"width", s.width}};
    if (s.family == "cauchy") out["power"] = s.power;
    if (!s.j3_weights.empty()) out["j3_weights"] = weights;
    return out;
}

json zero_report_json(const ZeroReport& r) {
    return json{{"threshold", r.threshold},
                {"below_fraction", r.below_fraction},
                {"max_run_length", r.max_run_length},
                {"run_lengths", r.run_lengths}};
}

json strip_bounds_json(const StripBounds& b) {
    auto enc = [](double v) -> json {
        if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
        return v;
    };
    return json{{"k0", enc(b.k0)},
                {"k1", b.k1_empty ? json("-inf (empty set)") : enc(b.k1)},
                {"k2", b.k2_empty ? json("+inf (empty set)") : enc(b.k2)},
                {"k", enc(b.half_width())},
                {"k1_empty", b.k1_empty},
                {"k2_empty", b.k2_empty},
                {"zero_axis_conflict", b.zero_axis_conflict},
                {"conditions", {{"k0_finite", b.cond_k0_finite},
                                {"k1_negative", b.cond_k1_negative},
                                {"k2_positive", b.cond_k2_positive}}},
                {"verdict", to_string(b.verdict)}};
}

}  // namespace pplus
