#include "scic/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace scic {

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::string out =
        "length_km,N_sent,case,mode,mu_k1,mu_k2,S1L,NphU,ephU,e_bit,N_det,lambda_EC,ell,rate\n";
    for (const ScanRow& row : rows) {
        const KeyRateResult& r = row.result;
        out += format_g17(row.length_km);
        out += ',';
        out += format_g17(row.n_sent);
        out += ',';
        out += row.tagging == TaggingCase::I ? "I" : "II";
        out += ',';
        out += row.asymptotic ? "asymptotic" : "finite";
        out += ',';
        out += format_g17(r.mu_k1);
        out += ',';
        out += format_g17(r.mu_k2);
        out += ',';
        out += format_g17(r.s1l);
        out += ',';
        out += format_g17(r.nphu);
        out += ',';
        out += format_g17(r.e_phu);
        out += ',';
        out += format_g17(r.e_bit);
        out += ',';
        out += format_g17(r.n_det);
        out += ',';
        out += format_g17(r.lambda_ec);
        out += ',';
        out += format_g17(std::floor(r.ell));
        out += ',';
        out += format_g17(r.rate);
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << content;
}

std::string scan_to_svg(const std::vector<ScanRow>& rows) {
    constexpr double kW = 720, kH = 480, kMargin = 60;
    double max_len = 1.0;
    double min_log = -1.0, max_log = -12.0;
    for (const ScanRow& r : rows) {
        max_len = std::max(max_len, r.length_km);
        if (r.result.rate > 0.0) {
            min_log = std::min(min_log, std::log10(r.result.rate));
            max_log = std::max(max_log, std::log10(r.result.rate));
        }
    }
    if (max_log <= min_log) {
        max_log = min_log + 1.0;
    }
    const auto x_of = [&](double l) { return kMargin + (kW - 2 * kMargin) * l / max_len; };
    const auto y_of = [&](double lg) {
        return kH - kMargin - (kH - 2 * kMargin) * (lg - min_log) / (max_log - min_log);
    };

    // group points by (n_sent, case, mode)
    std::map<std::string, std::vector<std::pair<double, double>>> curves;
    for (const ScanRow& r : rows) {
        if (r.result.rate <= 0.0) {
            continue;
        }
        std::ostringstream key;
        key << format_g17(r.n_sent) << (r.tagging == TaggingCase::I ? "/I" : "/II")
            << (r.asymptotic ? "/asym" : "/fin");
        curves[key.str()].emplace_back(x_of(r.length_km), y_of(std::log10(r.result.rate)));
    }

    static const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW << "' height='" << kH
        << "'>\n<rect width='100%' height='100%' fill='white'/>\n"
        << "<text x='" << kW / 2 << "' y='" << kH - 12
        << "' text-anchor='middle' font-size='14'>fibre length [km]</text>\n"
        << "<text x='16' y='" << kH / 2
        << "' transform='rotate(-90 16 " << kH / 2
        << ")' text-anchor='middle' font-size='14'>log10 key rate per pulse</text>\n";
    int color = 0;
    double legend_y = kMargin;
    for (const auto& [name, pts] : curves) {
        const char* col = kColors[color % 8];
        svg << "<polyline fill='none' stroke='" << col << "' stroke-width='1.5' points='";
        for (const auto& [x, y] : pts) {
            svg << x << ',' << y << ' ';
        }
        svg << "'/>\n<text x='" << kW - kMargin + 4 << "' y='" << legend_y
            << "' font-size='10' fill='" << col << "'>" << name << "</text>\n";
        legend_y += 14;
        ++color;
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace scic
