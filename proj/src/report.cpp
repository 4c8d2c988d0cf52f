#include "pqchw/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

namespace pqchw {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double v, int places = 4) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(places);
    out << v;
    return out.str();
}

json breakdown_to_json(const CostBreakdown& b) {
    json j;
    j["rom"] = b.rom;
    j["ram"] = b.ram;
    j["mult"] = b.mult;
    j["hash"] = b.hash;
    j["total"] = b.total();
    return j;
}

json report_to_json(const CostReport& r) {
    json j;
    j["algorithm"] = r.algorithm;
    j["reference_model"] = r.reference_model;
    j["frequency_MHz"] = r.frequency_MHz;
    j["memory_power_interpretation"] = interpretation_name(r.interpretation);
    j["area_mm2"] = breakdown_to_json(r.area_mm2);
    j["dynamic_power_mW"] = breakdown_to_json(r.dynamic_mW);
    j["leakage_power_mW"] = breakdown_to_json(r.leakage_mW);
    j["contains_estimated_costs"] = r.contains_estimated_costs;
    j["latency"] = json::array();
    for (const auto& e : r.latency) {
        json l;
        l["name"] = e.name;
        l["detail"] = e.detail;
        l["cycles"] = e.cycles;
        l["wall_time_us"] = e.wall_time_us;
        l["modeled"] = e.modeled;
        j["latency"].push_back(std::move(l));
    }
    return j;
}

const char* metric_name(RankMetric metric) {
    return metric == RankMetric::AREA ? "area" : "power";
}

const char* metric_unit(RankMetric metric) {
    return metric == RankMetric::AREA ? "mm2" : "mW";
}

std::string svg_header(int width, int height) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    return out.str();
}

}  // namespace

std::string cost_reports_to_csv(const std::vector<CostReport>& reports) {
    std::ostringstream out;
    out << "algorithm,reference_model,frequency_MHz,memory_power_interpretation,"
           "area_rom_mm2,area_ram_mm2,area_mult_mm2,area_hash_mm2,area_total_mm2,"
           "dyn_rom_mW,dyn_ram_mW,dyn_mult_mW,dyn_hash_mW,dyn_total_mW,"
           "leak_rom_mW,leak_ram_mW,leak_mult_mW,leak_hash_mW,leak_total_mW,"
           "contains_estimated_costs\n";
    for (const auto& r : reports) {
        out << r.algorithm << ',' << r.reference_model << ',' << fmt(r.frequency_MHz, 1)
            << ',' << interpretation_name(r.interpretation);
        for (const CostBreakdown* b : {&r.area_mm2, &r.dynamic_mW, &r.leakage_mW})
            out << ',' << fmt(b->rom) << ',' << fmt(b->ram) << ',' << fmt(b->mult) << ','
                << fmt(b->hash) << ',' << fmt(b->total());
        out << ',' << (r.contains_estimated_costs ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string cost_reports_to_json(const std::vector<CostReport>& reports) {
    json doc;
    doc["reports"] = json::array();
    for (const auto& r : reports)
        doc["reports"].push_back(report_to_json(r));
    return doc.dump(2) + "\n";
}

std::string rank_to_csv(const std::vector<RankEntry>& entries, RankMetric metric) {
    std::ostringstream out;
    out << "position,algorithm,reference_model," << metric_name(metric) << '_'
        << metric_unit(metric) << ",flagged_estimated\n";
    for (std::size_t i = 0; i < entries.size(); ++i)
        out << (i + 1) << ',' << entries[i].algorithm << ',' << entries[i].reference_model
            << ',' << fmt(entries[i].value) << ','
            << (entries[i].flagged_estimated ? "true" : "false") << '\n';
    return out.str();
}

std::string rank_to_json(const std::vector<RankEntry>& entries, RankMetric metric) {
    json doc;
    doc["metric"] = metric_name(metric);
    doc["unit"] = metric_unit(metric);
    doc["ranking"] = json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        json j;
        j["position"] = i + 1;
        j["algorithm"] = entries[i].algorithm;
        j["reference_model"] = entries[i].reference_model;
        j["value"] = entries[i].value;
        j["flagged_estimated"] = entries[i].flagged_estimated;
        doc["ranking"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

std::string rank_to_svg(const std::vector<RankEntry>& entries, RankMetric metric) {
    std::vector<RankEntry> shown;
    for (const auto& e : entries)
        if (!e.flagged_estimated) shown.push_back(e);
    const int bar_w = 48, gap = 24, left = 60, bottom = 40, top = 30;
    const int plot_h = 240;
    const int width = left + static_cast<int>(shown.size()) * (bar_w + gap) + gap;
    const int height = top + plot_h + bottom;
    double max_v = 0;
    for (const auto& e : shown) max_v = std::max(max_v, e.value);
    if (max_v == 0) max_v = 1;
    std::ostringstream out;
    out << svg_header(width, height);
    out << "<text x=\"" << left << "\" y=\"18\" font-size=\"13\">" << metric_name(metric)
        << " (" << metric_unit(metric) << ")</text>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\""
        << width - gap << "\" y2=\"" << top + plot_h << "\" stroke=\"black\"/>\n";
    for (std::size_t i = 0; i < shown.size(); ++i) {
        const int h = static_cast<int>(std::lround(plot_h * shown[i].value / max_v));
        const int x = left + static_cast<int>(i) * (bar_w + gap) + gap;
        out << "<rect x=\"" << x << "\" y=\"" << top + plot_h - h << "\" width=\"" << bar_w
            << "\" height=\"" << h << "\" fill=\"steelblue\"/>\n";
        out << "<text x=\"" << x << "\" y=\"" << top + plot_h + 14
            << "\" font-size=\"9\">" << shown[i].algorithm << "</text>\n";
        out << "<text x=\"" << x << "\" y=\"" << top + plot_h - h - 4
            << "\" font-size=\"9\">" << fmt(shown[i].value, 2) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string trends_to_csv(const std::vector<TrendRow>& rows) {
    std::ostringstream out;
    out << "method,exponent,m,cycles,est_cells,est_area_mm2,est_power_uW,extrapolated\n";
    for (const auto& r : rows)
        out << mult_method_name(r.method) << ',' << r.exponent << ',' << r.m << ','
            << r.cycles << ',' << fmt(r.est_cells, 1) << ',' << fmt(r.est_area_mm2, 6)
            << ',' << fmt(r.est_power_uW, 2) << ','
            << (r.extrapolated ? "true" : "false") << '\n';
    return out.str();
}

std::string trends_to_json(const std::vector<TrendRow>& rows) {
    json doc;
    doc["trends"] = json::array();
    for (const auto& r : rows) {
        json j;
        j["method"] = mult_method_name(r.method);
        j["exponent"] = r.exponent;
        j["m"] = r.m;
        j["cycles"] = r.cycles;
        j["est_cells"] = r.est_cells;
        j["est_area_mm2"] = r.est_area_mm2;
        j["est_power_uW"] = r.est_power_uW;
        j["extrapolated"] = r.extrapolated;
        doc["trends"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

std::string trends_to_svg(const std::vector<TrendRow>& rows) {
    // One polyline per method, x = exponent, y = log10(estimated area).
    std::map<std::string, std::vector<const TrendRow*>> series;
    int min_e = 99, max_e = 0;
    double min_v = 1e300, max_v = 0;
    for (const auto& r : rows) {
        series[mult_method_name(r.method)].push_back(&r);
        min_e = std::min(min_e, r.exponent);
        max_e = std::max(max_e, r.exponent);
        min_v = std::min(min_v, r.est_area_mm2);
        max_v = std::max(max_v, r.est_area_mm2);
    }
    const int left = 60, top = 30, plot_w = 480, plot_h = 280, bottom = 40;
    const int width = left + plot_w + 140, height = top + plot_h + bottom;
    const double ly_min = std::log10(min_v), ly_max = std::log10(max_v);
    auto px = [&](int e) {
        return left + (max_e == min_e ? 0
                                      : plot_w * (e - min_e) / (max_e - min_e));
    };
    auto py = [&](double v) {
        const double t = ly_max == ly_min ? 0.5 : (std::log10(v) - ly_min) / (ly_max - ly_min);
        return top + plot_h - static_cast<int>(std::lround(t * plot_h));
    };
    static const char* colors[] = {"steelblue", "firebrick", "seagreen", "darkorange"};
    std::ostringstream out;
    out << svg_header(width, height);
    out << "<text x=\"" << left << "\" y=\"18\" font-size=\"13\">estimated area (mm2, log scale)"
        << " vs operand width 2^n</text>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w
        << "\" y2=\"" << top + plot_h << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << top + plot_h << "\" stroke=\"black\"/>\n";
    int color_idx = 0;
    for (const auto& [name, pts] : series) {
        out << "<polyline fill=\"none\" stroke=\"" << colors[color_idx % 4]
            << "\" stroke-width=\"2\" points=\"";
        for (const TrendRow* r : pts)
            out << px(r->exponent) << ',' << py(r->est_area_mm2) << ' ';
        out << "\"/>\n";
        out << "<text x=\"" << left + plot_w + 10 << "\" y=\"" << top + 16 * (color_idx + 1)
            << "\" font-size=\"11\" fill=\"" << colors[color_idx % 4] << "\">" << name
            << "</text>\n";
        ++color_idx;
    }
    for (int e = min_e; e <= max_e; ++e)
        out << "<text x=\"" << px(e) - 4 << "\" y=\"" << top + plot_h + 16
            << "\" font-size=\"9\">" << e << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace pqchw
