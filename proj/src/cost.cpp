#include "pqchw/cost.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

#include "csv.hpp"

namespace pqchw {

namespace {

constexpr double kReportFrequencyMHz = 500.0;

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// The synthesized cost rows were measured at the 500 MHz report frequency;
// dynamic power of the logic scales linearly when retargeting.
double logic_scale(double freq_MHz) { return freq_MHz / kReportFrequencyMHz; }

const CompiledMacro& resolve_macro(const AlgorithmProfile& profile,
                                   const MacroTable& macros,
                                   const MemoryInstanceSpec& spec) {
    if (const CompiledMacro* m =
            macros.find(profile.algorithm, spec.kind, spec.p, spec.q))
        return *m;
    return macros.lookup(spec.kind, spec.p, spec.q);
}

// Datasheet area for one profile memory row. The datasheet's printed
// "Total area" column is authoritative when the instance counts line up;
// otherwise fall back to W*H*n.
double mem_row_area(const AlgorithmProfile& profile, const MacroTable& macros,
                    const MemoryInstanceSpec& spec) {
    const CompiledMacro& m = resolve_macro(profile, macros, spec);
    if (m.n == spec.n && m.area_mm2_printed > 0)
        return m.area_mm2_printed;
    return macro_area_mm2(m, spec.n);
}

}  // namespace

const char* interpretation_name(MemoryPowerInterpretation interp) {
    return interp == MemoryPowerInterpretation::AT_REPORT_FREQUENCY
               ? "at-report-frequency"
               : "per-mhz";
}

MemoryPowerInterpretation interpretation_from_name(const std::string& name) {
    if (name == "at-report-frequency") return MemoryPowerInterpretation::AT_REPORT_FREQUENCY;
    if (name == "per-mhz") return MemoryPowerInterpretation::PER_MHZ;
    throw std::invalid_argument("unknown memory-power interpretation: " + name);
}

CostBreakdown aggregate_area(const AlgorithmProfile& profile, const MacroTable& macros) {
    CostBreakdown area;
    for (const auto& row : profile.rom_instances)
        area.rom += mem_row_area(profile, macros, row.spec);
    for (const auto& row : profile.ram_instances)
        area.ram += mem_row_area(profile, macros, row.spec);
    if (!profile.mult_jobs.empty() && profile.mult_costs.empty())
        throw std::runtime_error(profile.algorithm +
                                 ": no multiplier cost rows for the declared jobs");
    for (const auto& c : profile.mult_costs)
        area.mult += c.area_mm2;
    for (const auto& c : profile.hash_costs)
        area.hash += c.area_mm2;
    return area;
}

PowerResult aggregate_power(const AlgorithmProfile& profile, const MacroTable& macros,
                            double freq_MHz, MemoryPowerInterpretation interpretation) {
    if (freq_MHz < 0)
        throw std::invalid_argument("frequency must be nonnegative");
    PowerResult out;
    const double mem_scale =
        interpretation == MemoryPowerInterpretation::PER_MHZ ? freq_MHz : 1.0;
    auto add_mem = [&](const std::vector<ProfileMemRow>& rows, double CostBreakdown::*dyn,
                       double CostBreakdown::*leak) {
        for (const auto& row : rows) {
            const CompiledMacro& m = resolve_macro(profile, macros, row.spec);
            const double n = static_cast<double>(row.spec.n);
            out.dynamic_mW.*dyn += n * m.dynamic_power_uWxF * mem_scale / 1000.0;
            out.leakage_mW.*leak += n * m.static_power_uW / 1000.0;
        }
    };
    add_mem(profile.rom_instances, &CostBreakdown::rom, &CostBreakdown::rom);
    add_mem(profile.ram_instances, &CostBreakdown::ram, &CostBreakdown::ram);
    for (const auto& c : profile.mult_costs) {
        out.dynamic_mW.mult += c.dynamic_uW * logic_scale(freq_MHz) / 1000.0;
        out.leakage_mW.mult += c.leakage_uW / 1000.0;
    }
    for (const auto& c : profile.hash_costs) {
        out.dynamic_mW.hash += c.dynamic_uW * logic_scale(freq_MHz) / 1000.0;
        out.leakage_mW.hash += c.leakage_uW / 1000.0;
    }
    return out;
}

std::vector<LatencyEntry> latency_estimate(const AlgorithmProfile& profile,
                                           double freq_MHz, std::uint64_t message_bits) {
    if (freq_MHz <= 0)
        throw std::invalid_argument("frequency must be positive for latency estimation");
    std::vector<LatencyEntry> out;
    const double us_per_cycle = 1.0 / freq_MHz;
    for (const auto& job : profile.mult_jobs) {
        std::size_t m = job.op1_bits;
        std::size_t extra = 0;
        if (job.method == MultMethod::NTT) {
            // Cycle formula operates on coefficient/point counts, not bits.
            m = job.ntt_points.value_or(job.op1_bits);
            extra = m;
        }
        const std::uint64_t cycles = multiply_cycles(job.method, m, extra);
        out.push_back(LatencyEntry{job.function_name, mult_method_name(job.method),
                                   cycles, cycles * us_per_cycle, true});
    }
    for (const auto& core : profile.hash_cores) {
        const HashCoreSpec spec = make_hash_core(core.function, core.instance_output_bits);
        const std::uint64_t required =
            core.modeled_output_bits.value_or(core.instance_output_bits);
        const HashCycleBreakdown b = hash_cycles(spec, message_bits, required);
        out.push_back(LatencyEntry{hash_function_name(core.function),
                                   "hash d=" + std::to_string(core.instance_output_bits),
                                   b.total_cycles, b.total_cycles * us_per_cycle, true});
    }
    for (const auto& op : profile.unmodeled_ops)
        out.push_back(LatencyEntry{op.function_name, "unmodeled " + op.operation, 0, 0, false});
    return out;
}

CostReport make_cost_report(const AlgorithmProfile& profile, const MacroTable& macros,
                            double freq_MHz, MemoryPowerInterpretation interpretation) {
    CostReport r;
    r.algorithm = profile.algorithm;
    r.reference_model = profile.reference_model;
    r.frequency_MHz = freq_MHz;
    r.interpretation = interpretation;
    r.area_mm2 = aggregate_area(profile, macros);
    const PowerResult p = aggregate_power(profile, macros, freq_MHz, interpretation);
    r.dynamic_mW = p.dynamic_mW;
    r.leakage_mW = p.leakage_mW;
    r.latency = latency_estimate(profile, freq_MHz > 0 ? freq_MHz : kReportFrequencyMHz);
    r.contains_estimated_costs =
        std::any_of(profile.mult_costs.begin(), profile.mult_costs.end(),
                    [](const MultCost& c) { return c.estimated; });
    return r;
}

std::vector<RankEntry> rank(const std::vector<CostReport>& reports, RankMetric metric) {
    std::vector<RankEntry> out;
    out.reserve(reports.size());
    for (const auto& r : reports)
        out.push_back(RankEntry{r.algorithm, r.reference_model,
                                metric == RankMetric::AREA ? r.area_mm2.total()
                                                           : r.dynamic_mW.total(),
                                r.contains_estimated_costs});
    std::sort(out.begin(), out.end(), [](const RankEntry& a, const RankEntry& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.algorithm < b.algorithm;
    });
    return out;
}

std::uint64_t sequential_cells(std::size_t op1_bits, std::size_t op2_bits) {
    const std::uint64_t s = op1_bits + op2_bits;
    return s + (std::bit_width(s) - 1);
}

GateModelParams calibrate_gate_model(const std::vector<AlgorithmProfile>& profiles) {
    struct Row {
        std::size_t op1, op2;
        std::uint64_t comb, seq;
        double area, dyn;
    };
    std::vector<Row> rows;
    std::set<std::tuple<std::size_t, std::size_t, std::uint64_t>> seen;
    for (const auto& p : profiles)
        for (const auto& c : p.mult_costs) {
            if (c.estimated || !c.comb_cells) continue;
            // Identical synthesized datapaths are shared between schemes;
            // count each once.
            if (!seen.insert({c.op1_bits, c.op2_bits, *c.comb_cells}).second) continue;
            rows.push_back(Row{c.op1_bits, c.op2_bits, *c.comb_cells, c.seq_cells,
                               c.area_mm2, c.dynamic_uW});
        }
    if (rows.size() < 3)
        throw std::runtime_error("not enough synthesized rows to calibrate the gate model");

    // Log-log least squares: log(comb) = log(coeff) + exp * log(s).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : rows) {
        const double x = std::log(static_cast<double>(r.op1 + r.op2));
        const double y = std::log(static_cast<double>(r.comb));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double n = static_cast<double>(rows.size());
    GateModelParams params;
    params.comb_exp = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    params.comb_coeff = std::exp((sy - params.comb_exp * sx) / n);

    // Geometric-mean per-cell constants over the same rows.
    double log_apc = 0, log_ppc = 0;
    for (const auto& r : rows) {
        const double cells = static_cast<double>(r.comb + r.seq);
        log_apc += std::log(r.area * 1e6 / cells);
        log_ppc += std::log(r.dyn / cells);
    }
    params.area_per_cell_um2 = std::exp(log_apc / n);
    params.power_per_cell_uW = std::exp(log_ppc / n);

    for (const auto& r : rows) {
        const GateEstimate est = estimate_gates(params, r.op1, r.op2);
        const double rel = (est.area_mm2 - r.area) / r.area;
        params.area_residuals.push_back(rel);
        params.max_abs_area_residual = std::max(params.max_abs_area_residual, std::abs(rel));
    }
    return params;
}

GateEstimate estimate_gates(const GateModelParams& params,
                            std::size_t op1_bits, std::size_t op2_bits) {
    GateEstimate est;
    const double s = static_cast<double>(op1_bits + op2_bits);
    est.comb_cells = params.comb_coeff * std::pow(s, params.comb_exp);
    est.seq_cells = static_cast<double>(sequential_cells(op1_bits, op2_bits));
    const double cells = est.comb_cells + est.seq_cells;
    est.area_mm2 = cells * params.area_per_cell_um2 / 1e6;
    est.power_uW = cells * params.power_per_cell_uW;
    return est;
}

namespace {

// Structural constants of the split multipliers relative to plain SBM:
// number of half/third/quarter-width submultipliers and the relative
// recombination-logic overhead on the combinational side.
struct MethodShape {
    std::size_t split;       // operand split factor k
    std::size_t submuls;     // simultaneous submultiplier instances
    double comb_factor;      // recombination overhead multiplier
};

MethodShape method_shape(MultMethod method) {
    switch (method) {
        case MultMethod::SBM:  return {1, 1, 1.0};
        case MultMethod::KM2:  return {2, 3, 1.2};
        case MultMethod::TCM3: return {3, 5, 1.4};
        case MultMethod::TCM4: return {4, 7, 1.6};
        default:
            throw std::invalid_argument("trend sweep covers SBM/KM2/TCM3/TCM4 only");
    }
}

}  // namespace

std::vector<TrendRow> sweep_multiplier_trends(const std::vector<MultMethod>& methods,
                                              int min_exp, int max_exp,
                                              const GateModelParams& params) {
    if (min_exp < 1 || max_exp < min_exp)
        throw std::invalid_argument("exponent range must satisfy 1 <= min <= max");
    std::vector<TrendRow> out;
    for (const MultMethod method : methods) {
        const MethodShape shape = method_shape(method);
        for (int e = min_exp; e <= max_exp; ++e) {
            const std::size_t m = std::size_t(1) << e;
            TrendRow row;
            row.method = method;
            row.exponent = e;
            row.m = m;
            row.cycles = multiply_cycles(method, m);
            // Combinational estimate: the SBM datapath trend at the full
            // product width, scaled by the recombination overhead.
            const double comb = shape.comb_factor * params.comb_coeff *
                                std::pow(2.0 * static_cast<double>(m), params.comb_exp);
            // Sequential estimate: each submultiplier carries its two
            // operand-chunk registers and a cycle counter.
            const std::size_t chunk = ceil_div(m, shape.split);
            const double seq = static_cast<double>(shape.submuls) *
                               static_cast<double>(sequential_cells(chunk, chunk));
            row.est_cells = comb + seq;
            row.est_area_mm2 = row.est_cells * params.area_per_cell_um2 / 1e6;
            row.est_power_uW = row.est_cells * params.power_per_cell_uW;
            row.extrapolated = e > 12;
            out.push_back(row);
        }
    }
    return out;
}

ReferenceTable ReferenceTable::load(const std::filesystem::path& tables_dir) {
    ReferenceTable table;
    std::vector<std::string> header;
    for (const auto& row : csv::read_file(tables_dir / "asic_comparison.csv", header)) {
        ReferenceRow r;
        r.row_id = row[0];
        r.source = row[1];
        r.algorithm = row[2];
        r.variant = row[3];
        r.security_level = row[4].empty() ? 0 : std::stoi(row[4]);
        r.clk_ns = row[5].empty() ? 0 : std::stod(row[5]);
        r.freq_MHz = row[6].empty() ? 0 : std::stod(row[6]);
        r.area_um2 = row[7].empty() ? 0 : std::stod(row[7]);
        r.power_mW = row[8].empty() ? 0 : std::stod(row[8]);
        r.ref_row = row[9];
        if (!row[10].empty()) r.area_delta_printed_pct = std::stoi(row[10]);
        if (!row[11].empty()) r.power_delta_printed_pct = std::stoi(row[11]);
        table.rows_.push_back(std::move(r));
    }
    for (const auto& row :
         csv::read_file(tables_dir / "asic_comparison_errata.csv", header)) {
        table.errata_.push_back(
            DeltaErratum{row[0], row[1], std::stoi(row[2]), std::stoi(row[3])});
    }
    return table;
}

const ReferenceRow& ReferenceTable::row(const std::string& row_id) const {
    for (const auto& r : rows_)
        if (r.row_id == row_id) return r;
    throw std::out_of_range("no reference row with id " + row_id);
}

int percentage_delta(double value, double reference) {
    if (reference == 0)
        throw std::invalid_argument("reference value must be nonzero");
    return static_cast<int>(std::llround((value - reference) / reference * 100.0));
}

std::vector<DeltaRow> reference_deltas(const ReferenceTable& table) {
    std::vector<DeltaRow> out;
    auto is_erratum = [&](const std::string& row_id, const std::string& metric) {
        return std::any_of(table.errata().begin(), table.errata().end(),
                           [&](const DeltaErratum& e) {
                               return e.row_id == row_id && e.metric == metric;
                           });
    };
    for (const auto& r : table.rows()) {
        if (r.ref_row.empty()) continue;
        const ReferenceRow& base = table.row(r.ref_row);
        if (r.area_delta_printed_pct) {
            DeltaRow d{r.row_id, "area", r.area_um2, base.area_um2,
                       percentage_delta(r.area_um2, base.area_um2),
                       r.area_delta_printed_pct, false};
            d.erratum = is_erratum(r.row_id, "area");
            out.push_back(d);
        }
        if (r.power_delta_printed_pct) {
            DeltaRow d{r.row_id, "power", r.power_mW, base.power_mW,
                       percentage_delta(r.power_mW, base.power_mW),
                       r.power_delta_printed_pct, false};
            d.erratum = is_erratum(r.row_id, "power");
            out.push_back(d);
        }
    }
    return out;
}

DeltaRow compare_against_reference(const CostReport& report, const ReferenceRow& reference,
                                   RankMetric metric) {
    DeltaRow d;
    d.row_id = reference.row_id;
    if (metric == RankMetric::AREA) {
        d.metric = "area";
        d.value = report.area_mm2.total() * 1e6;  // mm^2 -> um^2
        d.reference = reference.area_um2;
    } else {
        d.metric = "power";
        d.value = report.dynamic_mW.total();
        d.reference = reference.power_mW;
    }
    d.computed_pct = percentage_delta(d.value, d.reference);
    return d;
}

}  // namespace pqchw
