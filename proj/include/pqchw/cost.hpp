// Area/power aggregation, ranking, latency estimation, the analytic
// gate-count trend model, and comparison against the bundled reference
// implementations.
//
// Headline totals are dynamic-power-only; leakage is carried as a separate
// column. The dynamic-power unit of the memory datasheets is not defined by
// the source material, so its interpretation is an explicit switch.

#ifndef PQCHW_COST_HPP
#define PQCHW_COST_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pqchw/memmodel.hpp"
#include "pqchw/profile.hpp"

namespace pqchw {

enum class MemoryPowerInterpretation {
    // Datasheet dynamic values are already at the 500 MHz report frequency;
    // they are used as printed (the default).
    AT_REPORT_FREQUENCY,
    // Datasheet dynamic values are per-MHz and scale linearly with the
    // target frequency.
    PER_MHZ,
};

const char* interpretation_name(MemoryPowerInterpretation interp);
MemoryPowerInterpretation interpretation_from_name(const std::string& name);

struct CostBreakdown {
    double rom = 0, ram = 0, mult = 0, hash = 0;
    double total() const { return rom + ram + mult + hash; }
};

struct LatencyEntry {
    std::string name;        // function name of the modeled operation
    std::string detail;      // method / hash function
    std::uint64_t cycles = 0;
    double wall_time_us = 0;
    bool modeled = true;     // false for visible-but-uncosted entries
};

struct CostReport {
    std::string algorithm;
    std::string reference_model;
    double frequency_MHz = 500;
    MemoryPowerInterpretation interpretation = MemoryPowerInterpretation::AT_REPORT_FREQUENCY;
    CostBreakdown area_mm2;
    CostBreakdown dynamic_mW;
    CostBreakdown leakage_mW;
    std::vector<LatencyEntry> latency;
    bool contains_estimated_costs = false;  // analytic rows, not synthesis
};

CostBreakdown aggregate_area(const AlgorithmProfile& profile, const MacroTable& macros);

struct PowerResult {
    CostBreakdown dynamic_mW;
    CostBreakdown leakage_mW;
};
PowerResult aggregate_power(const AlgorithmProfile& profile, const MacroTable& macros,
                            double freq_MHz,
                            MemoryPowerInterpretation interpretation);

// message_bits feeds the hash read/absorb model (seed-sized zero default:
// only output squeezing varies between cores).
std::vector<LatencyEntry> latency_estimate(const AlgorithmProfile& profile,
                                           double freq_MHz,
                                           std::uint64_t message_bits = 0);

CostReport make_cost_report(const AlgorithmProfile& profile, const MacroTable& macros,
                            double freq_MHz = 500,
                            MemoryPowerInterpretation interpretation =
                                MemoryPowerInterpretation::AT_REPORT_FREQUENCY);

enum class RankMetric { AREA, POWER };

struct RankEntry {
    std::string algorithm;
    std::string reference_model;
    double value = 0;   // mm^2 or mW
    bool flagged_estimated = false;  // kept in data, excluded from charts
};

std::vector<RankEntry> rank(const std::vector<CostReport>& reports, RankMetric metric);

// ---- analytic gate-count model -------------------------------------------

struct GateModelParams {
    double comb_coeff = 0;           // combinational cells ~ coeff * s^exp
    double comb_exp = 0;             //   with s = op1_bits + op2_bits
    double area_per_cell_um2 = 0;
    double power_per_cell_uW = 0;
    int flipflops_per_operand_bit = 2;
    std::vector<double> area_residuals;  // relative, one per calibration row
    double max_abs_area_residual = 0;
};

// Sequential cells of the serial multiplier datapath: the two operand
// registers plus a log2-wide cycle counter.
std::uint64_t sequential_cells(std::size_t op1_bits, std::size_t op2_bits);

// Least-squares log-log fit over the synthesized (non-estimated) multiplier
// cost rows of the given profiles.
GateModelParams calibrate_gate_model(const std::vector<AlgorithmProfile>& profiles);

struct GateEstimate {
    double comb_cells = 0;
    double seq_cells = 0;
    double area_mm2 = 0;
    double power_uW = 0;
};
GateEstimate estimate_gates(const GateModelParams& params,
                            std::size_t op1_bits, std::size_t op2_bits);

struct TrendRow {
    MultMethod method;
    int exponent = 0;       // operand width 2^exponent
    std::size_t m = 0;
    std::uint64_t cycles = 0;
    double est_cells = 0;
    double est_area_mm2 = 0;
    double est_power_uW = 0;
    bool extrapolated = false;  // outside the calibrated 2^1..2^12 range
};

std::vector<TrendRow> sweep_multiplier_trends(const std::vector<MultMethod>& methods,
                                              int min_exp, int max_exp,
                                              const GateModelParams& params);

// ---- reference-implementation comparison ---------------------------------

struct ReferenceRow {
    std::string row_id;
    std::string source;      // "this-work" or a prior-implementation tag
    std::string algorithm;
    std::string variant;
    int security_level = 0;
    double clk_ns = 0;
    double freq_MHz = 0;
    double area_um2 = 0;
    double power_mW = 0;
    std::string ref_row;     // baseline row_id for delta computation
    std::optional<int> area_delta_printed_pct;
    std::optional<int> power_delta_printed_pct;
};

struct DeltaErratum {
    std::string row_id;
    std::string metric;      // area | power
    int printed_pct = 0;
    int computed_pct = 0;
};

class ReferenceTable {
public:
    static ReferenceTable load(const std::filesystem::path& tables_dir);
    const std::vector<ReferenceRow>& rows() const { return rows_; }
    const std::vector<DeltaErratum>& errata() const { return errata_; }
    const ReferenceRow& row(const std::string& row_id) const;

private:
    std::vector<ReferenceRow> rows_;
    std::vector<DeltaErratum> errata_;
};

// Percentage delta with the reference table's sign convention:
// negative = smaller than the baseline. Rounded to the nearest integer.
int percentage_delta(double value, double reference);

struct DeltaRow {
    std::string row_id;
    std::string metric;
    double value = 0;
    double reference = 0;
    int computed_pct = 0;
    std::optional<int> printed_pct;
    bool erratum = false;   // printed and computed disagree, recorded as such
};

// Deltas of every this-work row against its baseline row.
std::vector<DeltaRow> reference_deltas(const ReferenceTable& table);

// Delta of an arbitrary report against one bundled baseline row.
DeltaRow compare_against_reference(const CostReport& report, const ReferenceRow& reference,
                                   RankMetric metric);

}  // namespace pqchw

#endif  // PQCHW_COST_HPP
