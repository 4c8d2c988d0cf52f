// pqcost: verification runs, per-algorithm cost estimation, rankings,
// multiplier trend sweeps, and full report emission.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pqchw/cost.hpp"
#include "pqchw/datadir.hpp"
#include "pqchw/hash.hpp"
#include "pqchw/memmodel.hpp"
#include "pqchw/mult.hpp"
#include "pqchw/ntt.hpp"
#include "pqchw/profile.hpp"
#include "pqchw/report.hpp"
#include "pqchw/vectors.hpp"

namespace {

using namespace pqchw;

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write output file: " + out_path);
    out << content;
}

// Independent GF(2)[x] shift-add product used to cross-check the engines.
bigint carryless_oracle(const Operand& a, const Operand& b) {
    bigint res = 0;
    for (std::size_t i = 0; i < b.width_bits; ++i)
        if (boost::multiprecision::bit_test(b.value, static_cast<unsigned>(i)))
            res ^= a.value << i;
    return res;
}

int run_multiplier_checks(std::vector<std::string>& failures) {
    const std::vector<std::size_t> widths = {8, 64, 256};
    for (std::size_t m : widths)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Operand a = random_operand(m, 0xA000 + seed * 2);
            const Operand b = random_operand(m, 0xB000 + seed * 2);
            const bigint want_int = a.value * b.value;
            const bigint want_clm = carryless_oracle(a, b);
            struct Engine {
                const char* name;
                MultResult (*fn)(const Operand&, const Operand&, MultMode);
            };
            const Engine engines[] = {
                {"sbm", sbm_multiply},
                {"km2", karatsuba2_multiply},
                {"tcm3", toomcook3_multiply},
                {"tcm4", toomcook4_multiply},
            };
            for (const auto& eng : engines) {
                if (eng.fn(a, b, MultMode::INTEGER).product.value != want_int)
                    failures.push_back(std::string(eng.name) + " integer mismatch at m=" +
                                       std::to_string(m));
                if (eng.fn(a, b, MultMode::CARRYLESS).product.value != want_clm)
                    failures.push_back(std::string(eng.name) + " carry-less mismatch at m=" +
                                       std::to_string(m));
            }
            if (segmented_sbm_multiply(a, b, 8, MultMode::INTEGER).product.value != want_int)
                failures.push_back("segmented integer mismatch at m=" + std::to_string(m));
        }
    // Montgomery sanity, exhaustive over a small odd modulus.
    for (std::uint64_t x = 0; x < 13; ++x)
        for (std::uint64_t y = 0; y < 13; ++y) {
            const std::uint64_t got = from_montgomery(
                montgomery_multiply(to_montgomery(x, 13, 4), to_montgomery(y, 13, 4), 13, 4)
                    .residue,
                13, 4);
            if (got != x * y % 13)
                failures.push_back("montgomery mismatch at " + std::to_string(x) + "*" +
                                   std::to_string(y));
        }
    // NTT round-trip and identity.
    const NttParams params = NttParams::create(8, 97);
    std::vector<std::uint64_t> one(8, 0), v(8);
    one[0] = 1;
    for (std::size_t i = 0; i < 8; ++i) v[i] = (i * 31 + 7) % 97;
    if (ntt_polynomial_multiply(one, v, params).coeffs != v)
        failures.push_back("ntt multiplicative identity failed");
    if (ntt_inverse(ntt_forward(v, params), params) != v)
        failures.push_back("ntt round-trip failed");
    return 0;
}

void run_table_checks(const std::filesystem::path& data_dir,
                      std::vector<std::string>& failures,
                      std::vector<std::string>& notes) {
    const MacroTable macros = MacroTable::load(data_dir / "tables");
    const auto profiles = load_bundled_profiles(data_dir);
    if (profiles.size() != 12)
        failures.push_back("expected 12 bundled profiles, found " +
                           std::to_string(profiles.size()));
    for (const auto& p : profiles) {
        for (const auto& f : validate_profile(p, &macros)) {
            const std::string line =
                p.reference_model + " " + f.path + ": " + f.message;
            if (f.severity == Finding::Severity::ERROR)
                failures.push_back(line);
            else
                notes.push_back(std::string(severity_name(f.severity)) + " " + line);
        }
    }
    // Datasheet area column vs W*H*n, modulo the recorded errata.
    for (const auto& m : macros.rows()) {
        const double recomputed = macro_area_mm2(m, m.n);
        const bool consistent = std::abs(recomputed - m.area_mm2_printed) < 5e-5;
        const bool erratum = macros.area_erratum_for(m.algorithm, m.kind, m.p, m.q);
        if (!consistent && !erratum)
            failures.push_back("unrecorded area discrepancy: " + m.algorithm + " " +
                               mem_kind_name(m.kind) + " " + std::to_string(m.p) + "x" +
                               std::to_string(m.q));
        if (!consistent && erratum)
            notes.push_back("erratum " + m.algorithm + " " + mem_kind_name(m.kind) + " " +
                            std::to_string(m.p) + "x" + std::to_string(m.q) +
                            ": printed area differs from W*H*n");
    }
    // Reference comparison deltas, modulo the recorded errata.
    const ReferenceTable refs = ReferenceTable::load(data_dir / "tables");
    for (const auto& d : reference_deltas(refs)) {
        if (!d.printed_pct) continue;
        if (d.computed_pct != *d.printed_pct && !d.erratum)
            failures.push_back("unrecorded delta discrepancy: " + d.row_id + " " + d.metric);
        if (d.computed_pct != *d.printed_pct && d.erratum)
            notes.push_back("erratum " + d.row_id + " " + d.metric + ": printed " +
                            std::to_string(*d.printed_pct) + "%, computed " +
                            std::to_string(d.computed_pct) + "%");
    }
}

std::optional<AlgorithmProfile> find_profile(const std::vector<AlgorithmProfile>& profiles,
                                             const std::string& selector) {
    for (const auto& p : profiles)
        if (p.reference_model == selector || p.algorithm == selector)
            return p;
    if (std::filesystem::exists(selector))
        return load_profile(selector);
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hardware cost modeling for lattice-based PQC accelerator building blocks"};
    app.require_subcommand(1);

    std::string only = "all";
    auto* verify = app.add_subcommand("verify", "run the bundled verification suites");
    verify->add_option("--only", only, "restrict to one suite: hashes|multipliers|tables")
        ->check(CLI::IsMember({"all", "hashes", "multipliers", "tables"}));

    std::string algorithm;
    double freq = 500.0;
    std::string mem_power = "at-report-frequency";
    std::string format = "json";
    std::string out_path;
    auto add_common = [&](CLI::App* cmd, bool with_freq = true) {
        if (with_freq) {
            cmd->add_option("--freq", freq, "target frequency in MHz")->check(CLI::PositiveNumber);
            cmd->add_option("--mem-power", mem_power,
                            "memory dynamic-power interpretation")
                ->check(CLI::IsMember({"at-report-frequency", "per-mhz"}));
        }
        cmd->add_option("--format", format, "output format");
        cmd->add_option("--out", out_path, "output file (default: stdout)");
    };

    auto* estimate = app.add_subcommand("estimate", "cost report for one algorithm");
    estimate->add_option("algorithm", algorithm, "reference model, scheme name, or profile path")
        ->required();
    add_common(estimate);

    std::string metric = "area";
    auto* rank_cmd = app.add_subcommand("rank", "order all bundled algorithms by a metric");
    rank_cmd->add_option("--metric", metric, "area|power")
        ->check(CLI::IsMember({"area", "power"}));
    add_common(rank_cmd);

    std::string methods_arg = "sbm,km2,tcm3,tcm4";
    int min_exp = 1, max_exp = 12;
    auto* sweep = app.add_subcommand("sweep", "multiplier trend sweep over 2^min..2^max");
    sweep->add_option("--methods", methods_arg, "comma-separated method list");
    sweep->add_option("--min", min_exp, "smallest exponent");
    sweep->add_option("--max", max_exp, "largest exponent");
    add_common(sweep, false);

    auto* report_cmd = app.add_subcommand("report", "full bundle over every algorithm");
    add_common(report_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const auto data = data_dir();

        if (verify->parsed()) {
            std::vector<std::string> failures, notes;
            if (only == "all" || only == "hashes") {
                auto hash_failures = run_hash_vector_suite(data);
                failures.insert(failures.end(), hash_failures.begin(), hash_failures.end());
            }
            if (only == "all" || only == "multipliers")
                run_multiplier_checks(failures);
            if (only == "all" || only == "tables")
                run_table_checks(data, failures, notes);
            for (const auto& n : notes) std::cout << "note: " << n << "\n";
            for (const auto& f : failures) std::cout << "FAIL: " << f << "\n";
            std::cout << (failures.empty() ? "verification passed" : "verification FAILED")
                      << " (" << failures.size() << " failures, " << notes.size()
                      << " notes)\n";
            return failures.empty() ? 0 : 1;
        }

        const MacroTable macros = MacroTable::load(data / "tables");
        const auto interp = interpretation_from_name(mem_power);
        const auto profiles = load_bundled_profiles(data);

        if (estimate->parsed()) {
            const auto profile = find_profile(profiles, algorithm);
            if (!profile) {
                std::cerr << "unknown algorithm: " << algorithm << "\navailable:";
                for (const auto& p : profiles) std::cerr << " " << p.reference_model;
                std::cerr << "\n";
                return 2;
            }
            const CostReport r = make_cost_report(*profile, macros, freq, interp);
            emit(format == "csv" ? cost_reports_to_csv({r}) : cost_reports_to_json({r}),
                 out_path);
            return 0;
        }

        if (rank_cmd->parsed()) {
            std::vector<CostReport> reports;
            for (const auto& p : profiles)
                reports.push_back(make_cost_report(p, macros, freq, interp));
            const RankMetric rm = metric == "area" ? RankMetric::AREA : RankMetric::POWER;
            const auto entries = rank(reports, rm);
            if (format == "csv") emit(rank_to_csv(entries, rm), out_path);
            else if (format == "svg") emit(rank_to_svg(entries, rm), out_path);
            else emit(rank_to_json(entries, rm), out_path);
            return 0;
        }

        if (sweep->parsed()) {
            std::vector<MultMethod> methods;
            std::stringstream ss(methods_arg);
            std::string item;
            while (std::getline(ss, item, ',')) {
                for (auto& c : item) c = static_cast<char>(std::toupper(c));
                methods.push_back(mult_method_from_name(item));
            }
            const GateModelParams params = calibrate_gate_model(profiles);
            const auto rows = sweep_multiplier_trends(methods, min_exp, max_exp, params);
            if (format == "csv") emit(trends_to_csv(rows), out_path);
            else if (format == "svg") emit(trends_to_svg(rows), out_path);
            else emit(trends_to_json(rows), out_path);
            return 0;
        }

        if (report_cmd->parsed()) {
            std::vector<CostReport> reports;
            for (const auto& p : profiles)
                reports.push_back(make_cost_report(p, macros, freq, interp));
            emit(format == "csv" ? cost_reports_to_csv(reports)
                                 : cost_reports_to_json(reports),
                 out_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
