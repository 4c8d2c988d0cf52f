// Acceptance checks. Usage: acceptance <criterion 1..9 | all> [pqcost-path]
//
// Each criterion prints one PASS/FAIL line; the exit status is nonzero iff
// any requested criterion failed. Criterion 7's strict cycle ordering
// cannot hold at operand widths 2 and 4, where the closed-form cycle counts
// of the split methods coincide; that check is kept literal and reports the
// failure honestly rather than weakening the property.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pqchw/cost.hpp"
#include "pqchw/datadir.hpp"
#include "pqchw/hash.hpp"
#include "pqchw/memmodel.hpp"
#include "pqchw/mult.hpp"
#include "pqchw/ntt.hpp"
#include "pqchw/operand.hpp"
#include "pqchw/profile.hpp"
#include "pqchw/report.hpp"
#include "pqchw/vectors.hpp"

using namespace pqchw;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;
    void fail(const std::string& msg) {
        pass = false;
        details.push_back(msg);
    }
    void note(const std::string& msg) { details.push_back(msg); }
    void require(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
};

// Independent GF(2)[x] oracle over bit vectors.
bigint carryless_oracle(const Operand& a, const Operand& b) {
    const auto abits = to_bit_sequence(a);
    const auto bbits = to_bit_sequence(b);
    std::vector<int> out(abits.size() + bbits.size() - 1, 0);
    for (std::size_t i = 0; i < abits.size(); ++i)
        if (abits[i])
            for (std::size_t j = 0; j < bbits.size(); ++j)
                out[i + j] ^= bbits[j];
    return from_bit_sequence(out).value;
}

Outcome criterion_1_hash_conformance() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto failures = run_hash_vector_suite(data_dir());
    for (const auto& f : failures) o.fail(f);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 10.0, "vector suite exceeded 10 s");
    o.note("vector suite in " + std::to_string(secs) + " s");
    return o;
}

Outcome criterion_2_oracle_equivalence() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t mismatches = 0;
    for (std::size_t m : {8u, 64u, 1024u, 4096u}) {
        const std::size_t digit = std::max<std::size_t>(8, m / 16);
        for (std::uint64_t pair = 0; pair < 100; ++pair) {
            const Operand a = random_operand(m, 0xC0FFEE00 + pair * 2);
            const Operand b = random_operand(m, 0xC0FFEE01 + pair * 2);
            const bigint want_int = a.value * b.value;
            const bigint want_clm = carryless_oracle(a, b);
            const MultResult results_int[] = {
                sbm_multiply(a, b, MultMode::INTEGER),
                karatsuba2_multiply(a, b, MultMode::INTEGER),
                toomcook3_multiply(a, b, MultMode::INTEGER),
                toomcook4_multiply(a, b, MultMode::INTEGER),
                segmented_sbm_multiply(a, b, digit, MultMode::INTEGER),
            };
            const MultResult results_clm[] = {
                sbm_multiply(a, b, MultMode::CARRYLESS),
                karatsuba2_multiply(a, b, MultMode::CARRYLESS),
                toomcook3_multiply(a, b, MultMode::CARRYLESS),
                toomcook4_multiply(a, b, MultMode::CARRYLESS),
                segmented_sbm_multiply(a, b, digit, MultMode::CARRYLESS),
            };
            for (const auto& r : results_int)
                if (r.product.value != want_int) ++mismatches;
            for (const auto& r : results_clm)
                if (r.product.value != want_clm) ++mismatches;
        }
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " oracle mismatches");
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 120.0, "oracle suite exceeded 2 min");
    o.note("400 pairs x 5 engines x 2 modes in " + std::to_string(secs) + " s");
    return o;
}

Outcome criterion_3_cycle_formulas() {
    Outcome o;
    o.require(multiply_cycles(MultMethod::SBM, 4096) == 4095, "SBM 4096");
    o.require(multiply_cycles(MultMethod::KM2, 4096) == 2047, "KM2 4096");
    o.require(multiply_cycles(MultMethod::TCM4, 4096) == 1023, "TCM4 4096");
    o.require(multiply_cycles(MultMethod::MONTGOMERY, 32) == 63, "Montgomery 32");
    const Operand a = random_operand(4096, 1), b = random_operand(4096, 2);
    o.require(unified_multiply_reduce(a, b).cycles == 8190, "unified 4096");
    return o;
}

Outcome criterion_4_ntt() {
    Outcome o;
    auto oracle = [](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                     std::uint64_t q) {
        const std::size_t n = a.size();
        std::vector<std::uint64_t> out(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::uint64_t prod = a[i] * b[j] % q;
                const std::size_t k = (i + j) % n;
                out[k] = i + j < n ? (out[k] + prod) % q : (out[k] + q - prod) % q;
            }
        return out;
    };
    // n = 4, q = 17: exhaustive over all scaled basis-monomial pairs; both
    // sides are bilinear, so this covers every input pair.
    const NttParams p4 = NttParams::create(4, 17);
    for (std::size_t i = 0; i < 4 && o.pass; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::uint64_t ca = 0; ca < 17; ++ca)
                for (std::uint64_t cb = 0; cb < 17; ++cb) {
                    std::vector<std::uint64_t> a(4, 0), b(4, 0);
                    a[i] = ca;
                    b[j] = cb;
                    if (ntt_polynomial_multiply(a, b, p4).coeffs != oracle(a, b, 17)) {
                        o.fail("n=4 exhaustive mismatch");
                        break;
                    }
                }
    for (const auto& [n, q] :
         std::vector<std::pair<std::size_t, std::uint64_t>>{{8, 97}, {256, 7681}}) {
        const NttParams p = NttParams::create(n, q);
        std::mt19937_64 rng(n * 7919);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<std::uint64_t> a(n), b(n);
            for (auto& x : a) x = rng() % q;
            for (auto& x : b) x = rng() % q;
            if (ntt_polynomial_multiply(a, b, p).coeffs != oracle(a, b, q))
                o.fail("n=" + std::to_string(n) + " random mismatch");
            if (ntt_inverse(ntt_forward(a, p), p) != a)
                o.fail("n=" + std::to_string(n) + " round-trip failure");
        }
    }
    return o;
}

Outcome criterion_5_table_reproduction() {
    Outcome o;
    const MacroTable macros = MacroTable::load(data_dir() / "tables");
    const auto profiles = load_bundled_profiles(data_dir());
    auto size_erratum = [&](const std::string& alg, MemKind kind, std::size_t p,
                            std::size_t q, const std::string& field) {
        return std::any_of(macros.size_errata().begin(), macros.size_errata().end(),
                           [&](const MemErratum& e) {
                               return e.algorithm == alg && e.kind == kind && e.p == p &&
                                      e.q == q && e.field == field;
                           });
    };
    auto total_erratum = [&](const std::string& alg, MemKind kind) {
        return std::any_of(macros.size_errata().begin(), macros.size_errata().end(),
                           [&](const MemErratum& e) {
                               return e.algorithm == alg && e.kind == kind &&
                                      e.field == "total_kbytes";
                           });
    };
    int excused = 0;
    for (const auto& p : profiles) {
        auto check_rows = [&](const std::vector<ProfileMemRow>& rows, MemKind kind,
                              const std::optional<double>& total_printed) {
            double total = 0;
            for (const auto& row : rows) {
                const double r = instance_size_kbytes(row.spec.p, row.spec.q);
                const double s = r * static_cast<double>(row.spec.n);
                total += s;
                if (std::abs(r - row.r_kbytes_printed) > 5e-4) {
                    if (size_erratum(p.algorithm, kind, row.spec.p, row.spec.q, "r_kbytes"))
                        ++excused;
                    else
                        o.fail(p.algorithm + " unrecorded r mismatch at " +
                               std::to_string(row.spec.p) + "x" + std::to_string(row.spec.q));
                }
                if (std::abs(s - row.s_kbytes_printed) > 5e-4) {
                    if (size_erratum(p.algorithm, kind, row.spec.p, row.spec.q, "s_kbytes"))
                        ++excused;
                    else
                        o.fail(p.algorithm + " unrecorded s mismatch at " +
                               std::to_string(row.spec.p) + "x" + std::to_string(row.spec.q));
                }
            }
            if (total_printed && std::abs(total - *total_printed) > 5e-4) {
                if (total_erratum(p.algorithm, kind))
                    ++excused;
                else
                    o.fail(p.algorithm + " unrecorded total mismatch");
            }
        };
        check_rows(p.rom_instances, MemKind::ROM, p.rom_total_kbytes_printed);
        check_rows(p.ram_instances, MemKind::RAM, p.ram_total_kbytes_printed);
    }
    // The two named errata rows must be present in the errata report.
    o.require(size_erratum("qTesla", MemKind::RAM, 10240, 32, "r_kbytes"),
              "qTesla 10240x32 missing from errata");
    o.require(size_erratum("LAC", MemKind::RAM, 1024, 8, "r_kbytes"),
              "LAC 1024x8 missing from errata");
    o.note(std::to_string(excused) + " printed size cells excused by the bundled errata "
           "(includes two additional misprinted rows beyond the two named ones)");

    // Datasheet area column to 4 decimal places, modulo the recorded errata.
    int area_excused = 0;
    for (const auto& m : macros.rows()) {
        const double recomputed = std::round(macro_area_mm2(m, m.n) * 1e4) / 1e4;
        if (std::abs(recomputed - m.area_mm2_printed) < 5e-9) continue;
        if (macros.area_erratum_for(m.algorithm, m.kind, m.p, m.q))
            ++area_excused;
        else
            o.fail("unrecorded area mismatch: " + m.algorithm + " " +
                   mem_kind_name(m.kind) + " " + std::to_string(m.p) + "x" +
                   std::to_string(m.q));
    }
    o.note(std::to_string(area_excused) +
           " datasheet area cells inconsistent with W*H*n, recorded in the bundled errata");
    return o;
}

Outcome criterion_6_aggregation() {
    Outcome o;
    const MacroTable macros = MacroTable::load(data_dir() / "tables");
    const auto profiles = load_bundled_profiles(data_dir());
    auto report_for = [&](const std::string& model) {
        for (const auto& p : profiles)
            if (p.reference_model == model) return make_cost_report(p, macros);
        throw std::runtime_error("missing profile " + model);
    };
    const CostReport kyber = report_for("kyber1024-90s");
    o.require(std::abs(kyber.dynamic_mW.hash - 59.015) <= 0.01,
              "KYBER hash dynamic subtotal " + std::to_string(kyber.dynamic_mW.hash));
    const CostReport bears = report_for("papabearephem");
    o.require(bears.area_mm2.total() < 0.5, "ThreeBears area not below 0.5 mm2");
    o.require(kyber.area_mm2.total() > 0.5 && kyber.area_mm2.total() < 1.0,
              "KYBER area outside (0.5, 1.0)");
    const double saber = report_for("firesaber").area_mm2.total();
    o.require(saber > 0.5 && saber < 1.0, "Saber area outside (0.5, 1.0)");
    o.require(std::abs(bears.dynamic_mW.total() - 79.92) <= 0.05 * 79.92,
              "ThreeBears dynamic power " + std::to_string(bears.dynamic_mW.total()));

    const ReferenceTable refs = ReferenceTable::load(data_dir() / "tables");
    int excused = 0;
    for (const auto& d : reference_deltas(refs)) {
        if (!d.printed_pct) continue;
        if (d.computed_pct == *d.printed_pct) continue;
        if (d.erratum)
            ++excused;
        else
            o.fail("unrecorded delta mismatch: " + d.row_id + " " + d.metric);
    }
    const auto deltas = reference_deltas(refs);
    const auto kyber_delta = std::find_if(deltas.begin(), deltas.end(), [](const DeltaRow& d) {
        return d.row_id == "tw-kyber" && d.metric == "area";
    });
    o.require(kyber_delta != deltas.end() && kyber_delta->computed_pct == -82 &&
                  kyber_delta->printed_pct && *kyber_delta->printed_pct == -82,
              "KYBER -82% comparison cell not reproduced");
    o.note(std::to_string(excused) +
           " printed comparison percentages off by one rounding step, recorded in the "
           "bundled errata");
    return o;
}

Outcome criterion_7_trends() {
    Outcome o;
    const auto profiles = load_bundled_profiles(data_dir());
    const GateModelParams params = calibrate_gate_model(profiles);
    const std::vector<MultMethod> methods{MultMethod::SBM, MultMethod::KM2,
                                          MultMethod::TCM3, MultMethod::TCM4};
    const auto rows = sweep_multiplier_trends(methods, 1, 12, params);
    auto at = [&](MultMethod method, int e) -> const TrendRow& {
        for (const auto& r : rows)
            if (r.method == method && r.exponent == e) return r;
        throw std::runtime_error("missing trend row");
    };
    for (int e = 1; e <= 12; ++e) {
        const TrendRow& sbm = at(MultMethod::SBM, e);
        const TrendRow& km2 = at(MultMethod::KM2, e);
        const TrendRow& tcm3 = at(MultMethod::TCM3, e);
        const TrendRow& tcm4 = at(MultMethod::TCM4, e);
        if (!(sbm.cycles > km2.cycles && km2.cycles > tcm3.cycles &&
              tcm3.cycles > tcm4.cycles))
            o.fail("cycle ordering not strict at 2^" + std::to_string(e) +
                   " (the closed-form counts coincide at small widths)");
        o.require(sbm.est_area_mm2 < km2.est_area_mm2 &&
                      km2.est_area_mm2 < tcm3.est_area_mm2 &&
                      tcm3.est_area_mm2 < tcm4.est_area_mm2,
                  "area ordering violated at 2^" + std::to_string(e));
        o.require(sbm.est_power_uW < km2.est_power_uW &&
                      km2.est_power_uW < tcm3.est_power_uW &&
                      tcm3.est_power_uW < tcm4.est_power_uW,
                  "power ordering violated at 2^" + std::to_string(e));
    }
    for (MultMethod method : methods)
        for (int e = 2; e <= 12; ++e) {
            o.require(at(method, e).cycles >= at(method, e - 1).cycles,
                      "cycles not monotone");
            o.require(at(method, e).est_area_mm2 >= at(method, e - 1).est_area_mm2,
                      "area not monotone");
            o.require(at(method, e).est_power_uW >= at(method, e - 1).est_power_uW,
                      "power not monotone");
        }
    return o;
}

Outcome criterion_8_ranking() {
    Outcome o;
    const MacroTable macros = MacroTable::load(data_dir() / "tables");
    const auto profiles = load_bundled_profiles(data_dir());
    std::vector<CostReport> reports;
    for (const auto& p : profiles) reports.push_back(make_cost_report(p, macros));
    for (RankMetric metric : {RankMetric::AREA, RankMetric::POWER}) {
        const auto entries = rank(reports, metric);
        o.require(!entries.empty() && entries.front().algorithm == "ThreeBears",
                  "ThreeBears not first");
        const auto frodo =
            std::find_if(entries.begin(), entries.end(),
                         [](const RankEntry& e) { return e.algorithm == "FrodoKEM"; });
        o.require(frodo != entries.end() && frodo->flagged_estimated,
                  "FrodoKEM not flagged in ranking data");
        o.require(rank_to_svg(entries, metric).find("FrodoKEM") == std::string::npos,
                  "FrodoKEM not excluded from chart emission");
    }
    return o;
}

std::string run_command(const std::string& cmd) {
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) throw std::runtime_error("cannot spawn: " + cmd);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0)
        out.append(buf.data(), got);
    return out;
}

Outcome criterion_9_determinism(const std::string& pqcost_path) {
    Outcome o;
    if (pqcost_path.empty()) {
        o.fail("pqcost path not supplied");
        return o;
    }
    const std::string cmd = "\"" + pqcost_path + "\" report --format json";
    const std::string first = run_command(cmd);
    const std::string second = run_command(cmd);
    o.require(!first.empty(), "report emission produced no output");
    o.require(first == second, "two report runs differ");
    return o;
}

const char* kDescriptions[10] = {
    "",
    "hash conformance against the bundled NIST/FIPS vectors",
    "multiplier oracle equivalence (5 engines x 2 modes x 400 seeded pairs)",
    "closed-form cycle formulas",
    "NTT pointwise path vs negacyclic convolution oracle",
    "memory table reproduction with errata reporting",
    "aggregation headline numbers and reference comparison deltas",
    "multiplier trend orderings across 2^1..2^12",
    "area/power rankings with FrodoKEM flagging",
    "byte-identical repeated report emission",
};

}  // namespace

int main(int argc, char** argv) {
    const std::string which = argc > 1 ? argv[1] : "all";
    const std::string pqcost_path = argc > 2 ? argv[2] : "";
    std::vector<int> selected;
    if (which == "all")
        for (int i = 1; i <= 9; ++i) selected.push_back(i);
    else
        selected.push_back(std::stoi(which));

    bool all_pass = true;
    for (int c : selected) {
        Outcome o;
        try {
            switch (c) {
                case 1: o = criterion_1_hash_conformance(); break;
                case 2: o = criterion_2_oracle_equivalence(); break;
                case 3: o = criterion_3_cycle_formulas(); break;
                case 4: o = criterion_4_ntt(); break;
                case 5: o = criterion_5_table_reproduction(); break;
                case 6: o = criterion_6_aggregation(); break;
                case 7: o = criterion_7_trends(); break;
                case 8: o = criterion_8_ranking(); break;
                case 9: o = criterion_9_determinism(pqcost_path); break;
                default:
                    std::cerr << "criterion must be 1..9\n";
                    return 2;
            }
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << c << ": "
                  << kDescriptions[c] << "\n";
        for (const auto& d : o.details) std::cout << "       - " << d << "\n";
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 1;
}
