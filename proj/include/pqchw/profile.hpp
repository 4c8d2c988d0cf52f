// Bundled and user-supplied per-algorithm profiles.
//
// A profile records one scheme's memory instances (with the printed sizes
// from the bundled estimation tables), its multiplier jobs and hash cores,
// and the synthesized component costs used by the aggregation engine.

#ifndef PQCHW_PROFILE_HPP
#define PQCHW_PROFILE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pqchw/hash.hpp"
#include "pqchw/memmodel.hpp"
#include "pqchw/mult.hpp"

namespace pqchw {

struct ProfileMemRow {
    MemoryInstanceSpec spec;
    double r_kbytes_printed = 0;
    double s_kbytes_printed = 0;
};

struct MultJob {
    std::string function_name;
    MultMethod method = MultMethod::SBM;
    std::size_t op1_bits = 0;
    std::size_t op2_bits = 0;
    std::optional<std::size_t> op3_bits;
    std::size_t out_bits = 0;
    std::optional<std::size_t> ntt_points;
};

// Addition/subtraction/inversion entries kept visible but carrying no
// modeled cost.
struct UnmodeledOp {
    std::string function_name;
    std::string operation;
    std::size_t op1_bits = 0;
    std::optional<std::size_t> op2_bits;
    std::size_t out_bits = 0;
    std::string note;
};

struct HashCoreEntry {
    HashFunction function = HashFunction::SHA3_256;
    std::size_t instance_output_bits = 0;
    // Total XOF output the scheme actually draws per invocation, when it
    // differs from the instance width (drives the squeeze count).
    std::optional<std::uint64_t> modeled_output_bits;
};

struct MultCost {
    std::size_t op1_bits = 0;
    std::size_t op2_bits = 0;
    std::optional<std::uint64_t> comb_cells;
    std::uint64_t seq_cells = 0;
    double area_mm2 = 0;
    double dynamic_uW = 0;
    double leakage_uW = 0;
    bool estimated = false;  // analytic estimate, not a synthesis result
};

struct HashCost {
    HashFunction function = HashFunction::SHA3_256;
    double area_mm2 = 0;
    double dynamic_uW = 0;
    double leakage_uW = 0;
};

struct AlgorithmProfile {
    std::string algorithm;
    std::string reference_model;
    int security_level = 0;
    std::string provenance;
    std::vector<ProfileMemRow> rom_instances;
    std::optional<double> rom_total_kbytes_printed;
    std::vector<ProfileMemRow> ram_instances;
    std::optional<double> ram_total_kbytes_printed;
    std::vector<MultJob> mult_jobs;
    std::vector<UnmodeledOp> unmodeled_ops;
    std::vector<HashCoreEntry> hash_cores;
    std::vector<MultCost> mult_costs;
    std::vector<HashCost> hash_costs;
};

struct Finding {
    enum class Severity { ERROR, WARNING, ERRATUM };
    Severity severity = Severity::ERROR;
    std::string path;     // field path within the profile document
    std::string message;
};

AlgorithmProfile load_profile(const std::filesystem::path& file);
AlgorithmProfile parse_profile(const std::string& json_text);
std::string serialize_profile(const AlgorithmProfile& profile);

// Empty iff every invariant holds; printed-vs-recomputed size mismatches
// are reported as errata, unresolvable datasheet lookups as warnings.
std::vector<Finding> validate_profile(const AlgorithmProfile& profile,
                                      const MacroTable* macros = nullptr);

// All bundled profiles under <data_dir>/profiles, sorted by reference model.
std::vector<AlgorithmProfile> load_bundled_profiles(const std::filesystem::path& data_dir);

const char* mult_method_name(MultMethod method);
MultMethod mult_method_from_name(const std::string& name);
const char* severity_name(Finding::Severity severity);

}  // namespace pqchw

#endif  // PQCHW_PROFILE_HPP
