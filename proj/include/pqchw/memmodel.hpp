// Logical memory-instance arithmetic and compiled-macro datasheet lookup.
//
// Sizing convention: a (p x q)-bit instance is r = p*q/8000 Kbytes with
// K = 1000 bytes -- forced by the bundled tables (e.g. 10752x16 bits is
// printed as 21.504 Kbytes). All macros are single-port, column-mux 8.

#ifndef PQCHW_MEMMODEL_HPP
#define PQCHW_MEMMODEL_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace pqchw {

enum class MemKind { ROM, RAM };
enum class StorageClass { ROM, RAM, FLIPFLOPS };

struct MemoryInstanceSpec {
    MemKind kind = MemKind::RAM;
    std::size_t n = 1;  // instance count
    std::size_t p = 1;  // addresses per instance
    std::size_t q = 1;  // bits per address
};

struct CompiledMacro {
    std::string algorithm;  // datasheet row owner (one compiled set per scheme)
    MemKind kind = MemKind::RAM;
    std::size_t n = 1;      // instance count the datasheet row was printed for
    std::size_t p = 1;
    std::size_t q = 1;
    double width_um = 0;
    double height_um = 0;
    double static_power_uW = 0;    // leakage per instance
    double dynamic_power_uWxF = 0; // per instance, frequency-scaled unit as printed
    double area_mm2_printed = 0;   // "Total area" column (all n instances)
    int column_mux = 8;
};

// r = p*q/8000 Kbytes.
double instance_size_kbytes(std::size_t p, std::size_t q);

// Sum of n*r over the instances.
double total_size_kbytes(const std::vector<MemoryInstanceSpec>& instances);

// W*H*n / 1e6 mm^2.
double macro_area_mm2(const CompiledMacro& macro, std::size_t n);

struct VariableDescriptor {
    std::size_t element_count = 1;
    std::size_t element_bits = 1;
    bool read_only = false;
    enum class Role { ARRAY, SCALAR, FLAG } role = Role::ARRAY;
};

StorageClass classify_variable(const VariableDescriptor& descriptor);

// One known discrepancy between a printed datasheet value and its
// recomputation from the same row's fields.
struct MemErratum {
    std::string algorithm;
    MemKind kind = MemKind::RAM;
    std::size_t row_index = 0;
    std::size_t p = 0, q = 0;
    std::string field;  // r_kbytes | s_kbytes | total_kbytes | area_mm2
    double printed = 0;
    double recomputed = 0;
};

class MacroTable {
public:
    // Loads rom_macros.csv, ram_macros.csv, memory_errata.csv and
    // macro_area_errata.csv from `tables_dir`.
    static MacroTable load(const std::filesystem::path& tables_dir);

    const std::vector<CompiledMacro>& rows() const { return rows_; }
    const std::vector<MemErratum>& size_errata() const { return size_errata_; }
    const std::vector<MemErratum>& area_errata() const { return area_errata_; }

    // Generic datasheet lookup: rounds p and q up to the nearest row present
    // for `kind`. Throws with the nearest available rows if none covers the
    // request.
    const CompiledMacro& lookup(MemKind kind, std::size_t p, std::size_t q) const;

    // Scheme-specific row (exact p, q match within one algorithm's compiled
    // set); empty if the datasheet has no such row.
    const CompiledMacro* find(const std::string& algorithm, MemKind kind,
                              std::size_t p, std::size_t q) const;

    bool area_erratum_for(const std::string& algorithm, MemKind kind,
                          std::size_t p, std::size_t q) const;

private:
    std::vector<CompiledMacro> rows_;
    std::vector<MemErratum> size_errata_;
    std::vector<MemErratum> area_errata_;
};

const char* mem_kind_name(MemKind kind);
MemKind mem_kind_from_name(const std::string& name);

}  // namespace pqchw

#endif  // PQCHW_MEMMODEL_HPP
