#include "pqchw/memmodel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "csv.hpp"

namespace pqchw {

namespace {

std::size_t to_size(const std::string& s) {
    return s.empty() ? 0 : static_cast<std::size_t>(std::stoull(s));
}

double to_double(const std::string& s) {
    return s.empty() ? 0.0 : std::stod(s);
}

std::vector<MemErratum> load_errata(const std::filesystem::path& path, bool area_file) {
    std::vector<std::string> header;
    std::vector<MemErratum> out;
    for (const auto& row : csv::read_file(path, header)) {
        MemErratum e;
        e.algorithm = row[0];
        e.kind = mem_kind_from_name(row[1]);
        e.row_index = row[2] == "-1" ? std::numeric_limits<std::size_t>::max() : to_size(row[2]);
        e.p = to_size(row[3]);
        e.q = to_size(row[4]);
        if (area_file) {
            e.field = "area_mm2";
            e.printed = to_double(row[5]);
            e.recomputed = to_double(row[6]);
        } else {
            e.field = row[5];
            e.printed = to_double(row[6]);
            e.recomputed = to_double(row[7]);
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

double instance_size_kbytes(std::size_t p, std::size_t q) {
    if (p == 0 || q == 0)
        throw std::invalid_argument("p and q must be >= 1");
    return static_cast<double>(p) * static_cast<double>(q) / 8000.0;
}

double total_size_kbytes(const std::vector<MemoryInstanceSpec>& instances) {
    double total = 0;
    for (const auto& inst : instances)
        total += static_cast<double>(inst.n) * instance_size_kbytes(inst.p, inst.q);
    return total;
}

double macro_area_mm2(const CompiledMacro& macro, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("instance count must be >= 1");
    return macro.width_um * macro.height_um * static_cast<double>(n) / 1e6;
}

StorageClass classify_variable(const VariableDescriptor& d) {
    if (d.element_count == 0 || d.element_bits == 0)
        throw std::invalid_argument("element count and width must be >= 1");
    if (d.role != VariableDescriptor::Role::ARRAY)
        return StorageClass::FLIPFLOPS;
    return d.read_only ? StorageClass::ROM : StorageClass::RAM;
}

const char* mem_kind_name(MemKind kind) {
    return kind == MemKind::ROM ? "ROM" : "RAM";
}

MemKind mem_kind_from_name(const std::string& name) {
    if (name == "ROM") return MemKind::ROM;
    if (name == "RAM") return MemKind::RAM;
    throw std::invalid_argument("unknown memory kind: " + name);
}

MacroTable MacroTable::load(const std::filesystem::path& tables_dir) {
    MacroTable table;
    for (const char* file : {"rom_macros.csv", "ram_macros.csv"}) {
        std::vector<std::string> header;
        for (const auto& row : csv::read_file(tables_dir / file, header)) {
            CompiledMacro m;
            m.algorithm = row[0];
            m.kind = mem_kind_from_name(row[1]);
            m.n = to_size(row[2]);
            m.p = to_size(row[3]);
            m.q = to_size(row[4]);
            m.width_um = to_double(row[5]);
            m.height_um = to_double(row[6]);
            m.static_power_uW = to_double(row[7]);
            m.dynamic_power_uWxF = to_double(row[8]);
            m.area_mm2_printed = to_double(row[9]);
            table.rows_.push_back(std::move(m));
        }
    }
    table.size_errata_ = load_errata(tables_dir / "memory_errata.csv", false);
    table.area_errata_ = load_errata(tables_dir / "macro_area_errata.csv", true);
    return table;
}

const CompiledMacro& MacroTable::lookup(MemKind kind, std::size_t p, std::size_t q) const {
    const CompiledMacro* best = nullptr;
    for (const auto& m : rows_) {
        if (m.kind != kind || m.p < p || m.q < q) continue;
        if (!best || m.p * m.q < best->p * best->q ||
            (m.p * m.q == best->p * best->q && m.p < best->p))
            best = &m;
    }
    if (best) return *best;
    std::ostringstream msg;
    msg << "no " << mem_kind_name(kind) << " datasheet row covers p=" << p
        << ", q=" << q << "; nearest available rows:";
    for (const auto& m : rows_)
        if (m.kind == kind)
            msg << " (" << m.p << "x" << m.q << ")";
    throw std::out_of_range(msg.str());
}

const CompiledMacro* MacroTable::find(const std::string& algorithm, MemKind kind,
                                      std::size_t p, std::size_t q) const {
    for (const auto& m : rows_)
        if (m.algorithm == algorithm && m.kind == kind && m.p == p && m.q == q)
            return &m;
    return nullptr;
}

bool MacroTable::area_erratum_for(const std::string& algorithm, MemKind kind,
                                  std::size_t p, std::size_t q) const {
    return std::any_of(area_errata_.begin(), area_errata_.end(), [&](const MemErratum& e) {
        return e.algorithm == algorithm && e.kind == kind && e.p == p && e.q == q;
    });
}

}  // namespace pqchw
