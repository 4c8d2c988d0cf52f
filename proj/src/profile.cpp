#include "pqchw/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pqchw {

namespace {

using json = nlohmann::ordered_json;

std::vector<ProfileMemRow> mem_rows_from_json(const json& arr, MemKind kind,
                                              const std::string& path) {
    std::vector<ProfileMemRow> rows;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& j = arr[i];
        ProfileMemRow row;
        row.spec.kind = kind;
        row.spec.n = j.at("n").get<std::size_t>();
        row.spec.p = j.at("p").get<std::size_t>();
        row.spec.q = j.at("q").get<std::size_t>();
        row.r_kbytes_printed = j.at("r_kbytes_printed").get<double>();
        row.s_kbytes_printed = j.at("s_kbytes_printed").get<double>();
        if (row.spec.n == 0 || row.spec.p == 0 || row.spec.q == 0)
            throw std::runtime_error(path + "[" + std::to_string(i) +
                                     "]: n, p, q must be >= 1");
        rows.push_back(row);
    }
    return rows;
}

json mem_rows_to_json(const std::vector<ProfileMemRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        json j;
        j["n"] = row.spec.n;
        j["p"] = row.spec.p;
        j["q"] = row.spec.q;
        j["r_kbytes_printed"] = row.r_kbytes_printed;
        j["s_kbytes_printed"] = row.s_kbytes_printed;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace

const char* mult_method_name(MultMethod method) {
    switch (method) {
        case MultMethod::SBM: return "SBM";
        case MultMethod::KM2: return "KM2";
        case MultMethod::TCM3: return "TCM3";
        case MultMethod::TCM4: return "TCM4";
        case MultMethod::NTT: return "NTT";
        case MultMethod::MONTGOMERY: return "MONTGOMERY";
        case MultMethod::SEGMENTED: return "SEGMENTED";
    }
    throw std::logic_error("unknown method");
}

MultMethod mult_method_from_name(const std::string& name) {
    static const std::pair<const char*, MultMethod> table[] = {
        {"SBM", MultMethod::SBM},   {"KM2", MultMethod::KM2},
        {"TCM3", MultMethod::TCM3}, {"TCM4", MultMethod::TCM4},
        {"NTT", MultMethod::NTT},   {"MONTGOMERY", MultMethod::MONTGOMERY},
        {"SEGMENTED", MultMethod::SEGMENTED},
    };
    for (const auto& [n, m] : table)
        if (name == n) return m;
    throw std::invalid_argument("unknown multiplication method: " + name);
}

const char* severity_name(Finding::Severity severity) {
    switch (severity) {
        case Finding::Severity::ERROR: return "error";
        case Finding::Severity::WARNING: return "warning";
        case Finding::Severity::ERRATUM: return "erratum";
    }
    throw std::logic_error("unknown severity");
}

AlgorithmProfile parse_profile(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("profile is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.empty())
        throw std::runtime_error("profile document is empty");
    if (doc.value("schema", "") != "pqchw-profile-v1")
        throw std::runtime_error("schema: expected pqchw-profile-v1");

    AlgorithmProfile p;
    try {
        p.algorithm = doc.at("algorithm").get<std::string>();
        p.reference_model = doc.at("reference_model").get<std::string>();
        p.security_level = doc.at("security_level").get<int>();
        p.provenance = doc.value("provenance", "");
        p.rom_instances = mem_rows_from_json(doc.at("rom_instances"), MemKind::ROM,
                                             "rom_instances");
        if (doc.contains("rom_total_kbytes_printed"))
            p.rom_total_kbytes_printed = doc["rom_total_kbytes_printed"].get<double>();
        p.ram_instances = mem_rows_from_json(doc.at("ram_instances"), MemKind::RAM,
                                             "ram_instances");
        if (doc.contains("ram_total_kbytes_printed"))
            p.ram_total_kbytes_printed = doc["ram_total_kbytes_printed"].get<double>();
        for (const json& j : doc.at("mult_jobs")) {
            MultJob job;
            job.function_name = j.at("function_name").get<std::string>();
            job.method = mult_method_from_name(j.at("method").get<std::string>());
            job.op1_bits = j.at("op1_bits").get<std::size_t>();
            job.op2_bits = j.at("op2_bits").get<std::size_t>();
            if (j.contains("op3_bits")) job.op3_bits = j["op3_bits"].get<std::size_t>();
            job.out_bits = j.at("out_bits").get<std::size_t>();
            if (j.contains("ntt_points")) job.ntt_points = j["ntt_points"].get<std::size_t>();
            p.mult_jobs.push_back(std::move(job));
        }
        for (const json& j : doc.at("unmodeled_ops")) {
            UnmodeledOp op;
            op.function_name = j.at("function_name").get<std::string>();
            op.operation = j.at("operation").get<std::string>();
            op.op1_bits = j.at("op1_bits").get<std::size_t>();
            if (j.contains("op2_bits") && !j["op2_bits"].is_null())
                op.op2_bits = j["op2_bits"].get<std::size_t>();
            op.out_bits = j.at("out_bits").get<std::size_t>();
            op.note = j.value("note", "");
            p.unmodeled_ops.push_back(std::move(op));
        }
        for (const json& j : doc.at("hash_cores")) {
            HashCoreEntry h;
            h.function = hash_function_from_name(j.at("function").get<std::string>());
            h.instance_output_bits = j.at("instance_output_bits").get<std::size_t>();
            if (j.contains("modeled_output_bits"))
                h.modeled_output_bits = j["modeled_output_bits"].get<std::uint64_t>();
            p.hash_cores.push_back(h);
        }
        for (const json& j : doc.at("mult_costs")) {
            MultCost c;
            c.op1_bits = j.at("op1_bits").get<std::size_t>();
            c.op2_bits = j.at("op2_bits").get<std::size_t>();
            if (j.contains("comb_cells") && !j["comb_cells"].is_null())
                c.comb_cells = j["comb_cells"].get<std::uint64_t>();
            c.seq_cells = j.at("seq_cells").get<std::uint64_t>();
            c.area_mm2 = j.at("area_mm2").get<double>();
            c.dynamic_uW = j.at("dynamic_uW").get<double>();
            c.leakage_uW = j.at("leakage_uW").get<double>();
            c.estimated = j.value("estimated", false);
            p.mult_costs.push_back(c);
        }
        for (const json& j : doc.at("hash_costs")) {
            HashCost c;
            c.function = hash_function_from_name(j.at("function").get<std::string>());
            c.area_mm2 = j.at("area_mm2").get<double>();
            c.dynamic_uW = j.at("dynamic_uW").get<double>();
            c.leakage_uW = j.at("leakage_uW").get<double>();
            p.hash_costs.push_back(c);
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("profile schema violation: ") + e.what());
    }
    return p;
}

AlgorithmProfile load_profile(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw std::runtime_error("cannot open profile: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_profile(buf.str());
}

std::string serialize_profile(const AlgorithmProfile& p) {
    json doc;
    doc["schema"] = "pqchw-profile-v1";
    doc["algorithm"] = p.algorithm;
    doc["reference_model"] = p.reference_model;
    doc["security_level"] = p.security_level;
    doc["provenance"] = p.provenance;
    doc["rom_instances"] = mem_rows_to_json(p.rom_instances);
    if (p.rom_total_kbytes_printed)
        doc["rom_total_kbytes_printed"] = *p.rom_total_kbytes_printed;
    doc["ram_instances"] = mem_rows_to_json(p.ram_instances);
    if (p.ram_total_kbytes_printed)
        doc["ram_total_kbytes_printed"] = *p.ram_total_kbytes_printed;
    doc["mult_jobs"] = json::array();
    for (const auto& job : p.mult_jobs) {
        json j;
        j["function_name"] = job.function_name;
        j["method"] = mult_method_name(job.method);
        j["op1_bits"] = job.op1_bits;
        j["op2_bits"] = job.op2_bits;
        if (job.op3_bits) j["op3_bits"] = *job.op3_bits;
        j["out_bits"] = job.out_bits;
        if (job.ntt_points) j["ntt_points"] = *job.ntt_points;
        doc["mult_jobs"].push_back(std::move(j));
    }
    doc["unmodeled_ops"] = json::array();
    for (const auto& op : p.unmodeled_ops) {
        json j;
        j["function_name"] = op.function_name;
        j["operation"] = op.operation;
        j["op1_bits"] = op.op1_bits;
        j["op2_bits"] = op.op2_bits ? json(*op.op2_bits) : json(nullptr);
        j["out_bits"] = op.out_bits;
        if (!op.note.empty()) j["note"] = op.note;
        doc["unmodeled_ops"].push_back(std::move(j));
    }
    doc["hash_cores"] = json::array();
    for (const auto& h : p.hash_cores) {
        json j;
        j["function"] = hash_function_name(h.function);
        j["instance_output_bits"] = h.instance_output_bits;
        if (h.modeled_output_bits) j["modeled_output_bits"] = *h.modeled_output_bits;
        doc["hash_cores"].push_back(std::move(j));
    }
    doc["mult_costs"] = json::array();
    for (const auto& c : p.mult_costs) {
        json j;
        j["op1_bits"] = c.op1_bits;
        j["op2_bits"] = c.op2_bits;
        j["comb_cells"] = c.comb_cells ? json(*c.comb_cells) : json(nullptr);
        j["seq_cells"] = c.seq_cells;
        j["area_mm2"] = c.area_mm2;
        j["dynamic_uW"] = c.dynamic_uW;
        j["leakage_uW"] = c.leakage_uW;
        j["estimated"] = c.estimated;
        doc["mult_costs"].push_back(std::move(j));
    }
    doc["hash_costs"] = json::array();
    for (const auto& c : p.hash_costs) {
        json j;
        j["function"] = hash_function_name(c.function);
        j["area_mm2"] = c.area_mm2;
        j["dynamic_uW"] = c.dynamic_uW;
        j["leakage_uW"] = c.leakage_uW;
        doc["hash_costs"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

std::vector<Finding> validate_profile(const AlgorithmProfile& p, const MacroTable* macros) {
    std::vector<Finding> findings;
    auto add = [&](Finding::Severity sev, std::string path, std::string msg) {
        findings.push_back(Finding{sev, std::move(path), std::move(msg)});
    };
    if (p.algorithm.empty())
        add(Finding::Severity::ERROR, "algorithm", "must be non-empty");
    if (p.security_level < 0 || p.security_level > 5)
        add(Finding::Severity::ERROR, "security_level", "must be in [0, 5]");

    auto check_mem = [&](const std::vector<ProfileMemRow>& rows,
                         const std::optional<double>& total_printed,
                         const std::string& base) {
        double total = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& row = rows[i];
            const std::string path = base + "[" + std::to_string(i) + "]";
            if (row.spec.p == 0 || row.spec.q == 0 || row.spec.n == 0) {
                add(Finding::Severity::ERROR, path, "n, p, q must be >= 1");
                continue;
            }
            const double r = instance_size_kbytes(row.spec.p, row.spec.q);
            const double s = r * static_cast<double>(row.spec.n);
            total += s;
            if (std::abs(r - row.r_kbytes_printed) > 5e-4)
                add(Finding::Severity::ERRATUM, path + ".r_kbytes_printed",
                    "printed " + std::to_string(row.r_kbytes_printed) +
                        " but p*q/8000 = " + std::to_string(r));
            if (std::abs(s - row.s_kbytes_printed) > 5e-4)
                add(Finding::Severity::ERRATUM, path + ".s_kbytes_printed",
                    "printed " + std::to_string(row.s_kbytes_printed) +
                        " but n*r = " + std::to_string(s));
            if (macros && !macros->find(p.algorithm, row.spec.kind, row.spec.p, row.spec.q)) {
                try {
                    macros->lookup(row.spec.kind, row.spec.p, row.spec.q);
                } catch (const std::exception&) {
                    add(Finding::Severity::WARNING, path,
                        "no datasheet macro covers this instance");
                }
            }
        }
        if (total_printed && std::abs(total - *total_printed) > 5e-4)
            add(Finding::Severity::ERRATUM, base + "_total",
                "printed total " + std::to_string(*total_printed) +
                    " but recomputed " + std::to_string(total));
    };
    check_mem(p.rom_instances, p.rom_total_kbytes_printed, "rom_instances");
    check_mem(p.ram_instances, p.ram_total_kbytes_printed, "ram_instances");

    for (std::size_t i = 0; i < p.mult_jobs.size(); ++i) {
        const auto& job = p.mult_jobs[i];
        const std::string path = "mult_jobs[" + std::to_string(i) + "]";
        if (job.op1_bits == 0 || job.op2_bits == 0 || job.out_bits == 0)
            add(Finding::Severity::ERROR, path, "operand widths must be >= 1");
        if (job.method == MultMethod::NTT && !job.ntt_points)
            add(Finding::Severity::ERROR, path, "NTT job must declare its point count");
    }
    for (std::size_t i = 0; i < p.hash_cores.size(); ++i)
        if (p.hash_cores[i].instance_output_bits == 0)
            add(Finding::Severity::ERROR, "hash_cores[" + std::to_string(i) + "]",
                "instance output width must be >= 1");
    for (std::size_t i = 0; i < p.hash_cores.size(); ++i) {
        const auto f = p.hash_cores[i].function;
        const bool costed = std::any_of(p.hash_costs.begin(), p.hash_costs.end(),
                                        [&](const HashCost& c) { return c.function == f; });
        if (!costed)
            add(Finding::Severity::WARNING, "hash_cores[" + std::to_string(i) + "]",
                std::string("no synthesized cost row for ") + hash_function_name(f));
    }
    return findings;
}

std::vector<AlgorithmProfile> load_bundled_profiles(const std::filesystem::path& data_dir) {
    const auto dir = data_dir / "profiles";
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<AlgorithmProfile> profiles;
    for (const auto& f : files)
        profiles.push_back(load_profile(f));
    return profiles;
}

}  // namespace pqchw
