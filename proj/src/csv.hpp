// Minimal CSV reader for the bundled tables (no quoting, no embedded commas).

#ifndef PQCHW_SRC_CSV_HPP
#define PQCHW_SRC_CSV_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pqchw::csv {

inline std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

// Returns the data rows; `header` receives the first line's column names.
inline std::vector<std::vector<std::string>> read_file(
    const std::filesystem::path& path, std::vector<std::string>& header) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open table file: " + path.string());
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty table file: " + path.string());
    header = split_line(line);
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        rows.push_back(split_line(line));
        if (rows.back().size() != header.size())
            throw std::runtime_error("ragged row in " + path.string());
    }
    return rows;
}

}  // namespace pqchw::csv

#endif  // PQCHW_SRC_CSV_HPP
