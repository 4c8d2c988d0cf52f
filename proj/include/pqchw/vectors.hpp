// Parser for the bundled response-file style known-answer vectors
// (blocks of `Key = value` lines separated by blank lines; '#' comments).

#ifndef PQCHW_VECTORS_HPP
#define PQCHW_VECTORS_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "pqchw/hash.hpp"

namespace pqchw {

using VectorCase = std::map<std::string, std::string>;

std::vector<VectorCase> load_vector_file(const std::filesystem::path& path);

bytes hex_to_bytes(const std::string& hex);
std::string bytes_to_hex(const bytes& data);

// Runs the whole known-answer suite under <data_dir>/vectors; returns
// human-readable failure descriptions (empty means fully conformant).
// Throws on missing files, naming the path.
std::vector<std::string> run_hash_vector_suite(const std::filesystem::path& data_dir);

}  // namespace pqchw

#endif  // PQCHW_VECTORS_HPP
