#include "pqchw/vectors.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pqchw {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Message field honoring the Len field (a "00" placeholder stands for the
// empty message).
bytes msg_bytes(const VectorCase& c) {
    const std::uint64_t len_bits = std::stoull(c.at("Len"));
    bytes m = hex_to_bytes(c.at("Msg"));
    m.resize(len_bits / 8);
    return m;
}

bytes str_field(const VectorCase& c, const std::string& key) {
    const std::string& v = c.at(key);
    if (v == "-") return bytes{};
    return hex_to_bytes(v);
}

}  // namespace

bytes hex_to_bytes(const std::string& hex) {
    if (hex.size() % 2 != 0)
        throw std::invalid_argument("odd-length hex string");
    bytes out(hex.size() / 2);
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument(std::string("bad hex character: ") + c);
    };
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
    return out;
}

std::string bytes_to_hex(const bytes& data) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * data.size());
    for (std::uint8_t b : data) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

std::vector<VectorCase> load_vector_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("missing vector file: " + path.string());
    std::vector<VectorCase> cases;
    VectorCase current;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            if (!current.empty()) {
                cases.push_back(current);
                current.clear();
            }
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("malformed line in " + path.string() + ": " + line);
        current[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    if (!current.empty()) cases.push_back(current);
    if (cases.empty())
        throw std::runtime_error("no cases in vector file: " + path.string());
    return cases;
}

std::vector<std::string> run_hash_vector_suite(const std::filesystem::path& data_dir) {
    const auto vectors = data_dir / "vectors";
    std::vector<std::string> failures;
    auto check = [&](const std::filesystem::path& file, const std::string& label,
                     const VectorCase& c, const bytes& got, const std::string& expect_key) {
        if (bytes_to_hex(got) != c.at(expect_key))
            failures.push_back(file.filename().string() + ": " + label + " mismatch");
    };

    for (const auto& [file, variant] :
         std::vector<std::pair<const char*, int>>{{"sha2_256.rsp", 256},
                                                  {"sha2_512.rsp", 512}})
        for (const auto& c : load_vector_file(vectors / file))
            check(vectors / file, "Len=" + c.at("Len"), c, sha2(msg_bytes(c), variant), "MD");

    for (const auto& [file, variant] :
         std::vector<std::pair<const char*, int>>{{"sha3_256.rsp", 256},
                                                  {"sha3_512.rsp", 512}})
        for (const auto& c : load_vector_file(vectors / file))
            check(vectors / file, "Len=" + c.at("Len"), c, sha3(msg_bytes(c), variant), "MD");

    for (const auto& [file, variant] :
         std::vector<std::pair<const char*, int>>{{"shake128.rsp", 128},
                                                  {"shake256.rsp", 256}})
        for (const auto& c : load_vector_file(vectors / file))
            check(vectors / file, "Len=" + c.at("Len"), c,
                  shake(msg_bytes(c), variant, std::stoull(c.at("Outputlen"))), "Output");

    for (const auto& [file, variant] :
         std::vector<std::pair<const char*, int>>{{"cshake128.rsp", 128},
                                                  {"cshake256.rsp", 256}})
        for (const auto& c : load_vector_file(vectors / file))
            check(vectors / file, "Len=" + c.at("Len"), c,
                  cshake(msg_bytes(c), variant, std::stoull(c.at("Outputlen")),
                         str_field(c, "N"), str_field(c, "S")),
                  "Output");

    for (const char* file : {"aes128_ecb.rsp", "aes256_ecb.rsp"})
        for (const auto& c : load_vector_file(vectors / file))
            check(vectors / file, "Key=" + c.at("Key"), c,
                  aes_encrypt_block(hex_to_bytes(c.at("Key")),
                                    hex_to_bytes(c.at("Plaintext"))),
                  "Ciphertext");

    for (const auto& c : load_vector_file(vectors / "threebears_cshake.rsp"))
        check(vectors / "threebears_cshake.rsp", "Purpose=" + c.at("Purpose"), c,
              threebears_cshake(static_cast<std::uint8_t>(std::stoul(c.at("Purpose"))),
                                msg_bytes(c), std::stoull(c.at("Outputlen"))),
              "Output");

    return failures;
}

}  // namespace pqchw
