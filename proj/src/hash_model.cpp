#include "pqchw/hash.hpp"

#include <stdexcept>

namespace pqchw {

namespace {

std::uint64_t ceil_div_u64(std::uint64_t a, std::uint64_t b) {
    return (a + b - 1) / b;
}

bool is_keccak_family(HashFunction f) {
    switch (f) {
        case HashFunction::SHA3_256:
        case HashFunction::SHA3_512:
        case HashFunction::SHAKE_128:
        case HashFunction::SHAKE_256:
        case HashFunction::CSHAKE_128:
        case HashFunction::CSHAKE_256:
            return true;
        default:
            return false;
    }
}

}  // namespace

const char* hash_function_name(HashFunction f) {
    switch (f) {
        case HashFunction::SHA2_256: return "SHA2_256";
        case HashFunction::SHA2_512: return "SHA2_512";
        case HashFunction::SHA3_256: return "SHA3_256";
        case HashFunction::SHA3_512: return "SHA3_512";
        case HashFunction::SHAKE_128: return "SHAKE_128";
        case HashFunction::SHAKE_256: return "SHAKE_256";
        case HashFunction::CSHAKE_128: return "CSHAKE_128";
        case HashFunction::CSHAKE_256: return "CSHAKE_256";
        case HashFunction::AES_128: return "AES_128";
        case HashFunction::AES_256: return "AES_256";
    }
    throw std::logic_error("unknown hash function");
}

HashFunction hash_function_from_name(const std::string& name) {
    static const std::pair<const char*, HashFunction> table[] = {
        {"SHA2_256", HashFunction::SHA2_256},   {"SHA2_512", HashFunction::SHA2_512},
        {"SHA3_256", HashFunction::SHA3_256},   {"SHA3_512", HashFunction::SHA3_512},
        {"SHAKE_128", HashFunction::SHAKE_128}, {"SHAKE_256", HashFunction::SHAKE_256},
        {"CSHAKE_128", HashFunction::CSHAKE_128}, {"CSHAKE_256", HashFunction::CSHAKE_256},
        {"AES_128", HashFunction::AES_128},     {"AES_256", HashFunction::AES_256},
    };
    for (const auto& [n, f] : table)
        if (name == n) return f;
    throw std::invalid_argument("unknown hash function name: " + name);
}

HashCoreSpec make_hash_core(HashFunction function, std::size_t instance_output_bits) {
    if (instance_output_bits == 0)
        throw std::invalid_argument("instance output width must be >= 1");
    std::size_t rate = 0, rounds = 0;
    switch (function) {
        case HashFunction::SHA2_256:  rate = 512;  rounds = 64; break;
        case HashFunction::SHA2_512:  rate = 1024; rounds = 80; break;
        case HashFunction::SHA3_256:  rate = 1088; rounds = 24; break;
        case HashFunction::SHA3_512:  rate = 576;  rounds = 24; break;
        case HashFunction::SHAKE_128:
        case HashFunction::CSHAKE_128: rate = 1344; rounds = 24; break;
        case HashFunction::SHAKE_256:
        case HashFunction::CSHAKE_256: rate = 1088; rounds = 24; break;
        case HashFunction::AES_128:   rate = 128;  rounds = 12; break;
        case HashFunction::AES_256:   rate = 128;  rounds = 46; break;
    }
    return HashCoreSpec{function, rate, rounds, instance_output_bits};
}

HashCycleBreakdown hash_cycles(const HashCoreSpec& spec,
                               std::uint64_t message_bits,
                               std::uint64_t required_output_bits) {
    if (required_output_bits == 0)
        throw std::invalid_argument("required output must be >= 1 bit");
    HashCycleBreakdown out;
    if (spec.function == HashFunction::AES_128 || spec.function == HashFunction::AES_256) {
        // Keystream-style usage: a fixed per-block latency per 128-bit block.
        out.squeeze_invocations = ceil_div_u64(required_output_bits, 128);
        out.total_cycles = spec.rounds_per_block * out.squeeze_invocations;
        return out;
    }
    out.read_cycles = ceil_div_u64(message_bits, 64);
    if (is_keccak_family(spec.function)) {
        // pad10*1 always adds at least two bits, so a message filling the
        // rate exactly still starts a new block.
        out.absorb_blocks = message_bits / spec.rate_bits + 1;
    } else if (spec.function == HashFunction::SHA2_256) {
        out.absorb_blocks = ceil_div_u64(message_bits + 65, 512);
    } else {
        out.absorb_blocks = ceil_div_u64(message_bits + 129, 1024);
    }
    out.squeeze_invocations = ceil_div_u64(required_output_bits, spec.instance_output_bits);
    out.total_cycles = out.read_cycles +
                       spec.rounds_per_block * out.absorb_blocks +
                       spec.rounds_per_block * (out.squeeze_invocations - 1);
    return out;
}

}  // namespace pqchw
