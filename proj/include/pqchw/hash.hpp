// Functional hash / XOF / block-cipher cores plus their cycle-count model.
//
// All Keccak-family functions (SHA3, SHAKE, cSHAKE) share one f[1600]
// permutation; a call counter is exposed so tests can verify the sharing
// structurally. Digests are bit-exact against the bundled NIST/FIPS vector
// files under data/vectors/.
//
// Cycle model per core instance:
//   read:    ceil(message_bits / 64) cycles on the 64-bit input bus
//   absorb:  rounds_per_block cycles per padded message block
//   squeeze: ceil(required_output_bits / instance_output_bits) invocations;
//            each invocation past the first costs rounds_per_block cycles
//   AES:     12 (AES-128) or 46 (AES-256) cycles per 128-bit output block
// Absorption and squeezing are counted additively (no overlap).

#ifndef PQCHW_HASH_HPP
#define PQCHW_HASH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pqchw {

using bytes = std::vector<std::uint8_t>;
using SpongeState = std::array<std::uint64_t, 25>;  // 5x5 lanes of 64 bits

void keccak_f1600(SpongeState& state);
std::uint64_t keccak_permutation_calls();
void reset_keccak_permutation_calls();

bytes sha3(const bytes& msg, int variant /* 256 | 512 */);
bytes shake(const bytes& msg, int variant /* 128 | 256 */, std::size_t d_bits);
bytes cshake(const bytes& msg, int variant /* 128 | 256 */, std::size_t d_bits,
             const bytes& function_name, const bytes& customization);

// Domain-separated cSHAKE-256 wrapper: absorbs [0x00, purpose] || msg with
// customization string "ThreeBears"; pinned by repo-local golden vectors.
bytes threebears_cshake(std::uint8_t purpose, const bytes& msg, std::size_t d_bits);

bytes sha2(const bytes& msg, int variant /* 256 | 512 */);

// FIPS-197 encryption of one 16-byte block; key is 16 or 32 bytes.
bytes aes_encrypt_block(const bytes& key, const bytes& block);

enum class HashFunction {
    SHA2_256, SHA2_512, SHA3_256, SHA3_512,
    SHAKE_128, SHAKE_256, CSHAKE_128, CSHAKE_256,
    AES_128, AES_256,
};

const char* hash_function_name(HashFunction f);
HashFunction hash_function_from_name(const std::string& name);

struct HashCoreSpec {
    HashFunction function;
    std::size_t rate_bits;             // block size absorbed per permutation
    std::size_t rounds_per_block;      // cycles per absorbed/squeezed block
    std::size_t instance_output_bits;  // configured d of this core instance
};

HashCoreSpec make_hash_core(HashFunction function, std::size_t instance_output_bits);

struct HashCycleBreakdown {
    std::uint64_t read_cycles = 0;
    std::uint64_t absorb_blocks = 0;
    std::uint64_t squeeze_invocations = 0;
    std::uint64_t total_cycles = 0;
};

HashCycleBreakdown hash_cycles(const HashCoreSpec& spec,
                               std::uint64_t message_bits,
                               std::uint64_t required_output_bits);

}  // namespace pqchw

#endif  // PQCHW_HASH_HPP
