#include <doctest.h>

#include <random>

#include "pqchw/datadir.hpp"
#include "pqchw/hash.hpp"
#include "pqchw/vectors.hpp"

using namespace pqchw;

namespace {

bytes random_msg(std::size_t len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    bytes out(len);
    for (auto& b : out) b = static_cast<std::uint8_t>(rng());
    return out;
}

}  // namespace

TEST_CASE("permutation of the all-zero state matches the published output") {
    SpongeState st{};
    keccak_f1600(st);
    CHECK(st[0] == 0xF1258F7940E1DDE7ULL);
    CHECK(st[1] == 0x84D5CCF933C0478AULL);
    SpongeState st2 = st;
    keccak_f1600(st2);
    CHECK(st2 != st);  // applying twice is not the identity
    SpongeState st3{};
    keccak_f1600(st3);
    CHECK(st3 == st);  // deterministic
}

TEST_CASE("standard empty-message digests") {
    CHECK(bytes_to_hex(sha3(bytes{}, 256)) ==
          "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a");
    CHECK(bytes_to_hex(shake(bytes{}, 128, 256)).substr(0, 32) ==
          "7f9c2ba4e88f827d616045507605853e");
    CHECK(bytes_to_hex(sha2(bytes{}, 256)) ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(bytes_to_hex(sha2(bytes{}, 512)).substr(0, 16) == "cf83e1357eefb8bd");
    CHECK(sha2(bytes{0x01}, 256) != sha2(bytes{0x01, 0x02}, 256));
}

TEST_CASE("cshake with empty N and S equals shake") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const bytes msg = random_msg(seed % 200, seed);
        CHECK(cshake(msg, 128, 512, bytes{}, bytes{}) == shake(msg, 128, 512));
        CHECK(cshake(msg, 256, 256, bytes{}, bytes{}) == shake(msg, 256, 256));
    }
}

TEST_CASE("aes fips-197 block vectors") {
    const bytes key128 = hex_to_bytes("000102030405060708090a0b0c0d0e0f");
    const bytes key256 =
        hex_to_bytes("000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f");
    const bytes pt = hex_to_bytes("00112233445566778899aabbccddeeff");
    CHECK(bytes_to_hex(aes_encrypt_block(key128, pt)) == "69c4e0d86a7b0430d8cdb78070b4c55a");
    CHECK(bytes_to_hex(aes_encrypt_block(key256, pt)) == "8ea2b7ca516745bfeafc49904b496089");
    const bytes pt2 = hex_to_bytes("00112233445566778899aabbccddee00");
    CHECK(aes_encrypt_block(key128, pt) != aes_encrypt_block(key128, pt2));
}

TEST_CASE("bundled known-answer vector suite is fully conformant") {
    const auto failures = run_hash_vector_suite(data_dir());
    for (const auto& f : failures) MESSAGE(f);
    CHECK(failures.empty());
}

TEST_CASE("keccak-family functions share one permutation") {
    reset_keccak_permutation_calls();
    sha3(bytes{1, 2, 3}, 256);
    const auto after_sha3 = keccak_permutation_calls();
    CHECK(after_sha3 >= 1);
    shake(bytes{1, 2, 3}, 128, 256);
    CHECK(keccak_permutation_calls() > after_sha3);
    const auto before_cshake = keccak_permutation_calls();
    cshake(bytes{1, 2, 3}, 256, 256, bytes{'N'}, bytes{'S'});
    CHECK(keccak_permutation_calls() > before_cshake);
    const auto before_sha2 = keccak_permutation_calls();
    sha2(bytes{1, 2, 3}, 256);
    aes_encrypt_block(random_msg(16, 1), random_msg(16, 2));
    CHECK(keccak_permutation_calls() == before_sha2);  // non-sponge cores
}

TEST_CASE("cycle model") {
    // 344064 bits drawn from a 1024-bit XOF instance: 336 squeeze invocations.
    const HashCoreSpec frodo = make_hash_core(HashFunction::SHAKE_256, 1024);
    CHECK(hash_cycles(frodo, 0, 344064).squeeze_invocations == 336);

    // Empty message, SHA3-256: no read cycles, one padded block of 24 rounds.
    const HashCoreSpec sha3core = make_hash_core(HashFunction::SHA3_256, 256);
    const HashCycleBreakdown b = hash_cycles(sha3core, 0, 256);
    CHECK(b.read_cycles == 0);
    CHECK(b.absorb_blocks == 1);
    CHECK(b.total_cycles == 24);

    const HashCoreSpec aes128 = make_hash_core(HashFunction::AES_128, 128);
    CHECK(hash_cycles(aes128, 0, 128).total_cycles == 12);
    const HashCoreSpec aes256 = make_hash_core(HashFunction::AES_256, 256);
    CHECK(hash_cycles(aes256, 0, 128).total_cycles == 46);

    // Rate/round parameterization.
    CHECK(make_hash_core(HashFunction::SHAKE_128, 256).rate_bits == 1344);
    CHECK(make_hash_core(HashFunction::SHAKE_256, 256).rate_bits == 1088);
    CHECK(make_hash_core(HashFunction::SHA3_256, 256).rate_bits == 1088);
    CHECK(make_hash_core(HashFunction::SHA3_512, 512).rate_bits == 576);
    CHECK(make_hash_core(HashFunction::SHA2_256, 256).rounds_per_block == 64);
    CHECK(make_hash_core(HashFunction::SHA2_512, 512).rounds_per_block == 80);

    // Monotone nondecreasing in message and required output sizes.
    for (HashFunction f : {HashFunction::SHA2_256, HashFunction::SHAKE_256,
                           HashFunction::AES_256}) {
        const HashCoreSpec spec = make_hash_core(f, 256);
        std::uint64_t prev = 0;
        for (std::uint64_t msg = 0; msg < 4096; msg += 64) {
            const std::uint64_t c = hash_cycles(spec, msg, 256).total_cycles;
            CHECK(c >= prev);
            prev = c;
        }
        prev = 0;
        for (std::uint64_t out = 64; out <= 8192; out += 64) {
            const std::uint64_t c = hash_cycles(spec, 512, out).total_cycles;
            CHECK(c >= prev);
            prev = c;
        }
    }
}
