#include "pqchw/hash.hpp"

#include <atomic>
#include <stdexcept>

namespace pqchw {

namespace {

std::atomic<std::uint64_t> g_permutation_calls{0};

constexpr std::uint64_t RC[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// Rotation offsets, indexed [x][y] with lane (x, y) stored at state[x + 5y].
constexpr int ROT[5][5] = {
    {0, 36, 3, 41, 18},
    {1, 44, 10, 45, 2},
    {62, 6, 43, 15, 61},
    {28, 55, 25, 21, 56},
    {27, 20, 39, 8, 14},
};

std::uint64_t rol64(std::uint64_t v, int s) {
    return s == 0 ? v : (v << s) | (v >> (64 - s));
}

std::uint64_t& lane(SpongeState& st, int x, int y) { return st[x + 5 * y]; }

// Sponge over keccak-f[1600]: absorb msg plus the domain-separation suffix
// bits, then squeeze out_bytes.
bytes sponge(std::size_t rate_bytes, const bytes& msg, std::uint8_t suffix,
             std::size_t out_bytes) {
    SpongeState st{};
    bytes block(rate_bytes, 0);
    std::size_t off = 0;
    auto absorb_block = [&](const std::uint8_t* data) {
        for (std::size_t i = 0; i < rate_bytes / 8; ++i) {
            std::uint64_t w = 0;
            for (int b = 7; b >= 0; --b) w = (w << 8) | data[8 * i + b];
            st[i] ^= w;
        }
        keccak_f1600(st);
    };
    while (msg.size() - off >= rate_bytes) {
        absorb_block(msg.data() + off);
        off += rate_bytes;
    }
    std::fill(block.begin(), block.end(), 0);
    std::copy(msg.begin() + static_cast<std::ptrdiff_t>(off), msg.end(), block.begin());
    block[msg.size() - off] ^= suffix;   // pad10*1 with the domain bits
    block[rate_bytes - 1] ^= 0x80;
    absorb_block(block.data());

    bytes out;
    out.reserve(out_bytes);
    while (out.size() < out_bytes) {
        for (std::size_t i = 0; i < rate_bytes && out.size() < out_bytes; ++i)
            out.push_back(static_cast<std::uint8_t>(st[i / 8] >> (8 * (i % 8))));
        if (out.size() < out_bytes) keccak_f1600(st);
    }
    return out;
}

// SP 800-185 string encodings.
bytes left_encode(std::uint64_t x) {
    bytes b;
    std::uint64_t v = x;
    do {
        b.insert(b.begin(), static_cast<std::uint8_t>(v & 0xFF));
        v >>= 8;
    } while (v != 0);
    b.insert(b.begin(), static_cast<std::uint8_t>(b.size()));
    return b;
}

bytes encode_string(const bytes& s) {
    bytes out = left_encode(static_cast<std::uint64_t>(s.size()) * 8);
    out.insert(out.end(), s.begin(), s.end());
    return out;
}

bytes bytepad(const bytes& data, std::size_t w) {
    bytes out = left_encode(w);
    out.insert(out.end(), data.begin(), data.end());
    while (out.size() % w != 0) out.push_back(0);
    return out;
}

std::size_t rate_bytes_for(int variant) {
    if (variant == 128) return 168;
    if (variant == 256) return 136;
    throw std::invalid_argument("variant must be 128 or 256");
}

void check_d_bits(std::size_t d_bits) {
    if (d_bits == 0 || d_bits % 8 != 0)
        throw std::invalid_argument("output length must be a positive multiple of 8 bits");
}

}  // namespace

void keccak_f1600(SpongeState& st) {
    g_permutation_calls.fetch_add(1, std::memory_order_relaxed);
    for (int round = 0; round < 24; ++round) {
        // theta
        std::uint64_t C[5], D[5];
        for (int x = 0; x < 5; ++x)
            C[x] = lane(st, x, 0) ^ lane(st, x, 1) ^ lane(st, x, 2) ^ lane(st, x, 3) ^
                   lane(st, x, 4);
        for (int x = 0; x < 5; ++x)
            D[x] = C[(x + 4) % 5] ^ rol64(C[(x + 1) % 5], 1);
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y) lane(st, x, y) ^= D[x];
        // rho + pi
        SpongeState B{};
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                B[y + 5 * ((2 * x + 3 * y) % 5)] = rol64(lane(st, x, y), ROT[x][y]);
        // chi
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                lane(st, x, y) = B[x + 5 * y] ^ (~B[(x + 1) % 5 + 5 * y] & B[(x + 2) % 5 + 5 * y]);
        // iota
        st[0] ^= RC[round];
    }
}

std::uint64_t keccak_permutation_calls() {
    return g_permutation_calls.load(std::memory_order_relaxed);
}

void reset_keccak_permutation_calls() {
    g_permutation_calls.store(0, std::memory_order_relaxed);
}

bytes sha3(const bytes& msg, int variant) {
    if (variant == 256) return sponge(136, msg, 0x06, 32);
    if (variant == 512) return sponge(72, msg, 0x06, 64);
    throw std::invalid_argument("variant must be 256 or 512");
}

bytes shake(const bytes& msg, int variant, std::size_t d_bits) {
    check_d_bits(d_bits);
    return sponge(rate_bytes_for(variant), msg, 0x1F, d_bits / 8);
}

bytes cshake(const bytes& msg, int variant, std::size_t d_bits,
             const bytes& function_name, const bytes& customization) {
    check_d_bits(d_bits);
    if (function_name.empty() && customization.empty())
        return shake(msg, variant, d_bits);
    const std::size_t rb = rate_bytes_for(variant);
    bytes prefix = encode_string(function_name);
    const bytes enc_s = encode_string(customization);
    prefix.insert(prefix.end(), enc_s.begin(), enc_s.end());
    bytes padded = bytepad(prefix, rb);
    padded.insert(padded.end(), msg.begin(), msg.end());
    return sponge(rb, padded, 0x04, d_bits / 8);
}

bytes threebears_cshake(std::uint8_t purpose, const bytes& msg, std::size_t d_bits) {
    bytes framed;
    framed.reserve(msg.size() + 2);
    framed.push_back(0x00);
    framed.push_back(purpose);
    framed.insert(framed.end(), msg.begin(), msg.end());
    static const bytes customization{'T', 'h', 'r', 'e', 'e', 'B', 'e', 'a', 'r', 's'};
    return cshake(framed, 256, d_bits, bytes{}, customization);
}

}  // namespace pqchw
