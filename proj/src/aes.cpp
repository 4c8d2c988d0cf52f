#include "pqchw/hash.hpp"

#include <stdexcept>

namespace pqchw {

namespace {

// GF(2^8) arithmetic with the AES polynomial x^8 + x^4 + x^3 + x + 1.
std::uint8_t gmul(std::uint8_t a, std::uint8_t b) {
    std::uint8_t p = 0;
    while (b) {
        if (b & 1) p ^= a;
        std::uint8_t hi = a & 0x80;
        a <<= 1;
        if (hi) a ^= 0x1B;
        b >>= 1;
    }
    return p;
}

// The S-box is derived, not transcribed: multiplicative inverse followed by
// the standard affine map.
struct SboxTable {
    std::uint8_t t[256];
    SboxTable() {
        std::uint8_t inv[256] = {};
        for (int a = 1; a < 256; ++a)
            for (int b = 1; b < 256; ++b)
                if (gmul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)) == 1)
                    inv[a] = static_cast<std::uint8_t>(b);
        for (int a = 0; a < 256; ++a) {
            std::uint8_t x = inv[a], y = x;
            for (int i = 0; i < 4; ++i) {
                y = static_cast<std::uint8_t>((y << 1) | (y >> 7));
                x ^= y;
            }
            t[a] = x ^ 0x63;
        }
    }
};

std::uint8_t sbox(std::uint8_t v) {
    static const SboxTable table;
    return table.t[v];
}

void sub_bytes(std::uint8_t st[16]) {
    for (int i = 0; i < 16; ++i) st[i] = sbox(st[i]);
}

// State is column-major: st[4c + r] is row r of column c.
void shift_rows(std::uint8_t st[16]) {
    std::uint8_t t[16];
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r)
            t[4 * c + r] = st[4 * ((c + r) % 4) + r];
    for (int i = 0; i < 16; ++i) st[i] = t[i];
}

void mix_columns(std::uint8_t st[16]) {
    for (int c = 0; c < 4; ++c) {
        std::uint8_t* col = st + 4 * c;
        std::uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
        col[0] = gmul(a0, 2) ^ gmul(a1, 3) ^ a2 ^ a3;
        col[1] = a0 ^ gmul(a1, 2) ^ gmul(a2, 3) ^ a3;
        col[2] = a0 ^ a1 ^ gmul(a2, 2) ^ gmul(a3, 3);
        col[3] = gmul(a0, 3) ^ a1 ^ a2 ^ gmul(a3, 2);
    }
}

void add_round_key(std::uint8_t st[16], const std::uint8_t* rk) {
    for (int i = 0; i < 16; ++i) st[i] ^= rk[i];
}

// Expanded key as (rounds + 1) 16-byte round keys.
std::vector<std::uint8_t> expand_key(const bytes& key, int& rounds) {
    const std::size_t nk = key.size() / 4;  // words in the key: 4 or 8
    rounds = nk == 4 ? 10 : 14;
    const std::size_t total_words = 4 * (rounds + 1);
    std::vector<std::uint8_t> w(4 * total_words);
    std::copy(key.begin(), key.end(), w.begin());
    std::uint8_t rcon = 1;
    for (std::size_t i = nk; i < total_words; ++i) {
        std::uint8_t tmp[4] = {w[4 * (i - 1)], w[4 * (i - 1) + 1],
                               w[4 * (i - 1) + 2], w[4 * (i - 1) + 3]};
        if (i % nk == 0) {
            std::uint8_t first = tmp[0];
            tmp[0] = sbox(tmp[1]) ^ rcon;
            tmp[1] = sbox(tmp[2]);
            tmp[2] = sbox(tmp[3]);
            tmp[3] = sbox(first);
            rcon = gmul(rcon, 2);
        } else if (nk == 8 && i % nk == 4) {
            for (auto& b : tmp) b = sbox(b);
        }
        for (int b = 0; b < 4; ++b)
            w[4 * i + b] = w[4 * (i - nk) + b] ^ tmp[b];
    }
    return w;
}

}  // namespace

bytes aes_encrypt_block(const bytes& key, const bytes& block) {
    if (key.size() != 16 && key.size() != 32)
        throw std::invalid_argument("key must be 16 or 32 bytes");
    if (block.size() != 16)
        throw std::invalid_argument("block must be 16 bytes");
    int rounds = 0;
    const auto rk = expand_key(key, rounds);
    std::uint8_t st[16];
    std::copy(block.begin(), block.end(), st);
    add_round_key(st, rk.data());
    for (int r = 1; r < rounds; ++r) {
        sub_bytes(st);
        shift_rows(st);
        mix_columns(st);
        add_round_key(st, rk.data() + 16 * r);
    }
    sub_bytes(st);
    shift_rows(st);
    add_round_key(st, rk.data() + 16 * rounds);
    return bytes(st, st + 16);
}

}  // namespace pqchw
