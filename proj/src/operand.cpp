#include "pqchw/operand.hpp"

#include <random>
#include <stdexcept>

namespace pqchw {

Operand make_operand(std::size_t width_bits, const bigint& value) {
    if (width_bits == 0)
        throw std::invalid_argument("operand width must be >= 1");
    if (value.sign() < 0)
        throw std::invalid_argument("operand value must be unsigned");
    if (value >> width_bits != 0)
        throw std::invalid_argument("operand value does not fit declared width");
    return Operand{width_bits, value};
}

Operand random_operand(std::size_t width_bits, std::uint64_t seed) {
    if (width_bits == 0)
        throw std::invalid_argument("operand width must be >= 1");
    std::mt19937_64 rng(seed);
    bigint v = 0;
    std::size_t produced = 0;
    while (produced < width_bits) {
        v <<= 64;
        v |= bigint(rng());
        produced += 64;
    }
    // Trim the overshoot so the result is uniform over [0, 2^width_bits).
    v >>= (produced - width_bits);
    return Operand{width_bits, v};
}

std::vector<int> to_bit_sequence(const Operand& op) {
    std::vector<int> bits(op.width_bits);
    for (std::size_t i = 0; i < op.width_bits; ++i)
        bits[i] = static_cast<int>(boost::multiprecision::bit_test(op.value, static_cast<unsigned>(i)));
    return bits;
}

Operand from_bit_sequence(const std::vector<int>& bits) {
    if (bits.empty())
        throw std::invalid_argument("bit sequence must be non-empty");
    bigint v = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i])
            boost::multiprecision::bit_set(v, static_cast<unsigned>(i));
    return Operand{bits.size(), v};
}

std::string to_hex(const Operand& op) {
    if (op.value == 0) return "0";
    std::string s;
    bigint v = op.value;
    static const char* digits = "0123456789abcdef";
    while (v != 0) {
        s.push_back(digits[static_cast<unsigned>(v & 0xF)]);
        v >>= 4;
    }
    return std::string(s.rbegin(), s.rend());
}

Operand from_hex(std::size_t width_bits, const std::string& hex) {
    bigint v = 0;
    for (char c : hex) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument(std::string("bad hex character: ") + c);
        v = (v << 4) | d;
    }
    return make_operand(width_bits, v);
}

}  // namespace pqchw
