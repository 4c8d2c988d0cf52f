// Arbitrary-width unsigned operands for the multiplier engines.
//
// An Operand carries an explicit declared width m together with its value;
// the width is part of the type's meaning (it drives cycle formulas and
// product widths), so it is never inferred from the value's magnitude.
// Bit order is least-significant-first everywhere.

#ifndef PQCHW_OPERAND_HPP
#define PQCHW_OPERAND_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pqchw {

using bigint = boost::multiprecision::cpp_int;

struct Operand {
    std::size_t width_bits = 1;  // declared m, >= 1
    bigint value;                // always < 2^width_bits
};

// Throws std::invalid_argument if width_bits == 0 or value >= 2^width_bits
// (a caller bug, never silently truncated).
Operand make_operand(std::size_t width_bits, const bigint& value);

// Deterministic: same (width_bits, seed) always yields the same value,
// uniform over [0, 2^width_bits).
Operand random_operand(std::size_t width_bits, std::uint64_t seed);

// Length == width_bits, least-significant bit first.
std::vector<int> to_bit_sequence(const Operand& op);

// Inverse of to_bit_sequence: bits are least-significant-first.
Operand from_bit_sequence(const std::vector<int>& bits);

// Lowercase hex, no prefix, most-significant nibble first, no leading-zero
// stripping beyond a single "0" for zero values.
std::string to_hex(const Operand& op);
Operand from_hex(std::size_t width_bits, const std::string& hex);

}  // namespace pqchw

#endif  // PQCHW_OPERAND_HPP
