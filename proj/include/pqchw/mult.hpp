// Functional models of the multiplication / reduction datapaths.
//
// Every engine returns both the product and the cycle count of the
// bit-serial (or digit-serial) hardware schedule it models:
//
//   schoolbook (SBM)          m - 1
//   2-way Karatsuba (KM2)     ceil(m/2) - 1
//   3-way Toom-Cook (TCM3)    ceil(m/3) - 1
//   4-way Toom-Cook (TCM4)    ceil(m/4) - 1
//   segmented schoolbook      ceil(m/d)^2      (d = digit width)
//   Montgomery                2m - 1           (m = R width in bits)
//   NTT                       2m + 2*log2(n)   (m = coefficient count,
//                                               n = point count)
//   serial XOR-shift reduce   s_width - m
//   unified multiply/reduce   2(m - 1)
//
// Widths need not be powers of two; split engines pad the top limb
// internally. Cycle formulas use the ceiling convention for non-divisible
// splits. All engines are pure functions.

#ifndef PQCHW_MULT_HPP
#define PQCHW_MULT_HPP

#include <cstdint>
#include <utility>

#include "pqchw/operand.hpp"

namespace pqchw {

// INTEGER: carry-propagating accumulation, product width m + n.
// CARRYLESS: XOR accumulation (GF(2)[x] product), product width m + n - 1.
enum class MultMode { INTEGER, CARRYLESS };

enum class MultMethod { SBM, KM2, TCM3, TCM4, NTT, MONTGOMERY, SEGMENTED };

struct MultResult {
    Operand product;
    std::uint64_t cycles = 0;
    MultMode mode = MultMode::INTEGER;
};

struct ReduceResult {
    Operand reduced;             // width m
    std::uint64_t cycles = 0;    // one cycle per folded high bit
};

MultResult sbm_multiply(const Operand& a, const Operand& b, MultMode mode);
MultResult karatsuba2_multiply(const Operand& a, const Operand& b, MultMode mode);
MultResult toomcook3_multiply(const Operand& a, const Operand& b, MultMode mode);
MultResult toomcook4_multiply(const Operand& a, const Operand& b, MultMode mode);
MultResult segmented_sbm_multiply(const Operand& a, const Operand& b,
                                  std::size_t digit_bits, MultMode mode);

// Serial cyclic-fold reduction of a product s down to m bits; see
// docs/xor_shift_reduce.md for the bit-exact reference procedure.
ReduceResult xor_shift_reduce(const Operand& s, std::size_t m);

// Carry-less multiply followed by xor_shift_reduce; cycles = 2(m-1).
ReduceResult unified_multiply_reduce(const Operand& a, const Operand& b);

// REDC(a*b) = a*b*R^-1 mod q, R = 2^r_bits; cycles = 2*r_bits - 1.
struct MontgomeryResult {
    std::uint64_t residue = 0;
    std::uint64_t cycles = 0;
};
MontgomeryResult montgomery_multiply(std::uint64_t a, std::uint64_t b,
                                     std::uint64_t q, std::size_t r_bits);
std::uint64_t to_montgomery(std::uint64_t a, std::uint64_t q, std::size_t r_bits);
std::uint64_t from_montgomery(std::uint64_t a_mont, std::uint64_t q, std::size_t r_bits);

// Closed-form cycle counts; `extra` is the digit width for SEGMENTED and the
// point count n for NTT (defaulting to m when zero).
std::uint64_t multiply_cycles(MultMethod method, std::size_t m, std::size_t extra = 0);

}  // namespace pqchw

#endif  // PQCHW_MULT_HPP
