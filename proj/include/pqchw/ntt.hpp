// Negacyclic number-theoretic transform over Z_q, q prime, q = 1 (mod 2n).
//
// The forward transform twists the input by powers of psi (a primitive
// 2n-th root of unity with psi^n = -1) and applies a cyclic NTT with
// omega = psi^2, so pointwise products correspond to multiplication
// modulo X^n + 1. Cycle model: 2m + 2*log2(n) with m = coefficient count.

#ifndef PQCHW_NTT_HPP
#define PQCHW_NTT_HPP

#include <cstdint>
#include <vector>

namespace pqchw {

struct NttParams {
    std::size_t n = 0;        // power-of-two point count
    std::uint64_t q = 0;      // prime, q = 1 (mod 2n)
    std::uint64_t root = 0;   // psi: primitive 2n-th root, psi^n = -1 (mod q)

    // Finds a suitable psi for (n, q); throws if q is not prime or not
    // NTT-friendly for this n.
    static NttParams create(std::size_t n, std::uint64_t q);
    // Validates an explicitly supplied root.
    static NttParams create(std::size_t n, std::uint64_t q, std::uint64_t root);
};

struct NttMultResult {
    std::vector<std::uint64_t> coeffs;
    std::uint64_t cycles = 0;
};

std::vector<std::uint64_t> ntt_forward(const std::vector<std::uint64_t>& coeffs,
                                       const NttParams& params);
std::vector<std::uint64_t> ntt_inverse(const std::vector<std::uint64_t>& points,
                                       const NttParams& params);

// a * b mod (X^n + 1, q) via forward transforms, pointwise product, and the
// inverse transform.
NttMultResult ntt_polynomial_multiply(const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b,
                                      const NttParams& params);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t q);

}  // namespace pqchw

#endif  // PQCHW_NTT_HPP
