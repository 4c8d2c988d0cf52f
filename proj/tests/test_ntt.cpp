#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "pqchw/ntt.hpp"

using namespace pqchw;

namespace {

// O(n^2) negacyclic convolution oracle: coefficients wrapping past degree
// n-1 re-enter with a sign flip (X^n = -1).
std::vector<std::uint64_t> negacyclic_oracle(const std::vector<std::uint64_t>& a,
                                             const std::vector<std::uint64_t>& b,
                                             std::uint64_t q) {
    const std::size_t n = a.size();
    std::vector<std::uint64_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint64_t prod = a[i] * b[j] % q;
            const std::size_t k = (i + j) % n;
            if (i + j < n)
                out[k] = (out[k] + prod) % q;
            else
                out[k] = (out[k] + q - prod) % q;
        }
    return out;
}

std::vector<std::uint64_t> random_poly(std::size_t n, std::uint64_t q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> v(n);
    for (auto& x : v) x = rng() % q;
    return v;
}

}  // namespace

TEST_CASE("parameter construction checks the negacyclic root conditions") {
    const NttParams p = NttParams::create(4, 17);
    CHECK(pow_mod(p.root, 8, 17) == 1);
    CHECK(pow_mod(p.root, 4, 17) == 16);  // psi^n = -1
    CHECK_NOTHROW(NttParams::create(4, 17, 2));
    CHECK_THROWS_AS(NttParams::create(4, 17, 3), std::invalid_argument);
    CHECK_THROWS_AS(NttParams::create(4, 15), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(NttParams::create(4, 19), std::invalid_argument);   // 19 != 1 mod 8
    CHECK_THROWS_AS(NttParams::create(3, 17), std::invalid_argument);   // not a power of two
}

TEST_CASE("multiplicative identity and input validation, n=4 q=17") {
    const NttParams p = NttParams::create(4, 17);
    const std::vector<std::uint64_t> one{1, 0, 0, 0};
    const std::vector<std::uint64_t> b{3, 14, 7, 9};
    CHECK(ntt_polynomial_multiply(one, b, p).coeffs == b);
    CHECK(ntt_polynomial_multiply(one, b, p).cycles == 2 * 4 + 2 * 2);
    CHECK_THROWS_AS(ntt_forward({1, 2, 3}, p), std::invalid_argument);
    CHECK_THROWS_AS(ntt_forward({1, 2, 3, 17}, p), std::invalid_argument);
}

TEST_CASE("pointwise path equals the convolution oracle, exhaustive basis n=4 q=17") {
    // Both sides are bilinear in (a, b), so agreement on every pair of
    // scaled basis monomials proves agreement on all inputs.
    const NttParams p = NttParams::create(4, 17);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::uint64_t ca = 0; ca < 17; ++ca)
                for (std::uint64_t cb = 0; cb < 17; ++cb) {
                    std::vector<std::uint64_t> a(4, 0), b(4, 0);
                    a[i] = ca;
                    b[j] = cb;
                    CHECK(ntt_polynomial_multiply(a, b, p).coeffs ==
                          negacyclic_oracle(a, b, 17));
                }
}

TEST_CASE("random agreement with the oracle for n=8 and n=256") {
    for (const auto& [n, q] : std::vector<std::pair<std::size_t, std::uint64_t>>{
             {8, 97}, {256, 7681}}) {
        const NttParams p = NttParams::create(n, q);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto a = random_poly(n, q, 1000 + seed);
            const auto b = random_poly(n, q, 2000 + seed);
            CHECK(ntt_polynomial_multiply(a, b, p).coeffs == negacyclic_oracle(a, b, q));
        }
    }
}

TEST_CASE("forward then inverse is the identity") {
    const NttParams p = NttParams::create(256, 7681);
    const auto v = random_poly(256, 7681, 4242);
    CHECK(ntt_inverse(ntt_forward(v, p), p) == v);
}
