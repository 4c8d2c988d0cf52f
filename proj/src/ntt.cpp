#include "pqchw/ntt.hpp"

#include <bit>
#include <stdexcept>

#include "pqchw/mult.hpp"

namespace pqchw {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> f;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            f.push_back(d);
            while (v % d == 0) v /= d;
        }
    if (v > 1) f.push_back(v);
    return f;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
    return pow_mod(a, q - 2, q);  // q prime
}

// In-place iterative Cooley-Tukey cyclic NTT with the given principal n-th
// root of unity omega.
void cyclic_ntt(std::vector<std::uint64_t>& a, std::uint64_t omega, std::uint64_t q) {
    const std::size_t n = a.size();
    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::uint64_t wlen = pow_mod(omega, n / len, q);
        for (std::size_t i = 0; i < n; i += len) {
            std::uint64_t w = 1;
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::uint64_t u = a[i + k];
                std::uint64_t v = mul_mod(a[i + k + len / 2], w, q);
                a[i + k] = u + v >= q ? u + v - q : u + v;
                a[i + k + len / 2] = u >= v ? u - v : u + q - v;
                w = mul_mod(w, wlen, q);
            }
        }
    }
}

void check_inputs(const std::vector<std::uint64_t>& v, const NttParams& p) {
    if (v.size() != p.n)
        throw std::invalid_argument("coefficient count does not match point count");
    for (auto x : v)
        if (x >= p.q)
            throw std::invalid_argument("coefficient not reduced mod q");
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t q) {
    std::uint64_t res = 1 % q;
    base %= q;
    while (exp) {
        if (exp & 1) res = mul_mod(res, base, q);
        base = mul_mod(base, base, q);
        exp >>= 1;
    }
    return res;
}

NttParams NttParams::create(std::size_t n, std::uint64_t q, std::uint64_t root) {
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("point count must be a power of two");
    if (!is_prime(q))
        throw std::invalid_argument("modulus must be prime");
    if ((q - 1) % (2 * n) != 0)
        throw std::invalid_argument("modulus not NTT-friendly: q != 1 (mod 2n)");
    if (pow_mod(root, static_cast<std::uint64_t>(2 * n), q) != 1 ||
        pow_mod(root, static_cast<std::uint64_t>(n), q) != q - 1)
        throw std::invalid_argument("root is not a primitive 2n-th root of unity");
    return NttParams{n, q, root};
}

NttParams NttParams::create(std::size_t n, std::uint64_t q) {
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("point count must be a power of two");
    if (!is_prime(q))
        throw std::invalid_argument("modulus must be prime");
    if ((q - 1) % (2 * n) != 0)
        throw std::invalid_argument("modulus not NTT-friendly: q != 1 (mod 2n)");
    const auto factors = prime_factors(q - 1);
    for (std::uint64_t g = 2; g < q; ++g) {
        bool primitive = true;
        for (auto f : factors)
            if (pow_mod(g, (q - 1) / f, q) == 1) { primitive = false; break; }
        if (!primitive) continue;
        std::uint64_t psi = pow_mod(g, (q - 1) / (2 * static_cast<std::uint64_t>(n)), q);
        if (pow_mod(psi, static_cast<std::uint64_t>(n), q) == q - 1)
            return NttParams{n, q, psi};
    }
    throw std::invalid_argument("no suitable root found");
}

std::vector<std::uint64_t> ntt_forward(const std::vector<std::uint64_t>& coeffs,
                                       const NttParams& p) {
    check_inputs(coeffs, p);
    std::vector<std::uint64_t> a(coeffs);
    std::uint64_t psi_pow = 1;
    for (std::size_t i = 0; i < p.n; ++i) {
        a[i] = mul_mod(a[i], psi_pow, p.q);
        psi_pow = mul_mod(psi_pow, p.root, p.q);
    }
    cyclic_ntt(a, mul_mod(p.root, p.root, p.q), p.q);
    return a;
}

std::vector<std::uint64_t> ntt_inverse(const std::vector<std::uint64_t>& points,
                                       const NttParams& p) {
    check_inputs(points, p);
    std::vector<std::uint64_t> a(points);
    const std::uint64_t omega = mul_mod(p.root, p.root, p.q);
    cyclic_ntt(a, inv_mod(omega, p.q), p.q);
    const std::uint64_t n_inv = inv_mod(static_cast<std::uint64_t>(p.n), p.q);
    const std::uint64_t psi_inv = inv_mod(p.root, p.q);
    std::uint64_t psi_pow = 1;
    for (std::size_t i = 0; i < p.n; ++i) {
        a[i] = mul_mod(mul_mod(a[i], n_inv, p.q), psi_pow, p.q);
        psi_pow = mul_mod(psi_pow, psi_inv, p.q);
    }
    return a;
}

NttMultResult ntt_polynomial_multiply(const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b,
                                      const NttParams& p) {
    auto fa = ntt_forward(a, p);
    auto fb = ntt_forward(b, p);
    for (std::size_t i = 0; i < p.n; ++i)
        fa[i] = mul_mod(fa[i], fb[i], p.q);
    NttMultResult out;
    out.coeffs = ntt_inverse(fa, p);
    out.cycles = multiply_cycles(MultMethod::NTT, p.n, p.n);
    return out;
}

}  // namespace pqchw
