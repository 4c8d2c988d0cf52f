#include "pqchw/mult.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pqchw {

namespace {

using boost::multiprecision::cpp_rational;

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// GF(2)[x] product of the bit polynomials of a and b.
bigint clmul(const bigint& a, const bigint& b, std::size_t a_bits) {
    bigint res = 0;
    for (std::size_t i = 0; i < a_bits; ++i)
        if (boost::multiprecision::bit_test(a, static_cast<unsigned>(i)))
            res ^= b << i;
    return res;
}

bigint mode_product(const bigint& a, std::size_t a_bits, const bigint& b, MultMode mode) {
    return mode == MultMode::INTEGER ? bigint(a * b) : clmul(a, b, a_bits);
}

std::size_t product_width(std::size_t m, std::size_t n, MultMode mode) {
    return mode == MultMode::INTEGER ? m + n : m + n - 1;
}

// Split v into k limbs of h bits each, least-significant limb first.
std::vector<bigint> split_limbs(const bigint& v, std::size_t k, std::size_t h) {
    std::vector<bigint> limbs(k);
    const bigint mask = (bigint(1) << h) - 1;
    bigint rest = v;
    for (std::size_t i = 0; i < k; ++i) {
        limbs[i] = rest & mask;
        rest >>= h;
    }
    return limbs;
}

bigint eval_poly(const std::vector<bigint>& coeffs, const bigint& t) {
    bigint acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = acc * t + coeffs[i];
    return acc;
}

// Exact-rational interpolation of the product polynomial from its values at
// the finite points plus the leading coefficient (the "infinity" point).
// Returns the 2k-1 product-polynomial coefficients, low degree first.
std::vector<bigint> interpolate_product(const std::vector<bigint>& points,
                                        const std::vector<bigint>& values,
                                        const bigint& leading) {
    const std::size_t deg = points.size();  // unknowns c_0 .. c_{deg-1}
    // Row j: sum_i c_i * t_j^i = v_j - leading * t_j^deg
    std::vector<std::vector<cpp_rational>> M(deg, std::vector<cpp_rational>(deg + 1));
    for (std::size_t j = 0; j < deg; ++j) {
        bigint p = 1;
        for (std::size_t i = 0; i < deg; ++i) {
            M[j][i] = cpp_rational(p);
            p *= points[j];
        }
        M[j][deg] = cpp_rational(values[j] - leading * p);
    }
    for (std::size_t col = 0; col < deg; ++col) {
        std::size_t pivot = col;
        while (pivot < deg && M[pivot][col] == 0) ++pivot;
        if (pivot == deg) throw std::logic_error("singular interpolation system");
        std::swap(M[col], M[pivot]);
        for (std::size_t row = 0; row < deg; ++row) {
            if (row == col || M[row][col] == 0) continue;
            cpp_rational f = M[row][col] / M[col][col];
            for (std::size_t i = col; i <= deg; ++i)
                M[row][i] -= f * M[col][i];
        }
    }
    std::vector<bigint> coeffs(deg + 1);
    for (std::size_t i = 0; i < deg; ++i) {
        cpp_rational c = M[i][deg] / M[i][i];
        if (boost::multiprecision::denominator(c) != 1)
            throw std::logic_error("non-integer interpolated coefficient");
        coeffs[i] = boost::multiprecision::numerator(c);
    }
    coeffs[deg] = leading;
    return coeffs;
}

// One level of k-way splitting. INTEGER mode evaluates/interpolates at the
// given points; CARRYLESS mode falls back to a split-limb XOR schoolbook of
// the k limbs (characteristic-2 interpolation constants are degenerate).
bigint kway_product(const Operand& a, const Operand& b, std::size_t k,
                    const std::vector<bigint>& eval_points, MultMode mode) {
    const std::size_t m = a.width_bits;
    const std::size_t h = ceil_div(m, k);
    const auto la = split_limbs(a.value, k, h);
    const auto lb = split_limbs(b.value, k, h);
    if (mode == MultMode::CARRYLESS) {
        bigint res = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                res ^= clmul(la[i], lb[j], h) << ((i + j) * h);
        return res;
    }
    std::vector<bigint> values(eval_points.size());
    for (std::size_t j = 0; j < eval_points.size(); ++j)
        values[j] = eval_poly(la, eval_points[j]) * eval_poly(lb, eval_points[j]);
    const bigint leading = la[k - 1] * lb[k - 1];
    const auto coeffs = interpolate_product(eval_points, values, leading);
    bigint res = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        res += coeffs[i] << (i * h);
    return res;
}

void require_equal_widths(const Operand& a, const Operand& b) {
    if (a.width_bits != b.width_bits)
        throw std::invalid_argument("engine requires equal operand widths");
}

std::uint64_t mont_inv_pow2(std::uint64_t q, std::size_t r_bits) {
    // Newton iteration for q^-1 mod 2^r_bits (q odd).
    std::uint64_t inv = 1;
    for (int i = 0; i < 6; ++i)
        inv *= 2 - q * inv;
    if (r_bits < 64) inv &= (std::uint64_t(1) << r_bits) - 1;
    return inv;
}

}  // namespace

MultResult sbm_multiply(const Operand& a, const Operand& b, MultMode mode) {
    const std::size_t m = a.width_bits, n = b.width_bits;
    bigint p = mode_product(a.value, m, b.value, mode);
    return MultResult{Operand{product_width(m, n, mode), std::move(p)},
                      static_cast<std::uint64_t>(m - 1), mode};
}

MultResult karatsuba2_multiply(const Operand& a, const Operand& b, MultMode mode) {
    require_equal_widths(a, b);
    const std::size_t m = a.width_bits;
    const std::size_t h = ceil_div(m, 2);
    const auto la = split_limbs(a.value, 2, h);
    const auto lb = split_limbs(b.value, 2, h);
    bigint res;
    if (mode == MultMode::INTEGER) {
        bigint z0 = la[0] * lb[0];
        bigint z2 = la[1] * lb[1];
        bigint z1 = (la[0] + la[1]) * (lb[0] + lb[1]) - z0 - z2;
        res = z0 + (z1 << h) + (z2 << (2 * h));
    } else {
        bigint z0 = clmul(la[0], lb[0], h);
        bigint z2 = clmul(la[1], lb[1], h);
        bigint z1 = clmul(la[0] ^ la[1], lb[0] ^ lb[1], h) ^ z0 ^ z2;
        res = z0 ^ (z1 << h) ^ (z2 << (2 * h));
    }
    return MultResult{Operand{product_width(m, m, mode), std::move(res)},
                      static_cast<std::uint64_t>(ceil_div(m, 2) - 1), mode};
}

MultResult toomcook3_multiply(const Operand& a, const Operand& b, MultMode mode) {
    require_equal_widths(a, b);
    const std::size_t m = a.width_bits;
    static const std::vector<bigint> points{0, 1, -1, 2};
    bigint res = kway_product(a, b, 3, points, mode);
    return MultResult{Operand{product_width(m, m, mode), std::move(res)},
                      static_cast<std::uint64_t>(ceil_div(m, 3) - 1), mode};
}

MultResult toomcook4_multiply(const Operand& a, const Operand& b, MultMode mode) {
    require_equal_widths(a, b);
    const std::size_t m = a.width_bits;
    static const std::vector<bigint> points{0, 1, -1, 2, -2, 3};
    bigint res = kway_product(a, b, 4, points, mode);
    return MultResult{Operand{product_width(m, m, mode), std::move(res)},
                      static_cast<std::uint64_t>(ceil_div(m, 4) - 1), mode};
}

MultResult segmented_sbm_multiply(const Operand& a, const Operand& b,
                                  std::size_t digit_bits, MultMode mode) {
    require_equal_widths(a, b);
    const std::size_t m = a.width_bits;
    if (digit_bits == 0 || digit_bits > m)
        throw std::invalid_argument("digit width must be in [1, m]");
    const std::size_t d = ceil_div(m, digit_bits);
    const auto la = split_limbs(a.value, d, digit_bits);
    const auto lb = split_limbs(b.value, d, digit_bits);
    // One digit-pair partial product per cycle; partials are collected per
    // output column and combined once at the end.
    std::vector<bigint> columns(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            bigint partial = mode_product(la[i], digit_bits, lb[j], mode);
            if (mode == MultMode::INTEGER)
                columns[i + j] += partial;
            else
                columns[i + j] ^= partial;
        }
    bigint res = 0;
    for (std::size_t col = columns.size(); col-- > 0;) {
        if (mode == MultMode::INTEGER)
            res = (res << digit_bits) + columns[col];
        else
            res = (res << digit_bits) ^ columns[col];
    }
    return MultResult{Operand{product_width(m, m, mode), std::move(res)},
                      static_cast<std::uint64_t>(d) * d, mode};
}

ReduceResult xor_shift_reduce(const Operand& s, std::size_t m) {
    if (m == 0)
        throw std::invalid_argument("reduction width must be >= 1");
    if (s.width_bits < m)
        throw std::invalid_argument("product narrower than reduction width");
    const bigint mask = (bigint(1) << m) - 1;
    bigint r = s.value & mask;
    for (std::size_t i = m; i < s.width_bits; ++i) {
        // Cyclic left shift of the running remainder by one. The wrapped
        // bit is materialized first: the expression-template assignment
        // would otherwise read `r` while overwriting it.
        const bigint wrapped = r >> (m - 1);
        r = ((r << 1) | wrapped) & mask;
        // ...then XOR the incoming high bit into the low end.
        if (boost::multiprecision::bit_test(s.value, static_cast<unsigned>(i)))
            r ^= 1;
    }
    return ReduceResult{Operand{m, std::move(r)},
                        static_cast<std::uint64_t>(s.width_bits - m)};
}

ReduceResult unified_multiply_reduce(const Operand& a, const Operand& b) {
    require_equal_widths(a, b);
    const std::size_t m = a.width_bits;
    MultResult prod = sbm_multiply(a, b, MultMode::CARRYLESS);
    ReduceResult red = xor_shift_reduce(prod.product, m);
    red.cycles = 2 * static_cast<std::uint64_t>(m - 1);
    return red;
}

MontgomeryResult montgomery_multiply(std::uint64_t a, std::uint64_t b,
                                     std::uint64_t q, std::size_t r_bits) {
    if (q % 2 == 0) throw std::invalid_argument("modulus must be odd");
    if (r_bits == 0 || r_bits > 63) throw std::invalid_argument("R width must be in [1, 63]");
    if ((std::uint64_t(1) << r_bits) <= q) throw std::invalid_argument("R must exceed q");
    if (a >= q || b >= q) throw std::invalid_argument("inputs must be residues mod q");
    const std::uint64_t r_mask = (std::uint64_t(1) << r_bits) - 1;
    const std::uint64_t neg_qinv = (~mont_inv_pow2(q, r_bits) + 1) & r_mask;
    unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    std::uint64_t mfac = (static_cast<std::uint64_t>(t) & r_mask) * neg_qinv & r_mask;
    t = (t + static_cast<unsigned __int128>(mfac) * q) >> r_bits;
    std::uint64_t res = static_cast<std::uint64_t>(t);
    if (res >= q) res -= q;
    return MontgomeryResult{res, 2 * static_cast<std::uint64_t>(r_bits) - 1};
}

std::uint64_t to_montgomery(std::uint64_t a, std::uint64_t q, std::size_t r_bits) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) << r_bits) % q);
}

std::uint64_t from_montgomery(std::uint64_t a_mont, std::uint64_t q, std::size_t r_bits) {
    std::uint64_t one_sq = montgomery_multiply(a_mont % q, 1, q, r_bits).residue;
    return one_sq;
}

std::uint64_t multiply_cycles(MultMethod method, std::size_t m, std::size_t extra) {
    if (m == 0) throw std::invalid_argument("width must be >= 1");
    switch (method) {
        case MultMethod::SBM:  return m - 1;
        case MultMethod::KM2:  return ceil_div(m, 2) - 1;
        case MultMethod::TCM3: return ceil_div(m, 3) - 1;
        case MultMethod::TCM4: return ceil_div(m, 4) - 1;
        case MultMethod::MONTGOMERY: return 2 * static_cast<std::uint64_t>(m) - 1;
        case MultMethod::SEGMENTED: {
            if (extra == 0 || extra > m)
                throw std::invalid_argument("digit width must be in [1, m]");
            std::uint64_t d = ceil_div(m, extra);
            return d * d;
        }
        case MultMethod::NTT: {
            std::size_t n = extra == 0 ? m : extra;
            if ((n & (n - 1)) != 0)
                throw std::invalid_argument("point count must be a power of two");
            std::uint64_t log2n = std::bit_width(n) - 1;
            return 2 * static_cast<std::uint64_t>(m) + 2 * log2n;
        }
    }
    throw std::logic_error("unknown method");
}

}  // namespace pqchw
