#include <doctest.h>

#include "pqchw/operand.hpp"

using namespace pqchw;

TEST_CASE("make_operand basic construction and rejection") {
    CHECK(make_operand(4, 0).width_bits == 4);
    CHECK(make_operand(4, 0).value == 0);
    CHECK(make_operand(1, 1).value == 1);
    CHECK_THROWS_AS(make_operand(4, 16), std::invalid_argument);
    CHECK_THROWS_AS(make_operand(0, 0), std::invalid_argument);
}

TEST_CASE("random_operand is a pure function of width and seed") {
    const Operand a = random_operand(8, 12345);
    const Operand b = random_operand(8, 12345);
    CHECK(a.value == b.value);
    CHECK(a.width_bits == 8);
    for (std::uint64_t seed = 0; seed < 32; ++seed) {
        const Operand o = random_operand(1, seed);
        CHECK(o.value <= 1);
    }
    const Operand wide = random_operand(4096, 7);
    CHECK((wide.value >> 4096) == 0);
    CHECK(random_operand(4096, 7).value == wide.value);
    CHECK(random_operand(4096, 8).value != wide.value);
}

TEST_CASE("bit sequences are least-significant-first and invertible") {
    const Operand o = make_operand(4, 0b0110);
    CHECK(to_bit_sequence(o) == std::vector<int>{0, 1, 1, 0});
    CHECK(to_bit_sequence(make_operand(3, 0)) == std::vector<int>{0, 0, 0});

    const Operand big = random_operand(1024, 99);
    const Operand round = from_bit_sequence(to_bit_sequence(big));
    CHECK(round.width_bits == big.width_bits);
    CHECK(round.value == big.value);
}

TEST_CASE("hex round-trip") {
    const Operand o = make_operand(16, 0xbeef);
    CHECK(to_hex(o) == "beef");
    CHECK(from_hex(16, "beef").value == o.value);
    CHECK(to_hex(make_operand(8, 0)) == "0");
    CHECK_THROWS_AS(from_hex(4, "ff"), std::invalid_argument);  // does not fit
}
