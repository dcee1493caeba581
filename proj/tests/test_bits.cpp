#include <random>

#include "doctest.h"
#include "ncode/bits.hpp"

using namespace ncode;

namespace {
BitWord rand_word(std::mt19937_64& rng, int n) {
    return BitWord(n, rng() & (n >= 64 ? ~0ull : ((1ull << n) - 1)));
}
}  // namespace

TEST_CASE("word xor agrees with the worked sums") {
    auto w = [](const char* s) { return BitWord::from_string(s); };
    CHECK((w("1011") ^ w("0000")) == w("1011"));
    CHECK((w("1011") ^ w("1011")) == w("0000"));
    CHECK((w("001110") ^ w("111000") ^ w("010101")) == w("100011"));
    CHECK_THROWS_AS(w("1011") ^ w("10110"), input_error);
}

TEST_CASE("hamming weight and distance") {
    CHECK(hamming_weight(BitWord::from_string("1011110")) == 5);
    CHECK(hamming_weight(BitWord(7)) == 0);
    CHECK(hamming_weight(BitWord::from_string("11010")) == 3);
    CHECK(hamming_distance(BitWord::from_string("1011110"), BitWord::from_string("0111101")) == 4);
    CHECK(hamming_distance(BitWord::from_string("0101010101"), BitWord::from_string("1010111101")) == 6);
    CHECK(hamming_distance(BitWord::from_string("1100"), BitWord::from_string("1100")) == 0);
    CHECK_THROWS_AS(hamming_distance(BitWord(3), BitWord(4)), input_error);
}

TEST_CASE("xor properties and the distance identity") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + static_cast<int>(rng() % 64);
        const BitWord a = rand_word(rng, n), b = rand_word(rng, n), c = rand_word(rng, n);
        CHECK((a ^ b) == (b ^ a));
        CHECK(((a ^ b) ^ c) == (a ^ (b ^ c)));
        CHECK((a ^ a).is_zero());
        CHECK(hamming_distance(a, b) == hamming_weight(a ^ b));
        // triangle inequality
        CHECK(hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c));
    }
}

TEST_CASE("cyclic shift rotates right; n applications are the identity") {
    CHECK(cyclic_shift(BitWord::from_string("1110100")) == BitWord::from_string("0111010"));
    CHECK(cyclic_shift(BitWord::from_string("100100")) == BitWord::from_string("010010"));
    CHECK(cyclic_shift(BitWord::from_string("1111")) == BitWord::from_string("1111"));
    std::mt19937_64 rng(11);
    for (int round = 0; round < 100; ++round) {
        const int n = 1 + static_cast<int>(rng() % 64);
        const BitWord start = rand_word(rng, n);
        BitWord w = start;
        for (int i = 0; i < n; ++i) w = cyclic_shift(w);
        CHECK(w == start);
    }
}

TEST_CASE("word text round trip and ordering") {
    CHECK(BitWord::from_string("1011000").to_string() == "1011000");
    CHECK_THROWS_AS(BitWord::from_string("10x1"), input_error);
    CHECK_THROWS_AS(BitWord::from_string(""), input_error);
    // coordinate 1 is most significant for the order
    CHECK(BitWord::from_string("0001") < BitWord::from_string("0100"));
    CHECK(BitWord::from_string("0100") < BitWord::from_string("1000"));
    CHECK(!(BitWord::from_string("1000") < BitWord::from_string("1000")));
}

TEST_CASE("matrix application reproduces the worked checks") {
    // H of the (7,3) systematic demo.
    const BitMatrix H = BitMatrix::from_strings({"0101000", "1010100", "0010010", "0010001"});
    CHECK(H.apply(BitWord::from_string("1000100")).is_zero());
    CHECK(H.apply(BitWord(7)).is_zero());
    const BitMatrix H1 = BitMatrix::from_strings({"1010", "1101"});
    CHECK(H1.apply(BitWord::from_string("1111")) == BitWord::from_string("01"));
    CHECK_THROWS_AS(H1.apply(BitWord(5)), input_error);
}

TEST_CASE("matrix application is linear") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 100; ++round) {
        const int r = 1 + static_cast<int>(rng() % 8), c = 1 + static_cast<int>(rng() % 16);
        BitMatrix m(r, c);
        for (int i = 0; i < r; ++i) m.set_row(i, rand_word(rng, c));
        const BitWord x = rand_word(rng, c), y = rand_word(rng, c);
        CHECK(m.apply(x ^ y) == (m.apply(x) ^ m.apply(y)));
    }
}

TEST_CASE("matrix product") {
    const BitMatrix G = BitMatrix::from_strings({"1000100", "0101000", "0010111"});
    const BitMatrix H = BitMatrix::from_strings({"0101000", "1010100", "0010010", "0010001"});
    CHECK((G * H.transposed()).is_zero());
    const BitMatrix M = BitMatrix::from_strings({"101", "011"});
    CHECK(M * BitMatrix::identity(3) == M);
    // (5,3) demo: (I | A^T) against (A | I)
    const BitMatrix G5 = BitMatrix::from_strings({"10011", "01001", "00110"});
    const BitMatrix H5 = BitMatrix::from_strings({"10110", "11001"});
    CHECK((G5 * H5.transposed()).is_zero());
    CHECK_THROWS_AS(M * M, input_error);
}

TEST_CASE("rank, rref, null space, inverse") {
    const BitMatrix H = BitMatrix::from_strings({"10110", "11001"});
    CHECK(H.rank() == 2);
    const BitMatrix N = H.null_space();
    CHECK(N.rows() == 3);
    for (int r = 0; r < N.rows(); ++r) CHECK(H.apply(N.row(r)).is_zero());

    std::mt19937_64 rng(17);
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + static_cast<int>(rng() % 8);
        BitMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set_row(i, rand_word(rng, n));
        if (m.rank() != n) {
            CHECK_THROWS_AS(m.inverted(), input_error);
            continue;
        }
        CHECK(m * m.inverted() == BitMatrix::identity(n));
    }
}

TEST_CASE("null space with rightmost pivots turns (A|I) into (I|A^T)") {
    const BitMatrix A = BitMatrix::from_strings({"010", "101", "001", "001"});
    const BitMatrix H = BitMatrix::hconcat(A, BitMatrix::identity(4));
    const BitMatrix G = H.null_space(/*rightmost_pivots=*/true);
    CHECK(G == BitMatrix::hconcat(BitMatrix::identity(3), A.transposed()));
}

TEST_CASE("malformed matrices are rejected") {
    CHECK_THROWS_AS(BitMatrix::from_strings({"10", "11", "01", "011"}), input_error);
    CHECK_THROWS_AS(BitMatrix::from_strings({}), input_error);
}
