#include <doctest.h>

#include <random>

#include "lzlef/intmatrix.hpp"
#include "oracles.hpp"

using namespace lzlef;

namespace {

IntegerMatrix random_matrix(std::mt19937& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> e(lo, hi);
    IntegerMatrix M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M.at(i, j) = e(rng);
    return M;
}

}  // namespace

TEST_CASE("determinant") {
    CHECK(determinant(IntegerMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(determinant(IntegerMatrix(2, 3)), std::invalid_argument);

    SUBCASE("matches permutation expansion") {
        std::mt19937 rng(17);
        for (int it = 0; it < 120; ++it) {
            const int n = 1 + it % 6;
            const auto M = random_matrix(rng, n, -3, 3);
            CHECK(determinant(M) == oracles::det_expansion(M));
        }
    }

    SUBCASE("big-integer path agrees with the fast path") {
        std::mt19937 rng(19);
        for (int it = 0; it < 25; ++it) {
            const int n = 4 + it % 3;
            const auto M = random_matrix(rng, n, -4, 4);
            // shifting one entry by a huge multiple of nothing keeps values
            // big enough to force the mpz path in a scaled copy
            IntegerMatrix big(n, n);
            BigInt scale = BigInt("100000000000000000000");  // > 2^63
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) big.at(i, j) = M.at(i, j) * scale;
            BigInt expected = oracles::det_expansion(M);
            for (int k = 0; k < n; ++k) expected *= scale;
            CHECK(determinant(big) == expected);
        }
    }
}

TEST_CASE("permanent") {
    CHECK(permanent(IntegerMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(permanent(IntegerMatrix(3, 2)), std::invalid_argument);
    {
        IntegerMatrix M(1, 1);
        M.at(0, 0) = -1;
        CHECK_THROWS_AS(permanent(M), std::invalid_argument);
    }

    SUBCASE("matches permutation expansion") {
        std::mt19937 rng(23);
        for (int it = 0; it < 80; ++it) {
            const int n = 1 + it % 6;
            const auto M = random_matrix(rng, n, 0, 2);
            CHECK(permanent(M) == oracles::per_expansion(M));
        }
    }

    SUBCASE("Ryser and memo paths agree") {
        std::mt19937 rng(29);
        for (int it = 0; it < 10; ++it) {
            // 22x22 0/1 uses the memo path; its 20x20 leading block uses Ryser
            const auto M = random_matrix(rng, 22, 0, 1);
            IntegerMatrix small(20, 20);
            for (int i = 0; i < 20; ++i)
                for (int j = 0; j < 20; ++j) small.at(i, j) = M.at(i, j);
            IntegerMatrix wide(20, 20);
            for (int i = 0; i < 20; ++i)
                for (int j = 0; j < 20; ++j) wide.at(i, j) = small.at(i, j) * 2;
            // wide is not 0/1, so it takes the memo path, and per scales by 2^20
            CHECK(permanent(wide) == permanent(small) * BigInt(1 << 20));
        }
    }
}

TEST_CASE("rank") {
    SUBCASE("zero and identity") {
        CHECK(rank(IntegerMatrix(4, 6), 0) == 0);
        CHECK(rank(IntegerMatrix(4, 6), 7) == 0);
        IntegerMatrix I5(5, 5);
        for (int i = 0; i < 5; ++i) I5.at(i, i) = 1;
        CHECK(rank(I5, 0) == 5);
        CHECK(rank(I5, 2) == 5);
    }

    SUBCASE("characteristic must be 0 or prime") {
        CHECK_THROWS_AS(rank(IntegerMatrix(2, 2), 6), std::invalid_argument);
        CHECK_THROWS_AS(rank(IntegerMatrix(2, 2), 1), std::invalid_argument);
        CHECK_NOTHROW(rank(IntegerMatrix(2, 2), 101));
    }

    SUBCASE("agrees with rational elimination") {
        std::mt19937 rng(31);
        for (int it = 0; it < 60; ++it) {
            const int n = 2 + it % 5;
            IntegerMatrix M(n, n + 1 + it % 2);
            std::uniform_int_distribution<int> e(-2, 2);
            for (int i = 0; i < M.rows(); ++i)
                for (int j = 0; j < M.cols(); ++j) M.at(i, j) = e(rng);
            CHECK(rank(M, 0) == oracles::rank_rational(M));
        }
    }

    SUBCASE("rank drops exactly at dividing primes") {
        IntegerMatrix M(2, 2);
        M.at(0, 0) = 2;
        M.at(0, 1) = 0;
        M.at(1, 0) = 0;
        M.at(1, 1) = 15;
        CHECK(rank(M, 0) == 2);
        CHECK(rank(M, 2) == 1);
        CHECK(rank(M, 3) == 1);
        CHECK(rank(M, 5) == 1);
        CHECK(rank(M, 7) == 2);
    }

    SUBCASE("mod-p rank never exceeds rational rank") {
        std::mt19937 rng(37);
        for (int it = 0; it < 40; ++it) {
            const auto M = random_matrix(rng, 4 + it % 3, -3, 3);
            const int r0 = rank(M, 0);
            for (long p : {2L, 3L, 5L}) CHECK(rank(M, p) <= r0);
        }
    }
}

TEST_CASE("dump format") {
    IntegerMatrix M(2, 3);
    M.at(0, 0) = 1;
    M.at(0, 2) = -7;
    M.at(1, 1) = BigInt("123456789012345678901234567890");
    const std::string text = M.dump();
    CHECK(text == "2 3\n1 0 -7\n0 123456789012345678901234567890 0\n");
    CHECK(IntegerMatrix::from_dump(text) == M);
    CHECK_THROWS_AS(IntegerMatrix::from_dump("2 2\n1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(IntegerMatrix::from_dump("x"), std::invalid_argument);
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK(is_prime(1000003));
    CHECK(!is_prime(1));
    CHECK(!is_prime(0));
    CHECK(!is_prime(-5));
    CHECK(!is_prime(1000001));
}
