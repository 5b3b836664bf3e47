#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <random>

#include "cubecensus/bigint.hpp"

using cubecensus::BigInt;

namespace {

mpz_class to_mpz(const BigInt& a) { return mpz_class(a.to_string()); }

BigInt random_bigint(std::mt19937_64& rng, int max_limbs) {
    std::uniform_int_distribution<int> limbs(0, max_limbs);
    std::uniform_int_distribution<uint32_t> word;
    std::uniform_int_distribution<int> style(0, 3);
    int n = limbs(rng);
    mpz_class v = 0;
    for (int i = 0; i < n; ++i) {
        uint32_t w = word(rng);
        if (style(rng) == 0) w = 0xFFFFFFFFu; // stress carry chains
        if (style(rng) == 1) w = 0;
        v = (v << 32) + w;
    }
    if (rng() & 1) v = -v;
    return BigInt::from_string(v.get_str());
}

} // namespace

TEST_CASE("decimal round trip and int64 construction") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(123456789).to_string() == "123456789");
    CHECK(BigInt(INT64_MIN).to_string() == "-9223372036854775808");
    CHECK(BigInt(INT64_MAX).to_string() == "9223372036854775807");
    CHECK(BigInt::from_string("-0").to_string() == "0");
    CHECK(BigInt::from_string("00012").to_string() == "12");
    CHECK(BigInt::from_string("-170141183460469231731687303715884105727").to_string() ==
          "-170141183460469231731687303715884105727");
    CHECK_THROWS(BigInt::from_string(""));
    CHECK_THROWS(BigInt::from_string("12a3"));
}

TEST_CASE("int64 bounds") {
    CHECK(BigInt(INT64_MAX).fits_int64());
    CHECK(BigInt(INT64_MIN).fits_int64());
    CHECK(BigInt(INT64_MIN).to_int64() == INT64_MIN);
    BigInt big = BigInt::from_string("9223372036854775808"); // 2^63
    CHECK(!big.fits_int64());
    CHECK((-big).fits_int64());
    CHECK((-big).to_int64() == INT64_MIN);
    CHECK_THROWS(big.to_int64());
}

TEST_CASE("arithmetic agrees with gmp on random operands") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 4000; ++iter) {
        BigInt a = random_bigint(rng, 6);
        BigInt b = random_bigint(rng, 6);
        mpz_class ma = to_mpz(a), mb = to_mpz(b);
        CHECK((a + b).to_string() == mpz_class(ma + mb).get_str());
        CHECK((a - b).to_string() == mpz_class(ma - mb).get_str());
        CHECK((a * b).to_string() == mpz_class(ma * mb).get_str());
        if (!b.is_zero()) {
            BigInt q, r;
            BigInt::divmod(a, b, q, r);
            mpz_class mq, mr;
            mpz_tdiv_qr(mq.get_mpz_t(), mr.get_mpz_t(), ma.get_mpz_t(), mb.get_mpz_t());
            CHECK(q.to_string() == mq.get_str());
            CHECK(r.to_string() == mr.get_str());
            CHECK(q * b + r == a);
        }
        CHECK((BigInt::cmp(a, b) < 0) == (ma < mb));
        CHECK((a == b) == (ma == mb));
        mpz_class mg;
        mpz_gcd(mg.get_mpz_t(), ma.get_mpz_t(), mb.get_mpz_t());
        CHECK(BigInt::gcd(a, b).to_string() == mg.get_str());
    }
}

TEST_CASE("division edge cases") {
    // divisor one limb, dividend many
    BigInt a = BigInt::from_string("340282366920938463463374607431768211456"); // 2^128
    CHECK((a / BigInt(2)).to_string() == "170141183460469231731687303715884105728");
    CHECK((a % BigInt(3)).to_string() == "1");
    // qhat correction paths: near-maximal leading limbs
    BigInt n1 = BigInt::from_string("340282366920938463454151235394913435648"); // 2^128 - 2^64
    BigInt d1 = BigInt::from_string("18446744073709551615");                    // 2^64 - 1
    BigInt q, r;
    BigInt::divmod(n1, d1, q, r);
    CHECK(q * d1 + r == n1);
    CHECK_THROWS(BigInt::divmod(a, BigInt(0), q, r));
    // negative operands: truncation toward zero
    BigInt::divmod(BigInt(-7), BigInt(2), q, r);
    CHECK(q.to_int64() == -3);
    CHECK(r.to_int64() == -1);
    BigInt::divmod(BigInt(7), BigInt(-2), q, r);
    CHECK(q.to_int64() == -3);
    CHECK(r.to_int64() == 1);
}

TEST_CASE("isqrt exact floor") {
    CHECK(BigInt(0).isqrt().to_int64() == 0);
    CHECK(BigInt(1).isqrt().to_int64() == 1);
    CHECK(BigInt(2).isqrt().to_int64() == 1);
    CHECK(BigInt(3).isqrt().to_int64() == 1);
    CHECK(BigInt(4).isqrt().to_int64() == 2);
    CHECK(BigInt(99).isqrt().to_int64() == 9);
    CHECK(BigInt(100).isqrt().to_int64() == 10);
    CHECK_THROWS(BigInt(-4).isqrt());

    std::mt19937_64 rng(999);
    for (int iter = 0; iter < 600; ++iter) {
        BigInt a = random_bigint(rng, 7).abs();
        mpz_class ma = to_mpz(a), ms;
        mpz_sqrt(ms.get_mpz_t(), ma.get_mpz_t());
        CHECK(a.isqrt().to_string() == ms.get_str());
    }
    // squares and near-squares at limb boundaries
    for (long long base : {4294967295LL, 4294967296LL, 4294967297LL}) {
        BigInt b(base);
        BigInt sq = b * b;
        CHECK(sq.isqrt() == b);
        CHECK((sq - BigInt(1)).isqrt() == b - BigInt(1));
        CHECK((sq + BigInt(1)).isqrt() == b);
    }
}

TEST_CASE("perfect square detection") {
    CHECK(BigInt(0).is_perfect_square());
    CHECK(BigInt(1).is_perfect_square());
    CHECK(!BigInt(2).is_perfect_square());
    CHECK(BigInt(4).is_perfect_square());
    CHECK(!BigInt(-4).is_perfect_square());
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 400; ++iter) {
        BigInt a = random_bigint(rng, 4).abs();
        BigInt sq = a * a;
        CHECK(sq.is_perfect_square());
        if (!a.is_zero()) {
            // a^2 + 1 is a square only for a = 0
            CHECK(!(sq + BigInt(1)).is_perfect_square());
        }
    }
}

TEST_CASE("parity and sign helpers") {
    CHECK(BigInt(0).is_even());
    CHECK(!BigInt(3).is_even());
    CHECK(BigInt(-4).is_even());
    CHECK(BigInt(-3).signum() == -1);
    CHECK(BigInt(0).signum() == 0);
    CHECK(BigInt(-5).abs().to_int64() == 5);
    CHECK((-BigInt(5)).to_int64() == -5);
    CHECK(BigInt(123).bit_length() == 7);
    CHECK(BigInt(0).bit_length() == 0);
}
