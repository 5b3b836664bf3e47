#ifndef CUBECENSUS_BIGINT_HPP
#define CUBECENSUS_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cubecensus {

// Signed arbitrary-precision integer, base 2^32 limbs.
// Covers what the exact pipelines need: ring arithmetic, truncated
// division, gcd, decimal I/O, floor square root.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);
    std::string to_string() const;

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_even() const;
    int signum() const { return sign_; }

    bool fits_int64() const;
    long long to_int64() const; // throws std::overflow_error if out of range

    std::size_t bit_length() const; // 0 for zero

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    BigInt& operator/=(const BigInt& o);
    BigInt& operator%=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    // Truncated division: q = trunc(a/b), r = a - q*b (r has the sign of a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    static BigInt gcd(BigInt a, BigInt b); // non-negative

    // floor(sqrt(*this)); requires *this >= 0.
    BigInt isqrt() const;
    bool is_perfect_square() const;

    static int cmp(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

private:
    int sign_ = 0;                // -1, 0, +1
    std::vector<uint32_t> mag_;   // little-endian limbs, no leading zeros

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b); // a >= b
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
    uint32_t div_small(uint32_t d); // in-place magnitude divide, returns remainder
    void mul_small_add(uint32_t m, uint32_t a); // magnitude = magnitude*m + a
};

} // namespace cubecensus

#endif
