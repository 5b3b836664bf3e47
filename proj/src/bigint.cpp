#include "cubecensus/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace cubecensus {

namespace {
constexpr uint64_t kBase = uint64_t(1) << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on LLONG_MIN
    uint64_t u = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    mag_.push_back(static_cast<uint32_t>(u));
    if (u >> 32) mag_.push_back(static_cast<uint32_t>(u >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& lo = a.size() >= b.size() ? a : b;
    const std::vector<uint32_t>& hi = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(lo.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < lo.size(); ++i) {
        uint64_t s = carry + lo[i] + (i < hi.size() ? hi[i] : 0);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r[lo.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    assert(cmp_mag(a, b) >= 0);
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = int64_t(a[i]) - borrow - (i < b.size() ? int64_t(b[i]) : 0);
        if (s < 0) {
            s += int64_t(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t s = uint64_t(r[i + j]) + ai * b[j] + carry;
            r[i + j] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        size_t p = i + b.size();
        while (carry) {
            uint64_t s = uint64_t(r[p]) + carry;
            r[p] = static_cast<uint32_t>(s);
            carry = s >> 32;
            ++p;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.clear();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    const size_t n = b.size(), m = a.size() - n;
    int shift = 0;
    while (((b[n - 1] << shift) & 0x80000000u) == 0) ++shift;

    // normalized copies
    std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
    if (shift == 0) {
        for (size_t i = 0; i < a.size(); ++i) u[i] = a[i];
        for (size_t i = 0; i < n; ++i) v[i] = b[i];
    } else {
        for (size_t i = 0; i < a.size(); ++i) {
            u[i] |= a[i] << shift;
            u[i + 1] = a[i] >> (32 - shift);
        }
        for (size_t i = 0; i < n; ++i) {
            v[i] = (b[i] << shift) | (i > 0 ? b[i - 1] >> (32 - shift) : 0);
        }
    }

    q.assign(m + 1, 0);
    const uint64_t vhi = v[n - 1], vlo = v[n - 2];
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (uint64_t(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / vhi;
        uint64_t rhat = num % vhi;
        while (qhat >= kBase || qhat * vlo > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vhi;
            if (rhat >= kBase) break;
        }
        // multiply-subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = int64_t(u[i + j]) - int64_t(p & 0xFFFFFFFFu) - borrow;
            if (t < 0) {
                t += int64_t(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = int64_t(u[j + n]) - int64_t(carry) - borrow;
        if (t < 0) {
            // qhat was one too large: add back
            t += int64_t(kBase);
            u[j + n] = static_cast<uint32_t>(t);
            --qhat;
            uint64_t c = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = uint64_t(u[i + j]) + v[i] + c;
                u[i + j] = static_cast<uint32_t>(s);
                c = s >> 32;
            }
            u[j + n] = static_cast<uint32_t>(u[j + n] + c);
        } else {
            u[j + n] = static_cast<uint32_t>(t);
        }
        q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();

    r.assign(n, 0);
    if (shift == 0) {
        for (size_t i = 0; i < n; ++i) r[i] = u[i];
    } else {
        for (size_t i = 0; i < n; ++i) {
            r[i] = (u[i] >> shift) | (uint64_t(u[i + 1]) << (32 - shift));
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) {
        *this = o;
        return *this;
    }
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) {
            sign_ = 0;
            mag_.clear();
        } else if (c > 0) {
            mag_ = sub_mag(mag_, o.mag_);
        } else {
            mag_ = sub_mag(o.mag_, mag_);
            sign_ = o.sign_;
        }
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) {
    BigInt neg = o;
    neg.sign_ = -neg.sign_;
    return *this += neg;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    return r;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    *this = *this * o;
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt& BigInt::operator/=(const BigInt& o) {
    *this = *this / o;
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    *this = *this % o;
    return *this;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool BigInt::is_even() const {
    return mag_.empty() || (mag_[0] & 1u) == 0;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    uint64_t u = (uint64_t(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return u <= uint64_t(INT64_MAX);
    return u <= uint64_t(INT64_MAX) + 1;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    if (mag_.empty()) return 0;
    uint64_t u = mag_[0];
    if (mag_.size() == 2) u |= uint64_t(mag_[1]) << 32;
    if (sign_ < 0) return static_cast<long long>(~u + 1);
    return static_cast<long long>(u);
}

std::size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    uint32_t top = mag_.back();
    std::size_t bits = (mag_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

uint32_t BigInt::div_small(uint32_t d) {
    uint64_t rem = 0;
    for (size_t i = mag_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | mag_[i];
        mag_[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<uint32_t>(rem);
}

void BigInt::mul_small_add(uint32_t m, uint32_t a) {
    uint64_t carry = a;
    for (auto& limb : mag_) {
        uint64_t s = uint64_t(limb) * m + carry;
        limb = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    if (!mag_.empty()) sign_ = sign_ == 0 ? 1 : sign_;
    trim();
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    r.sign_ = 1;
    // consume in chunks of 9 decimal digits
    while (i < s.size()) {
        size_t take = std::min<size_t>(9, s.size() - i);
        uint32_t chunk = 0, pow = 1;
        for (size_t j = 0; j < take; ++j) {
            char c = s[i + j];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            chunk = chunk * 10 + uint32_t(c - '0');
            pow *= 10;
        }
        r.mul_small_add(pow, chunk);
        i += take;
    }
    r.trim();
    if (neg && !r.mag_.empty()) r.sign_ = -1;
    return r;
}

std::string BigInt::to_string() const {
    if (mag_.empty()) return "0";
    BigInt t = *this;
    std::vector<uint32_t> chunks;
    while (!t.mag_.empty()) chunks.push_back(t.div_small(1000000000u));
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out += std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out.append(9 - part.size(), '0');
        out += part;
    }
    return out;
}

BigInt BigInt::isqrt() const {
    if (sign_ < 0) throw std::domain_error("BigInt: isqrt of negative");
    if (mag_.empty()) return BigInt();
    if (bit_length() <= 52) {
        // double sqrt as a seed, adjusted to the exact floor
        long long v = to_int64();
        long long x = static_cast<long long>(std::max(0.0, std::floor(__builtin_sqrt(double(v)))));
        while (x > 0 && x * x > v) --x;
        while ((x + 1) * (x + 1) <= v) ++x;
        return BigInt(x);
    }
    // initial overestimate: 2^ceil(bits/2)
    BigInt x(1);
    {
        std::size_t half = (bit_length() + 1) / 2;
        std::vector<uint32_t> m(half / 32 + 1, 0);
        m[half / 32] = uint32_t(1) << (half % 32);
        x.mag_ = std::move(m);
        x.sign_ = 1;
    }
    // Newton iteration, monotone decreasing once above the root
    while (true) {
        BigInt y = (x + *this / x);
        y.div_small(2);
        if (cmp(y, x) >= 0) break;
        x = std::move(y);
    }
    return x;
}

bool BigInt::is_perfect_square() const {
    if (sign_ < 0) return false;
    if (mag_.empty()) return true;
    // quick residue filter mod 16
    static const bool sq16[16] = {true, true, false, false, true,  false, false, false,
                                  false, true, false, false, false, false, false, false};
    if (!sq16[mag_[0] & 15u]) return false;
    BigInt r = isqrt();
    return r * r == *this;
}

} // namespace cubecensus
