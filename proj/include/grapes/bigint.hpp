#ifndef GRAPES_BIGINT_HPP
#define GRAPES_BIGINT_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"

namespace grapes {

// Signed arbitrary-precision integer, little-endian base 2^32 magnitude.
// Smith normal form needs exact arithmetic: intermediate entries can outgrow
// any fixed width, and torsion detection cannot tolerate overflow.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) { // NOLINT: implicit by design, mirrors int literals
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ull
                                     : static_cast<unsigned long long>(v);
        while (m) {
            mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
            m >>= 32;
        }
    }

    static BigInt from_string(const std::string& s) {
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw input_error("bad integer '" + s + "'");
        BigInt out;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw input_error("bad integer '" + s + "'");
            out = out * BigInt(10) + BigInt(s[i] - '0');
        }
        if (neg) out.sign_ = -out.sign_;
        return out;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long m = magnitude_u64();
        if (sign_ >= 0) return m <= 0x7fffffffffffffffull;
        return m <= 0x8000000000000000ull;
    }

    long long to_int64() const {
        if (!fits_int64()) throw internal_error("BigInt does not fit in 64 bits");
        unsigned long long m = magnitude_u64();
        return sign_ < 0 ? -static_cast<long long>(m - 1) - 1 : static_cast<long long>(m);
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division, matching built-in integers: the remainder takes
    // the dividend's sign.
    friend void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw internal_error("BigInt division by zero");
        if (a.sign_ == 0) { q = BigInt(); r = BigInt(); return; }
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q = BigInt();
        r = BigInt();
        if (!qm.empty()) {
            q.mag_ = std::move(qm);
            q.sign_ = a.sign_ * b.sign_;
        }
        if (!rm.empty()) {
            r.mag_ = std::move(rm);
            r.sign_ = a.sign_;
        }
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    // |a| < |b|
    static bool abs_less(const BigInt& a, const BigInt& b) {
        return cmp_mag(a.mag_, b.mag_) < 0;
    }

    std::string str() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            // divide magnitude by 10^9 in place
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
                rem = cur % 1000000000ull;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int i = 0; i < 9; ++i) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out;
        if (sign_ < 0) out += '-';
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

private:
    unsigned long long magnitude_u64() const {
        unsigned long long m = 0;
        if (mag_.size() > 0) m = mag_[0];
        if (mag_.size() > 1) m |= static_cast<unsigned long long>(mag_[1]) << 32;
        return m;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
            std::uint64_t s = carry;
            if (i < a.size()) s += a[i];
            if (i < b.size()) s += b[i];
            r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
            carry = s >> 32;
        }
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = 0;
            if (cur < 0) {
                cur += 1ll << 32;
                borrow = 1;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size() || carry; ++j) {
                std::uint64_t cur = r[i + j] + carry;
                if (j < b.size()) cur += static_cast<std::uint64_t>(a[i]) * b[j];
                r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Schoolbook binary long division on magnitudes.
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        if (cmp_mag(a, b) < 0) {
            q.clear();
            r = a;
            return;
        }
        std::size_t bits = a.size() * 32;
        q.assign(a.size(), 0);
        r.clear();
        for (std::size_t i = bits; i-- > 0;) {
            // r = r << 1 | bit_i(a)
            std::uint32_t carry = (a[i / 32] >> (i % 32)) & 1u;
            for (std::size_t w = 0; w < r.size(); ++w) {
                std::uint32_t nxt = r[w] >> 31;
                r[w] = (r[w] << 1) | carry;
                carry = nxt;
            }
            if (carry) r.push_back(carry);
            if (cmp_mag(r, b) >= 0) {
                r = sub_mag(r, b);
                q[i / 32] |= 1u << (i % 32);
            }
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }

    int sign_ = 0;                   // -1, 0, +1
    std::vector<std::uint32_t> mag_; // no trailing zero limbs; empty iff zero
};

// 64-bit integer that refuses to overflow. smith_normal_form runs on these
// first and falls back to BigInt when a computation throws.
struct CheckedInt64 {
    long long v = 0;

    CheckedInt64() = default;
    CheckedInt64(long long x) : v(x) {} // NOLINT: implicit by design

    bool is_zero() const { return v == 0; }

    CheckedInt64 abs() const {
        if (v == std::numeric_limits<long long>::min()) throw std::overflow_error("abs");
        return v < 0 ? -v : v;
    }

    CheckedInt64 operator-() const {
        if (v == std::numeric_limits<long long>::min()) throw std::overflow_error("negate");
        return -v;
    }

    friend CheckedInt64 operator+(CheckedInt64 a, CheckedInt64 b) {
        long long r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw std::overflow_error("add");
        return r;
    }
    friend CheckedInt64 operator-(CheckedInt64 a, CheckedInt64 b) {
        long long r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw std::overflow_error("sub");
        return r;
    }
    friend CheckedInt64 operator*(CheckedInt64 a, CheckedInt64 b) {
        long long r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw std::overflow_error("mul");
        return r;
    }
    friend CheckedInt64 operator/(CheckedInt64 a, CheckedInt64 b) {
        if (b.v == 0) throw internal_error("division by zero");
        if (a.v == std::numeric_limits<long long>::min() && b.v == -1)
            throw std::overflow_error("div");
        return a.v / b.v;
    }
    friend CheckedInt64 operator%(CheckedInt64 a, CheckedInt64 b) {
        if (b.v == 0) throw internal_error("division by zero");
        if (a.v == std::numeric_limits<long long>::min() && b.v == -1)
            throw std::overflow_error("mod");
        return a.v % b.v;
    }
    friend bool operator==(CheckedInt64 a, CheckedInt64 b) { return a.v == b.v; }
    friend bool operator!=(CheckedInt64 a, CheckedInt64 b) { return a.v != b.v; }

    static bool abs_less(CheckedInt64 a, CheckedInt64 b) {
        unsigned long long ma = a.v < 0 ? ~static_cast<unsigned long long>(a.v) + 1 : a.v;
        unsigned long long mb = b.v < 0 ? ~static_cast<unsigned long long>(b.v) + 1 : b.v;
        return ma < mb;
    }
};

} // namespace grapes

#endif
