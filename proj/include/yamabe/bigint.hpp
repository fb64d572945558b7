#ifndef YAMABE_BIGINT_HPP
#define YAMABE_BIGINT_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace yamabe {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
// Coefficients in this project stay small (a few hundred bits), so the
// schoolbook algorithms below are more than fast enough and keep the
// implementation auditable.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v < 0) {
            neg_ = true;
            // avoid overflow on LLONG_MIN
            unsigned long long m = static_cast<unsigned long long>(-(v + 1)) + 1ull;
            set_from_u64(m);
        } else {
            set_from_u64(static_cast<unsigned long long>(v));
        }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(const std::string& s) {
        BigInt r;
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = (s[i] == '-');
            ++i;
        }
        if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r.mul_small(10);
            r.add_small(static_cast<std::uint32_t>(s[i] - '0'));
        }
        r.neg_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool negative() const { return neg_; }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a, b);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r = add_mag(a, b);
            r.neg_ = a.neg_ && !r.is_zero();
            return r;
        }
        int c = cmp_mag(a, b);
        if (c == 0) return BigInt();
        if (c > 0) {
            BigInt r = sub_mag(a, b);
            r.neg_ = a.neg_;
            return r;
        }
        BigInt r = sub_mag(b, a);
        r.neg_ = b.neg_;
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                    r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
        }
        r.trim();
        r.neg_ = (a.neg_ != b.neg_) && !r.is_zero();
        return r;
    }

    // Truncated division (quotient rounds toward zero, as in C).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        q = BigInt();
        r = BigInt();
        int bits = a.bit_length();
        for (int i = bits - 1; i >= 0; --i) {
            r.shl1();
            if (a.bit(i)) r.set_bit0();
            if (cmp_mag(r, b) >= 0) {
                r = sub_mag(r, b);
                q.set_bit(i);
            }
        }
        q.trim();
        r.trim();
        q.neg_ = (a.neg_ != b.neg_) && !q.is_zero();
        r.neg_ = a.neg_ && !r.is_zero();
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

    static BigInt gcd(BigInt a, BigInt b) {
        a.neg_ = false;
        b.neg_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.neg_ = false;
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        BigInt t = *this;
        std::string out;
        while (!t.is_zero()) {
            std::uint32_t rem = t.div_small(1000000000u);
            for (int d = 0; d < 9; ++d) {
                out.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (out.size() > 1 && out.back() == '0') out.pop_back();
        if (neg_) out.push_back('-');
        std::reverse(out.begin(), out.end());
        return out;
    }

    long double to_long_double() const {
        long double v = 0.0L;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            v = v * 4294967296.0L + static_cast<long double>(limbs_[i]);
        return neg_ ? -v : v;
    }

    // Fits in long long? (used for fast paths and sanity checks)
    bool fits_ll() const { return bit_length() <= 62; }
    long long to_ll() const {
        long long v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
        return neg_ ? -v : v;
    }

    int bit_length() const {
        if (limbs_.empty()) return 0;
        int top = 32;
        std::uint32_t h = limbs_.back();
        while (top > 0 && !(h & (1u << (top - 1)))) --top;
        return static_cast<int>(32 * (limbs_.size() - 1)) + top;
    }

private:
    std::vector<std::uint32_t> limbs_;  // little-endian, no trailing zeros
    bool neg_ = false;

    void set_from_u64(unsigned long long m) {
        limbs_.clear();
        while (m) {
            limbs_.push_back(static_cast<std::uint32_t>(m));
            m >>= 32;
        }
    }
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) neg_ = false;
    }
    static int cmp_mag(const BigInt& a, const BigInt& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        }
        return 0;
    }
    static BigInt add_mag(const BigInt& a, const BigInt& b) {
        BigInt r;
        const auto& x = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
        const auto& y = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
        r.limbs_.resize(x.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::uint64_t cur = carry + x[i] + (i < y.size() ? y[i] : 0);
            r.limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r.limbs_[x.size()] = static_cast<std::uint32_t>(carry);
        r.trim();
        return r;
    }
    // requires |a| >= |b|
    static BigInt sub_mag(const BigInt& a, const BigInt& b) {
        BigInt r;
        r.limbs_ = a.limbs_;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r.limbs_[i]) - borrow -
                               (i < b.limbs_.size() ? b.limbs_[i] : 0);
            borrow = 0;
            if (cur < 0) {
                cur += (1ll << 32);
                borrow = 1;
            }
            r.limbs_[i] = static_cast<std::uint32_t>(cur);
        }
        r.trim();
        return r;
    }
    bool bit(int i) const {
        std::size_t limb = static_cast<std::size_t>(i) / 32;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % 32)) & 1u;
    }
    void set_bit(int i) {
        std::size_t limb = static_cast<std::size_t>(i) / 32;
        if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
        limbs_[limb] |= (1u << (i % 32));
    }
    void set_bit0() { set_bit(0); }
    void shl1() {
        std::uint32_t carry = 0;
        for (auto& l : limbs_) {
            std::uint32_t nc = l >> 31;
            l = (l << 1) | carry;
            carry = nc;
        }
        if (carry) limbs_.push_back(carry);
    }
    void mul_small(std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& l : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(l) * f + carry;
            l = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        while (carry) {
            limbs_.push_back(static_cast<std::uint32_t>(carry));
            carry >>= 32;
        }
        trim();
    }
    void add_small(std::uint32_t v) {
        std::uint64_t carry = v;
        for (std::size_t i = 0; i < limbs_.size() && carry; ++i) {
            std::uint64_t cur = limbs_[i] + carry;
            limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }
    // divides in place by a small divisor, returns remainder
    std::uint32_t div_small(std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<std::uint32_t>(rem);
    }
};

}  // namespace yamabe

#endif
