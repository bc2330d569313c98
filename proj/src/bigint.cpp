#include "ggt/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ggt {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    while (m) {
        mag_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

BigInt::BigInt(std::string_view s) {
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty literal");
    BigInt acc;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
        acc = acc * BigInt(10) + BigInt(c - '0');
    }
    *this = neg ? -acc : acc;
}

BigInt BigInt::pow2(unsigned k) { return BigInt(1).shl(k); }

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& lo = a.size() < b.size() ? a : b;
    const auto& hi = a.size() < b.size() ? b : a;
    std::vector<uint32_t> r(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (d < 0) {
            d += int64_t(1) << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.sign_ = sign_;
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = sub_mag(mag_, o.mag_);
            r.sign_ = sign_;
        } else {
            r.mag_ = sub_mag(o.mag_, mag_);
            r.sign_ = o.sign_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    BigInt r;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.mag_.size(); ++j) {
            uint64_t cur = r.mag_[i + j] + carry +
                           static_cast<uint64_t>(mag_[i]) * o.mag_[j];
            r.mag_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + o.mag_.size();
        while (carry) {
            uint64_t cur = r.mag_[k] + carry;
            r.mag_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.sign_ = sign_ * o.sign_;
    r.trim();
    return r;
}

BigInt BigInt::shl(unsigned bits) const {
    if (sign_ == 0 || bits == 0) return *this;
    unsigned limbs = bits / 32, rem = bits % 32;
    BigInt r;
    r.sign_ = sign_;
    r.mag_.assign(mag_.size() + limbs + 1, 0);
    for (size_t i = 0; i < mag_.size(); ++i) {
        uint64_t v = static_cast<uint64_t>(mag_[i]) << rem;
        r.mag_[i + limbs] |= static_cast<uint32_t>(v);
        r.mag_[i + limbs + 1] |= static_cast<uint32_t>(v >> 32);
    }
    r.trim();
    return r;
}

BigInt BigInt::shr(unsigned bits) const {
    if (sign_ == 0) return *this;
    unsigned limbs = bits / 32, rem = bits % 32;
    if (limbs >= mag_.size()) return BigInt();
    BigInt r;
    r.sign_ = sign_;
    r.mag_.assign(mag_.begin() + limbs, mag_.end());
    if (rem) {
        for (size_t i = 0; i + 1 < r.mag_.size(); ++i)
            r.mag_[i] = (r.mag_[i] >> rem) | (r.mag_[i + 1] << (32 - rem));
        r.mag_.back() >>= rem;
    }
    r.trim();
    return r;
}

unsigned BigInt::bit_length() const {
    if (sign_ == 0) return 0;
    uint32_t top = mag_.back();
    unsigned b = 0;
    while (top) {
        ++b;
        top >>= 1;
    }
    return static_cast<unsigned>((mag_.size() - 1) * 32) + b;
}

bool BigInt::divisible_by_pow2(unsigned bits) const {
    if (sign_ == 0) return true;
    unsigned limbs = bits / 32, rem = bits % 32;
    if (limbs >= mag_.size()) return false; // nonzero value smaller than 2^bits
    for (unsigned i = 0; i < limbs; ++i)
        if (mag_[i] != 0) return false;
    return rem == 0 || (mag_[limbs] & ((uint32_t(1) << rem) - 1)) == 0;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    int c = cmp_mag(mag_, o.mag_) * sign_;
    return c <=> 0;
}

long long BigInt::to_ll() const {
    unsigned long long m = 0;
    for (size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
    return sign_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
}

double BigInt::to_double() const {
    double m = 0;
    for (size_t i = mag_.size(); i-- > 0;) m = m * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -m : m;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        // divide magnitude by 10^9, collecting the remainder
        uint64_t rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = a.sign_ == 0 ? 0 : 1;
    b.sign_ = b.sign_ == 0 ? 0 : 1;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    unsigned shift = 0;
    while (!a.is_odd() && !b.is_odd()) {
        a = a.shr(1);
        b = b.shr(1);
        ++shift;
    }
    while (!a.is_odd()) a = a.shr(1);
    while (!b.is_zero()) {
        while (!b.is_odd()) b = b.shr(1);
        if (a > b) std::swap(a, b);
        b = b - a;
    }
    return a.shl(shift);
}

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("Rat: zero denominator");
    reduce();
}

void Rat::reduce() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = gcd(num_, den_);
    if (g != BigInt(1)) {
        // exact by construction; strip g via repeated shift-free division:
        // g divides both, so divide through using multiplication-free loop.
        // BigInt has no general division, so divide by g with binary long division.
        auto divexact = [](const BigInt& x, const BigInt& g) {
            BigInt q(0), r(0);
            BigInt ax = x.is_negative() ? -x : x;
            for (unsigned i = ax.bit_length(); i-- > 0;) {
                r = r.shl(1);
                if (!ax.shr(i).is_odd()) {
                    // bit is 0
                } else {
                    r += BigInt(1);
                }
                q = q.shl(1);
                if (r >= g) {
                    r -= g;
                    q += BigInt(1);
                }
            }
            return x.is_negative() ? -q : q;
        };
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
}

Rat Rat::operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
}

Rat Rat::operator+(const Rat& o) const { return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
Rat Rat::operator-(const Rat& o) const { return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
Rat Rat::operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }

Rat Rat::operator/(const Rat& o) const {
    if (o.num_.is_zero()) throw std::invalid_argument("Rat: division by zero");
    return Rat(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
    return num_ * o.den_ <=> o.num_ * den_;
}

std::string Rat::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

} // namespace ggt
