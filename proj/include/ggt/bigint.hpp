#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ggt {

// Arbitrary-precision signed integer. Only the operations the toolkit needs:
// ring arithmetic, comparisons, bit shifts and decimal I/O. Magnitude is a
// little-endian vector of 32-bit limbs; sign_ is -1, 0 or +1 and is 0 exactly
// when the magnitude is empty.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(std::string_view decimal);

    static BigInt pow2(unsigned k);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_odd() const { return sign_ != 0 && (mag_[0] & 1u); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    // Shifts act on the magnitude; sign is preserved. shr truncates toward 0.
    BigInt shl(unsigned bits) const;
    BigInt shr(unsigned bits) const;

    // Number of bits in the magnitude (0 for zero).
    unsigned bit_length() const;
    // True when the magnitude's lowest `bits` bits are all zero.
    bool divisible_by_pow2(unsigned bits) const;

    std::strong_ordering operator<=>(const BigInt& o) const;
    bool operator==(const BigInt& o) const = default;

    int sign() const { return sign_; }
    // Valid only when the value fits; callers guard with bit_length().
    long long to_ll() const;
    double to_double() const;
    std::string to_string() const;

    friend BigInt gcd(BigInt a, BigInt b);

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

// Exact rational p/q, q > 0, reduced. Built on BigInt so sweeps never overflow.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    Rat(BigInt num, BigInt den);

    static Rat from_ll(long long p, long long q) { return Rat(BigInt(p), BigInt(q)); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_integer() const { return den_ == BigInt(1); }

    Rat operator-() const;
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;

    std::strong_ordering operator<=>(const Rat& o) const;
    bool operator==(const Rat& o) const = default;

    Rat abs() const { return is_negative() ? -*this : *this; }
    double to_double() const { return num_.to_double() / den_.to_double(); }
    // "p" when integral, else "p/q".
    std::string to_string() const;

private:
    BigInt num_, den_;
    void reduce();
};

} // namespace ggt
