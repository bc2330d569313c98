#pragma once

#include "ggt/bigint.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace ggt {

// Exact dyadic rational num/2^exp, kept reduced: exp == 0 or num odd.
// These are the only numbers the circle-map family ever produces, and every
// operation below is closed on them.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long long v) : num_(v), exp_(0) {}
    Dyadic(BigInt num, unsigned exp) : num_(std::move(num)), exp_(exp) { reduce(); }

    static Dyadic from_parts(long long num, unsigned exp) { return Dyadic(BigInt(num), exp); }
    // Accepts "p/2^k", "p/q" with q a power of two, or a plain integer.
    static Dyadic parse(std::string_view text);

    const BigInt& num() const { return num_; }
    unsigned exp() const { return exp_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_integer() const { return exp_ == 0; }

    Dyadic operator-() const;
    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator*(const Dyadic& o) const;
    Dyadic& operator+=(const Dyadic& o) { *this = *this + o; return *this; }
    Dyadic& operator-=(const Dyadic& o) { *this = *this - o; return *this; }

    // Multiplication by 2^k, k possibly negative; exact (the result is dyadic).
    Dyadic mul_pow2(int k) const;

    Dyadic half() const { return mul_pow2(-1); }

    std::strong_ordering operator<=>(const Dyadic& o) const;
    bool operator==(const Dyadic& o) const = default;

    BigInt floor() const;
    // Fractional part in [0, 1).
    Dyadic mod1() const;

    double to_double() const { return num_.to_double() / BigInt::pow2(exp_).to_double(); }
    Rat to_rat() const { return Rat(num_, BigInt::pow2(exp_)); }
    // "p" when integral, else "p/2^k".
    std::string to_string() const;

private:
    BigInt num_;
    unsigned exp_;
    void reduce();
};

} // namespace ggt
