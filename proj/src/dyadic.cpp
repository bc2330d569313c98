#include "ggt/dyadic.hpp"

#include <stdexcept>

namespace ggt {

void Dyadic::reduce() {
    while (exp_ > 0 && !num_.is_zero() && !num_.is_odd()) {
        num_ = num_.shr(1);
        --exp_;
    }
    if (num_.is_zero()) exp_ = 0;
}

Dyadic Dyadic::parse(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Dyadic(BigInt(text), 0);
    BigInt num{text.substr(0, slash)};
    std::string_view den = text.substr(slash + 1);
    size_t caret = den.find('^');
    if (caret != std::string_view::npos) {
        if (den.substr(0, caret) != "2") throw std::invalid_argument("Dyadic: base must be 2");
        BigInt e{den.substr(caret + 1)};
        if (e.is_negative() || e.bit_length() > 20) throw std::invalid_argument("Dyadic: bad exponent");
        return Dyadic(std::move(num), static_cast<unsigned>(e.to_ll()));
    }
    BigInt d{den};
    if (d <= BigInt(0)) throw std::invalid_argument("Dyadic: bad denominator");
    unsigned e = d.bit_length() - 1;
    if (d != BigInt::pow2(e)) throw std::invalid_argument("Dyadic: denominator not a power of 2");
    return Dyadic(std::move(num), e);
}

Dyadic Dyadic::operator-() const {
    Dyadic r = *this;
    r.num_ = -r.num_;
    return r;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
    return Dyadic(num_.shl(e - exp_) + o.num_.shl(e - o.exp_), e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
    return Dyadic(num_ * o.num_, exp_ + o.exp_);
}

Dyadic Dyadic::mul_pow2(int k) const {
    if (k >= 0) {
        if (static_cast<unsigned>(k) >= exp_) return Dyadic(num_.shl(k - exp_), 0);
        return Dyadic(num_, exp_ - k);
    }
    return Dyadic(num_, exp_ + static_cast<unsigned>(-k));
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
    unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
    return num_.shl(e - exp_) <=> o.num_.shl(e - o.exp_);
}

BigInt Dyadic::floor() const {
    if (exp_ == 0) return num_;
    if (!num_.is_negative()) return num_.shr(exp_);
    // shr truncates toward zero; for negative non-integers step one down
    BigInt q = num_.shr(exp_);
    if (q.shl(exp_) != num_) q -= BigInt(1);
    return q;
}

Dyadic Dyadic::mod1() const { return *this - Dyadic(floor(), 0); }

std::string Dyadic::to_string() const {
    if (exp_ == 0) return num_.to_string();
    return num_.to_string() + "/2^" + std::to_string(exp_);
}

} // namespace ggt
