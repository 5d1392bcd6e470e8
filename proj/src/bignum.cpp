#include "tempo/bignum.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace tempo {

BigNat::BigNat(uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
        if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
    }
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

uint64_t BigNat::as_u64() const {
    assert(fits_u64());
    uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

size_t BigNat::bit_length() const {
    if (limbs_.empty()) return 0;
    uint32_t top = limbs_.back();
    size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

int BigNat::cmp(const BigNat& a, const BigNat& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigNat& BigNat::operator+=(const BigNat& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t sum = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0u);
        limbs_[i] = static_cast<uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    return *this;
}

BigNat BigNat::operator+(const BigNat& o) const {
    BigNat r = *this;
    r += o;
    return r;
}

BigNat& BigNat::operator-=(const BigNat& o) {
    assert(cmp(*this, o) >= 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        int64_t diff = static_cast<int64_t>(limbs_[i]) - borrow - (i < o.limbs_.size() ? o.limbs_[i] : 0u);
        if (diff < 0) {
            diff += int64_t{1} << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        limbs_[i] = static_cast<uint32_t>(diff);
    }
    assert(borrow == 0);
    trim();
    return *this;
}

BigNat BigNat::operator-(const BigNat& o) const {
    BigNat r = *this;
    r -= o;
    return r;
}

BigNat BigNat::operator*(const BigNat& o) const {
    if (is_zero() || o.is_zero()) return BigNat();
    BigNat r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] + carry +
                           static_cast<uint64_t>(limbs_[i]) * o.limbs_[j];
            r.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r.limbs_[i + o.limbs_.size()] += static_cast<uint32_t>(carry);
    }
    r.trim();
    return r;
}

bool BigNat::bit(size_t i) const {
    size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

void BigNat::shift_left_bits(unsigned bits) {
    assert(bits < 32);
    if (bits == 0 || is_zero()) return;
    uint32_t carry = 0;
    for (auto& limb : limbs_) {
        uint32_t next = limb >> (32 - bits);
        limb = (limb << bits) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

void BigNat::divmod(const BigNat& num, const BigNat& den, BigNat& q, BigNat& r) {
    if (den.is_zero()) throw std::domain_error("BigNat division by zero");
    q = BigNat();
    r = BigNat();
    if (cmp(num, den) < 0) {
        r = num;
        return;
    }
    // single-limb divisor fast path
    if (den.limbs_.size() == 1) {
        uint64_t d = den.limbs_[0];
        uint64_t rem = 0;
        q.limbs_.assign(num.limbs_.size(), 0);
        for (size_t i = num.limbs_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | num.limbs_[i];
            q.limbs_[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        q.trim();
        r = BigNat(rem);
        return;
    }
    // shift-subtract long division, high bit first
    size_t nbits = num.bit_length();
    q.limbs_.assign((nbits + 31) / 32, 0);
    for (size_t i = nbits; i-- > 0;) {
        r.shift_left_bits(1);
        if (num.bit(i)) {
            if (r.limbs_.empty())
                r.limbs_.push_back(1);
            else
                r.limbs_[0] |= 1u;
        }
        if (cmp(r, den) >= 0) {
            r -= den;
            q.limbs_[i / 32] |= 1u << (i % 32);
        }
    }
    q.trim();
}

BigNat BigNat::gcd(BigNat a, BigNat b) {
    while (!b.is_zero()) {
        BigNat q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::string BigNat::to_decimal() const {
    if (is_zero()) return "0";
    BigNat cur = *this;
    const BigNat chunk(1000000000u);
    std::string out;
    while (!cur.is_zero()) {
        BigNat q, r;
        divmod(cur, chunk, q, r);
        uint64_t part = r.is_zero() ? 0 : r.as_u64();
        std::string digits = std::to_string(part);
        if (!q.is_zero()) digits = std::string(9 - digits.size(), '0') + digits;
        out = digits + out;
        cur = std::move(q);
    }
    return out;
}

BigNat BigNat::from_decimal(const std::string& s) {
    BigNat r;
    const BigNat ten(10);
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("not a decimal digit");
        r = r * ten + BigNat(static_cast<uint64_t>(c - '0'));
    }
    return r;
}

void BigNat::frexp_parts(double& mantissa, long& exp) const {
    if (is_zero()) {
        mantissa = 0.0;
        exp = 0;
        return;
    }
    size_t nbits = bit_length();
    // assemble the top 64 bits, zero-padded on the right
    uint64_t top = 0;
    size_t take = nbits < 64 ? nbits : 64;
    for (size_t k = 0; k < take; ++k) top = (top << 1) | (bit(nbits - 1 - k) ? 1u : 0u);
    top <<= 64 - take;
    mantissa = std::ldexp(static_cast<double>(top), -64);
    exp = static_cast<long>(nbits);
}

double BigNat::to_double() const {
    double m;
    long e;
    frexp_parts(m, e);
    return std::ldexp(m, static_cast<int>(e));
}

double BigNat::ratio_as_double(const BigNat& num, const BigNat& den) {
    assert(!den.is_zero());
    if (num.is_zero()) return 0.0;
    double mn, md;
    long en, ed;
    num.frexp_parts(mn, en);
    den.frexp_parts(md, ed);
    long shift = en - ed;
    if (shift > 2000) return HUGE_VAL;
    if (shift < -2000) return 0.0;
    return std::ldexp(mn / md, static_cast<int>(shift));
}

BigRat::BigRat(int64_t v) : den_(1) {
    if (v < 0) {
        neg_ = true;
        num_ = BigNat(static_cast<uint64_t>(-v));
    } else {
        num_ = BigNat(static_cast<uint64_t>(v));
    }
}

BigRat BigRat::fraction(BigNat num, BigNat den, bool negative) {
    BigRat r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.neg_ = negative;
    r.normalize();
    return r;
}

void BigRat::normalize() {
    if (den_.is_zero()) throw std::domain_error("BigRat zero denominator");
    if (num_.is_zero()) {
        neg_ = false;
        den_ = BigNat(1);
        return;
    }
    BigNat g = BigNat::gcd(num_, den_);
    if (!(g == BigNat(1))) {
        BigNat q, r;
        BigNat::divmod(num_, g, q, r);
        num_ = std::move(q);
        BigNat::divmod(den_, g, q, r);
        den_ = std::move(q);
    }
}

BigRat BigRat::operator+(const BigRat& o) const {
    BigRat r;
    BigNat a = num_ * o.den_;
    BigNat b = o.num_ * den_;
    if (neg_ == o.neg_) {
        r.num_ = a + b;
        r.neg_ = neg_;
    } else if (BigNat::cmp(a, b) >= 0) {
        r.num_ = a - b;
        r.neg_ = neg_;
    } else {
        r.num_ = b - a;
        r.neg_ = o.neg_;
    }
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

BigRat BigRat::operator-() const {
    BigRat r = *this;
    if (!r.num_.is_zero()) r.neg_ = !r.neg_;
    return r;
}

BigRat BigRat::operator-(const BigRat& o) const { return *this + (-o); }

BigRat BigRat::operator*(const BigRat& o) const {
    BigRat r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.neg_ = neg_ != o.neg_;
    r.normalize();
    return r;
}

BigRat BigRat::operator/(const BigRat& o) const {
    if (o.is_zero()) throw std::domain_error("BigRat division by zero");
    BigRat r;
    r.num_ = num_ * o.den_;
    r.den_ = den_ * o.num_;
    r.neg_ = neg_ != o.neg_;
    r.normalize();
    return r;
}

int BigRat::cmp(const BigRat& a, const BigRat& b) {
    if (a.neg_ != b.neg_) return a.neg_ ? -1 : 1;
    int c = BigNat::cmp(a.num_ * b.den_, b.num_ * a.den_);
    return a.neg_ ? -c : c;
}

double BigRat::to_double() const {
    double d = BigNat::ratio_as_double(num_, den_);
    return neg_ ? -d : d;
}

std::string BigRat::to_string() const {
    std::string s = neg_ ? "-" : "";
    s += num_.to_decimal();
    if (!(den_ == BigNat(1))) {
        s += "/";
        s += den_.to_decimal();
    }
    return s;
}

BigRat abs(const BigRat& r) { return r.negative() ? -r : r; }

}  // namespace tempo
