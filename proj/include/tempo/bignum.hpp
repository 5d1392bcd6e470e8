#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tempo {

// Arbitrary-precision unsigned integer. Little-endian base-2^32 limbs; an
// empty limb vector is zero. Walk counts grow exponentially in the graph
// size, so everything downstream of counting runs on these.
class BigNat {
public:
    BigNat() = default;
    BigNat(uint64_t v);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    uint64_t as_u64() const;  // requires fits_u64()
    size_t bit_length() const;

    // -1, 0, +1
    static int cmp(const BigNat& a, const BigNat& b);
    bool operator==(const BigNat& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigNat& o) const { return limbs_ != o.limbs_; }
    bool operator<(const BigNat& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const BigNat& o) const { return cmp(*this, o) <= 0; }

    BigNat& operator+=(const BigNat& o);
    BigNat operator+(const BigNat& o) const;
    // requires *this >= o
    BigNat& operator-=(const BigNat& o);
    BigNat operator-(const BigNat& o) const;
    BigNat operator*(const BigNat& o) const;

    // num = q * den + r with r < den; den must be nonzero
    static void divmod(const BigNat& num, const BigNat& den, BigNat& q, BigNat& r);
    static BigNat gcd(BigNat a, BigNat b);

    std::string to_decimal() const;
    static BigNat from_decimal(const std::string& s);

    double to_double() const;
    // num/den as a double; exact per IEEE rounding of the leading bits,
    // safe even when both operands are far beyond double range
    static double ratio_as_double(const BigNat& num, const BigNat& den);

private:
    std::vector<uint32_t> limbs_;

    void trim();
    void shift_left_bits(unsigned bits);
    bool bit(size_t i) const;
    // mantissa in [0.5, 1) and exponent with value == mantissa * 2^exp
    void frexp_parts(double& mantissa, long& exp) const;
};

// Signed rational with BigNat magnitude parts, always kept reduced with a
// positive denominator. Exact-mode betweenness runs end to end on these.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}
    BigRat(int64_t v);
    static BigRat fraction(BigNat num, BigNat den, bool negative = false);

    bool is_zero() const { return num_.is_zero(); }
    bool negative() const { return neg_; }
    const BigNat& num() const { return num_; }
    const BigNat& den() const { return den_; }

    BigRat operator+(const BigRat& o) const;
    BigRat operator-(const BigRat& o) const;
    BigRat operator*(const BigRat& o) const;
    BigRat operator/(const BigRat& o) const;  // o nonzero
    BigRat operator-() const;
    BigRat& operator+=(const BigRat& o) { return *this = *this + o; }
    BigRat& operator-=(const BigRat& o) { return *this = *this - o; }

    static int cmp(const BigRat& a, const BigRat& b);
    bool operator==(const BigRat& o) const { return neg_ == o.neg_ && num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const BigRat& o) const { return !(*this == o); }
    bool operator<(const BigRat& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const BigRat& o) const { return cmp(*this, o) <= 0; }

    double to_double() const;
    // "p/q" reduced, or plain "p" when q == 1
    std::string to_string() const;

private:
    bool neg_ = false;
    BigNat num_;
    BigNat den_;

    void normalize();
};

BigRat abs(const BigRat& r);

}  // namespace tempo
