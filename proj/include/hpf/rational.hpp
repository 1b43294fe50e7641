#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace hpf {

using BigInt = mpz_class;

/*
 * Exact rational scalar over GMP.
 *
 * Invariants: always in lowest terms, denominator strictly positive,
 * zero is 0/1.  Every constructor canonicalizes, and mpq arithmetic
 * preserves canonical form, so equality is structural.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);

    // Parses "p/q" or "p" (ASCII digits, optional leading '-', no spaces).
    // Throws ValidationError on malformed text or zero denominator.
    static Rational parse(const std::string& text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int signum() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return signum() < 0 ? -*this : *this; }

    // Serializes as "p/q", or "p" when the denominator is 1.
    std::string str() const;

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

Rational pow(const Rational& base, unsigned long exp);

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt factorial(unsigned long n);

}  // namespace hpf
