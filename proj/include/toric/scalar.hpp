#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

// Arithmetic mixing elements of Q(sqrt(d1)) and Q(sqrt(d2)) with d1 != d2.
class FieldMismatchError : public std::runtime_error {
public:
    FieldMismatchError(long d1, long d2)
        : std::runtime_error("field mismatch: sqrt(" + std::to_string(d1) +
                             ") vs sqrt(" + std::to_string(d2) + ")") {}
};

class DivisionByZeroError : public std::runtime_error {
public:
    DivisionByZeroError() : std::runtime_error("scalar division by zero") {}
};

// Malformed exact-scalar string; `position` is the offset of the offending
// character within the parsed string.
class ScalarParseError : public std::runtime_error {
public:
    ScalarParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

// True iff d > 1 and no square divides d.
bool is_squarefree(long d);

// An exact element of Q or of a real quadratic field Q(sqrt(d)):
// value = a + b*sqrt(d). Plain rationals are encoded with d == 0 and b == 0;
// a quadratic element with b == 0 normalizes back to the rational encoding,
// so it compares equal to the corresponding rational. d is square-free, > 1.
// Rationals are kept canonical (reduced, positive denominator) by GMP.
class Scalar {
public:
    Scalar() : d_(0) {}
    Scalar(long v) : a_(v), d_(0) {}          // NOLINT: implicit by design
    Scalar(const mpz_class& v) : a_(v), d_(0) {}
    Scalar(const mpq_class& v) : a_(v), d_(0) {}

    static Scalar rational(const mpz_class& num, const mpz_class& den);
    // a + b*sqrt(d); d must be square-free and > 1 (unless b == 0, in which
    // case d may be anything and the value collapses to the rational a).
    static Scalar quadratic(const mpq_class& a, const mpq_class& b, long d);

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return d_ == 0 && a_ == 0; }
    bool is_one() const { return d_ == 0 && a_ == 1; }
    bool is_integer() const { return d_ == 0 && a_.get_den() == 1; }

    // 0 for rationals, the square-free d otherwise.
    long disc() const { return d_; }
    const mpq_class& rational_part() const { return a_; }
    const mpq_class& radical_part() const { return b_; }
    // Throws if the value is genuinely irrational.
    const mpq_class& as_rational() const;

    Scalar conjugate() const;  // a - b*sqrt(d)
    int sign() const;          // exact sign as a real number
    Scalar abs() const;
    Scalar inverse() const;    // throws DivisionByZeroError on 0

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Scalar& x, const Scalar& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const Scalar& x, const Scalar& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const Scalar& x, const Scalar& y) { return (x - y).sign() >= 0; }

    // Canonical exact string: "p", "p/q", "p/q+r/s*sqrt(d)", "p/q-r/s*sqrt(d)",
    // "sqrt(d)", "-sqrt(d)", "r/s*sqrt(d)". Parsing accepts exactly these.
    std::string str() const;
    // required_disc: 0 = radical parts forbidden, > 0 = radicals must use this
    // d, -1 = any square-free d accepted.
    static Scalar parse(std::string_view s, long required_disc = -1);

private:
    mpq_class a_;
    mpq_class b_;
    long d_ = 0;

    void normalize();
};

// The common field of two discriminants: 0 joins with anything, equal values
// join; two distinct nonzero values throw FieldMismatchError.
long join_disc(long d1, long d2);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace toric
