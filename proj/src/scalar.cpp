#include "toric/scalar.hpp"

#include <cctype>
#include <ostream>

namespace toric {

bool is_squarefree(long d) {
    if (d <= 1)
        return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0)
            return false;
    }
    return true;
}

long join_disc(long d1, long d2) {
    if (d1 == 0)
        return d2;
    if (d2 == 0 || d1 == d2)
        return d1;
    throw FieldMismatchError(d1, d2);
}

void Scalar::normalize() {
    if (b_ == 0)
        d_ = 0;
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw DivisionByZeroError();
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::quadratic(const mpq_class& a, const mpq_class& b, long d) {
    Scalar s;
    s.a_ = a;
    if (b != 0) {
        if (!is_squarefree(d))
            throw std::invalid_argument("sqrt argument must be square-free and > 1, got " +
                                        std::to_string(d));
        s.b_ = b;
        s.d_ = d;
    }
    return s;
}

const mpq_class& Scalar::as_rational() const {
    if (d_ != 0)
        throw std::domain_error("scalar " + str() + " is not rational");
    return a_;
}

Scalar Scalar::conjugate() const {
    Scalar s(*this);
    s.b_ = -s.b_;
    return s;
}

int Scalar::sign() const {
    if (d_ == 0)
        return sgn(a_);
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sa == 0)
        return sb;
    if (sb == 0 || sa == sb)
        return sa;
    // a and b have opposite signs: compare a^2 with b^2*d. Equality would
    // force sqrt(d) rational, impossible for square-free d > 1.
    const mpq_class lhs = a_ * a_;
    const mpq_class rhs = b_ * b_ * d_;
    const int c = cmp(lhs, rhs);
    if (c == 0)
        throw std::logic_error("sqrt(" + std::to_string(d_) + ") collapsed to a rational");
    return c > 0 ? sa : sb;
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

Scalar Scalar::operator-() const {
    Scalar s(*this);
    s.a_ = -s.a_;
    s.b_ = -s.b_;
    return s;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    Scalar s;
    s.d_ = join_disc(x.d_, y.d_);
    s.a_ = x.a_ + y.a_;
    s.b_ = x.b_ + y.b_;
    s.normalize();
    return s;
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
    Scalar s;
    s.d_ = join_disc(x.d_, y.d_);
    s.a_ = x.a_ * y.a_ + x.b_ * y.b_ * s.d_;
    s.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    s.normalize();
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw DivisionByZeroError();
    if (d_ == 0)
        return Scalar(mpq_class(1 / a_));
    // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d); the norm is nonzero
    // because sqrt(d) is irrational.
    const mpq_class norm = a_ * a_ - b_ * b_ * d_;
    if (norm == 0)
        throw std::logic_error("zero norm in quadratic field");
    return quadratic(a_ / norm, -b_ / norm, d_);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

std::string Scalar::str() const {
    if (d_ == 0)
        return a_.get_str();
    std::string out;
    const bool neg_b = sgn(b_) < 0;
    const mpq_class babs = neg_b ? mpq_class(-b_) : b_;
    if (a_ != 0) {
        out += a_.get_str();
        out += neg_b ? '-' : '+';
    } else if (neg_b) {
        out += '-';
    }
    if (babs != 1) {
        out += babs.get_str();
        out += '*';
    }
    out += "sqrt(" + std::to_string(d_) + ")";
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    bool eat(char c) {
        if (peek() != c)
            return false;
        ++pos;
        return true;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ScalarParseError(what, pos);
    }
};

mpz_class parse_uint(Cursor& c) {
    if (!std::isdigit(static_cast<unsigned char>(c.peek())))
        c.fail("expected digit");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(c.peek())))
        digits += c.s[c.pos++];
    return mpz_class(digits);
}

// unsigned rational: digits ['/' digits]
mpq_class parse_urat(Cursor& c) {
    mpz_class num = parse_uint(c);
    mpz_class den = 1;
    if (c.eat('/')) {
        std::size_t den_pos = c.pos;
        den = parse_uint(c);
        if (den == 0)
            throw ScalarParseError("zero denominator", den_pos);
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

bool at_sqrt(const Cursor& c) { return c.s.substr(c.pos, 5) == "sqrt("; }

// 'sqrt(' digits ')'
long parse_sqrt(Cursor& c, long required_disc) {
    c.pos += 5;  // "sqrt("
    std::size_t dpos = c.pos;
    mpz_class d = parse_uint(c);
    if (!c.eat(')'))
        c.fail("expected ')'");
    if (!d.fits_slong_p() || !is_squarefree(d.get_si()))
        throw ScalarParseError("sqrt argument must be square-free and > 1", dpos);
    long dl = d.get_si();
    if (required_disc == 0)
        throw ScalarParseError("radical not allowed in field Q", dpos);
    if (required_disc > 0 && dl != required_disc)
        throw ScalarParseError("sqrt(" + std::to_string(dl) + ") does not belong to Q(sqrt(" +
                                   std::to_string(required_disc) + "))",
                               dpos);
    return dl;
}

// term := urat | [urat '*'] 'sqrt(' digits ')'
// Returns (coefficient, disc); disc == 0 for a plain rational term.
std::pair<mpq_class, long> parse_term(Cursor& c, long required_disc) {
    if (at_sqrt(c))
        return {mpq_class(1), parse_sqrt(c, required_disc)};
    mpq_class q = parse_urat(c);
    if (c.eat('*')) {
        if (!at_sqrt(c))
            c.fail("expected sqrt(...) after '*'");
        return {q, parse_sqrt(c, required_disc)};
    }
    return {q, 0L};
}

}  // namespace

Scalar Scalar::parse(std::string_view s, long required_disc) {
    Cursor c{s};
    if (c.done())
        c.fail("empty scalar");

    bool neg = false;
    if (c.eat('-'))
        neg = true;
    else
        c.eat('+');
    std::size_t t1pos = c.pos;
    auto [q1, d1] = parse_term(c, required_disc);
    if (neg)
        q1 = -q1;

    mpq_class rat_part = 0, rad_part = 0;
    long disc = 0;
    if (d1 == 0)
        rat_part = q1;
    else {
        rad_part = q1;
        disc = d1;
    }

    if (c.peek() == '+' || c.peek() == '-') {
        const bool neg2 = c.s[c.pos] == '-';
        ++c.pos;
        if (d1 != 0)
            throw ScalarParseError("radical term must come last", t1pos);
        std::size_t t2pos = c.pos;
        auto [q2, d2] = parse_term(c, required_disc);
        if (d2 == 0)
            throw ScalarParseError("second term must be a radical", t2pos);
        rad_part = neg2 ? mpq_class(-q2) : q2;
        disc = d2;
    }
    if (!c.done())
        c.fail("trailing characters");
    return Scalar::quadratic(rat_part, rad_part, disc);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace toric
