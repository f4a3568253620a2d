#ifndef DICHROMA_RATIONAL_HPP
#define DICHROMA_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "dichroma/errors.hpp"

namespace dichroma {

// Exact rational number, always kept in lowest terms with a positive
// denominator. Every colouring parameter and LP weight is one of these;
// no floating point is used anywhere in the library.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long num) : value_(num) {} // NOLINT: implicit by design
    Rational(long num, long den) : value_(num, den) {
        if (den == 0) throw InputError("rational with zero denominator");
        value_.canonicalize();
    }
    explicit Rational(mpz_class num, mpz_class den) : value_(std::move(num), std::move(den)) {
        if (value_.get_den() == 0) throw InputError("rational with zero denominator");
        value_.canonicalize();
    }

    // Accepts "a/b" or "a" with optional sign; rejects everything else.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return value_.get_num(); }
    const mpz_class& den() const { return value_.get_den(); }

    // "a/b", or plain "a" when the denominator is one.
    std::string str() const;
    // Always "a/b", the certificate rendering.
    std::string frac_str() const;

    double approx() const { return value_.get_d(); }

    // Smallest integer >= *this, as an exact rational.
    Rational ceil() const {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return Rational(std::move(q), 1);
    }

    bool is_integer() const { return value_.get_den() == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.value_ == 0) throw InputError("division by zero rational");
        return Rational(a.value_ / b.value_);
    }
    Rational operator-() const { return Rational(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    mpq_class value_;
};

} // namespace dichroma

#endif
