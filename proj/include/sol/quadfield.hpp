#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace sol {

using Rational = mpq_class;
using Integer = mpz_class;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ContextMismatch : FieldError {
    ContextMismatch() : FieldError("operands belong to different field contexts") {}
};
struct DivisionByZero : FieldError {
    DivisionByZero() : FieldError("division by zero in Q(sqrt(D))") {}
};

/// The real quadratic field Q(sqrt(D)) with D = N^2 - 4 for an integer
/// trace parameter N >= 3.  For these N the radicand is never a perfect
/// square, so sqrt(D) is irrational and representations are unique.
class FieldContext {
public:
    explicit FieldContext(long trace);

    long trace() const noexcept { return n_; }
    long radicand() const noexcept { return d_; }

    friend bool operator==(const FieldContext&, const FieldContext&) = default;

private:
    long n_ = 0;
    long d_ = 0;
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

/// Element a + b*sqrt(D) of Q(sqrt(D)), exact.  Rationals are kept in
/// canonical form (lowest terms, positive denominator) by GMP.
class QuadNum {
public:
    QuadNum() = default;
    QuadNum(Rational a, Rational b, FieldContext ctx);
    static QuadNum rational(Rational a, FieldContext ctx) { return {std::move(a), 0, ctx}; }
    static QuadNum integer(long a, FieldContext ctx) { return {Rational(a), 0, ctx}; }
    /// sqrt(D) itself.
    static QuadNum root(FieldContext ctx) { return {0, 1, ctx}; }

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    const FieldContext& context() const noexcept { return ctx_; }

    QuadNum operator+(const QuadNum& o) const;
    QuadNum operator-(const QuadNum& o) const;
    QuadNum operator*(const QuadNum& o) const;
    QuadNum operator-() const;
    QuadNum inverse() const;
    QuadNum operator/(const QuadNum& o) const { return *this * o.inverse(); }

    QuadNum& operator+=(const QuadNum& o) { return *this = *this + o; }
    QuadNum& operator-=(const QuadNum& o) { return *this = *this - o; }
    QuadNum& operator*=(const QuadNum& o) { return *this = *this * o; }

    /// Galois conjugate a - b*sqrt(D).
    QuadNum conj() const { return {a_, -b_, ctx_}; }
    /// Field norm a^2 - b^2 D (a rational).
    Rational norm() const;

    bool operator==(const QuadNum& o) const;
    bool operator!=(const QuadNum& o) const { return !(*this == o); }

    Sign sign() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_integer() const;
    bool operator<(const QuadNum& o) const { return (*this - o).sign() == Sign::Negative; }
    bool operator>(const QuadNum& o) const { return o < *this; }
    bool operator<=(const QuadNum& o) const { return !(o < *this); }
    bool operator>=(const QuadNum& o) const { return !(*this < o); }

    /// Exact floor, computed with integer square roots (no floating point).
    Integer floor() const;

    /// Nearest double (used only by the geometry exporter).
    double to_double() const;
    /// Decimal expansion with the given number of significant digits.
    std::string decimal(int digits = 30) const;

    friend std::ostream& operator<<(std::ostream& os, const QuadNum& q);

private:
    void check_same(const QuadNum& o) const {
        if (!(ctx_ == o.ctx_)) throw ContextMismatch();
    }

    Rational a_ = 0;
    Rational b_ = 0;
    FieldContext ctx_{3};
};

/// lambda = (N + sqrt(D))/2, the unit with lambda * conj(lambda) = 1 and
/// lambda + conj(lambda) = N.  Conjugation by the third lattice generator
/// scales base coordinates by powers of it.
QuadNum fundamental_unit(FieldContext ctx);

/// lambda^k for any integer k, exact.
QuadNum unit_power(FieldContext ctx, long k);

}  // namespace sol
