#include "sol/quadfield.hpp"

#include <ostream>
#include <sstream>

namespace sol {

FieldContext::FieldContext(long trace) : n_(trace) {
    if (trace < 3) throw FieldError("trace parameter N must be >= 3, got " + std::to_string(trace));
    d_ = trace * trace - 4;
}

QuadNum::QuadNum(Rational a, Rational b, FieldContext ctx)
    : a_(std::move(a)), b_(std::move(b)), ctx_(ctx) {
    a_.canonicalize();
    b_.canonicalize();
}

QuadNum QuadNum::operator+(const QuadNum& o) const {
    check_same(o);
    return {a_ + o.a_, b_ + o.b_, ctx_};
}

QuadNum QuadNum::operator-(const QuadNum& o) const {
    check_same(o);
    return {a_ - o.a_, b_ - o.b_, ctx_};
}

QuadNum QuadNum::operator*(const QuadNum& o) const {
    check_same(o);
    // (a + b s)(c + d s) = ac + bd D + (ad + bc) s
    return {a_ * o.a_ + b_ * o.b_ * ctx_.radicand(), a_ * o.b_ + b_ * o.a_, ctx_};
}

QuadNum QuadNum::operator-() const { return {-a_, -b_, ctx_}; }

Rational QuadNum::norm() const { return a_ * a_ - b_ * b_ * ctx_.radicand(); }

QuadNum QuadNum::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational n = norm();  // nonzero: sqrt(D) is irrational, so a^2 = b^2 D forces a = b = 0
    return {a_ / n, -b_ / n, ctx_};
}

bool QuadNum::operator==(const QuadNum& o) const {
    check_same(o);
    return a_ == o.a_ && b_ == o.b_;
}

Sign QuadNum::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return static_cast<Sign>(sa);
    if (sa == 0) return static_cast<Sign>(sb);
    if (sa == sb) return static_cast<Sign>(sa);
    // a and b have opposite signs: compare a^2 against b^2 D.
    Rational lhs = a_ * a_, rhs = b_ * b_ * ctx_.radicand();
    int c = cmp(lhs, rhs);
    if (c == 0) throw FieldError("impossible: sqrt(D) rational");
    return static_cast<Sign>(c > 0 ? sa : sb);
}

bool QuadNum::is_integer() const {
    return b_ == 0 && a_.get_den() == 1;
}

Integer QuadNum::floor() const {
    if (b_ == 0) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a_.get_num().get_mpz_t(), a_.get_den().get_mpz_t());
        return q;
    }
    // Write the value as (P + Q sqrt(D)) / R with R > 0.
    Integer r = lcm(a_.get_den(), b_.get_den());
    Integer p = a_.get_num() * (r / a_.get_den());
    Integer q = b_.get_num() * (r / b_.get_den());
    // s = floor(|Q| sqrt(D)); |Q| sqrt(D) is irrational, so s < |Q|sqrt(D) < s+1.
    Integer s;
    {
        Integer t = q * q * ctx_.radicand();
        mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    }
    // Q > 0: floor((P + Q sqrt(D))/R) = floor((P + s)/R).
    // Q < 0: floor((P - |Q| sqrt(D))/R) = floor((P - s - 1)/R).
    Integer num = sgn(q) > 0 ? Integer(p + s) : Integer(p - s - 1);
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), r.get_mpz_t());
    return out;
}

double QuadNum::to_double() const {
    mpf_class acc(0, 256);
    mpf_class t(0, 256);
    mpf_set_q(acc.get_mpf_t(), a_.get_mpq_t());
    if (b_ != 0) {
        mpf_class root(0, 256);
        mpf_sqrt_ui(root.get_mpf_t(), static_cast<unsigned long>(ctx_.radicand()));
        mpf_set_q(t.get_mpf_t(), b_.get_mpq_t());
        acc += t * root;
    }
    return acc.get_d();
}

std::string QuadNum::decimal(int digits) const {
    mpf_class acc(0, 64 + static_cast<int>(digits * 3.33));
    mpf_set_q(acc.get_mpf_t(), a_.get_mpq_t());
    if (b_ != 0) {
        mpf_class root(0, acc.get_prec());
        mpf_sqrt_ui(root.get_mpf_t(), static_cast<unsigned long>(ctx_.radicand()));
        mpf_class t(0, acc.get_prec());
        mpf_set_q(t.get_mpf_t(), b_.get_mpq_t());
        acc += t * root;
    }
    mp_exp_t exp;
    std::string mant = acc.get_str(exp, 10, digits);
    std::ostringstream os;
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant = mant.substr(1);
    if (mant.empty()) mant = "0";
    os << (neg ? "-" : "") << "0." << mant << "e" << exp;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadNum& q) {
    os << q.a_;
    if (q.b_ != 0) {
        os << (sgn(q.b_) > 0 ? "+" : "") << q.b_ << "*sqrt(" << q.ctx_.radicand() << ")";
    }
    return os;
}

QuadNum fundamental_unit(FieldContext ctx) {
    return {Rational(ctx.trace(), 2), Rational(1, 2), ctx};
}

QuadNum unit_power(FieldContext ctx, long k) {
    QuadNum acc = QuadNum::integer(1, ctx);
    QuadNum base = k >= 0 ? fundamental_unit(ctx) : fundamental_unit(ctx).conj();
    unsigned long e = k >= 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-(k + 1)) + 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

}  // namespace sol
