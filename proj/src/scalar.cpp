#include "spalg/scalar.hpp"

namespace spalg {

Field Field::prime(std::uint32_t p) {
    if (p < 2) throw std::runtime_error("field characteristic must be a prime >= 2");
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= p; ++d)
        if (p % d == 0) throw std::runtime_error("field characteristic must be prime");
    return Field{Kind::Prime, p};
}

std::string Field::name() const {
    return kind == Kind::Rationals ? std::string("Q") : "F" + std::to_string(p);
}

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::runtime_error("division by zero");
    return mod_pow(a, p - 2, p);
}

std::uint64_t reduce_bigint(const BigInt& n, std::uint64_t p) {
    BigInt r = n % BigInt(p);
    if (r < 0) r += p;
    return r.convert_to<std::uint64_t>();
}

}  // namespace

Scalar Scalar::from_integer(Field f, long long n) {
    Scalar s(f);
    if (f.kind == Field::Kind::Rationals) {
        s.q_ = n;
    } else {
        long long m = n % (long long)f.p;
        if (m < 0) m += f.p;
        s.r_ = (std::uint64_t)m;
    }
    return s;
}

Scalar Scalar::from_rational(Field f, const Rational& q) {
    Scalar s(f);
    if (f.kind == Field::Kind::Rationals) {
        s.q_ = q;
    } else {
        std::uint64_t num = reduce_bigint(numerator(q), f.p);
        std::uint64_t den = reduce_bigint(denominator(q), f.p);
        if (den == 0) throw std::runtime_error("denominator divisible by field characteristic");
        s.r_ = num * mod_inv(den, f.p) % f.p;
    }
    return s;
}

Scalar Scalar::parse(Field f, const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return from_rational(f, Rational(BigInt(text)));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::runtime_error("zero denominator");
        return from_rational(f, Rational(num, den));
    } catch (const std::exception&) {
        throw std::runtime_error("cannot parse scalar '" + text + "'");
    }
}

bool Scalar::is_zero() const {
    return field_.kind == Field::Kind::Rationals ? q_.is_zero() : r_ == 0;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s(field_);
    if (field_.kind == Field::Kind::Rationals)
        s.q_ = q_ + o.q_;
    else
        s.r_ = (r_ + o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s(field_);
    if (field_.kind == Field::Kind::Rationals)
        s.q_ = q_ - o.q_;
    else
        s.r_ = (r_ + field_.p - o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.kind == Field::Kind::Rationals)
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.p - r_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s(field_);
    if (field_.kind == Field::Kind::Rationals)
        s.q_ = q_ * o.q_;
    else
        s.r_ = r_ * o.r_ % field_.p;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::runtime_error("division by zero");
    Scalar s(field_);
    if (field_.kind == Field::Kind::Rationals)
        s.q_ = 1 / q_;
    else
        s.r_ = mod_inv(r_, field_.p);
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    return field_.kind == Field::Kind::Rationals ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same(o);
    return field_.kind == Field::Kind::Rationals ? q_ < o.q_ : r_ < o.r_;
}

const Rational& Scalar::rational() const {
    if (field_.kind != Field::Kind::Rationals)
        throw std::runtime_error("not a rational scalar");
    return q_;
}

bool Scalar::is_integer() const {
    if (field_.kind != Field::Kind::Rationals) return true;
    return denominator(q_) == 1;
}

std::string Scalar::str() const {
    if (field_.kind == Field::Kind::Rationals) {
        std::string s = numerator(q_).str();
        if (denominator(q_) != 1) s += "/" + denominator(q_).str();
        return s;
    }
    return std::to_string(r_);
}

}  // namespace spalg
