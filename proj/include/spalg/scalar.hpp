// Exact field arithmetic: rationals and prime fields behind one runtime-tagged type.
#ifndef SPALG_SCALAR_HPP
#define SPALG_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <boost/multiprecision/cpp_int.hpp>

namespace spalg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct FieldMismatch : std::runtime_error {
    FieldMismatch() : std::runtime_error("scalars from different fields") {}
};

// The coefficient field: Q, or F_p for an odd-or-2 prime p.
struct Field {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;

    static Field rationals() { return Field{Kind::Rationals, 0}; }
    static Field prime(std::uint32_t p);

    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }
    std::string name() const;
};

class Scalar {
  public:
    Scalar() : field_(Field::rationals()), q_(0), r_(0) {}
    explicit Scalar(Field f) : field_(f), q_(0), r_(0) {}

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return from_integer(f, 1); }
    static Scalar from_integer(Field f, long long n);
    static Scalar from_rational(Field f, const Rational& q);
    // Parses "p/q" or "p" (exact); reduced mod p for prime fields.
    static Scalar parse(Field f, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const { return *this == one(field_); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar inverse() const;  // throws on zero
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;  // a total order (for canonical maps)

    // Exact rational value; only valid over Q.
    const Rational& rational() const;
    std::uint64_t residue() const { return r_; }

    // For rationals: is the value an integer?
    bool is_integer() const;

    std::string str() const;

  private:
    Field field_;
    Rational q_;       // used over Q
    std::uint64_t r_;  // used over F_p, always reduced
    void check_same(const Scalar& o) const {
        if (field_ != o.field_) throw FieldMismatch();
    }
};

}  // namespace spalg

#endif
