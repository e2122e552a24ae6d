#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace khicalc {

class Scalar;

// Coefficient field selected at engine construction: the rationals (exact
// arbitrary-precision fractions) or a prime field F_p. Dimension counts agree
// with any characteristic-zero field, so rationals are the default; F_p is a
// speed option for large fixtures.
class Field {
  public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint32_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t modulus() const { return p_; }
    bool operator==(const Field&) const = default;

    Scalar zero() const;
    Scalar one() const;
    Scalar integer(long v) const;
    // Accepts "n" or "p/q".
    Scalar parse(const std::string& s) const;
    std::string name() const;

  private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_; // 0 = rationals
};

// One exact field element. Rational values are kept in canonical reduced form
// by GMP; prime-field values live in [0, p).
class Scalar {
  public:
    Scalar() : v_(mpq_class(0)) {}

    bool is_zero() const;
    bool is_rational_repr() const { return v_.index() == 0; }
    Field field() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // The rational value; only valid for rational scalars.
    const mpq_class& rational_value() const { return std::get<0>(v_); }
    std::string str() const;

  private:
    friend class Field;
    struct FpVal {
        std::uint64_t v;
        std::uint32_t p;
        bool operator==(const FpVal&) const = default;
    };
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    Scalar(std::uint64_t v, std::uint32_t p) : v_(FpVal{v % p, p}) {}

    std::variant<mpq_class, FpVal> v_;
};

} // namespace khicalc
