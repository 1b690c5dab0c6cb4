// Exact scalar arithmetic: the rational field (GMP-backed, arbitrary
// precision) and prime fields Z/q for a 62-bit q. No floating point is used
// anywhere in this library.
#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "semicanon/error.hpp"

namespace semicanon {

// Largest prime below 2^62; the default working field for heavy computations.
inline constexpr std::uint64_t kDefaultModulus = 4611686018427387847ull;

class Fe;

// Field descriptor: either the rationals or Z/q for an odd prime q < 2^63.
// Primality of a custom modulus is the caller's responsibility; the default
// modulus is prime.
class Field {
public:
    enum class Kind { Rational, Prime };

    static Field rationals() { return Field(0); }
    static Field prime(std::uint64_t modulus = kDefaultModulus);

    Kind kind() const { return mod_ == 0 ? Kind::Rational : Kind::Prime; }
    bool is_rational() const { return mod_ == 0; }
    std::uint64_t modulus() const { return mod_; }

    bool operator==(const Field&) const = default;

    Fe zero() const;
    Fe one() const;
    Fe from_int(long long v) const;
    Fe from_ratio(long long num, long long den) const;
    // Reduce an exact rational into this field ("a/b" reduced mod q on
    // demand). Throws DivisionByZero if the denominator vanishes mod q.
    Fe from_rational(const mpq_class& v) const;
    // Accepts "123", "-7", "3/4".
    Fe parse(const std::string& text) const;

private:
    explicit Field(std::uint64_t mod) : mod_(mod) {}
    std::uint64_t mod_;
};

// One exact scalar. An element remembers which field it lives in; mixing
// fields in an arithmetic operation throws FieldMismatch.
class Fe {
public:
    Fe() : mod_(0), z_(0), q_(0) {}  // rational zero

    static Fe rational(mpq_class v);
    static Fe prime_element(std::uint64_t v, std::uint64_t mod);

    Field field() const { return mod_ == 0 ? Field::rationals() : Field::prime(mod_); }
    bool is_rational_kind() const { return mod_ == 0; }

    bool is_zero() const { return mod_ == 0 ? q_ == 0 : z_ == 0; }
    bool is_one() const;

    Fe operator+(const Fe& o) const;
    Fe operator-(const Fe& o) const;
    Fe operator*(const Fe& o) const;
    Fe operator/(const Fe& o) const;  // throws DivisionByZero
    Fe operator-() const;
    Fe& operator+=(const Fe& o) { return *this = *this + o; }
    Fe& operator-=(const Fe& o) { return *this = *this - o; }
    Fe& operator*=(const Fe& o) { return *this = *this * o; }
    Fe& operator/=(const Fe& o) { return *this = *this / o; }

    Fe inverse() const;  // throws DivisionByZero
    Fe pow(long long e) const;

    bool operator==(const Fe& o) const;
    bool operator!=(const Fe& o) const { return !(*this == o); }

    // Serialized form: decimal for prime fields and integral rationals,
    // "a/b" otherwise.
    std::string str() const;

    // Valid only for the matching kind.
    const mpq_class& rational_value() const { return q_; }
    std::uint64_t prime_value() const { return z_; }

private:
    friend class Field;
    std::uint64_t mod_;  // 0 means rational
    std::uint64_t z_;    // value in [0, mod) when prime
    mpq_class q_;        // value when rational

    void check_same(const Fe& o) const;
};

}  // namespace semicanon
