#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "nvk/core/errors.hpp"

namespace nvk {

class Scalar;

// Q when characteristic() == 0, otherwise the prime field F_p.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field(); }
    static Field prime(std::uint32_t p);

    bool is_rational() const noexcept { return p_ == 0; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::string name() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t v) const;
    // Throws FieldMismatch when the denominator vanishes mod p.
    Scalar from_rational(const mpq_class& q) const;

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) noexcept { return a.p_ != b.p_; }

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

class Scalar {
public:
    Scalar() : v_(mpq_class(0)) {}
    explicit Scalar(const mpq_class& q);
    static Scalar residue(std::int64_t v, std::uint32_t p);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Multiplication by an integer, used for the degree factors of Laurent brackets.
    Scalar times(std::int64_t k) const;

    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    std::uint32_t residue_value() const { return std::get<Mod>(v_).v; }

    std::string to_string() const;

private:
    struct Mod {
        std::uint32_t v;
        std::uint32_t p;
    };
    explicit Scalar(Mod m) : v_(m) {}
    void require_same(const Scalar& o) const;

    std::variant<mpq_class, Mod> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Parses "3", "-1/2", "7" into the field. Throws std::invalid_argument on bad text.
Scalar parse_scalar(const std::string& text, const Field& f);

}  // namespace nvk
