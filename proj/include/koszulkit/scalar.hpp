#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace koszulkit {

/// Raised whenever values of two different characteristics meet.
class CharacteristicMismatch : public std::logic_error {
public:
    CharacteristicMismatch(std::uint32_t lhs, std::uint32_t rhs);
};

class ScalarParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact field element: a reduced rational when the characteristic is 0,
/// otherwise a canonical residue in [0, p).
class Scalar {
public:
    Scalar() = default;
    Scalar(std::uint32_t characteristic, long value);

    static Scalar rational(const mpq_class& q);
    static Scalar residue(std::uint32_t p, std::uint64_t r);

    std::uint32_t characteristic() const noexcept { return p_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "a/b" (or "a") over Q, decimal residue over F_p.
    std::string to_string() const;

    const mpq_class& as_rational() const { return q_; }
    std::uint64_t as_residue() const { return r_; }

private:
    void check(const Scalar& o) const;

    std::uint32_t p_ = 0;
    mpq_class q_;
    std::uint64_t r_ = 0;
};

using Vector = std::vector<Scalar>;

/// The ground field of a session. Characteristic 0 means Q.
class Field {
public:
    Field() = default;
    explicit Field(std::uint32_t characteristic);

    std::uint32_t characteristic() const noexcept { return p_; }
    Scalar zero() const { return Scalar(p_, 0); }
    Scalar one() const { return Scalar(p_, 1); }
    Scalar from_int(long v) const { return Scalar(p_, v); }
    Scalar parse(std::string_view text) const;
    Vector zeros(std::size_t n) const { return Vector(n, zero()); }

    friend bool operator==(const Field&, const Field&) = default;

private:
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

} // namespace koszulkit
