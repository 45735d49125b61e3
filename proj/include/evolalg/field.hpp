#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "evolalg/errors.hpp"

namespace evolalg {

using BigInt = boost::multiprecision::cpp_int;

enum class FieldKind { Rationals, PrimeField };

/// Ground field descriptor: the rationals or GF(p) for a prime p.
class Field {
public:
    static Field rationals() { return Field(FieldKind::Rationals, 0); }
    static Field gf(std::uint32_t p);

    /// Text form: "Q" or "GF:p".
    static Field parse(const std::string& text);
    std::string str() const;

    FieldKind kind() const { return kind_; }
    std::uint32_t modulus() const { return modulus_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }

    bool operator==(const Field&) const = default;

private:
    Field(FieldKind k, std::uint32_t m) : kind_(k), modulus_(m) {}
    FieldKind kind_;
    std::uint32_t modulus_; // 0 for the rationals
};

/// Exact field element in canonical form. Rationals are fully reduced
/// with positive denominator; prime-field elements are residues in [0, p).
class Scalar {
public:
    Scalar() : field_(Field::rationals()), num_(0), den_(1) {}

    static Scalar zero(const Field& f) { return of_int(f, 0); }
    static Scalar one(const Field& f) { return of_int(f, 1); }
    static Scalar of_int(const Field& f, long long v);
    static Scalar rational(BigInt num, BigInt den);
    static Scalar residue(const Field& f, const BigInt& v);

    /// Parses "a" or "a/b" over Q, a decimal residue over GF(p).
    static Scalar parse(const Field& f, const std::string& text);
    std::string str() const;

    const Field& field() const { return field_; }
    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;

    Scalar negated() const;
    Scalar inverse() const;
    Scalar squared() const { return *this * *this; }

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /// Total order used for canonical output ordering.
    static int cmp(const Scalar& a, const Scalar& b);
    bool operator<(const Scalar& rhs) const { return cmp(*this, rhs) < 0; }

    /// All exact m-th roots of this element in its own field, sorted.
    std::vector<Scalar> nth_roots(const BigInt& m) const;

private:
    Scalar(Field f, BigInt num, BigInt den)
        : field_(f), num_(std::move(num)), den_(std::move(den)) {}
    void normalize();
    void require_same_field(const Scalar& rhs) const;

    Field field_;
    BigInt num_; // residue for GF(p)
    BigInt den_; // always 1 for GF(p)
};

} // namespace evolalg
