#include "evolalg/field.hpp"

#include <boost/multiprecision/integer.hpp>

namespace evolalg {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

// Largest r with r^m <= a, for a >= 0.
BigInt floor_nth_root(const BigInt& a, unsigned m) {
    if (a <= 1 || m == 1) return a;
    BigInt lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, m) <= a) hi <<= 1;
    while (lo + 1 < hi) {
        BigInt mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, m) <= a)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::uint64_t powmod(std::uint64_t base, BigInt exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if ((exp & 1) != 0) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

} // namespace

Field Field::gf(std::uint32_t p) {
    if (p > 0x7fffffffu)
        throw ValidationError("GF modulus out of range: " + std::to_string(p));
    if (!is_prime(p))
        throw ValidationError("NotPrime: GF modulus must be prime, got " + std::to_string(p));
    return Field(FieldKind::PrimeField, p);
}

Field Field::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.rfind("GF:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (!all_digits(digits) || digits.size() > 10)
            throw ParseError("bad field descriptor: " + text);
        unsigned long long v = std::stoull(digits);
        if (v == 0 || v > 0x7fffffffULL)
            throw ParseError("bad field descriptor: " + text);
        return gf(static_cast<std::uint32_t>(v));
    }
    throw ParseError("bad field descriptor: " + text);
}

std::string Field::str() const {
    return is_rationals() ? "Q" : "GF:" + std::to_string(modulus_);
}

void Scalar::normalize() {
    if (field_.is_rationals()) {
        if (den_ == 0) throw ValidationError("DivisionByZero: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
        } else {
            BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
            num_ /= g;
            den_ /= g;
        }
    } else {
        const BigInt p = field_.modulus();
        num_ %= p;
        if (num_ < 0) num_ += p;
        den_ = 1;
    }
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_)
        throw ValidationError("FieldMismatch: " + field_.str() + " vs " + rhs.field_.str());
}

Scalar Scalar::of_int(const Field& f, long long v) {
    Scalar s(f, BigInt(v), BigInt(1));
    s.normalize();
    return s;
}

Scalar Scalar::rational(BigInt num, BigInt den) {
    Scalar s(Field::rationals(), std::move(num), std::move(den));
    s.normalize();
    return s;
}

Scalar Scalar::residue(const Field& f, const BigInt& v) {
    if (f.is_rationals())
        throw ValidationError("FieldMismatch: residue requires a prime field");
    Scalar s(f, v, BigInt(1));
    s.normalize();
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar");
    if (f.is_rationals()) {
        std::string body = text;
        bool neg = false;
        if (body[0] == '-') {
            neg = true;
            body = body.substr(1);
        }
        const auto slash = body.find('/');
        std::string ns = body, ds = "1";
        if (slash != std::string::npos) {
            ns = body.substr(0, slash);
            ds = body.substr(slash + 1);
        }
        if (!all_digits(ns) || !all_digits(ds))
            throw ParseError("bad rational scalar: " + text);
        BigInt num(ns), den(ds);
        if (den == 0) throw ParseError("bad rational scalar: " + text);
        if (neg) num = -num;
        return rational(std::move(num), std::move(den));
    }
    if (!all_digits(text))
        throw ParseError("bad prime-field scalar: " + text);
    return residue(f, BigInt(text));
}

std::string Scalar::str() const {
    if (field_.is_rationals() && den_ != 1)
        return num_.str() + "/" + den_.str();
    return num_.str();
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar s(field_, num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    s.normalize();
    return s;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar s(field_, num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    s.normalize();
    return s;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar s(field_, num_ * rhs.num_, den_ * rhs.den_);
    s.normalize();
    return s;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    require_same_field(rhs);
    return *this * rhs.inverse();
}

Scalar Scalar::negated() const {
    Scalar s(field_, -num_, den_);
    s.normalize();
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ValidationError("DivisionByZero: inverse of zero");
    if (field_.is_rationals()) {
        Scalar s(field_, den_, num_);
        s.normalize();
        return s;
    }
    // Extended Euclid on desk-scale moduli.
    long long p = field_.modulus();
    long long a = static_cast<long long>(num_), b = p;
    long long x0 = 1, x1 = 0;
    while (b != 0) {
        long long q = a / b;
        long long t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    Scalar s(field_, BigInt(x0), BigInt(1));
    s.normalize();
    return s;
}

bool Scalar::operator==(const Scalar& rhs) const {
    return field_ == rhs.field_ && num_ == rhs.num_ && den_ == rhs.den_;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

std::vector<Scalar> Scalar::nth_roots(const BigInt& m) const {
    if (m <= 0) throw ValidationError("nth_roots: exponent must be positive");
    if (m == 1) return {*this};
    std::vector<Scalar> roots;
    const bool even = (m & 1) == 0;
    if (field_.is_rationals()) {
        if (is_zero()) return {zero(field_)};
        const BigInt an = boost::multiprecision::abs(num_);
        // Bases >= 2 need m <= msb+1, so huge exponents only admit |x| = 1.
        const BigInt bits = std::max(boost::multiprecision::msb(std::max(an, den_)) + 2,
                                     static_cast<unsigned>(2));
        if (m > bits) {
            if (an == 1 && den_ == 1) {
                if (num_ > 0) {
                    roots.push_back(one(field_));
                    if (even) roots.push_back(of_int(field_, -1));
                } else if (!even) {
                    roots.push_back(of_int(field_, -1));
                }
            }
        } else {
            const unsigned mu = static_cast<unsigned>(m);
            const BigInt rn = floor_nth_root(an, mu);
            const BigInt rd = floor_nth_root(den_, mu);
            if (boost::multiprecision::pow(rn, mu) == an &&
                boost::multiprecision::pow(rd, mu) == den_) {
                if (num_ > 0) {
                    roots.push_back(rational(rn, rd));
                    if (even) roots.push_back(rational(-rn, rd));
                } else if (!even) {
                    roots.push_back(rational(-rn, rd));
                }
            }
        }
    } else {
        const std::uint64_t p = field_.modulus();
        const std::uint64_t a = static_cast<std::uint64_t>(num_);
        if (a == 0) return {zero(field_)};
        // x != 0, so exponents act modulo p - 1.
        BigInt e = m % (p - 1);
        for (std::uint64_t t = 1; t < p; ++t)
            if (powmod(t, e, p) == a) roots.push_back(of_int(field_, static_cast<long long>(t)));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace evolalg
