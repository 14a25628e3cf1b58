#ifndef OMFRAME_FIELD_HPP
#define OMFRAME_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "omframe/error.hpp"

namespace omframe {

/**
 * Exact rational number backed by GMP. Always kept in lowest terms with a
 * positive denominator.
 */
class Rational {
   public:
    Rational() = default;
    Rational(long long v) : q_(static_cast<long>(v)) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rational parse(const std::string& text);

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    Rational inverse() const;

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    /// "num" for integers, "num/den" otherwise.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

   private:
    mpq_class q_;
};

/// Element of GF(p). Carries its modulus so that values stay self-describing.
class ModP {
   public:
    ModP() = default;
    ModP(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    ModP inverse() const;
    std::string to_string() const { return std::to_string(v_); }

    ModP& operator+=(const ModP& o);
    ModP& operator-=(const ModP& o);
    ModP& operator*=(const ModP& o);
    ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

    friend ModP operator+(ModP a, const ModP& b) { return a += b; }
    friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
    friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
    friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
    friend ModP operator-(const ModP& a) { return ModP(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
    friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.v_; }

   private:
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 2;
};

/// The field of rational numbers.
struct RationalField {
    using Scalar = Rational;

    Scalar zero() const { return Rational(0); }
    Scalar one() const { return Rational(1); }
    Scalar from_int(long long v) const { return Rational(v); }
    Scalar from_rational(const Rational& r) const { return r; }
    std::string name() const { return "q"; }
    /// Infinite field: sampling never runs out of distinct points.
    bool is_finite() const { return false; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// GF(p) for a prime p < 2^62.
class PrimeField {
   public:
    using Scalar = ModP;

    explicit PrimeField(std::uint64_t p);

    Scalar zero() const { return ModP(0, p_); }
    Scalar one() const { return ModP(1, p_); }
    Scalar from_int(long long v) const;
    /// Reduces num/den mod p; throws NotInvertible if p divides den.
    Scalar from_rational(const Rational& r) const;
    std::string name() const { return "gf:" + std::to_string(p_); }
    bool is_finite() const { return true; }
    std::uint64_t modulus() const { return p_; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

   private:
    std::uint64_t p_;
};

template <class K>
concept Field = requires(const K& k, const typename K::Scalar& a, const typename K::Scalar& b, long long i,
                         const Rational& r) {
    { k.zero() } -> std::same_as<typename K::Scalar>;
    { k.one() } -> std::same_as<typename K::Scalar>;
    { k.from_int(i) } -> std::same_as<typename K::Scalar>;
    { k.from_rational(r) } -> std::same_as<typename K::Scalar>;
    { k.name() } -> std::convertible_to<std::string>;
    { a + b } -> std::same_as<typename K::Scalar>;
    { a - b } -> std::same_as<typename K::Scalar>;
    { a * b } -> std::same_as<typename K::Scalar>;
    { a / b } -> std::same_as<typename K::Scalar>;
    { -a } -> std::same_as<typename K::Scalar>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::same_as<typename K::Scalar>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

bool is_prime(std::uint64_t n);

}  // namespace omframe

#endif
