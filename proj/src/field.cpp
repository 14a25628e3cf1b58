#include "omframe/field.hpp"

#include <cassert>

namespace omframe {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorCode::NotInvertible, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(text), mpz_class(1));
        return Rational(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::Parse, "malformed rational '" + text + "'");
    }
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(ErrorCode::NotInvertible, "division by zero");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorCode::NotInvertible, "division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, b, p);
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

ModP ModP::inverse() const {
    if (v_ == 0) throw Error(ErrorCode::NotInvertible, "division by zero in GF(" + std::to_string(p_) + ")");
    return ModP(pow_mod(v_, p_ - 2, p_), p_);
}

ModP& ModP::operator+=(const ModP& o) {
    assert(p_ == o.p_);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
}

ModP& ModP::operator-=(const ModP& o) {
    assert(p_ == o.p_);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
}

ModP& ModP::operator*=(const ModP& o) {
    assert(p_ == o.p_);
    v_ = mul_mod(v_, o.v_, p_);
    return *this;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ULL << 62) || !is_prime(p)) {
        throw Error(ErrorCode::InvalidField, "GF(p) requires a prime p < 2^62, got " + std::to_string(p));
    }
}

ModP PrimeField::from_int(long long v) const {
    auto p = static_cast<long long>(p_);
    long long r = v % p;
    if (r < 0) r += p;
    return ModP(static_cast<std::uint64_t>(r), p_);
}

ModP PrimeField::from_rational(const Rational& r) const {
    mpz_class p(std::to_string(p_));
    mpz_class num = r.numerator() % p;
    mpz_class den = r.denominator() % p;
    if (num < 0) num += p;
    if (den == 0) {
        throw Error(ErrorCode::NotInvertible,
                    "denominator " + r.denominator().get_str() + " vanishes in GF(" + std::to_string(p_) + ")");
    }
    ModP n(std::stoull(num.get_str()), p_);
    ModP dd(std::stoull(den.get_str()), p_);
    return n / dd;
}

}  // namespace omframe
