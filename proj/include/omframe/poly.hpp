#ifndef OMFRAME_POLY_HPP
#define OMFRAME_POLY_HPP

#include <algorithm>
#include <climits>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "omframe/field.hpp"

namespace omframe {

/// deg(0). Ordered below every real degree.
inline constexpr int kZeroDegree = INT_MIN;

/**
 * Dense univariate polynomial in s over the field K. Coefficients are stored
 * by increasing power with trailing zeros trimmed; the zero polynomial has no
 * coefficients at all.
 */
template <Field K>
class Poly {
   public:
    using Scalar = typename K::Scalar;

    Poly() requires std::default_initializable<K> = default;
    explicit Poly(K field) : field_(std::move(field)) {}
    Poly(K field, std::vector<Scalar> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }
    Poly(K field, std::initializer_list<long long> coeffs) : field_(std::move(field)) {
        c_.reserve(coeffs.size());
        for (long long v : coeffs) c_.push_back(field_.from_int(v));
        trim();
    }

    static Poly constant(const K& field, Scalar c) { return Poly(field, std::vector<Scalar>{std::move(c)}); }
    /// c * s^k
    static Poly monomial(const K& field, Scalar c, int k) {
        if (c.is_zero()) return Poly(field);
        std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, field.zero());
        v.back() = std::move(c);
        return Poly(field, std::move(v));
    }

    const K& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }

    Scalar coeff(int k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return field_.zero();
        return c_[static_cast<std::size_t>(k)];
    }
    /// Leading coefficient; zero for the zero polynomial.
    Scalar leading() const { return c_.empty() ? field_.zero() : c_.back(); }

    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

    Poly monic() const {
        if (c_.empty()) return *this;
        return *this * c_.back().inverse();
    }

    Scalar evaluate(const Scalar& x) const {
        Scalar acc = field_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// this * s^k
    Poly shifted(int k) const {
        if (c_.empty() || k == 0) return *this;
        std::vector<Scalar> v(static_cast<std::size_t>(k), field_.zero());
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(field_, std::move(v));
    }

    /// Adds c * s^k in place.
    void add_term(const Scalar& c, int k) {
        if (c.is_zero()) return;
        auto idx = static_cast<std::size_t>(k);
        if (c_.size() <= idx) c_.resize(idx + 1, field_.zero());
        c_[idx] += c;
        trim();
    }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Scalar& a) {
        if (a.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= a;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Poly operator*(Poly a, const Scalar& b) { return a *= b; }
    friend Poly operator*(const Scalar& b, Poly a) { return a *= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return Poly(a.field_);
        std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(a.field_, std::move(out));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    K field_;
    std::vector<Scalar> c_;
};

/// Quotient and remainder of f by a nonzero divisor g.
template <Field K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& f, const Poly<K>& g) {
    if (g.is_zero()) throw Error(ErrorCode::NotInvertible, "polynomial division by zero");
    const K& k = f.field();
    if (f.degree() < g.degree()) return {Poly<K>(k), f};
    auto rem = f.coeffs();
    const int dg = g.degree();
    const int shift_max = f.degree() - dg;
    std::vector<typename K::Scalar> quo(static_cast<std::size_t>(shift_max) + 1, k.zero());
    const auto lead_inv = g.leading().inverse();
    const auto& gc = g.coeffs();
    for (int i = shift_max; i >= 0; --i) {
        auto& top = rem[static_cast<std::size_t>(i + dg)];
        if (top.is_zero()) continue;
        auto q = top * lead_inv;
        for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(i + j)] -= q * gc[static_cast<std::size_t>(j)];
        quo[static_cast<std::size_t>(i)] = std::move(q);
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {Poly<K>(k, std::move(quo)), Poly<K>(k, std::move(rem))};
}

/// Exact quotient f / g; throws if g does not divide f.
template <Field K>
Poly<K> exact_div(const Poly<K>& f, const Poly<K>& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw Error(ErrorCode::NotInvertible, "polynomial division is not exact");
    return q;
}

namespace detail {

// Primitive-remainder-sequence gcd over Z after clearing denominators.
inline std::vector<mpz_class> primitive_integer_part(const Poly<RationalField>& f) {
    mpz_class lcm_den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.raw().get_den_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(f.coeffs().size());
    mpz_class content = 0;
    for (const auto& c : f.coeffs()) {
        mpz_class v = c.raw().get_num() * (lcm_den / c.raw().get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (content != 0 && content != 1) {
        for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    }
    return out;
}

inline void make_primitive(std::vector<mpz_class>& v) {
    mpz_class content = 0;
    for (const auto& c : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content != 0 && content != 1) {
        for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    }
}

// Pseudo-remainder of f by g (both nonzero, trimmed), in place on f.
inline void pseudo_remainder(std::vector<mpz_class>& f, const std::vector<mpz_class>& g) {
    const std::size_t dg = g.size() - 1;
    const mpz_class& lg = g.back();
    while (f.size() > dg && !f.empty()) {
        mpz_class lf = f.back();
        for (auto& c : f) c *= lg;
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t j = 0; j <= dg; ++j) f[shift + j] -= lf * g[j];
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
}

inline Poly<RationalField> rational_gcd(const Poly<RationalField>& f, const Poly<RationalField>& g) {
    auto a = primitive_integer_part(f);
    auto b = primitive_integer_part(g);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        pseudo_remainder(a, b);
        make_primitive(a);
        std::swap(a, b);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(a.size());
    for (auto& c : a) coeffs.emplace_back(c, mpz_class(1));
    return Poly<RationalField>(RationalField{}, std::move(coeffs)).monic();
}

}  // namespace detail

/// Monic gcd of f and g; they may not both be zero.
template <Field K>
Poly<K> poly_gcd(const Poly<K>& f, const Poly<K>& g) {
    if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::ZeroVector, "gcd of zero vector undefined");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if constexpr (std::is_same_v<K, RationalField>) {
        return detail::rational_gcd(f, g);
    } else {
        Poly<K> a = f.monic(), b = g.monic();
        while (!b.is_zero()) {
            auto r = divmod(a, b).second.monic();
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }
}

/// Extended Euclid: returns (g, u, v) with u*f + v*h = g, g monic.
template <Field K>
struct ExtGcd {
    Poly<K> gcd, u, v;
};

template <Field K>
ExtGcd<K> ext_gcd(const Poly<K>& f, const Poly<K>& h) {
    if (f.is_zero() && h.is_zero()) throw Error(ErrorCode::ZeroVector, "gcd of zero vector undefined");
    const K& k = f.is_zero() ? h.field() : f.field();
    Poly<K> r0 = f, r1 = h;
    Poly<K> u0 = Poly<K>::constant(k, k.one()), u1(k);
    Poly<K> v0(k), v1 = Poly<K>::constant(k, k.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        u0 = std::exchange(u1, u0 - q * u1);
        v0 = std::exchange(v1, v0 - q * v1);
    }
    auto inv = r0.leading().inverse();
    return {r0 * inv, u0 * inv, v0 * inv};
}

enum class Orientation { Row, Column };

/// Vector of polynomials, either a row or a column.
template <Field K>
class PolyVec {
   public:
    using Scalar = typename K::Scalar;

    PolyVec() = default;
    PolyVec(std::vector<Poly<K>> entries, Orientation o = Orientation::Row) : e_(std::move(entries)), o_(o) {
        if (e_.empty()) throw Error(ErrorCode::TooShort, "polynomial vector must have at least one entry");
    }
    static PolyVec zero(const K& field, std::size_t m, Orientation o = Orientation::Row) {
        return PolyVec(std::vector<Poly<K>>(m, Poly<K>(field)), o);
    }

    std::size_t size() const { return e_.size(); }
    Orientation orientation() const { return o_; }
    const K& field() const { return e_.front().field(); }
    const Poly<K>& operator[](std::size_t i) const { return e_[i]; }
    Poly<K>& operator[](std::size_t i) { return e_[i]; }
    const std::vector<Poly<K>>& entries() const { return e_; }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const Poly<K>& p) { return p.is_zero(); });
    }
    int degree() const {
        int d = kZeroDegree;
        for (const auto& p : e_) d = std::max(d, p.degree());
        return d;
    }
    /// Coefficients of s^deg across components; all zero for the zero vector.
    std::vector<Scalar> leading_vector() const {
        const int d = degree();
        std::vector<Scalar> lv;
        lv.reserve(e_.size());
        for (const auto& p : e_) lv.push_back(d == kZeroDegree ? field().zero() : p.coeff(d));
        return lv;
    }

    PolyVec transposed() const {
        return PolyVec(e_, o_ == Orientation::Row ? Orientation::Column : Orientation::Row);
    }

    PolyVec operator*(const Poly<K>& f) const {
        PolyVec out = *this;
        for (auto& p : out.e_) p = p * f;
        return out;
    }

    /// Same entries; orientation is ignored.
    friend bool operator==(const PolyVec& a, const PolyVec& b) { return a.e_ == b.e_; }

   private:
    std::vector<Poly<K>> e_;
    Orientation o_ = Orientation::Row;
};

/// Dense row-major matrix. Used for both scalar and polynomial entries.
template <class T>
class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, const T& fill) : r_(rows), c_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * c_ + j]; }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.data_ == b.data_;
    }

   private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> data_;
};

template <Field K>
using PolyMatrix = DenseMatrix<Poly<K>>;

template <Field K>
using ScalarMatrix = DenseMatrix<typename K::Scalar>;

template <Field K>
using CoeffVector = std::vector<typename K::Scalar>;

template <Field K>
PolyMatrix<K> identity_matrix(const K& field, std::size_t n) {
    PolyMatrix<K> m(n, n, Poly<K>(field));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly<K>::constant(field, field.one());
    return m;
}

template <Field K>
PolyVec<K> column(const PolyMatrix<K>& m, std::size_t j) {
    std::vector<Poly<K>> out;
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m(i, j));
    return PolyVec<K>(std::move(out), Orientation::Column);
}

template <Field K>
int matrix_degree(const PolyMatrix<K>& m) {
    int d = kZeroDegree;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d = std::max(d, m(i, j).degree());
    return d;
}

template <Field K>
std::vector<int> column_degrees(const PolyMatrix<K>& m) {
    std::vector<int> out;
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(column(m, j).degree());
    return out;
}

template <Field K>
PolyMatrix<K> operator*(const PolyMatrix<K>& a, const PolyMatrix<K>& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::SizeMismatch, "matrix product dimension mismatch");
    const K& k = a(0, 0).field();
    PolyMatrix<K> out(a.rows(), b.cols(), Poly<K>(k));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (a(i, l).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, l) * b(l, j);
        }
    return out;
}

/// Constant matrix times polynomial matrix.
template <Field K>
PolyMatrix<K> scalar_times(const ScalarMatrix<K>& g, const PolyMatrix<K>& p) {
    if (g.cols() != p.rows()) throw Error(ErrorCode::SizeMismatch, "matrix product dimension mismatch");
    const K& k = p(0, 0).field();
    PolyMatrix<K> out(g.rows(), p.cols(), Poly<K>(k));
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t l = 0; l < g.cols(); ++l) {
            if (g(i, l).is_zero()) continue;
            for (std::size_t j = 0; j < p.cols(); ++j) out(i, j) += p(l, j) * g(i, l);
        }
    return out;
}

/// Row vector of polynomials times a constant matrix.
template <Field K>
PolyVec<K> row_times_scalar(const PolyVec<K>& a, const ScalarMatrix<K>& g) {
    if (a.size() != g.rows()) throw Error(ErrorCode::SizeMismatch, "vector/matrix dimension mismatch");
    std::vector<Poly<K>> out(g.cols(), Poly<K>(a.field()));
    for (std::size_t j = 0; j < g.cols(); ++j)
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!g(i, j).is_zero()) out[j] += a[i] * g(i, j);
    return PolyVec<K>(std::move(out), Orientation::Row);
}

/// a * P for a row vector a and square P.
template <Field K>
PolyVec<K> row_times_matrix(const PolyVec<K>& a, const PolyMatrix<K>& p) {
    if (a.size() != p.rows()) {
        throw Error(ErrorCode::SizeMismatch, "row of length " + std::to_string(a.size()) + " times matrix with " +
                                                 std::to_string(p.rows()) + " rows");
    }
    std::vector<Poly<K>> out(p.cols(), Poly<K>(a.field()));
    for (std::size_t j = 0; j < p.cols(); ++j)
        for (std::size_t i = 0; i < a.size(); ++i) out[j] += a[i] * p(i, j);
    return PolyVec<K>(std::move(out), Orientation::Row);
}

/// Determinant over K[s] by Bareiss fraction-free elimination.
template <Field K>
Poly<K> det(PolyMatrix<K> m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::SizeMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) throw Error(ErrorCode::SizeMismatch, "determinant of an empty matrix");
    const K& k = m(0, 0).field();
    Poly<K> prev = Poly<K>::constant(k, k.one());
    bool negate = false;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).is_zero()) ++piv;
        if (piv == n) return Poly<K>(k);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            negate = !negate;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                m(i, j) = exact_div(m(c, c) * m(i, j) - m(i, c) * m(c, j), prev);
            }
            m(i, c) = Poly<K>(k);
        }
        prev = m(c, c);
    }
    auto out = m(n - 1, n - 1);
    return negate ? -out : out;
}

/**
 * The coefficient isomorphism from degree-bounded polynomial vectors to flat
 * coefficient lists. Position k*m + r holds the coefficient of s^k in
 * component r (both 0-based).
 */
template <Field K>
CoeffVector<K> sharp(const PolyVec<K>& h, int t) {
    if (h.degree() > t) {
        throw Error(ErrorCode::DegreeBound,
                    "degree bound violated: deg " + std::to_string(h.degree()) + " > " + std::to_string(t));
    }
    if (t < 0) throw Error(ErrorCode::DegreeBound, "degree bound violated: negative bound");
    const std::size_t m = h.size();
    CoeffVector<K> out(m * static_cast<std::size_t>(t + 1), h.field().zero());
    for (std::size_t r = 0; r < m; ++r) {
        const auto& c = h[r].coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) out[k * m + r] = c[k];
    }
    return out;
}

/// Inverse of sharp. Returns a column vector of length m.
template <Field K>
PolyVec<K> flat(const CoeffVector<K>& v, std::size_t m, const K& field) {
    if (m == 0 || v.size() % m != 0) {
        throw Error(ErrorCode::SizeMismatch,
                    "coefficient list of length " + std::to_string(v.size()) + " not divisible by " + std::to_string(m));
    }
    const std::size_t blocks = v.size() / m;
    std::vector<Poly<K>> out;
    out.reserve(m);
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<typename K::Scalar> c;
        c.reserve(blocks);
        for (std::size_t k = 0; k < blocks; ++k) c.push_back(v[k * m + r]);
        out.emplace_back(field, std::move(c));
    }
    return PolyVec<K>(std::move(out), Orientation::Column);
}

/// Monic gcd of all components.
template <Field K>
Poly<K> vec_gcd(const PolyVec<K>& a) {
    if (a.is_zero()) throw Error(ErrorCode::ZeroVector, "gcd of zero vector undefined");
    Poly<K> g(a.field());
    for (const auto& p : a) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p.monic() : poly_gcd(g, p);
        if (g.degree() == 0) break;
    }
    return g;
}

/// Human-readable form, highest power first, e.g. "s^3+2*s-1/2".
template <Field K>
std::string to_string(const Poly<K>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (int k = p.degree(); k >= 0; --k) {
        const auto& a = c[static_cast<std::size_t>(k)];
        if (a.is_zero()) continue;
        std::string num = a.to_string();
        bool neg = !num.empty() && num[0] == '-';
        if (neg) num.erase(0, 1);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        if (k == 0) {
            out += num;
        } else {
            if (num != "1") out += num + "*";
            out += k == 1 ? "s" : "s^" + std::to_string(k);
        }
    }
    return out;
}

template <Field K>
std::string to_string(const PolyVec<K>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + "]";
}

template <Field K>
std::ostream& operator<<(std::ostream& os, const Poly<K>& p) {
    return os << to_string(p);
}

template <Field K>
std::ostream& operator<<(std::ostream& os, const PolyVec<K>& v) {
    return os << to_string(v);
}

}  // namespace omframe

#endif
