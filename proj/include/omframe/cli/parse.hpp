#ifndef OMFRAME_CLI_PARSE_HPP
#define OMFRAME_CLI_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "omframe/poly.hpp"

namespace omframe::cli {

/**
 * Parses one polynomial in s. Grammar:
 *   expr  := term (('+' | '-') term)*
 *   term  := unary (('*' | '/') unary)*
 *   unary := ('+' | '-') unary | power
 *   power := atom ('^' integer)?
 *   atom  := integer | 's' | '(' expr ')'
 * Division is only by nonzero constants. Juxtaposition ("2s") is rejected.
 * Error positions are 1-based columns in text, shifted by offset.
 */
Poly<RationalField> parse_poly(std::string_view text, std::size_t offset = 0);

/// Comma-separated polynomials, optionally wrapped in [ ].
PolyVec<RationalField> parse_vector(std::string_view text);

template <Field K>
Poly<K> to_field(const Poly<RationalField>& p, const K& k) {
    std::vector<typename K::Scalar> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(k.from_rational(x));
    return Poly<K>(k, std::move(c));
}

template <Field K>
PolyVec<K> to_field(const PolyVec<RationalField>& v, const K& k) {
    std::vector<Poly<K>> out;
    for (const auto& p : v) out.push_back(to_field(p, k));
    return PolyVec<K>(std::move(out), v.orientation());
}

}  // namespace omframe::cli

#endif
