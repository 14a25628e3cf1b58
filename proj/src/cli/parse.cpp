#include "omframe/cli/parse.hpp"

#include <cctype>

namespace omframe::cli {

namespace {

using QPoly = Poly<RationalField>;

constexpr long kMaxExponent = 100'000;

class Parser {
public:
    Parser(std::string_view text, std::size_t offset) : s_(text), offset_(offset) {}

    QPoly parse() {
        skip_ws();
        if (at_end()) fail("empty polynomial");
        auto p = expr();
        skip_ws();
        if (!at_end()) unexpected();
        return p;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t offset_;
    RationalField k_;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::Parse, what + " at position " + std::to_string(offset_ + pos_ + 1));
    }

    [[noreturn]] void unexpected() const {
        if (at_end()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (c == 's') fail("implicit multiplication not allowed, write '*'");
            fail(std::string("unknown variable '") + c + "'");
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') fail("implicit multiplication not allowed, write '*'");
        fail(std::string("unexpected character '") + c + "'");
    }

    bool at_end() const { return pos_ >= s_.size(); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (!at_end() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // After a complete operand, anything that could start another operand is juxtaposition.
    void forbid_juxtaposition() {
        skip_ws();
        if (at_end()) return;
        const char c = s_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') unexpected();
    }

    QPoly expr() {
        auto p = term();
        while (true) {
            if (accept('+')) p += term();
            else if (accept('-')) p -= term();
            else return p;
        }
    }

    QPoly term() {
        auto p = unary();
        while (true) {
            if (accept('*')) {
                p = p * unary();
            } else if (accept('/')) {
                const auto at = pos_;
                auto q = unary();
                if (q.degree() != 0) {
                    pos_ = at;
                    fail(q.is_zero() ? "division by zero" : "division by a non-constant polynomial");
                }
                p = p * QPoly::constant(k_, q.coeff(0).inverse());
            } else {
                return p;
            }
        }
    }

    QPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    QPoly power() {
        auto base = atom();
        if (accept('^')) {
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("exponent must be a nonnegative integer");
            const auto start = pos_;
            const auto e = integer();
            if (e > kMaxExponent) {
                pos_ = start;
                fail("exponent too large");
            }
            QPoly out = QPoly::constant(k_, k_.one());
            for (long left = e.get_si(); left > 0; left >>= 1) {
                if (left & 1) out = out * base;
                if (left > 1) base = base * base;
            }
            base = std::move(out);
        }
        forbid_juxtaposition();
        return base;
    }

    QPoly atom() {
        skip_ws();
        if (at_end()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto v = integer();
            return QPoly::constant(k_, Rational(v, mpz_class(1)));
        }
        if (c == 's') {
            ++pos_;
            if (!at_end() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
                --pos_;
                fail("unknown variable '" + identifier() + "'");
            }
            return QPoly::monomial(k_, k_.one(), 1);
        }
        if (c == '(') {
            ++pos_;
            auto p = expr();
            if (!accept(')')) {
                skip_ws();
                if (at_end()) fail("missing ')'");
                unexpected();
            }
            return p;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) fail("unknown variable '" + identifier() + "'");
        if (c == ',') fail("empty component");
        fail(std::string("unexpected character '") + c + "'");
    }

    mpz_class integer() {
        const auto start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    std::string identifier() const {
        auto end = pos_;
        while (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) ++end;
        return std::string(s_.substr(pos_, end - pos_));
    }
};

}  // namespace

Poly<RationalField> parse_poly(std::string_view text, std::size_t offset) { return Parser(text, offset).parse(); }

PolyVec<RationalField> parse_vector(std::string_view text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (begin == end) throw Error(ErrorCode::Parse, "empty input");
    if (text[begin] == '[') {
        if (text[end - 1] != ']') throw Error(ErrorCode::Parse, "missing ']' at position " + std::to_string(end + 1));
        ++begin;
        --end;
    } else if (text[end - 1] == ']') {
        throw Error(ErrorCode::Parse, "unmatched ']' at position " + std::to_string(end));
    }

    std::vector<Poly<RationalField>> out;
    int depth = 0;
    std::size_t start = begin;
    for (std::size_t i = begin; i <= end; ++i) {
        if (i < end && text[i] == '(') ++depth;
        if (i < end && text[i] == ')') --depth;
        if (i == end || (text[i] == ',' && depth == 0)) {
            auto piece = text.substr(start, i - start);
            if (piece.find_first_not_of(" \t\r\n") == std::string_view::npos) {
                throw Error(ErrorCode::Parse, "empty component at position " + std::to_string(start + 1));
            }
            out.push_back(parse_poly(piece, start));
            start = i + 1;
        }
    }
    return PolyVec<RationalField>(std::move(out), Orientation::Row);
}

}  // namespace omframe::cli
