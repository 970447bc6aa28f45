#include "swcalc/ring_expr.hpp"

#include <cctype>

#include "swcalc/errors.hpp"

namespace swcalc::expr {

using rings::LaurentPoly;
using rings::PinElem;

namespace {

enum class Tok { Int, Z, Lambda, H, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    Int value;  // for Int
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_{Tok::End, 0, 0};

    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Tok::End, 0, start};
            return;
        }
        const char c = text_[pos_];
        switch (c) {
            case '+': ++pos_; current_ = {Tok::Plus, 0, start}; return;
            case '-': ++pos_; current_ = {Tok::Minus, 0, start}; return;
            case '*': ++pos_; current_ = {Tok::Star, 0, start}; return;
            case '^': ++pos_; current_ = {Tok::Caret, 0, start}; return;
            case '(': ++pos_; current_ = {Tok::LParen, 0, start}; return;
            case ')': ++pos_; current_ = {Tok::RParen, 0, start}; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[end])))
                ++end;
            current_ = {Tok::Int, Int(text_.substr(pos_, end - pos_)), start};
            pos_ = end;
            return;
        }
        // UTF-8 lambda
        if (static_cast<unsigned char>(c) == 0xCE && pos_ + 1 < text_.size() &&
            static_cast<unsigned char>(text_[pos_ + 1]) == 0xBB) {
            pos_ += 2;
            current_ = {Tok::Lambda, 0, start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[end])))
                ++end;
            const std::string word = text_.substr(pos_, end - pos_);
            pos_ = end;
            if (word == "z") { current_ = {Tok::Z, 0, start}; return; }
            if (word == "h") { current_ = {Tok::H, 0, start}; return; }
            if (word == "l" || word == "lambda") {
                current_ = {Tok::Lambda, 0, start};
                return;
            }
            throw ExprParseError("unknown symbol '" + word + "'", start);
        }
        throw ExprParseError(std::string("unexpected character '") + c + "'",
                             start);
    }
};

// The two rings share the grammar; Ring supplies constants, generators and
// exponentiation.
template <typename Elem>
struct Ring;

template <>
struct Ring<LaurentPoly> {
    static LaurentPoly constant(const Int& v) { return LaurentPoly(v); }
    static LaurentPoly generator(Tok t, std::size_t pos) {
        if (t == Tok::Z) return LaurentPoly::z();
        throw ExprParseError("only z is available in R(T)", pos);
    }
    static LaurentPoly pow(const LaurentPoly& e, long k, std::size_t pos) {
        if (k >= 0) return e.pow(static_cast<unsigned long>(k));
        // Negative powers of units only: +-z^j.
        if (e.coeffs().size() == 1) {
            const auto& [exp, coeff] = *e.coeffs().begin();
            if (coeff == 1 || coeff == -1) {
                LaurentPoly inv = LaurentPoly::monomial(coeff, -exp);
                return inv.pow(static_cast<unsigned long>(-k));
            }
        }
        throw ExprParseError("negative power of a non-unit", pos);
    }
};

template <>
struct Ring<PinElem> {
    static PinElem constant(const Int& v) { return PinElem(v); }
    static PinElem generator(Tok t, std::size_t pos) {
        if (t == Tok::Lambda) return PinElem::lambda();
        if (t == Tok::H) return PinElem::h();
        throw ExprParseError("only λ and h are available in R(Pin(2))", pos);
    }
    static PinElem pow(const PinElem& e, long k, std::size_t pos) {
        if (k < 0) throw ExprParseError("negative powers are not defined here", pos);
        return e.pow(static_cast<unsigned long>(k));
    }
};

template <typename Elem>
class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Elem parse() {
        Elem e = expression();
        if (lex_.peek().kind != Tok::End)
            throw ExprParseError("trailing input", lex_.peek().pos);
        return e;
    }

private:
    Lexer lex_;

    static bool starts_factor(Tok t) {
        return t == Tok::Int || t == Tok::Z || t == Tok::Lambda || t == Tok::H ||
               t == Tok::LParen;
    }

    Elem expression() {
        Elem acc = term();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            const Tok op = lex_.take().kind;
            Elem rhs = term();
            acc = op == Tok::Plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Elem term() {
        Elem acc = factor();
        for (;;) {
            if (lex_.peek().kind == Tok::Star) {
                lex_.take();
                acc = acc * factor();
            } else if (starts_factor(lex_.peek().kind)) {
                acc = acc * factor();  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    Elem factor() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            return Ring<Elem>::constant(Int(-1)) * factor();
        }
        Elem base = primary();
        if (lex_.peek().kind == Tok::Caret) {
            const std::size_t pos = lex_.take().pos;
            long sign = 1;
            if (lex_.peek().kind == Tok::Minus) {
                lex_.take();
                sign = -1;
            }
            if (lex_.peek().kind != Tok::Int)
                throw ExprParseError("exponent expected", lex_.peek().pos);
            const Token t = lex_.take();
            if (!t.value.fits_slong_p())
                throw ExprParseError("exponent out of range", t.pos);
            base = Ring<Elem>::pow(base, sign * t.value.get_si(), pos);
        }
        return base;
    }

    Elem primary() {
        const Token t = lex_.take();
        switch (t.kind) {
            case Tok::Int: return Ring<Elem>::constant(t.value);
            case Tok::Z:
            case Tok::Lambda:
            case Tok::H: return Ring<Elem>::generator(t.kind, t.pos);
            case Tok::LParen: {
                Elem e = expression();
                if (lex_.peek().kind != Tok::RParen)
                    throw ExprParseError("')' expected", lex_.peek().pos);
                lex_.take();
                return e;
            }
            default:
                throw ExprParseError("value expected", t.pos);
        }
    }
};

}  // namespace

LaurentPoly parse_torus(const std::string& text) {
    return Parser<LaurentPoly>(text).parse();
}

PinElem parse_pin(const std::string& text) {
    return Parser<PinElem>(text).parse();
}

}  // namespace swcalc::expr
