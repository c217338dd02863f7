#include "ncborel/parse.hpp"

#include <cctype>
#include <utility>

namespace ncborel {

namespace {

struct Token {
    enum class Kind { number, ident, plus, minus, star, wedge, caret, lparen, rparen, end };
    Kind kind;
    std::size_t offset;
    std::string text;  // ident name or number spelling
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            std::size_t at = pos_;
            if (pos_ >= src_.size()) {
                out.push_back({Token::Kind::end, at, ""});
                return out;
            }
            char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back(number(at));
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                out.push_back(ident(at));
            } else {
                switch (c) {
                    case '+': ++pos_; out.push_back({Token::Kind::plus, at, "+"}); break;
                    case '-': ++pos_; out.push_back({Token::Kind::minus, at, "-"}); break;
                    case '*': ++pos_; out.push_back({Token::Kind::star, at, "*"}); break;
                    case '^': ++pos_; out.push_back({Token::Kind::caret, at, "^"}); break;
                    case '(': ++pos_; out.push_back({Token::Kind::lparen, at, "("}); break;
                    case ')': ++pos_; out.push_back({Token::Kind::rparen, at, ")"}); break;
                    case '/':
                        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '\\') {
                            pos_ += 2;
                            out.push_back({Token::Kind::wedge, at, "/\\"});
                        } else {
                            throw ParseError(ParseError::Kind::lexical, at,
                                             "stray '/': expected '\\' (wedge) or a "
                                             "digit continuing a rational");
                        }
                        break;
                    default:
                        throw ParseError(ParseError::Kind::lexical, at,
                                         std::string("unexpected character '") + c +
                                             "'");
                }
            }
        }
    }

private:
    void skip_space() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    Token number(std::size_t at) {
        std::string text;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_])))
            text += src_[pos_++];
        // A '/' continues the literal only when a digit follows, keeping
        // "1/\\..." lexing as NUMBER WEDGE.
        if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
            text += src_[pos_++];
            std::string den;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_])))
                den += src_[pos_++];
            bool allZero = den.find_first_not_of('0') == std::string::npos;
            if (allZero)
                throw ParseError(ParseError::Kind::lexical, at,
                                 "rational literal with zero denominator");
            text += den;
        }
        return {Token::Kind::number, at, text};
    }

    Token ident(std::size_t at) {
        std::string text;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_'))
            text += src_[pos_++];
        return {Token::Kind::ident, at, text};
    }

    const std::string& src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Expr run() {
        Expr e = expr();
        if (peek().kind != Token::Kind::end)
            throw ParseError(ParseError::Kind::syntax, peek().offset,
                             "trailing input after expression");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    bool at(Token::Kind k) const { return peek().kind == k; }

    Expr expr() {
        Expr lhs = term();
        while (at(Token::Kind::plus) || at(Token::Kind::minus)) {
            Token op = take();
            Expr rhs = term();
            Expr node;
            node.kind = op.kind == Token::Kind::plus ? Expr::Kind::add
                                                     : Expr::Kind::sub;
            node.offset = op.offset;
            node.kids.push_back(std::move(lhs));
            node.kids.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = unary();
        while (at(Token::Kind::star) || at(Token::Kind::wedge)) {
            Token op = take();
            Expr rhs = unary();
            Expr node;
            node.kind = op.kind == Token::Kind::star ? Expr::Kind::mul
                                                     : Expr::Kind::wedge;
            node.offset = op.offset;
            node.kids.push_back(std::move(lhs));
            node.kids.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    Expr unary() {
        if (at(Token::Kind::minus)) {
            Token op = take();
            Expr node;
            node.kind = Expr::Kind::neg;
            node.offset = op.offset;
            node.kids.push_back(unary());
            return node;
        }
        return factor();
    }

    Expr factor() {
        Expr base = atom();
        if (at(Token::Kind::caret)) {
            Token op = take();
            if (!at(Token::Kind::number))
                throw ParseError(ParseError::Kind::syntax, peek().offset,
                                 "expected a natural number after '^'");
            Token e = take();
            if (e.text.find('/') != std::string::npos)
                throw ParseError(ParseError::Kind::syntax, e.offset,
                                 "exponent must be a natural number, not a "
                                 "rational");
            Expr node;
            node.kind = Expr::Kind::pow;
            node.offset = op.offset;
            node.exponent = static_cast<std::uint32_t>(std::stoul(e.text));
            node.kids.push_back(std::move(base));
            return node;
        }
        return base;
    }

    Expr atom() {
        if (at(Token::Kind::number)) {
            Token t = take();
            Expr node;
            node.kind = Expr::Kind::rational;
            node.offset = t.offset;
            node.value = BigRat(t.text);
            return node;
        }
        if (at(Token::Kind::ident)) {
            Token t = take();
            Expr node;
            node.offset = t.offset;
            if (t.text == "i") {
                node.kind = Expr::Kind::imag_unit;
            } else if (t.text == "lam") {
                node.kind = Expr::Kind::lam;
            } else if (t.text.size() == 2 &&
                       (t.text[0] == 'x' || t.text[0] == 'k') &&
                       t.text[1] >= '1' && t.text[1] <= '3') {
                node.kind = t.text[0] == 'x' ? Expr::Kind::generator
                                             : Expr::Kind::kparam;
                node.index = t.text[1] - '0';
            } else if (t.text.size() == 3 && t.text[0] == 'd' &&
                       t.text[1] == 'x' && t.text[2] >= '1' &&
                       t.text[2] <= '3') {
                node.kind = Expr::Kind::basis_form;
                node.index = t.text[2] - '0';
            } else {
                throw ParseError(ParseError::Kind::syntax, t.offset,
                                 "unknown identifier '" + t.text + "'");
            }
            return node;
        }
        if (at(Token::Kind::lparen)) {
            take();
            Expr inner = expr();
            if (!at(Token::Kind::rparen))
                throw ParseError(ParseError::Kind::syntax, peek().offset,
                                 "expected ')'");
            take();
            return inner;
        }
        throw ParseError(ParseError::Kind::syntax, peek().offset,
                         peek().kind == Token::Kind::end
                             ? "unexpected end of input"
                             : "unexpected token '" + peek().text + "'");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

[[noreturn]] void degree_error(std::size_t offset, const std::string& what) {
    throw ParseError(ParseError::Kind::degree, offset, what);
}

}  // namespace

Expr parse(const std::string& src) {
    return Parser(Lexer(src).run()).run();
}

Value elaborate(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::rational:
            return NcPoly::scalar(
                ScalarPoly::constant(GaussianRational(e.value)));
        case Expr::Kind::imag_unit:
            return NcPoly::scalar(ScalarPoly::constant(GaussianRational::i()));
        case Expr::Kind::lam:
            return NcPoly::scalar(ScalarPoly::lambda());
        case Expr::Kind::kparam:
            return NcPoly::scalar(ScalarPoly::k(e.index));
        case Expr::Kind::generator:
            return NcPoly::generator(e.index);
        case Expr::Kind::basis_form:
            return Form::basis(set_of(e.index));
        case Expr::Kind::neg: {
            Value v = elaborate(e.kids[0]);
            if (std::holds_alternative<NcPoly>(v)) return -std::get<NcPoly>(v);
            return -std::get<Form>(v);
        }
        case Expr::Kind::add:
        case Expr::Kind::sub: {
            Value a = elaborate(e.kids[0]);
            Value b = elaborate(e.kids[1]);
            bool sub = e.kind == Expr::Kind::sub;
            if (std::holds_alternative<NcPoly>(a) &&
                std::holds_alternative<NcPoly>(b)) {
                const NcPoly& p = std::get<NcPoly>(a);
                const NcPoly& q = std::get<NcPoly>(b);
                return sub ? p - q : p + q;
            }
            if (std::holds_alternative<Form>(a) &&
                std::holds_alternative<Form>(b)) {
                const Form& f = std::get<Form>(a);
                const Form& g = std::get<Form>(b);
                if (f.degree() != g.degree())
                    degree_error(e.offset,
                                 "cannot add forms of degree " +
                                     std::to_string(f.degree()) + " and " +
                                     std::to_string(g.degree()));
                return sub ? f - g : f + g;
            }
            degree_error(e.offset, "cannot add a 0-form and a form of higher "
                                   "degree");
        }
        case Expr::Kind::mul: {
            Value a = elaborate(e.kids[0]);
            Value b = elaborate(e.kids[1]);
            if (std::holds_alternative<NcPoly>(a) &&
                std::holds_alternative<NcPoly>(b))
                return std::get<NcPoly>(a) * std::get<NcPoly>(b);
            if (std::holds_alternative<Form>(a) &&
                std::holds_alternative<NcPoly>(b))
                return std::get<Form>(a).right_mul(std::get<NcPoly>(b));
            if (std::holds_alternative<NcPoly>(a) &&
                std::holds_alternative<Form>(b))
                return move_coeff_left_to_right(std::get<NcPoly>(a),
                                                std::get<Form>(b));
            degree_error(e.offset,
                         "'*' multiplies by 0-form coefficients; use '/\\' "
                         "for the exterior product of forms");
        }
        case Expr::Kind::wedge: {
            Value a = elaborate(e.kids[0]);
            Value b = elaborate(e.kids[1]);
            if (!std::holds_alternative<Form>(a) ||
                !std::holds_alternative<Form>(b))
                degree_error(e.offset,
                             "'/\\' requires forms of degree >= 1 on both "
                             "sides");
            const Form& f = std::get<Form>(a);
            const Form& g = std::get<Form>(b);
            if (f.degree() + g.degree() > 3)
                degree_error(e.offset,
                             "wedge of degrees " + std::to_string(f.degree()) +
                                 " and " + std::to_string(g.degree()) +
                                 " exceeds the top degree 3");
            return wedge(f, g);
        }
        case Expr::Kind::pow: {
            Value a = elaborate(e.kids[0]);
            if (!std::holds_alternative<NcPoly>(a))
                degree_error(e.offset, "'^' applies to 0-forms only");
            return std::get<NcPoly>(a).pow(e.exponent);
        }
    }
    throw ParseError(ParseError::Kind::syntax, e.offset,
                     "malformed expression tree");
}

Value parse_value(const std::string& src) { return elaborate(parse(src)); }

}  // namespace ncborel
