#include "pineta/dsl.hpp"

#include "pineta/error.hpp"

#include <cctype>
#include <cstdint>
#include <optional>

namespace pineta {

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Caret, LParen, RParen, Comma, Colon, Newline, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                out.push_back(make(Tok::Newline, "\n"));
                advance();
                ++line_;
                col_ = 1;
                continue;
            }
            if (c == '#') {  // comment to end of line
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            if (c == '/') {  // directive separator, interchangeable with a line break
                out.push_back(make(Tok::Newline, "/"));
                advance();
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Token t = make(Tok::Int, "");
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    t.text += src_[pos_];
                    advance();
                }
                out.push_back(std::move(t));
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                Token t = make(Tok::Ident, "");
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    t.text += src_[pos_];
                    advance();
                }
                out.push_back(std::move(t));
                continue;
            }
            Tok kind;
            switch (c) {
                case '+': kind = Tok::Plus; break;
                case '-': kind = Tok::Minus; break;
                case '*': kind = Tok::Star; break;
                case '^': kind = Tok::Caret; break;
                case '(': kind = Tok::LParen; break;
                case ')': kind = Tok::RParen; break;
                case ',': kind = Tok::Comma; break;
                case ':': kind = Tok::Colon; break;
                default:
                    throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
            }
            out.push_back(make(kind, std::string(1, c)));
            advance();
        }
        out.push_back(make(Tok::End, ""));
        return out;
    }

private:
    Token make(Tok kind, std::string text) const { return {kind, std::move(text), line_, col_}; }
    void advance() {
        ++pos_;
        ++col_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

[[noreturn]] void fail(const Token& t, const std::string& what) {
    throw ParseError(t.line, t.col, what + (t.kind == Tok::End ? " at end of input" : ""));
}

int parse_small_int(const Token& t) {
    try {
        return std::stoi(t.text);
    } catch (const std::exception&) {
        fail(t, "integer literal out of range");
    }
}

// Free (untruncated) polynomials over the generators; used while relations
// are parsed, before a presentation exists to reduce against.
struct RawPoly {
    Poly terms;

    void add(const RawPoly& o, int sign) {
        for (const auto& [m, c] : o.terms) {
            Rational& slot = terms[m];
            slot += sign * c;
            if (slot == 0) terms.erase(m);
        }
    }

    static RawPoly mul(const RawPoly& a, const RawPoly& b, const Token& at) {
        RawPoly out;
        for (const auto& [ma, ca] : a.terms)
            for (const auto& [mb, cb] : b.terms) {
                Rational& slot = out.terms[ma.times(mb)];
                slot += ca * cb;
                if (slot == 0) out.terms.erase(ma.times(mb));
            }
        if (out.terms.size() > 4096) fail(at, "polynomial has too many terms");
        return out;
    }
};

/// Recursive-descent parser for the polynomial grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := primary ('^' INT)?
///   primary:= '(' expr ')' | INT | IDENT
class PolyParser {
public:
    PolyParser(const std::vector<Token>& toks, std::size_t& cursor, std::size_t ngens,
               const std::vector<Generator>* gens)
        : toks_(toks), cur_(cursor), ngens_(ngens), gens_(gens) {}

    RawPoly parse_expr() {
        int sign = +1;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            sign = peek().kind == Tok::Minus ? -1 : +1;
            next();
        }
        RawPoly acc = parse_term();
        if (sign < 0) {
            RawPoly neg;
            neg.add(acc, -1);
            acc = std::move(neg);
        }
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            int s = peek().kind == Tok::Minus ? -1 : +1;
            next();
            acc.add(parse_term(), s);
        }
        return acc;
    }

private:
    RawPoly parse_term() {
        RawPoly acc = parse_factor();
        while (peek().kind == Tok::Star) {
            const Token& at = peek();
            next();
            acc = RawPoly::mul(acc, parse_factor(), at);
        }
        return acc;
    }

    RawPoly parse_factor() {
        RawPoly base = parse_primary();
        if (peek().kind == Tok::Caret) {
            const Token& caret = peek();
            next();
            if (peek().kind != Tok::Int) fail(peek(), "expected integer exponent after '^'");
            if (peek().text.size() > 2 || parse_small_int(peek()) > 64)
                fail(peek(), "exponent too large");
            int e = parse_small_int(peek());
            next();
            RawPoly acc;
            acc.terms[Monomial(ngens_)] = 1;
            for (int i = 0; i < e; ++i) acc = RawPoly::mul(acc, base, caret);
            return acc;
        }
        return base;
    }

    RawPoly parse_primary() {
        const Token& t = peek();
        if (t.kind == Tok::LParen) {
            next();
            RawPoly inner = parse_expr();
            if (peek().kind != Tok::RParen) fail(peek(), "expected ')'");
            next();
            return inner;
        }
        if (t.kind == Tok::Minus) {  // unary minus inside a term, e.g. 2*-u
            next();
            RawPoly inner = parse_primary();
            RawPoly neg;
            neg.add(inner, -1);
            return neg;
        }
        if (t.kind == Tok::Int) {
            RawPoly p;
            p.terms[Monomial(ngens_)] = Rational(Integer(t.text));
            next();
            return p;
        }
        if (t.kind == Tok::Ident) {
            std::size_t idx = RingPresentation::npos;
            for (std::size_t i = 0; i < gens_->size(); ++i)
                if ((*gens_)[i].name == t.text) idx = i;
            if (idx == RingPresentation::npos) fail(t, "unknown generator '" + t.text + "'");
            RawPoly p;
            p.terms[Monomial::generator(ngens_, idx)] = 1;
            next();
            return p;
        }
        fail(t, "expected a polynomial");
    }

    const Token& peek() const { return toks_[cur_]; }
    void next() { ++cur_; }

    const std::vector<Token>& toks_;
    std::size_t& cur_;
    std::size_t ngens_;
    const std::vector<Generator>* gens_;
};

bool at_line_end(const Token& t) { return t.kind == Tok::Newline || t.kind == Tok::End; }

}  // namespace

PresentationPtr parse_presentation(std::string_view text, std::string name) {
    std::vector<Token> toks = Lexer(text).run();
    std::size_t cur = 0;

    std::optional<std::vector<Generator>> generators;
    std::vector<Poly> relations;
    bool have_relations = false;
    std::optional<Monomial> orientation;
    int top_degree = 4;
    bool have_top = false;

    while (toks[cur].kind != Tok::End) {
        if (toks[cur].kind == Tok::Newline) {
            ++cur;
            continue;
        }
        const Token& key = toks[cur];
        if (key.kind != Tok::Ident)
            fail(key, "expected a directive (generators / relations / orientation / top_degree)");
        ++cur;
        if (toks[cur].kind != Tok::Colon) fail(toks[cur], "expected ':' after '" + key.text + "'");
        ++cur;

        if (key.text == "generators") {
            if (generators) fail(key, "duplicate 'generators' directive");
            std::vector<Generator> gens;
            while (true) {
                if (toks[cur].kind != Tok::Ident) fail(toks[cur], "expected generator name");
                std::string gname = toks[cur].text;
                ++cur;
                if (toks[cur].kind != Tok::Colon) fail(toks[cur], "expected ':' after generator name");
                ++cur;
                if (toks[cur].kind != Tok::Int) fail(toks[cur], "expected generator degree");
                gens.push_back({gname, parse_small_int(toks[cur])});
                ++cur;
                if (toks[cur].kind == Tok::Comma) {
                    ++cur;
                    continue;
                }
                break;
            }
            if (!at_line_end(toks[cur])) fail(toks[cur], "unexpected token after generator list");
            generators = std::move(gens);
        } else if (key.text == "relations") {
            if (have_relations) fail(key, "duplicate 'relations' directive");
            if (!generators) fail(key, "'generators' must be declared before 'relations'");
            have_relations = true;
            while (true) {
                PolyParser pp(toks, cur, generators->size(), &*generators);
                relations.push_back(pp.parse_expr().terms);
                if (toks[cur].kind == Tok::Comma) {
                    ++cur;
                    continue;
                }
                break;
            }
            if (!at_line_end(toks[cur])) fail(toks[cur], "unexpected token after relation list");
        } else if (key.text == "orientation") {
            if (orientation) fail(key, "duplicate 'orientation' directive");
            if (!generators) fail(key, "'generators' must be declared before 'orientation'");
            const Token& at = toks[cur];
            PolyParser pp(toks, cur, generators->size(), &*generators);
            RawPoly p = pp.parse_expr();
            if (!at_line_end(toks[cur])) fail(toks[cur], "unexpected token after orientation");
            if (p.terms.size() != 1 || p.terms.begin()->second != 1)
                fail(at, "orientation must be a single monomial with coefficient 1");
            orientation = p.terms.begin()->first;
        } else if (key.text == "top_degree") {
            if (have_top) fail(key, "duplicate 'top_degree' directive");
            have_top = true;
            if (toks[cur].kind != Tok::Int) fail(toks[cur], "expected integer top degree");
            top_degree = parse_small_int(toks[cur]);
            ++cur;
            if (!at_line_end(toks[cur])) fail(toks[cur], "unexpected token after top_degree");
        } else {
            fail(key, "unknown directive '" + key.text + "'");
        }
    }

    if (!generators) throw ValidationError("presentation is missing a 'generators' directive");
    if (!orientation) throw ValidationError("presentation is missing an 'orientation' directive");

    return RingPresentation::create(std::move(*generators), std::move(relations),
                                    std::move(*orientation), top_degree, std::move(name));
}

RingElement parse_element(PresentationPtr p, std::string_view expr) {
    if (!p) throw ValidationError("no presentation to evaluate in");
    std::vector<Token> toks = Lexer(expr).run();
    std::size_t cur = 0;
    while (toks[cur].kind == Tok::Newline) ++cur;
    PolyParser pp(toks, cur, p->generators().size(), &p->generators());
    RawPoly raw = pp.parse_expr();
    while (toks[cur].kind == Tok::Newline) ++cur;
    if (toks[cur].kind != Tok::End) fail(toks[cur], "unexpected trailing input");
    return RingElement::from_terms(std::move(p), raw.terms);
}

PresentationPtr builtin_presentation(std::string_view name) {
    // H*(CP^2 # -CP^2): the base of the first circle-bundle family
    static const PresentationPtr case_i = parse_presentation(
        "generators: u:2, v:2\n"
        "relations: u^2 + u*v, v^2\n"
        "orientation: u*v\n",
        std::string(kCaseIPresentation));
    // H*(CP^2 # CP^2): the base of the second family
    static const PresentationPtr case_ii = parse_presentation(
        "generators: u:2, v:2\n"
        "relations: u^2 + u*v, v^2 + 2*u*v\n"
        "orientation: u^2\n",
        std::string(kCaseIIPresentation));
    if (name == kCaseIPresentation) return case_i;
    if (name == kCaseIIPresentation) return case_ii;
    throw ValidationError("unknown builtin presentation '" + std::string(name) +
                          "' (available: caseI, caseII)");
}

std::vector<std::string> builtin_names() {
    return {std::string(kCaseIPresentation), std::string(kCaseIIPresentation)};
}

}  // namespace pineta
