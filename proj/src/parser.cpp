#include "sigma/parser.hpp"

#include <cctype>
#include <vector>

namespace sigma {

namespace {

enum class Tok { integer, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::integer: return "integer";
        case Tok::ident: return "identifier";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::slash: return "'/'";
        case Tok::caret: return "'^'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::end: return "end of input";
    }
    return "?";
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Tok::integer, start, text.substr(start, i - start)});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            out.push_back({Tok::ident, start, text.substr(start, i - start)});
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '/': k = Tok::slash; break;
            case '^': k = Tok::caret; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            default:
                throw parse_error(std::string("unexpected character '") + c + "' at offset " +
                                      std::to_string(start),
                                  start, "integer, identifier, operator or parenthesis");
        }
        out.push_back({k, start, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::end, text.size(), ""});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, int nvars) : toks_(std::move(toks)), nvars_(nvars) {}

    RationalFunction parse() {
        RationalFunction f = parse_bp(0);
        if (peek().kind != Tok::end) fail("operator or end of input");
        return f;
    }

private:
    std::vector<Token> toks_;
    int nvars_;
    std::size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        throw parse_error("expected " + expected + " but found " + tok_name(t.kind) +
                              " at offset " + std::to_string(t.offset),
                          t.offset, expected);
    }

    int var_index(const Token& t) const {
        const std::string& s = t.text;
        if (s.size() >= 2 && s[0] == 'x' &&
            s.find_first_not_of("0123456789", 1) == std::string::npos) {
            long idx = std::stol(s.substr(1)) - 1;
            if (idx < 0 || idx >= nvars_)
                throw parse_error("variable " + s + " out of range for " +
                                      std::to_string(nvars_) + " variable(s) at offset " +
                                      std::to_string(t.offset),
                                  t.offset, "variable index in [1, n]");
            return static_cast<int>(idx);
        }
        if (s.size() == 1 && nvars_ <= 3) {
            int idx = s[0] - 'x';
            if (idx >= 0 && idx < nvars_) return idx;
        }
        throw parse_error("unknown variable '" + s + "' at offset " + std::to_string(t.offset),
                          t.offset, "x1..xn" + std::string(nvars_ <= 3 ? " or x/y/z" : ""));
    }

    // ^ binds tighter than unary minus, which binds tighter than * /.
    static int infix_bp(Tok t) {
        switch (t) {
            case Tok::plus: case Tok::minus: return 10;
            case Tok::star: case Tok::slash: return 20;
            case Tok::caret: return 40;
            default: return -1;
        }
    }

    long parse_exponent() {
        if (peek().kind != Tok::integer) fail("non-negative integer exponent");
        Token t = next();
        long e = 0;
        for (char c : t.text) {
            e = e * 10 + (c - '0');
            if (e > 1'000'000)
                throw parse_error("exponent too large at offset " + std::to_string(t.offset),
                                  t.offset, "exponent <= 1000000");
        }
        if (peek().kind == Tok::caret) {  // right-associative exponent tower
            next();
            long f = parse_exponent();
            long r = 1;
            for (long k = 0; k < f; ++k) {
                r *= e;
                if (r > 1'000'000)
                    throw parse_error("exponent too large at offset " + std::to_string(t.offset),
                                      t.offset, "exponent <= 1000000");
            }
            e = r;
        }
        return e;
    }

    RationalFunction parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::integer: {
                Token tok = next();
                return RationalFunction::from_rational(Rat(Int(tok.text)), nvars_);
            }
            case Tok::ident: {
                Token tok = next();
                return RationalFunction::from_poly(Poly::variable(var_index(tok), nvars_));
            }
            case Tok::minus:
                next();
                return -parse_bp(30);
            case Tok::lparen: {
                next();
                RationalFunction f = parse_bp(0);
                if (peek().kind != Tok::rparen) fail("')'");
                next();
                return f;
            }
            default:
                fail("integer, variable, '-' or '('");
        }
    }

    RationalFunction parse_bp(int min_bp) {
        RationalFunction lhs = parse_primary();
        while (true) {
            Tok op = peek().kind;
            int bp = infix_bp(op);
            if (bp < min_bp || bp == -1) break;
            next();
            if (op == Tok::caret) {
                long e = parse_exponent();
                lhs = lhs.is_zero() && e == 0
                          ? RationalFunction::from_rational(1, nvars_)
                          : lhs.pow(static_cast<int>(e));
                continue;
            }
            RationalFunction rhs = parse_bp(bp + 1);
            switch (op) {
                case Tok::plus: lhs = lhs + rhs; break;
                case Tok::minus: lhs = lhs - rhs; break;
                case Tok::star: lhs = lhs * rhs; break;
                default: lhs = lhs / rhs; break;
            }
        }
        return lhs;
    }
};

std::string var_name(int idx, int nvars) {
    if (nvars <= 3) return std::string(1, static_cast<char>('x' + idx));
    return "x" + std::to_string(idx + 1);
}

std::string rat_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

// |coeff| * monomial, without the sign.
std::string term_string(const Monomial& m, const Rat& coeff, int nvars) {
    Rat a = coeff < 0 ? Rat(-coeff) : coeff;
    std::string out;
    bool any_var = false;
    for (int v = 0; v < nvars; ++v) {
        if (m[v] == 0) continue;
        if (any_var) out += "*";
        out += var_name(v, nvars);
        if (m[v] > 1) out += "^" + std::to_string(m[v]);
        any_var = true;
    }
    if (!any_var) return rat_string(a);
    if (a == 1) return out;
    return rat_string(a) + "*" + out;
}

bool bare_token(const std::string& s) {
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

RationalFunction parse_expr(const std::string& text, int nvars) {
    if (nvars < 1) throw poly_error("parse_expr: nvars must be >= 1");
    if (text.empty()) throw parse_error("empty input", 0, "expression");
    return Parser(tokenize(text), nvars).parse();
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [mono, coeff] = *it;
        if (first) {
            if (coeff < 0) out += "-";
            first = false;
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        out += term_string(mono, coeff, p.nvars());
    }
    return out;
}

std::string format_expr(const RationalFunction& f) {
    if (f.is_zero()) return "0";
    Poly num = Rat(rat_num(f.scalar())) * f.num();
    Poly den = Rat(rat_den(f.scalar())) * f.den();
    std::string ns = format_poly(num);
    if (den.is_constant() && den.constant_value() == 1) return ns;
    if (num.term_count() > 1) ns = "(" + ns + ")";
    std::string ds = format_poly(den);
    if (!bare_token(ds)) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

}  // namespace sigma
