#include "ftex/parse.hpp"

#include <algorithm>
#include <cctype>

namespace ftex {

bool valid_identifier(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    void advance()
    {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col, msg); }
};

std::uint64_t lex_nat(Lexer& lx, const char* what)
{
    if (!std::isdigit(static_cast<unsigned char>(lx.peek()))) lx.fail(std::string("expected ") + what);
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        v = v * 10 + static_cast<std::uint64_t>(lx.peek() - '0');
        if (v >= kExponentCap) lx.fail("number too large");
        lx.advance();
    }
    return v;
}

std::string lex_ident(Lexer& lx)
{
    std::string s;
    while (std::isalnum(static_cast<unsigned char>(lx.peek())) || lx.peek() == '_') {
        s += lx.peek();
        lx.advance();
    }
    return s;
}

// factor := ident ("^" nat)?
Polynomial parse_factor(Lexer& lx, const RingPtr& ring)
{
    lx.skip_ws();
    if (!std::isalpha(static_cast<unsigned char>(lx.peek()))) lx.fail("expected a variable name");
    int l = lx.line, c = lx.col;
    std::string name = lex_ident(lx);
    int idx = ring->var_index(name);
    if (idx < 0) throw ParseError(l, c, "unknown variable '" + name + "'");
    std::uint64_t exp = 1;
    lx.skip_ws();
    if (lx.peek() == '^') {
        lx.advance();
        lx.skip_ws();
        exp = lex_nat(lx, "an exponent");
    }
    return Polynomial::variable(ring, static_cast<std::size_t>(idx), exp);
}

// term := integer ("*" factor)* | factor ("*" factor)*
Polynomial parse_term(Lexer& lx, const RingPtr& ring)
{
    lx.skip_ws();
    Polynomial acc = Polynomial::constant(ring, 1);
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        std::uint64_t n = lex_nat(lx, "an integer");
        acc = Polynomial::constant(ring, static_cast<std::int64_t>(n % ring->field.p()));
    } else {
        acc = parse_factor(lx, ring);
    }
    lx.skip_ws();
    while (lx.peek() == '*') {
        lx.advance();
        acc = acc * parse_factor(lx, ring);
        lx.skip_ws();
    }
    return acc;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring)
{
    Lexer lx{text};
    lx.skip_ws();
    if (lx.peek() == '\0') lx.fail("empty polynomial");

    bool negate = false;
    if (lx.peek() == '-' || lx.peek() == '+') {
        negate = lx.peek() == '-';
        lx.advance();
    }
    Polynomial acc = parse_term(lx, ring);
    if (negate) acc = -acc;
    lx.skip_ws();
    while (lx.peek() == '+' || lx.peek() == '-') {
        bool minus = lx.peek() == '-';
        lx.advance();
        Polynomial t = parse_term(lx, ring);
        acc = minus ? acc - t : acc + t;
        lx.skip_ws();
    }
    if (lx.peek() != '\0') lx.fail("unexpected character '" + std::string(1, lx.peek()) + "'");
    return acc;
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text, const RingPtr& ring)
{
    std::vector<Polynomial> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        std::string piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        bool blank = piece.find_first_not_of(" \t\r\n") == std::string::npos;
        if (!blank) out.push_back(parse_polynomial(piece, ring));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

std::string print_monomial(const Monomial& m, const RingPtr& ring)
{
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring->variables[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

std::string print_polynomial(const Polynomial& f)
{
    if (f.is_zero()) return "0";
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<const std::pair<const Monomial, std::uint64_t>*> ts;
    for (const auto& t : f.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });

    std::string s;
    for (auto* t : ts) {
        if (!s.empty()) s += " + ";
        if (t->first.is_one()) {
            s += std::to_string(t->second);
        } else if (t->second != 1) {
            s += std::to_string(t->second) + "*" + print_monomial(t->first, f.ring());
        } else {
            s += print_monomial(t->first, f.ring());
        }
    }
    return s;
}

}  // namespace ftex
