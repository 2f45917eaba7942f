#include <algorithm>
#include <cctype>
#include <set>

#include "motivic/poly_core.hpp"

namespace motivic {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// expr    := ['+'|'-'] product (('+'|'-') product)*
// product := power ('*' power)*
// power   := atom ['^' NATURAL]
// atom    := NUMBER | IDENT | '(' expr ')'
// NUMBER  := NATURAL ['/' NATURAL]
class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& variables)
        : text_(text), variables_(variables) {}

    MultiPoly parse() {
        skip_ws();
        if (at_end())
            fail("empty polynomial");
        MultiPoly p = expr();
        skip_ws();
        if (!at_end())
            fail(is_ident_start(peek()) || std::isdigit(static_cast<unsigned char>(peek())) || peek() == '('
                     ? "implicit multiplication is not allowed"
                     : std::string("unexpected '") + peek() + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    MultiPoly expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        MultiPoly acc = product();
        if (negate)
            acc = -acc;
        while (true) {
            skip_ws();
            if (peek() != '+' && peek() != '-')
                return acc;
            const bool minus = peek() == '-';
            ++pos_;
            MultiPoly rhs = product();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
    }

    MultiPoly product() {
        MultiPoly acc = power();
        while (true) {
            skip_ws();
            if (peek() != '*')
                return acc;
            ++pos_;
            acc = acc * power();
        }
    }

    MultiPoly power() {
        MultiPoly base = atom();
        skip_ws();
        if (peek() != '^')
            return base;
        ++pos_;
        skip_ws();
        const std::size_t start = pos_;
        const mpz_class e = natural();
        if (!e.fits_uint_p() || e > 1000)
            throw ParseError("exponent too large", start);
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    MultiPoly atom() {
        skip_ws();
        if (at_end())
            fail("unexpected end of input");
        const char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            skip_ws();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const mpz_class num = natural();
            if (peek() == '/') {
                ++pos_;
                const std::size_t start = pos_;
                const mpz_class den = natural();
                if (den == 0)
                    throw ParseError("zero denominator", start);
                Rational q(num, den);
                q.canonicalize();
                return MultiPoly::constant(variables_, q);
            }
            return MultiPoly::constant(variables_, Rational(num));
        }
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (is_ident_char(peek()))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            auto it = std::find(variables_.begin(), variables_.end(), name);
            if (it == variables_.end())
                throw ParseError("unknown variable '" + name + "'", start);
            return MultiPoly::variable(variables_, static_cast<std::size_t>(it - variables_.begin()));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    mpz_class natural() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    const std::vector<std::string>& variables_;
    std::size_t pos_ = 0;
};

void collect_identifiers(std::string_view text, std::set<std::string>& out) {
    for (std::size_t i = 0; i < text.size();) {
        if (is_ident_start(text[i])) {
            const std::size_t start = i;
            while (i < text.size() && is_ident_char(text[i]))
                ++i;
            out.emplace(text.substr(start, i - start));
        } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            // skip the whole literal so "2x" is not read as an identifier start
            while (i < text.size() && is_ident_char(text[i]))
                ++i;
        } else {
            ++i;
        }
    }
}

} // namespace

MultiPoly MultiPoly::parse(std::string_view text, const std::vector<std::string>& variables) {
    if (!variables.empty())
        return PolyParser(text, variables).parse();
    std::set<std::string> names;
    collect_identifiers(text, names);
    const std::vector<std::string> vars(names.begin(), names.end());
    return PolyParser(text, vars).parse();
}

std::vector<MultiPoly> parse_polynomials(std::span<const std::string> texts, const std::vector<std::string>& variables) {
    std::vector<std::string> vars = variables;
    if (vars.empty()) {
        std::set<std::string> names;
        for (const auto& t : texts)
            collect_identifiers(t, names);
        vars.assign(names.begin(), names.end());
    }
    std::vector<MultiPoly> out;
    out.reserve(texts.size());
    for (const auto& t : texts)
        out.push_back(PolyParser(t, vars).parse());
    return out;
}

} // namespace motivic
