#include "motivic/grothendieck_ring.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace motivic {

std::int64_t Degree::value() const {
    if (neg_inf_)
        throw InvalidArgument("degree is -infinity");
    return value_;
}

std::string Degree::to_string() const {
    return neg_inf_ ? std::string("-inf") : std::to_string(value_);
}

std::string_view to_string(Order order) noexcept {
    switch (order) {
    case Order::Less:
        return "Less";
    case Order::Equal:
        return "Equal";
    case Order::Greater:
        return "Greater";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(const Integer& constant) {
    if (constant != 0)
        terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Integer& coeff, std::int64_t exponent) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

LaurentPoly LaurentPoly::u(std::int64_t exponent) { return monomial(1, exponent); }

LaurentPoly LaurentPoly::from_terms(std::span<const std::pair<std::int64_t, Integer>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms)
        p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(std::int64_t exponent, const Integer& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Integer LaurentPoly::coefficient(std::int64_t exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

Degree LaurentPoly::degree() const noexcept {
    return terms_.empty() ? Degree::neg_infinity() : Degree(terms_.begin()->first);
}

std::int64_t LaurentPoly::low_degree() const {
    if (terms_.empty())
        throw InvalidArgument("low degree of zero");
    return terms_.rbegin()->first;
}

Integer LaurentPoly::leading_coefficient() const {
    return terms_.empty() ? Integer(0) : terms_.begin()->second;
}

mpq_class LaurentPoly::evaluate(const mpq_class& value) const {
    mpq_class sum = 0;
    for (const auto& [e, c] : terms_) {
        if (e < 0 && value == 0)
            throw InvalidArgument("evaluating a negative power at u = 0");
        mpq_class power = 1;
        mpq_class base = e >= 0 ? value : mpq_class(1) / value;
        for (std::int64_t k = 0; k < (e >= 0 ? e : -e); ++k)
            power *= base;
        sum += mpq_class(c) * power;
    }
    return sum;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (exponent != 0) {
        if (exponent & 1U)
            result *= base;
        exponent >>= 1U;
        if (exponent != 0)
            base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(std::int64_t shift) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
    return r;
}

namespace {

void render_terms(std::string& out, const LaurentPoly::TermMap& terms) {
    bool first = true;
    for (const auto& [e, c] : terms) {
        const bool negative = c < 0;
        Integer magnitude = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (e == 0) {
            out += magnitude.get_str();
            continue;
        }
        if (magnitude != 1)
            out += magnitude.get_str() + "*";
        out += "u";
        if (e != 1)
            out += "^" + std::to_string(e);
    }
}

// Recursive-descent reader for the canonical series grammar:
//   series := term (('+' | '-') term)*
//   term   := INT ['*' power] | power | 'O' '(' power ')'
//   power  := 'u' ['^' SIGNED_INT]
// An O-term may only appear last.
class SeriesReader {
public:
    explicit SeriesReader(std::string_view text) : text_(text) {}

    struct Result {
        std::vector<std::pair<std::int64_t, Integer>> terms;
        std::optional<std::int64_t> floor;
    };

    Result read() {
        Result result;
        skip_ws();
        if (at_end())
            fail("empty expression");
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        while (true) {
            skip_ws();
            if (result.floor)
                fail("terms after O(...)");
            if (peek() == 'O') {
                ++pos_;
                expect('(');
                skip_ws();
                std::int64_t e = 0;
                if (peek() == '1')
                    ++pos_; // O(1)
                else
                    e = read_power();
                skip_ws();
                expect(')');
                // the sign in front of O(...) is irrelevant
                result.floor = e;
            } else {
                Integer coeff = 1;
                std::int64_t exponent = 0;
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    coeff = read_natural();
                    skip_ws();
                    if (peek() == '*') {
                        ++pos_;
                        skip_ws();
                        exponent = read_power();
                    }
                } else if (peek() == 'u') {
                    exponent = read_power();
                } else {
                    fail("expected a term");
                }
                result.terms.emplace_back(exponent, sign * coeff);
            }
            skip_ws();
            if (at_end())
                break;
            if (peek() != '+' && peek() != '-')
                fail("expected '+' or '-'");
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Integer read_natural() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::int64_t read_power() {
        expect('u');
        skip_ws();
        if (peek() != '^')
            return 1;
        ++pos_;
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
        }
        const std::size_t start = pos_;
        Integer e = read_natural();
        if (!e.fits_slong_p())
            throw ParseError("exponent out of range", start);
        return negative ? -e.get_si() : e.get_si();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    render_terms(out, terms_);
    return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    auto result = SeriesReader(text).read();
    if (result.floor)
        throw ParseError("O(...) term in a Laurent polynomial", text.find('O'));
    return from_terms(result.terms);
}

// ---------------------------------------------------------------------------
// MotiveSeries

MotiveSeries::MotiveSeries(const LaurentPoly& poly) : known_(poly) {}

MotiveSeries::MotiveSeries(const LaurentPoly& poly, Degree floor) : floor_(floor) {
    if (floor.is_neg_infinity()) {
        known_ = poly;
        return;
    }
    std::vector<std::pair<std::int64_t, Integer>> kept;
    for (const auto& [e, c] : poly.terms()) {
        if (e <= floor.value())
            break;
        kept.emplace_back(e, c);
    }
    known_ = LaurentPoly::from_terms(kept);
}

MotiveSeries MotiveSeries::unknown_below(std::int64_t floor) { return MotiveSeries(LaurentPoly(), floor); }

MotiveSeries MotiveSeries::truncated(Degree floor) const {
    return MotiveSeries(known_, std::max(floor_, floor));
}

MotiveSeries MotiveSeries::operator-() const {
    MotiveSeries r;
    r.known_ = -known_;
    r.floor_ = floor_;
    return r;
}

MotiveSeries operator+(const MotiveSeries& a, const MotiveSeries& b) {
    return MotiveSeries(a.known_ + b.known_, std::max(a.floor_, b.floor_));
}

MotiveSeries operator-(const MotiveSeries& a, const MotiveSeries& b) {
    return MotiveSeries(a.known_ - b.known_, std::max(a.floor_, b.floor_));
}

MotiveSeries operator*(const MotiveSeries& a, const MotiveSeries& b) {
    // a = A + ea with deg ea <= fa, likewise b. The product error
    // A*eb + B*ea + ea*eb has degree at most max(fa + top_b, fb + top_a),
    // where a top never drops below its own floor.
    const Degree top_a = std::max(a.top(), a.floor_);
    const Degree top_b = std::max(b.top(), b.floor_);
    const Degree floor = std::max(a.floor_ + top_b, b.floor_ + top_a);
    return MotiveSeries(a.known_ * b.known_, floor);
}

std::string MotiveSeries::to_string() const {
    std::string out;
    if (known_.is_zero()) {
        if (is_exact())
            return "0";
    } else {
        render_terms(out, known_.terms());
    }
    if (!is_exact()) {
        const std::int64_t f = floor_.value();
        std::string tail = f == 0 ? std::string("O(1)") : (f == 1 ? std::string("O(u)") : "O(u^" + std::to_string(f) + ")");
        out += out.empty() ? tail : " + " + tail;
    }
    return out;
}

MotiveSeries MotiveSeries::parse(std::string_view text) {
    auto result = SeriesReader(text).read();
    auto poly = LaurentPoly::from_terms(result.terms);
    if (!result.floor)
        return MotiveSeries(poly);
    return MotiveSeries(poly, Degree(*result.floor));
}

// ---------------------------------------------------------------------------
// Free operations

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
MotiveSeries add(const MotiveSeries& a, const MotiveSeries& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
MotiveSeries mul(const MotiveSeries& a, const MotiveSeries& b) { return a * b; }

VirtualDim virtual_dim(const LaurentPoly& a) noexcept { return a.degree(); }

VirtualDim virtual_dim(const MotiveSeries& a) {
    if (a.is_zero_to_precision() && !a.is_exact())
        throw PrecisionExhausted("series vanishes down to its floor " + a.floor().to_string() +
                                 "; virtual dimension undecidable");
    return a.top();
}

Order leq_order(const LaurentPoly& a, const LaurentPoly& b) noexcept {
    const LaurentPoly diff = b - a;
    if (diff.is_zero())
        return Order::Equal;
    return diff.leading_coefficient() > 0 ? Order::Less : Order::Greater;
}

Order leq_order(const MotiveSeries& a, const MotiveSeries& b) {
    const MotiveSeries diff = b - a;
    if (!diff.is_zero_to_precision())
        return diff.known_part().leading_coefficient() > 0 ? Order::Less : Order::Greater;
    if (diff.is_exact())
        return Order::Equal;
    const Degree f = diff.floor();
    if (a.top() > f && b.top() > f)
        return Order::Equal;
    throw PrecisionExhausted("difference vanishes down to floor " + f.to_string() +
                             " and an operand has no visible term; comparison undecidable");
}

MotiveSeries geometric_sum(std::int64_t p, std::int64_t floor) {
    if (p < 1)
        throw InvalidArgument("geometric_sum requires p >= 1");
    std::vector<std::pair<std::int64_t, Integer>> terms;
    for (std::int64_t e = 0; e > floor; e -= p)
        terms.emplace_back(e, Integer(1));
    return MotiveSeries(LaurentPoly::from_terms(terms), Degree(floor));
}

MotiveSeries limit_of_sequence(std::span<const MotiveSeries> seq, std::span<const std::int64_t> bounds) {
    if (seq.empty())
        throw InvalidArgument("limit of an empty sequence");
    if (bounds.size() + 1 != seq.size())
        throw InvalidArgument("expected one dimension bound per consecutive difference");
    for (std::size_t k = 1; k < bounds.size(); ++k)
        if (bounds[k] >= bounds[k - 1])
            throw BoundViolated("dimension bounds must strictly decrease (index " + std::to_string(k) + ")");
    for (std::size_t k = 0; k < bounds.size(); ++k) {
        const MotiveSeries diff = seq[k + 1] - seq[k];
        // A difference that vanishes to its floor cannot refute the declared
        // bound, which is then taken as given.
        const Degree dim = diff.is_zero_to_precision() ? Degree::neg_infinity() : diff.top();
        if (dim >= Degree(bounds[k]))
            throw BoundViolated("difference " + std::to_string(k) + " has dimension " + dim.to_string() +
                                " >= declared bound " + std::to_string(bounds[k]));
    }
    if (bounds.empty())
        return seq.back();
    return seq.back().truncated(Degree(bounds.back()));
}

} // namespace motivic
