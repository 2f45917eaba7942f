#pragma once

// Exact multivariate polynomials over Q, truncated power series, and the
// arc/jet computations built from them: composition f(gamma(t)) mod t^(n+1),
// jet equations, Jacobian minors, and orders along arcs.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "motivic/errors.hpp"

namespace motivic {

using Rational = mpq_class;

class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    // Lexicographically descending in the declared variable order.
    using TermMap = std::map<Exponents, Rational, std::greater<>>;

    // Zero polynomial with no variables.
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> variables);

    static MultiPoly constant(std::vector<std::string> variables, const Rational& value);
    static MultiPoly variable(std::vector<std::string> variables, std::size_t index);
    static MultiPoly monomial(std::vector<std::string> variables, Exponents exponents, const Rational& coeff);

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    std::size_t arity() const noexcept { return variables_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    unsigned total_degree() const noexcept;

    MultiPoly derivative(std::size_t variable) const;
    Rational evaluate(std::span<const Rational> point) const;

    // Re-expresses the polynomial over a variable list that contains every
    // current variable.
    MultiPoly with_variables(const std::vector<std::string>& variables) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const Rational& scalar);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

    MultiPoly pow(unsigned exponent) const;

    std::string to_string() const;

    // Grammar: identifiers, integer or p/q literals, + - * ^ and parentheses.
    // Juxtaposition is rejected. When variables is empty the variable list
    // is the sorted set of identifiers that occur.
    static MultiPoly parse(std::string_view text, const std::vector<std::string>& variables = {});

private:
    void add_term(const Exponents& exponents, const Rational& coeff);
    // Aligns two operands; a variable-free constant adopts the other's list.
    static void align(MultiPoly& a, MultiPoly& b);

    std::vector<std::string> variables_;
    TermMap terms_;
};

// Parses several polynomials over one shared variable list (sorted union of
// their identifiers when variables is empty).
std::vector<MultiPoly> parse_polynomials(std::span<const std::string> texts,
                                         const std::vector<std::string>& variables = {});

// Power series c_0 + c_1 t + ... + c_n t^n known modulo t^(n+1).
template <class R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw InvalidArgument("a truncated series needs at least one coefficient");
    }

    std::size_t cap() const noexcept { return coeffs_.size() - 1; }
    const std::vector<R>& coeffs() const noexcept { return coeffs_; }
    const R& operator[](std::size_t i) const { return coeffs_.at(i); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_caps(a, b);
        std::vector<R> r = a.coeffs_;
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] += b.coeffs_[i];
        return TruncatedSeries(std::move(r));
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_caps(a, b);
        std::vector<R> r = a.coeffs_;
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] -= b.coeffs_[i];
        return TruncatedSeries(std::move(r));
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_caps(a, b);
        const std::size_t n = a.coeffs_.size();
        std::vector<R> r;
        r.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            R acc = a.coeffs_[0] * b.coeffs_[k];
            for (std::size_t i = 1; i <= k; ++i)
                acc += a.coeffs_[i] * b.coeffs_[k - i];
            r.push_back(std::move(acc));
        }
        return TruncatedSeries(std::move(r));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    static void check_caps(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.coeffs_.size() != b.coeffs_.size())
            throw ArityMismatch("truncated series with different caps");
    }

    std::vector<R> coeffs_;
};

using TruncSeries = TruncatedSeries<Rational>;

// A point of the jet space L_n(R^N): N components sharing one cap n.
class ArcJet {
public:
    explicit ArcJet(std::vector<TruncSeries> components);
    // Coefficient lists are zero-padded (or cut) to cap + 1 entries.
    static ArcJet from_coefficients(const std::vector<std::vector<Rational>>& coefficients, std::size_t cap);

    std::size_t arity() const noexcept { return components_.size(); }
    std::size_t cap() const noexcept { return cap_; }
    const std::vector<TruncSeries>& components() const noexcept { return components_; }
    const TruncSeries& operator[](std::size_t j) const { return components_.at(j); }

private:
    std::vector<TruncSeries> components_;
    std::size_t cap_ = 0;
};

// ord_t of a truncated series: an exact value, or a lower bound when every
// visible coefficient vanishes. Values may be negative for quotients.
class SeriesOrder {
public:
    static SeriesOrder exactly(std::int64_t value) { return SeriesOrder(value, false); }
    static SeriesOrder at_least(std::int64_t bound) { return SeriesOrder(bound, true); }

    bool is_exact() const noexcept { return !at_least_; }
    bool is_lower_bound() const noexcept { return at_least_; }
    // The exact order, or the lower bound.
    std::int64_t value() const noexcept { return value_; }

    friend bool operator==(const SeriesOrder&, const SeriesOrder&) = default;

    std::string to_string() const;

private:
    SeriesOrder(std::int64_t value, bool at_least) : value_(value), at_least_(at_least) {}

    std::int64_t value_;
    bool at_least_;
};

// The minimum of two orders, keeping track of what is certain.
SeriesOrder min_order(SeriesOrder a, SeriesOrder b) noexcept;

// Generators over one variable list; zero generators and exact duplicates are
// dropped, first occurrence wins.
class PolySystem {
public:
    PolySystem() = default;
    PolySystem(std::vector<std::string> variables, const std::vector<MultiPoly>& generators);

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const std::vector<MultiPoly>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    bool empty() const noexcept { return generators_.empty(); }

    // True when every generator vanishes at the point.
    bool vanishes_at(std::span<const Rational> point) const;

    // Rendered generators, sorted lexicographically.
    std::vector<std::string> sorted_strings() const;

private:
    std::vector<std::string> variables_;
    std::vector<MultiPoly> generators_;
};

// A matrix entry given as numerator / denominator.
struct RationalEntry {
    MultiPoly numerator;
    MultiPoly denominator;
};

// f(gamma(t)) mod t^(cap+1).
TruncSeries compose(const MultiPoly& f, const ArcJet& gamma);

// Name of the jet coordinate for coefficient i of variable j: a_i, b_i, ...
std::string jet_variable_name(std::size_t variable, std::size_t coefficient);

// All coefficients P_i^f, i <= n, of f(sum_i a_i t^i) for f in I, as
// polynomials in the jet coordinates ordered a_0..a_n, b_0..b_n, ...
PolySystem jet_equations(const PolySystem& ideal, std::size_t n);

// All (N-d) x (N-d) minors of the Jacobian matrix of fs (N variables).
PolySystem jacobian_minors(std::span<const MultiPoly> fs, std::size_t ambient_dim, std::size_t dim);

// H_X for a hypersurface X = V(f): the partial derivatives of f.
PolySystem hypersurface_HX(const MultiPoly& f);

SeriesOrder series_order(const TruncSeries& s) noexcept;

// The e with gamma in C_e(X): minimum over generators h of ord_t h(gamma(t)).
SeriesOrder arc_level(const ArcJet& gamma, const PolySystem& H);

// Determinant by cofactor expansion; matrix is row-major and square.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& matrix);

// Minimum order along gamma of all dim x dim minors of the Jacobian matrix of
// the map sigma (components over a common source variable list).
SeriesOrder ord_jac_along(std::span<const MultiPoly> sigma, const ArcJet& gamma, std::size_t dim);

// ord_t(num(gamma)) - ord_t(den(gamma)). Throws IndeterminateAtCap when the
// denominator vanishes to the cap.
SeriesOrder entry_order(const RationalEntry& entry, const ArcJet& gamma);

// Order of the Jacobian matrix of f (components in dim chart variables)
// along gamma: the minimum order of the partial derivatives. Throws
// IndeterminateAtCap when no entry has a certain order.
SeriesOrder jacobian_matrix_order(std::span<const MultiPoly> f, const ArcJet& gamma, std::size_t dim);
// Same, with the matrix entries supplied directly as quotients.
SeriesOrder jacobian_matrix_order(std::span<const RationalEntry> entries, const ArcJet& gamma);

} // namespace motivic
