#pragma once

// Exact arithmetic in K_0(AS), its localization and its completion, carried
// out on the image of the virtual Poincare polynomial: Z[u], Z[u, u^-1] and
// Z[u][[u^-1]]. Every class is stored through that image; AS-sets themselves
// never appear.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "motivic/errors.hpp"

namespace motivic {

using Integer = mpz_class;

// An integer degree or -infinity. Used for virtual dimensions, precision
// floors and tops of series.
class Degree {
public:
    constexpr Degree(std::int64_t value) noexcept : value_(value), neg_inf_(false) {}

    static constexpr Degree neg_infinity() noexcept { return Degree(); }

    constexpr bool is_neg_infinity() const noexcept { return neg_inf_; }
    constexpr bool is_finite() const noexcept { return !neg_inf_; }

    // Throws InvalidArgument on -infinity.
    std::int64_t value() const;

    friend constexpr Degree operator+(Degree a, Degree b) noexcept {
        if (a.neg_inf_ || b.neg_inf_)
            return neg_infinity();
        return Degree(a.value_ + b.value_);
    }

    friend constexpr bool operator==(Degree a, Degree b) noexcept {
        return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
        if (a.neg_inf_ || b.neg_inf_)
            return b.neg_inf_ <=> a.neg_inf_;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const;

private:
    constexpr Degree() noexcept : value_(0), neg_inf_(true) {}

    std::int64_t value_;
    bool neg_inf_;
};

using VirtualDim = Degree;

enum class Order { Less, Equal, Greater };

std::string_view to_string(Order order) noexcept;

// Finitely supported integer combination of powers of u. Canonical: no zero
// coefficient is ever stored, so equality is term-map equality.
class LaurentPoly {
public:
    using TermMap = std::map<std::int64_t, Integer, std::greater<>>;

    LaurentPoly() = default;
    LaurentPoly(long constant);
    explicit LaurentPoly(const Integer& constant);

    static LaurentPoly monomial(const Integer& coeff, std::int64_t exponent);
    // u^exponent
    static LaurentPoly u(std::int64_t exponent = 1);
    // Builds from arbitrary (exponent, coefficient) pairs, merging repeats.
    static LaurentPoly from_terms(std::span<const std::pair<std::int64_t, Integer>> terms);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(std::int64_t exponent) const;

    // Largest exponent with a nonzero coefficient; -infinity for zero.
    Degree degree() const noexcept;
    // Smallest exponent with a nonzero coefficient; requires nonzero.
    std::int64_t low_degree() const;
    // Coefficient of the top term; zero for the zero element.
    Integer leading_coefficient() const;

    // Substitution u = value, computed exactly. value must be nonzero when
    // negative exponents are present.
    mpq_class evaluate(const mpq_class& value) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    LaurentPoly pow(unsigned exponent) const;
    // Multiplication by u^shift.
    LaurentPoly shifted(std::int64_t shift) const;

    std::string to_string() const;
    static LaurentPoly parse(std::string_view text);

private:
    void add_term(std::int64_t exponent, const Integer& coeff);

    TermMap terms_;
};

// An element of the completion known modulo terms of degree <= floor. A floor
// of -infinity means the element is exact (a Laurent polynomial).
class MotiveSeries {
public:
    using TermMap = LaurentPoly::TermMap;

    // Exact zero.
    MotiveSeries() = default;
    // Exact embedding of a Laurent polynomial.
    MotiveSeries(const LaurentPoly& poly);
    // Embedding known only above floor: terms at or below floor are dropped.
    MotiveSeries(const LaurentPoly& poly, Degree floor);

    // Unknown element of F^(-floor): "O(u^floor)".
    static MotiveSeries unknown_below(std::int64_t floor);

    const TermMap& terms() const noexcept { return known_.terms(); }
    const LaurentPoly& known_part() const noexcept { return known_; }
    Degree floor() const noexcept { return floor_; }
    bool is_exact() const noexcept { return floor_.is_neg_infinity(); }
    // Highest possibly nonzero exponent among the known terms; -infinity when
    // nothing nonzero is known above the floor.
    Degree top() const noexcept { return known_.degree(); }
    // True when no nonzero term is known above the floor.
    bool is_zero_to_precision() const noexcept { return known_.is_zero(); }

    // Raises the floor (never lowers it) and drops the newly unknown terms.
    MotiveSeries truncated(Degree floor) const;

    MotiveSeries operator-() const;
    friend MotiveSeries operator+(const MotiveSeries& a, const MotiveSeries& b);
    friend MotiveSeries operator-(const MotiveSeries& a, const MotiveSeries& b);
    friend MotiveSeries operator*(const MotiveSeries& a, const MotiveSeries& b);
    friend bool operator==(const MotiveSeries& a, const MotiveSeries& b) = default;

    std::string to_string() const;
    static MotiveSeries parse(std::string_view text);

private:
    LaurentPoly known_;
    Degree floor_ = Degree::neg_infinity();
};

// Ring operations under the names used throughout the library.
LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
MotiveSeries add(const MotiveSeries& a, const MotiveSeries& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
MotiveSeries mul(const MotiveSeries& a, const MotiveSeries& b);

VirtualDim virtual_dim(const LaurentPoly& a) noexcept;
// Throws PrecisionExhausted when a vanishes down to a finite floor.
VirtualDim virtual_dim(const MotiveSeries& a);

// a <= b iff b == a or the leading coefficient of b - a is positive.
Order leq_order(const LaurentPoly& a, const LaurentPoly& b) noexcept;
// Series version. b - a vanishing above the common floor counts as Equal when
// both operands have a visible term above that floor; otherwise the
// comparison is undecidable and PrecisionExhausted is thrown.
Order leq_order(const MotiveSeries& a, const MotiveSeries& b);

// sum_{i>=0} u^(-p i), known modulo degree <= floor.
MotiveSeries geometric_sum(std::int64_t p, std::int64_t floor);

// Finite-precision Cauchy limit. bounds[k] must strictly decrease and bound
// the virtual dimension of seq[k+1] - seq[k] from above (strictly). Returns
// the last element with its floor raised to bounds.back().
MotiveSeries limit_of_sequence(std::span<const MotiveSeries> seq, std::span<const std::int64_t> bounds);

} // namespace motivic
