#include "motivic/poly_core.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace motivic {

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& value) {
    MultiPoly p(std::move(variables));
    p.add_term(Exponents(p.arity(), 0), value);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t index) {
    if (index >= variables.size())
        throw ArityMismatch("variable index " + std::to_string(index) + " out of range");
    MultiPoly p(std::move(variables));
    Exponents e(p.arity(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponents exponents, const Rational& coeff) {
    if (exponents.size() != variables.size())
        throw ArityMismatch("exponent vector length differs from the variable count");
    MultiPoly p(std::move(variables));
    p.add_term(exponents, coeff);
    return p;
}

void MultiPoly::add_term(const Exponents& exponents, const Rational& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool MultiPoly::is_constant() const noexcept {
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t k) { return k == 0; });
}

unsigned MultiPoly::total_degree() const noexcept {
    unsigned best = 0;
    for (const auto& [e, c] : terms_)
        best = std::max(best, std::accumulate(e.begin(), e.end(), 0U));
    return best;
}

MultiPoly MultiPoly::derivative(std::size_t variable) const {
    if (variable >= arity())
        throw ArityMismatch("derivative with respect to a missing variable");
    MultiPoly r(variables_);
    for (const auto& [e, c] : terms_) {
        if (e[variable] == 0)
            continue;
        Exponents d = e;
        --d[variable];
        r.add_term(d, c * e[variable]);
    }
    return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != arity())
        throw ArityMismatch("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                            std::to_string(arity()));
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t j = 0; j < e.size(); ++j)
            for (std::uint32_t k = 0; k < e[j]; ++k)
                term *= point[j];
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& variables) const {
    std::vector<std::size_t> position(arity());
    for (std::size_t j = 0; j < arity(); ++j) {
        auto it = std::find(variables.begin(), variables.end(), variables_[j]);
        if (it == variables.end())
            throw ArityMismatch("variable '" + variables_[j] + "' missing from the target variable list");
        position[j] = static_cast<std::size_t>(it - variables.begin());
    }
    MultiPoly r(variables);
    for (const auto& [e, c] : terms_) {
        Exponents mapped(variables.size(), 0);
        for (std::size_t j = 0; j < e.size(); ++j)
            mapped[position[j]] += e[j];
        r.add_term(mapped, c);
    }
    return r;
}

void MultiPoly::align(MultiPoly& a, MultiPoly& b) {
    if (a.variables_ == b.variables_)
        return;
    if (a.variables_.empty() && a.is_constant()) {
        a = a.is_zero() ? MultiPoly(b.variables_) : constant(b.variables_, a.terms_.begin()->second);
        return;
    }
    if (b.variables_.empty() && b.is_constant()) {
        b = b.is_zero() ? MultiPoly(a.variables_) : constant(a.variables_, b.terms_.begin()->second);
        return;
    }
    throw ArityMismatch("polynomials over different variable lists");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    MultiPoly rhs = other;
    align(*this, rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    MultiPoly rhs = other;
    align(*this, rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= scalar;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly lhs = a;
    MultiPoly rhs = b;
    MultiPoly::align(lhs, rhs);
    MultiPoly r(lhs.variables_);
    MultiPoly::Exponents e(lhs.arity());
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t j = 0; j < e.size(); ++j)
                e[j] = ea[j] + eb[j];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly result = constant(variables_, 1);
    MultiPoly base = *this;
    while (exponent != 0) {
        if (exponent & 1U)
            result = result * base;
        exponent >>= 1U;
        if (exponent != 0)
            base = base * base;
    }
    return result;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        const Rational magnitude = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string monomial;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0)
                continue;
            if (!monomial.empty())
                monomial += "*";
            monomial += variables_[j];
            if (e[j] > 1)
                monomial += "^" + std::to_string(e[j]);
        }
        if (monomial.empty())
            out += magnitude.get_str();
        else if (magnitude == 1)
            out += monomial;
        else
            out += magnitude.get_str() + "*" + monomial;
    }
    return out;
}

// ---------------------------------------------------------------------------
// TruncSeries, ArcJet, SeriesOrder

ArcJet::ArcJet(std::vector<TruncSeries> components) : components_(std::move(components)) {
    if (components_.empty())
        throw InvalidArgument("an arc needs at least one component");
    cap_ = components_.front().cap();
    for (const auto& c : components_)
        if (c.cap() != cap_)
            throw ArityMismatch("arc components with different caps");
}

ArcJet ArcJet::from_coefficients(const std::vector<std::vector<Rational>>& coefficients, std::size_t cap) {
    std::vector<TruncSeries> comps;
    comps.reserve(coefficients.size());
    for (const auto& c : coefficients) {
        std::vector<Rational> padded(cap + 1, Rational(0));
        for (std::size_t i = 0; i < std::min(c.size(), cap + 1); ++i)
            padded[i] = c[i];
        comps.emplace_back(std::move(padded));
    }
    return ArcJet(std::move(comps));
}

std::string SeriesOrder::to_string() const {
    return at_least_ ? "AtLeast(" + std::to_string(value_) + ")" : std::to_string(value_);
}

SeriesOrder min_order(SeriesOrder a, SeriesOrder b) noexcept {
    if (a.is_exact() && b.is_exact())
        return a.value() <= b.value() ? a : b;
    if (a.is_lower_bound() && b.is_lower_bound())
        return a.value() <= b.value() ? a : b;
    const SeriesOrder& exact = a.is_exact() ? a : b;
    const SeriesOrder& bound = a.is_exact() ? b : a;
    // min(v, >= k) is v when v <= k; otherwise only >= k is known.
    return exact.value() <= bound.value() ? exact : bound;
}

SeriesOrder series_order(const TruncSeries& s) noexcept {
    const auto& c = s.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0)
            return SeriesOrder::exactly(static_cast<std::int64_t>(i));
    return SeriesOrder::at_least(static_cast<std::int64_t>(s.cap() + 1));
}

// ---------------------------------------------------------------------------
// PolySystem

PolySystem::PolySystem(std::vector<std::string> variables, const std::vector<MultiPoly>& generators)
    : variables_(std::move(variables)) {
    for (const auto& g : generators) {
        MultiPoly h = g.variables() == variables_ ? g : g.with_variables(variables_);
        if (h.is_zero())
            continue;
        if (std::find(generators_.begin(), generators_.end(), h) != generators_.end())
            continue;
        generators_.push_back(std::move(h));
    }
}

bool PolySystem::vanishes_at(std::span<const Rational> point) const {
    return std::all_of(generators_.begin(), generators_.end(),
                       [&](const MultiPoly& g) { return g.evaluate(point) == 0; });
}

std::vector<std::string> PolySystem::sorted_strings() const {
    std::vector<std::string> out;
    out.reserve(generators_.size());
    for (const auto& g : generators_)
        out.push_back(g.to_string());
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Composition and jets

namespace {

// f(x_1(t), ..., x_N(t)) mod t^(cap+1) for series with coefficients in any
// commutative ring R; zero and one are the ring's constants.
template <class R>
TruncatedSeries<R> compose_series(const MultiPoly& f, const std::vector<TruncatedSeries<R>>& comps, const R& zero,
                                  const R& one) {
    const std::size_t n = comps.front().cap() + 1;
    std::vector<R> zeros(n, zero);
    std::vector<R> unit = zeros;
    unit[0] = one;

    // powers[j][k] = x_j(t)^k, filled on demand.
    std::vector<std::vector<TruncatedSeries<R>>> powers(comps.size());
    auto power = [&](std::size_t j, std::uint32_t k) -> const TruncatedSeries<R>& {
        auto& cache = powers[j];
        if (cache.empty())
            cache.emplace_back(unit);
        while (cache.size() <= k)
            cache.push_back(cache.back() * comps[j]);
        return cache[k];
    };

    TruncatedSeries<R> sum(zeros);
    for (const auto& [e, c] : f.terms()) {
        std::vector<R> cv = zeros;
        cv[0] = one * c;
        TruncatedSeries<R> term(std::move(cv));
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] != 0)
                term = term * power(j, e[j]);
        sum = sum + term;
    }
    return sum;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n)
        return out;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<std::string> common_variables(std::span<const MultiPoly> polys) {
    if (polys.empty())
        return {};
    const auto& vars = polys.front().variables();
    for (const auto& p : polys)
        if (p.variables() != vars)
            throw ArityMismatch("map components over different variable lists");
    return vars;
}

} // namespace

TruncSeries compose(const MultiPoly& f, const ArcJet& gamma) {
    if (f.arity() != gamma.arity())
        throw ArityMismatch("polynomial in " + std::to_string(f.arity()) + " variables composed with an arc of " +
                            std::to_string(gamma.arity()) + " components");
    return compose_series<Rational>(f, gamma.components(), Rational(0), Rational(1));
}

std::string jet_variable_name(std::size_t variable, std::size_t coefficient) {
    std::string stem = variable < 26 ? std::string(1, static_cast<char>('a' + variable)) : "v" + std::to_string(variable);
    return stem + "_" + std::to_string(coefficient);
}

PolySystem jet_equations(const PolySystem& ideal, std::size_t n) {
    const std::size_t N = ideal.variables().size();
    std::vector<std::string> jet_vars;
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t i = 0; i <= n; ++i)
            jet_vars.push_back(jet_variable_name(j, i));

    const MultiPoly zero(jet_vars);
    const MultiPoly one = MultiPoly::constant(jet_vars, 1);
    std::vector<TruncatedSeries<MultiPoly>> comps;
    for (std::size_t j = 0; j < N; ++j) {
        std::vector<MultiPoly> coeffs;
        for (std::size_t i = 0; i <= n; ++i)
            coeffs.push_back(MultiPoly::variable(jet_vars, j * (n + 1) + i));
        comps.emplace_back(std::move(coeffs));
    }

    std::vector<MultiPoly> equations;
    for (const auto& f : ideal.generators()) {
        if (N == 0) {
            // constants: nothing to substitute
            if (!f.is_zero())
                equations.push_back(MultiPoly::constant(jet_vars, f.terms().begin()->second));
            continue;
        }
        const auto series = compose_series<MultiPoly>(f, comps, zero, one);
        for (const auto& c : series.coeffs())
            equations.push_back(c);
    }
    return PolySystem(jet_vars, equations);
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0)
        return MultiPoly::constant({}, 1);
    for (const auto& row : matrix)
        if (row.size() != n)
            throw ArityMismatch("determinant of a non-square matrix");
    if (n == 1)
        return matrix[0][0];
    MultiPoly sum = matrix[0][0] - matrix[0][0];
    for (std::size_t col = 0; col < n; ++col) {
        if (matrix[0][col].is_zero())
            continue;
        std::vector<std::vector<MultiPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<MultiPoly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col)
                    row.push_back(matrix[r][c]);
            minor.push_back(std::move(row));
        }
        MultiPoly term = matrix[0][col] * determinant(minor);
        if (col % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

namespace {

// Jacobian matrix rows = components, columns = source variables.
std::vector<std::vector<MultiPoly>> jacobian_matrix(std::span<const MultiPoly> components) {
    std::vector<std::vector<MultiPoly>> jac;
    for (const auto& f : components) {
        std::vector<MultiPoly> row;
        for (std::size_t i = 0; i < f.arity(); ++i)
            row.push_back(f.derivative(i));
        jac.push_back(std::move(row));
    }
    return jac;
}

std::vector<MultiPoly> all_minors(const std::vector<std::vector<MultiPoly>>& jac, std::size_t cols, std::size_t size) {
    std::vector<MultiPoly> minors;
    const auto row_sets = combinations(jac.size(), size);
    const auto col_sets = combinations(cols, size);
    for (const auto& rows : row_sets) {
        for (const auto& cs : col_sets) {
            std::vector<std::vector<MultiPoly>> sub;
            for (std::size_t r : rows) {
                std::vector<MultiPoly> row;
                for (std::size_t c : cs)
                    row.push_back(jac[r][c]);
                sub.push_back(std::move(row));
            }
            minors.push_back(determinant(sub));
        }
    }
    return minors;
}

} // namespace

PolySystem jacobian_minors(std::span<const MultiPoly> fs, std::size_t ambient_dim, std::size_t dim) {
    if (dim >= ambient_dim || fs.size() != ambient_dim - dim)
        throw ArityMismatch("expected N - d = " + std::to_string(ambient_dim > dim ? ambient_dim - dim : 0) +
                            " >= 1 equations, got " + std::to_string(fs.size()));
    const auto vars = common_variables(fs);
    if (vars.size() != ambient_dim)
        throw ArityMismatch("equations in " + std::to_string(vars.size()) + " variables, expected " +
                            std::to_string(ambient_dim));
    return PolySystem(vars, all_minors(jacobian_matrix(fs), ambient_dim, fs.size()));
}

PolySystem hypersurface_HX(const MultiPoly& f) {
    if (f.is_constant())
        throw ConstantInput("H_X of a constant polynomial");
    std::vector<MultiPoly> partials;
    for (std::size_t i = 0; i < f.arity(); ++i)
        partials.push_back(f.derivative(i));
    return PolySystem(f.variables(), partials);
}

SeriesOrder arc_level(const ArcJet& gamma, const PolySystem& H) {
    SeriesOrder best = SeriesOrder::at_least(static_cast<std::int64_t>(gamma.cap() + 1));
    for (const auto& h : H.generators())
        best = min_order(best, series_order(compose(h, gamma)));
    return best;
}

SeriesOrder ord_jac_along(std::span<const MultiPoly> sigma, const ArcJet& gamma, std::size_t dim) {
    const auto vars = common_variables(sigma);
    if (sigma.empty() || vars.size() != gamma.arity())
        throw ArityMismatch("map source arity differs from the arc's component count");
    if (dim == 0 || dim > sigma.size() || dim > vars.size())
        throw ArityMismatch("minor size " + std::to_string(dim) + " exceeds the Jacobian's dimensions");
    SeriesOrder best = SeriesOrder::at_least(static_cast<std::int64_t>(gamma.cap() + 1));
    for (const auto& minor : all_minors(jacobian_matrix(sigma), vars.size(), dim)) {
        if (minor.is_zero())
            continue;
        best = min_order(best, series_order(compose(minor, gamma)));
    }
    return best;
}

SeriesOrder entry_order(const RationalEntry& entry, const ArcJet& gamma) {
    const SeriesOrder den = series_order(compose(entry.denominator, gamma));
    if (den.is_lower_bound())
        throw IndeterminateAtCap("denominator vanishes to the cap along the arc");
    const SeriesOrder num = series_order(compose(entry.numerator, gamma));
    if (num.is_lower_bound())
        return SeriesOrder::at_least(num.value() - den.value());
    return SeriesOrder::exactly(num.value() - den.value());
}

SeriesOrder jacobian_matrix_order(std::span<const RationalEntry> entries, const ArcJet& gamma) {
    if (entries.empty())
        throw ArityMismatch("empty Jacobian matrix");
    std::optional<SeriesOrder> best;
    for (const auto& entry : entries) {
        const SeriesOrder o = entry_order(entry, gamma);
        best = best ? min_order(*best, o) : o;
    }
    if (best->is_lower_bound())
        throw IndeterminateAtCap("no Jacobian entry has a certain order at cap " + std::to_string(gamma.cap()));
    return *best;
}

SeriesOrder jacobian_matrix_order(std::span<const MultiPoly> f, const ArcJet& gamma, std::size_t dim) {
    const auto vars = common_variables(f);
    if (f.empty() || vars.size() != dim || gamma.arity() != dim)
        throw ArityMismatch("Jacobian matrix order needs components in " + std::to_string(dim) +
                            " chart variables and an arc of the same arity");
    std::vector<RationalEntry> entries;
    const MultiPoly one = MultiPoly::constant(vars, 1);
    for (const auto& row : jacobian_matrix(f))
        for (const auto& entry : row)
            entries.push_back({entry, one});
    return jacobian_matrix_order(entries, gamma);
}

} // namespace motivic
