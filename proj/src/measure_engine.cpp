#include "motivic/measure_engine.hpp"

#include <algorithm>
#include <set>

namespace motivic {

namespace {

std::string stratum_label(const SNCStratum& S, std::size_t index) {
    return S.name.empty() ? "stratum #" + std::to_string(index) : "stratum '" + S.name + "'";
}

void check_mults(const std::vector<SNCStratum>& strata, const std::vector<MultiplicityVector>& mults,
                 const char* what) {
    if (mults.size() != strata.size())
        throw IndexMismatch(std::string(what) + ": expected " + std::to_string(strata.size()) +
                            " multiplicity vectors, got " + std::to_string(mults.size()));
    for (std::size_t s = 0; s < strata.size(); ++s) {
        if (mults[s].size() != strata[s].index_set.size())
            throw IndexMismatch(std::string(what) + " of " + stratum_label(strata[s], s) + " has " +
                                std::to_string(mults[s].size()) + " entries for an index set of size " +
                                std::to_string(strata[s].index_set.size()));
        for (auto m : mults[s])
            if (m < 0)
                throw InvalidArgument(std::string(what) + " of " + stratum_label(strata[s], s) +
                                      " has a negative multiplicity");
    }
}

// Exponents k_i = 1 + m_i + alpha_i of one stratum.
std::vector<std::int64_t> stratum_exponents(const ResolutionData& R, std::span<const MultiplicityVector> alpha,
                                            std::size_t s) {
    const auto& mults = R.jac_mults[s];
    std::vector<std::int64_t> k(mults.size());
    for (std::size_t i = 0; i < mults.size(); ++i) {
        const std::int64_t a = alpha.empty() ? 0 : alpha[s][i];
        k[i] = 1 + mults[i] + a;
        if (k[i] <= 0)
            throw DivergentExponent(stratum_label(R.strata[s], s) + ", component " + std::to_string(i) +
                                    ": exponent 1 + m + alpha = " + std::to_string(k[i]) +
                                    " <= 0, the integral diverges");
    }
    return k;
}

void check_alpha(const ResolutionData& R, std::span<const MultiplicityVector> alpha) {
    if (alpha.empty())
        return;
    if (alpha.size() != R.strata.size())
        throw IndexMismatch("expected one alpha vector per stratum");
    for (std::size_t s = 0; s < alpha.size(); ++s)
        if (alpha[s].size() != R.strata[s].index_set.size())
            throw IndexMismatch("alpha vector of " + stratum_label(R.strata[s], s) + " does not match its index set");
}

} // namespace

void SNCStratum::validate() const {
    if (ambient_dim < 0)
        throw InvalidArgument("negative ambient dimension");
    if (static_cast<std::int64_t>(index_set.size()) > ambient_dim)
        throw InvalidArgument("stratum '" + name + "' meets more divisor components than the dimension allows");
    std::set<std::int64_t> seen(index_set.begin(), index_set.end());
    if (seen.size() != index_set.size())
        throw InvalidArgument("stratum '" + name + "' repeats a divisor component");
}

void ResolutionData::validate() const {
    for (const auto& s : strata)
        s.validate();
    check_mults(strata, jac_mults, "jac_mults");
}

void ResolutionDiagram::validate() const {
    for (const auto& s : strata)
        s.validate();
    check_mults(strata, p_mults, "p_mults");
    check_mults(strata, q_mults, "q_mults");
}

ResolutionData ResolutionDiagram::source_data() const { return ResolutionData{strata, p_mults}; }
ResolutionData ResolutionDiagram::target_data() const { return ResolutionData{strata, q_mults}; }

LaurentPoly contact_stratum_measure(const SNCStratum& S, std::span<const std::int64_t> contacts) {
    if (contacts.size() != S.index_set.size())
        throw IndexMismatch("contact vector does not match the stratum's index set");
    std::int64_t total = 0;
    for (auto e : contacts) {
        if (e < 1)
            throw BadContact("contact orders must be >= 1, got " + std::to_string(e));
        total += e;
    }
    const LaurentPoly u_minus_1 = LaurentPoly::u() - LaurentPoly(1);
    return (S.cls * u_minus_1.pow(static_cast<unsigned>(contacts.size()))).shifted(-total - S.ambient_dim);
}

std::int64_t ord_jac_on_stratum(std::span<const std::int64_t> mults, std::span<const std::int64_t> contacts) {
    if (mults.size() != contacts.size())
        throw IndexMismatch("multiplicity and contact vectors of different lengths");
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < mults.size(); ++i)
        sum += mults[i] * contacts[i];
    return sum;
}

MotiveSeries motivic_integral(const ResolutionData& R, std::span<const MultiplicityVector> alpha, std::int64_t floor) {
    R.validate();
    check_alpha(R, alpha);
    const LaurentPoly u_minus_1 = LaurentPoly::u() - LaurentPoly(1);
    MotiveSeries total = MotiveSeries::unknown_below(floor);
    for (std::size_t s = 0; s < R.strata.size(); ++s) {
        const SNCStratum& S = R.strata[s];
        const auto k = stratum_exponents(R, alpha, s);
        if (S.cls.is_zero())
            continue;
        // sum over e_i >= 1 of u^(-k_i e_i) = u^(-k_i) * sum_{j>=0} u^(-k_i j)
        std::int64_t shift = -S.ambient_dim;
        for (auto ki : k)
            shift -= ki;
        const LaurentPoly prefactor = (S.cls * u_minus_1.pow(static_cast<unsigned>(k.size()))).shifted(shift);
        if (prefactor.degree() <= Degree(floor))
            continue; // entirely below the precision floor
        const std::int64_t inner_floor = floor - prefactor.degree().value();
        MotiveSeries product(prefactor);
        if (!k.empty()) {
            MotiveSeries sums(LaurentPoly(1));
            for (auto ki : k)
                sums = sums * geometric_sum(ki, inner_floor);
            product = product * sums;
        }
        total = total + product;
    }
    return total;
}

MotiveSeries motivic_integral_by_enumeration(const ResolutionData& R, std::span<const MultiplicityVector> alpha,
                                             std::int64_t floor, std::optional<std::int64_t> e_max) {
    R.validate();
    check_alpha(R, alpha);
    LaurentPoly sum;
    Degree result_floor(floor);
    for (std::size_t s = 0; s < R.strata.size(); ++s) {
        const SNCStratum& S = R.strata[s];
        const auto k = stratum_exponents(R, alpha, s);
        if (S.cls.is_zero())
            continue;
        const std::size_t n = k.size();
        // Top degree of the tuple e is base - sum k_i e_i.
        const std::int64_t base = S.cls.degree().value() + static_cast<std::int64_t>(n) - S.ambient_dim;

        if (e_max && n > 0) {
            const std::int64_t k_min = *std::min_element(k.begin(), k.end());
            std::int64_t omitted = 0;
            for (auto ki : k)
                omitted += ki;
            omitted += std::max<std::int64_t>(0, *e_max + 1 - static_cast<std::int64_t>(n)) * k_min;
            result_floor = std::max(result_floor, Degree(base - omitted));
        }

        std::vector<std::int64_t> suffix_min(n + 1, 0);
        for (std::size_t i = n; i-- > 0;)
            suffix_min[i] = suffix_min[i + 1] + k[i];

        ContactVector e(n, 1);
        // depth-first over e_0, e_1, ...; weight = sum k_i e_i so far
        auto visit = [&](auto&& self, std::size_t i, std::int64_t weight, std::int64_t length) -> void {
            if (i == n) {
                LaurentPoly term = contact_stratum_measure(S, e);
                std::int64_t extra = 0;
                for (std::size_t j = 0; j < n; ++j)
                    extra += (k[j] - 1) * e[j];
                sum += term.shifted(-extra);
                return;
            }
            for (std::int64_t ei = 1;; ++ei) {
                const std::int64_t w = weight + k[i] * ei;
                if (base - (w + suffix_min[i + 1]) <= floor)
                    break;
                if (e_max && length + ei + static_cast<std::int64_t>(n - i - 1) > *e_max)
                    break;
                e[i] = ei;
                self(self, i + 1, w, length + ei);
            }
        };
        visit(visit, 0, 0, 0);
    }
    return MotiveSeries(sum, result_floor);
}

MotiveSeries germ_measure(const ResolutionData& R, std::int64_t floor) { return motivic_integral(R, {}, floor); }

MotiveSeries image_measure(const ResolutionDiagram& D, std::int64_t floor) {
    D.validate();
    return motivic_integral(D.target_data(), {}, floor);
}

Order compare_germ_measures(const MotiveSeries& mX, const MotiveSeries& mY) { return leq_order(mX, mY); }

} // namespace motivic
