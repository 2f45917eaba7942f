#pragma once

// Test-only reference computations. None of these call into the code paths
// they are used to check: Laurent polynomials are dense coefficient vectors,
// compositions are full (untruncated) univariate expansions, and stratum
// measures come from counting free jet coefficients.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "motivic/grothendieck_ring.hpp"
#include "motivic/measure_engine.hpp"
#include "motivic/poly_core.hpp"

namespace oracle {

// sum_k coeffs[k] u^(offset + k)
struct DenseLaurent {
    std::int64_t offset = 0;
    std::vector<mpz_class> coeffs;

    static DenseLaurent from(const motivic::LaurentPoly& p) {
        DenseLaurent d;
        if (p.is_zero())
            return d;
        d.offset = p.low_degree();
        d.coeffs.assign(static_cast<std::size_t>(p.degree().value() - d.offset + 1), 0);
        for (const auto& [e, c] : p.terms())
            d.coeffs[static_cast<std::size_t>(e - d.offset)] = c;
        return d;
    }

    motivic::LaurentPoly to_poly() const {
        motivic::LaurentPoly p;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            p += motivic::LaurentPoly::monomial(coeffs[k], offset + static_cast<std::int64_t>(k));
        return p;
    }

    friend DenseLaurent operator*(const DenseLaurent& a, const DenseLaurent& b) {
        DenseLaurent r;
        if (a.coeffs.empty() || b.coeffs.empty())
            return r;
        r.offset = a.offset + b.offset;
        r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j)
                r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        return r;
    }

    friend DenseLaurent operator+(const DenseLaurent& a, const DenseLaurent& b) {
        if (a.coeffs.empty())
            return b;
        if (b.coeffs.empty())
            return a;
        DenseLaurent r;
        r.offset = std::min(a.offset, b.offset);
        const std::int64_t top = std::max(a.offset + static_cast<std::int64_t>(a.coeffs.size()),
                                          b.offset + static_cast<std::int64_t>(b.coeffs.size()));
        r.coeffs.assign(static_cast<std::size_t>(top - r.offset), 0);
        for (std::size_t k = 0; k < a.coeffs.size(); ++k)
            r.coeffs[static_cast<std::size_t>(a.offset - r.offset) + k] += a.coeffs[k];
        for (std::size_t k = 0; k < b.coeffs.size(); ++k)
            r.coeffs[static_cast<std::size_t>(b.offset - r.offset) + k] += b.coeffs[k];
        return r;
    }
};

// Full expansion of f(gamma(t)) as a polynomial in t, no truncation until the
// end; returns coefficients 0..cap.
inline std::vector<mpq_class> expand_composition(const motivic::MultiPoly& f,
                                                 const std::vector<std::vector<mpq_class>>& gamma, std::size_t cap) {
    auto mul = [](const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
        std::vector<mpq_class> r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] += a[i] * b[j];
        return r;
    };
    std::vector<mpq_class> total(1, 0);
    for (const auto& [e, c] : f.terms()) {
        std::vector<mpq_class> term{c};
        for (std::size_t j = 0; j < e.size(); ++j)
            for (std::uint32_t k = 0; k < e[j]; ++k)
                term = mul(term, gamma[j]);
        if (term.size() > total.size())
            total.resize(term.size(), 0);
        for (std::size_t i = 0; i < term.size(); ++i)
            total[i] += term[i];
    }
    total.resize(std::max(total.size(), cap + 1), 0);
    total.resize(cap + 1);
    return total;
}

// Class of pi_n of {gamma : gamma(0) in S, ord z_i(gamma) = e_i} obtained by
// walking every jet coefficient: coefficient 0 of all coordinates is the
// stratum point; for a divisor coordinate, coefficients below e_i are forced
// to 0, coefficient e_i ranges over R \ {0}, the rest over R.
inline motivic::LaurentPoly jet_count_class(const motivic::SNCStratum& S, const std::vector<std::int64_t>& e,
                                            std::int64_t level) {
    std::int64_t free_lines = 0;
    unsigned punctured_lines = 0;
    const std::size_t d = static_cast<std::size_t>(S.ambient_dim);
    for (std::size_t coord = 0; coord < d; ++coord) {
        for (std::int64_t j = 1; j <= level; ++j) {
            if (coord < e.size() && j < e[coord])
                continue;
            if (coord < e.size() && j == e[coord])
                ++punctured_lines;
            else
                ++free_lines;
        }
    }
    DenseLaurent cls = DenseLaurent::from(S.cls);
    const DenseLaurent punctured = DenseLaurent::from(motivic::LaurentPoly::u() - motivic::LaurentPoly(1));
    for (unsigned k = 0; k < punctured_lines; ++k)
        cls = cls * punctured;
    cls.offset += free_lines;
    return cls.to_poly();
}

// Measure from the jet count at a level past every contact order.
inline motivic::LaurentPoly jet_count_measure(const motivic::SNCStratum& S, const std::vector<std::int64_t>& e) {
    std::int64_t level = 0;
    for (auto x : e)
        level = std::max(level, x);
    const motivic::LaurentPoly cls = jet_count_class(S, e, level);
    return cls * motivic::LaurentPoly::u(-(level + 1) * S.ambient_dim);
}

// Brute-force change of variables: sum over every contact tuple with
// sum e_i <= e_max of jet-count measure times u^-(sum (m_i + alpha_i) e_i).
inline motivic::LaurentPoly brute_force_integral(const motivic::ResolutionData& R,
                                                 const std::vector<motivic::MultiplicityVector>& alpha,
                                                 std::int64_t e_max) {
    motivic::LaurentPoly total;
    for (std::size_t s = 0; s < R.strata.size(); ++s) {
        const auto& S = R.strata[s];
        const std::size_t n = S.index_set.size();
        std::vector<std::int64_t> e(n, 1);
        auto visit = [&](auto&& self, std::size_t i, std::int64_t used) -> void {
            if (i == n) {
                std::int64_t weight = 0;
                for (std::size_t k = 0; k < n; ++k)
                    weight += (R.jac_mults[s][k] + (alpha.empty() ? 0 : alpha[s][k])) * e[k];
                total += jet_count_measure(S, e) * motivic::LaurentPoly::u(-weight);
                return;
            }
            for (std::int64_t x = 1; used + x + static_cast<std::int64_t>(n - i - 1) <= e_max; ++x) {
                e[i] = x;
                self(self, i + 1, used + x);
            }
        };
        if (n == 0 || static_cast<std::int64_t>(n) <= e_max)
            visit(visit, 0, 0);
    }
    return total;
}

inline motivic::LaurentPoly random_laurent(std::mt19937_64& rng, int max_terms = 4, int max_exp = 5, int max_coeff = 9) {
    std::uniform_int_distribution<int> count(0, max_terms), exponent(-max_exp, max_exp), coeff(-max_coeff, max_coeff);
    motivic::LaurentPoly p;
    for (int i = count(rng); i > 0; --i)
        p += motivic::LaurentPoly::monomial(coeff(rng), exponent(rng));
    return p;
}

} // namespace oracle
