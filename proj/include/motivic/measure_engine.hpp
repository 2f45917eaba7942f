#pragma once

// Motivic integrals over arcs of a manifold M centered on a simple normal
// crossings divisor E, and the germ measures they produce through the
// change-of-variables formula. Resolution data (strata classes and monomial
// Jacobian multiplicities) is input; nothing here computes a resolution.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motivic/grothendieck_ring.hpp"

namespace motivic {

using MultiplicityVector = std::vector<std::int64_t>;
using ContactVector = std::vector<std::int64_t>;

// Open stratum E_I^o of the divisor, already cut down to the relevant fiber.
struct SNCStratum {
    std::string name;
    std::vector<std::int64_t> index_set;
    LaurentPoly cls;
    std::int64_t ambient_dim = 0;

    void validate() const;
};

// One map p o sigma with its Jacobian ideal generated, along each stratum, by
// the monomial prod_i z_i^(m_i) over the components i of the index set.
struct ResolutionData {
    std::vector<SNCStratum> strata;
    std::vector<MultiplicityVector> jac_mults;

    void validate() const;
};

// The two maps p o sigma and q o sigma = f o p o sigma over the same strata.
struct ResolutionDiagram {
    std::vector<SNCStratum> strata;
    std::vector<MultiplicityVector> p_mults;
    std::vector<MultiplicityVector> q_mults;

    void validate() const;
    ResolutionData source_data() const;
    ResolutionData target_data() const;
};

// mu{gamma : gamma(0) in S, ord_t z_i(gamma) = e_i} = [S] (u-1)^|I| u^(-sum e - d).
LaurentPoly contact_stratum_measure(const SNCStratum& S, std::span<const std::int64_t> contacts);

// ord_t of prod z_i^(m_i) along an arc with contacts e: sum m_i e_i.
std::int64_t ord_jac_on_stratum(std::span<const std::int64_t> mults, std::span<const std::int64_t> contacts);

// int_{L(M,E)} L^-(alpha + ord jac) dmu, modulo degree <= floor, from the
// per-stratum closed form. alpha holds one vector per stratum; an empty span
// means alpha = 0.
MotiveSeries motivic_integral(const ResolutionData& R, std::span<const MultiplicityVector> alpha, std::int64_t floor);

// The same integral as a sum over contact tuples. With e_max set, only tuples
// with sum e_i <= e_max are visited and the floor is raised to cover the
// omitted ones.
MotiveSeries motivic_integral_by_enumeration(const ResolutionData& R, std::span<const MultiplicityVector> alpha,
                                             std::int64_t floor, std::optional<std::int64_t> e_max = std::nullopt);

// mu(L(X, x)) through a resolution of the germ.
MotiveSeries germ_measure(const ResolutionData& R, std::int64_t floor);

// Measure of (q o sigma)_*(L(M, E)).
MotiveSeries image_measure(const ResolutionDiagram& D, std::int64_t floor);

Order compare_germ_measures(const MotiveSeries& mX, const MotiveSeries& mY);

} // namespace motivic
