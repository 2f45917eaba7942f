#pragma once

// Stable sets, cylinders and measurable sets of arcs, described by a level and
// the class of the truncation at that level. Sets are never enumerated; the
// class is part of the caller's data.

#include <cstdint>
#include <span>
#include <vector>

#include "motivic/grothendieck_ring.hpp"

namespace motivic {

// A stable set A of L(X), dim X = d, presented at level n by [pi_n(A)].
struct StableSetDescriptor {
    std::int64_t level = 0;
    LaurentPoly class_at_level;
    std::int64_t ambient_dim = 0;

    void validate() const;
};

// pi_n^{-1}(C) for an AS-set C of L_n(X).
struct CylinderDescriptor {
    std::int64_t level = 0;
    LaurentPoly base_class;
    std::int64_t ambient_dim = 0;
    bool nonsingular_ambient = true;

    // Throws SingularAmbient unless nonsingular_ambient.
    StableSetDescriptor as_stable() const;
};

// A_m stable with mu(A symmetric-difference A_m) of dimension < error_bound.
struct Approximant {
    StableSetDescriptor set;
    Degree error_bound;
};

struct MeasurableDescriptor {
    std::vector<Approximant> approximants;

    // Throws BoundViolated unless the error bounds strictly decrease.
    void validate() const;

    // An exactly known stable set (error bound -infinity).
    static MeasurableDescriptor exact(StableSetDescriptor set);
};

// [pi_n(A)] * u^(-(n+1) d).
LaurentPoly measure_stable(const StableSetDescriptor& A);

// Same set presented at level m >= A.level: each step is a trivial fibration
// with fiber R^d.
StableSetDescriptor re_level(const StableSetDescriptor& A, std::int64_t m);

LaurentPoly measure_cylinder(const CylinderDescriptor& C);

// Measure modulo degree <= floor, taken from the last approximant provided
// its error bound does not exceed floor + 1.
MotiveSeries measure_measurable(const MeasurableDescriptor& A, std::int64_t floor);

// Sum of the measures of pairwise disjoint parts. tail_bound bounds (strictly)
// the dimension of whatever the finite list leaves out.
MotiveSeries disjoint_union_measure(std::span<const MeasurableDescriptor> parts, std::int64_t floor,
                                    Degree tail_bound = Degree::neg_infinity());

} // namespace motivic
