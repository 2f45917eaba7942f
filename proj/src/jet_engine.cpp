#include "motivic/jet_engine.hpp"

#include <string>

namespace motivic {

void StableSetDescriptor::validate() const {
    if (level < 0)
        throw InvalidArgument("negative level " + std::to_string(level));
    if (ambient_dim < 0)
        throw InvalidArgument("negative ambient dimension " + std::to_string(ambient_dim));
}

StableSetDescriptor CylinderDescriptor::as_stable() const {
    if (!nonsingular_ambient)
        throw SingularAmbient("cylinder over a singular ambient space is not stable at its own level; "
                              "use an L^(e) exhaustion or a resolution");
    StableSetDescriptor s{level, base_class, ambient_dim};
    s.validate();
    return s;
}

void MeasurableDescriptor::validate() const {
    for (std::size_t k = 0; k < approximants.size(); ++k) {
        approximants[k].set.validate();
        if (k > 0 && !(approximants[k].error_bound < approximants[k - 1].error_bound))
            throw BoundViolated("approximant error bounds must strictly decrease (index " + std::to_string(k) + ")");
    }
}

MeasurableDescriptor MeasurableDescriptor::exact(StableSetDescriptor set) {
    return MeasurableDescriptor{{Approximant{std::move(set), Degree::neg_infinity()}}};
}

LaurentPoly measure_stable(const StableSetDescriptor& A) {
    A.validate();
    return A.class_at_level.shifted(-(A.level + 1) * A.ambient_dim);
}

StableSetDescriptor re_level(const StableSetDescriptor& A, std::int64_t m) {
    A.validate();
    if (m < A.level)
        throw InvalidArgument("cannot re-level from " + std::to_string(A.level) + " down to " + std::to_string(m));
    return StableSetDescriptor{m, A.class_at_level.shifted(A.ambient_dim * (m - A.level)), A.ambient_dim};
}

LaurentPoly measure_cylinder(const CylinderDescriptor& C) { return measure_stable(C.as_stable()); }

MotiveSeries measure_measurable(const MeasurableDescriptor& A, std::int64_t floor) {
    A.validate();
    if (A.approximants.empty())
        throw InsufficientApproximants("no approximants supplied");
    const Approximant& last = A.approximants.back();
    // error dimension < bound, so the error lives in degrees <= bound - 1
    const Degree error_top = last.error_bound + Degree(-1);
    if (error_top > Degree(floor))
        throw InsufficientApproximants("best approximant error bound " + last.error_bound.to_string() +
                                       " does not reach floor " + std::to_string(floor));
    return MotiveSeries(measure_stable(last.set), Degree(floor));
}

MotiveSeries disjoint_union_measure(std::span<const MeasurableDescriptor> parts, std::int64_t floor,
                                    Degree tail_bound) {
    MotiveSeries sum = MotiveSeries::unknown_below(floor);
    for (const auto& part : parts)
        sum = sum + measure_measurable(part, floor);
    return sum.truncated(tail_bound + Degree(-1));
}

} // namespace motivic
