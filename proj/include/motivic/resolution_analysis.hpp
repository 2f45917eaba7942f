#pragma once

// Jacobian boundedness and the inverse-mapping criteria, decided over a
// resolution diagram of a map germ f: (X, x) -> (Y, y). Conclusions are
// reported together with the certificates they rest on and are only emitted
// when every hypothesis check passes.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motivic/measure_engine.hpp"
#include "motivic/poly_core.hpp"

namespace motivic {

// A stratum and contact vector along which ord_t jac_f has the wrong sign.
struct BoundWitness {
    std::size_t stratum = 0;
    std::string stratum_name;
    ContactVector contacts;
    std::int64_t order = 0;
};

// Bounded above iff ord_t jac_f >= 0 along every arc; bounded below iff <= 0.
struct BoundednessVerdict {
    bool bounded_above = true;
    bool bounded_below = true;
    std::optional<BoundWitness> above_witness;
    std::optional<BoundWitness> below_witness;
};

enum class Conclusion { InverseArcAnalytic, MeasureInequality, Inconclusive };

std::string_view to_string(Conclusion c) noexcept;

struct HypothesisCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct TheoremReport {
    std::string theorem;
    std::vector<HypothesisCheck> hypotheses_checked;
    Conclusion conclusion = Conclusion::Inconclusive;
    // leq_order(mu_X, mu_Y) when it was decided.
    std::optional<Order> relation;
    // The inputs contradict the theorem (bad user data).
    bool contradiction = false;
    // Named values the verdict rests on: measures, verdict flags.
    std::vector<std::pair<std::string, std::string>> certificates;
    BoundednessVerdict boundedness;

    bool all_passed() const noexcept;
};

// sum q_i e_i - sum p_i e_i on the given stratum.
std::int64_t ord_jac_f(const ResolutionDiagram& D, std::size_t stratum, std::span<const std::int64_t> contacts);

// Componentwise comparison of the monomial Jacobian data on every stratum.
BoundednessVerdict check_boundedness(const ResolutionDiagram& D);

// Hypotheses: mu_X = mu_Y and jac_f bounded below. Certificates the
// conclusion also requires: image measure of q o sigma equals mu_Y, and jac_f
// bounded above. mu_X and mu_Y must share a finite floor.
TheoremReport inverse_mapping_report(const ResolutionDiagram& D, const MotiveSeries& muX, const MotiveSeries& muY);

// Hypothesis: jac_f bounded below. Conclusion mu_X <= mu_Y; a Greater outcome
// is reported as a contradiction.
TheoremReport measure_comparison_report(const ResolutionDiagram& D, const MotiveSeries& muX, const MotiveSeries& muY);

struct LipschitzProbeVerdict {
    bool bounded_above = true;
    // True unless a negative order disproved boundedness; a true value is
    // evidence from the probes, not a proof.
    bool evidence_only = true;
    std::vector<SeriesOrder> orders;
    std::optional<std::size_t> witness_arc;
};

// Order of the chart Jacobian matrix along each probe arc. A negative order
// disproves inner-Lipschitz boundedness.
LipschitzProbeVerdict inner_lipschitz_probe(std::span<const RationalEntry> entries, std::span<const ArcJet> arcs);

} // namespace motivic
