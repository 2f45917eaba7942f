#include "motivic/resolution_analysis.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace motivic {

std::string_view to_string(Conclusion c) noexcept {
    switch (c) {
    case Conclusion::InverseArcAnalytic:
        return "InverseArcAnalytic";
    case Conclusion::MeasureInequality:
        return "MeasureInequality";
    case Conclusion::Inconclusive:
        return "Inconclusive";
    }
    return "?";
}

bool TheoremReport::all_passed() const noexcept {
    return std::all_of(hypotheses_checked.begin(), hypotheses_checked.end(),
                       [](const HypothesisCheck& h) { return h.passed; });
}

std::int64_t ord_jac_f(const ResolutionDiagram& D, std::size_t stratum, std::span<const std::int64_t> contacts) {
    if (stratum >= D.strata.size())
        throw IndexMismatch("stratum index " + std::to_string(stratum) + " out of range");
    if (D.p_mults.size() != D.strata.size() || D.q_mults.size() != D.strata.size())
        throw IndexMismatch("diagram multiplicities do not cover every stratum");
    for (auto e : contacts)
        if (e < 1)
            throw BadContact("contact orders must be >= 1, got " + std::to_string(e));
    return ord_jac_on_stratum(D.q_mults[stratum], contacts) - ord_jac_on_stratum(D.p_mults[stratum], contacts);
}

namespace {

// Contact vector with ones everywhere except component j, which is raised
// until sign * sum d_i e_i < 0 is forced. d_j * sign must be negative.
ContactVector witness_contacts(const std::vector<std::int64_t>& d, std::size_t j, int sign) {
    ContactVector e(d.size(), 1);
    std::int64_t slack = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (i != j)
            slack += std::max<std::int64_t>(0, sign * d[i]);
    e[j] = 1 + slack;
    return e;
}

} // namespace

BoundednessVerdict check_boundedness(const ResolutionDiagram& D) {
    D.validate();
    BoundednessVerdict verdict;
    for (std::size_t s = 0; s < D.strata.size(); ++s) {
        const auto& p = D.p_mults[s];
        const auto& q = D.q_mults[s];
        std::vector<std::int64_t> d(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            d[i] = q[i] - p[i];
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] < 0 && verdict.bounded_above) {
                verdict.bounded_above = false;
                auto e = witness_contacts(d, i, +1);
                verdict.above_witness = BoundWitness{s, D.strata[s].name, e, ord_jac_f(D, s, e)};
            }
            if (d[i] > 0 && verdict.bounded_below) {
                verdict.bounded_below = false;
                auto e = witness_contacts(d, i, -1);
                verdict.below_witness = BoundWitness{s, D.strata[s].name, e, ord_jac_f(D, s, e)};
            }
        }
    }
    return verdict;
}

namespace {

Degree common_floor(const MotiveSeries& a, const MotiveSeries& b) {
    const Degree f = std::max(a.floor(), b.floor());
    if (f.is_neg_infinity())
        throw InvalidArgument("germ measures must carry a finite precision floor");
    return f;
}

// leq_order, or nothing when the floor hides the answer.
std::optional<Order> decide_order(const MotiveSeries& a, const MotiveSeries& b) {
    try {
        return leq_order(a, b);
    } catch (const PrecisionExhausted&) {
        return std::nullopt;
    }
}

std::string describe(const std::optional<Order>& o, Degree floor) {
    return o ? std::string(to_string(*o)) : "undecided at floor " + floor.to_string() + ", retry with a lower floor";
}

void add_boundedness_certificates(TheoremReport& report) {
    report.certificates.emplace_back("bounded_above", report.boundedness.bounded_above ? "true" : "false");
    report.certificates.emplace_back("bounded_below", report.boundedness.bounded_below ? "true" : "false");
}

} // namespace

TheoremReport inverse_mapping_report(const ResolutionDiagram& D, const MotiveSeries& muX, const MotiveSeries& muY) {
    const Degree floor = common_floor(muX, muY);
    TheoremReport report;
    report.theorem = "inverse_mapping";
    report.boundedness = check_boundedness(D);

    const auto relation = decide_order(muX.truncated(floor), muY.truncated(floor));
    report.relation = relation;
    report.hypotheses_checked.push_back(
        {"measures_equal", relation == Order::Equal, "mu_X vs mu_Y: " + describe(relation, floor)});
    report.hypotheses_checked.push_back({"jacobian_bounded_below", report.boundedness.bounded_below,
                                         report.boundedness.bounded_below ? "q_i <= p_i on every stratum"
                                                                          : "some q_i > p_i"});

    const MotiveSeries image = image_measure(D, floor.value());
    const auto image_relation = decide_order(image, muY.truncated(floor));
    report.hypotheses_checked.push_back({"image_measure_equals_mu_Y", image_relation == Order::Equal,
                                         "image vs mu_Y: " + describe(image_relation, floor)});
    report.hypotheses_checked.push_back({"jacobian_bounded_above", report.boundedness.bounded_above,
                                         report.boundedness.bounded_above ? "p_i <= q_i on every stratum"
                                                                          : "some p_i > q_i"});

    report.certificates.emplace_back("mu_X", muX.truncated(floor).to_string());
    report.certificates.emplace_back("mu_Y", muY.truncated(floor).to_string());
    report.certificates.emplace_back("image_measure", image.to_string());
    add_boundedness_certificates(report);

    report.conclusion = report.all_passed() ? Conclusion::InverseArcAnalytic : Conclusion::Inconclusive;
    assert(report.conclusion != Conclusion::InverseArcAnalytic || report.boundedness.bounded_above);
    return report;
}

TheoremReport measure_comparison_report(const ResolutionDiagram& D, const MotiveSeries& muX, const MotiveSeries& muY) {
    const Degree floor = common_floor(muX, muY);
    TheoremReport report;
    report.theorem = "measure_comparison";
    report.boundedness = check_boundedness(D);
    report.hypotheses_checked.push_back({"jacobian_bounded_below", report.boundedness.bounded_below,
                                         report.boundedness.bounded_below ? "q_i <= p_i on every stratum"
                                                                          : "some q_i > p_i"});
    report.certificates.emplace_back("mu_X", muX.truncated(floor).to_string());
    report.certificates.emplace_back("mu_Y", muY.truncated(floor).to_string());
    add_boundedness_certificates(report);
    if (!report.boundedness.bounded_below)
        return report;

    const auto relation = decide_order(muX.truncated(floor), muY.truncated(floor));
    report.relation = relation;
    if (!relation) {
        report.hypotheses_checked.push_back({"mu_X_leq_mu_Y", false, "mu_X vs mu_Y: " + describe(relation, floor)});
        return report;
    }
    const bool consistent = *relation != Order::Greater;
    report.hypotheses_checked.push_back(
        {"mu_X_leq_mu_Y", consistent,
         consistent ? "mu_X " + std::string(*relation == Order::Less ? "<" : "=") + " mu_Y"
                    : "mu_X > mu_Y although jac_f is bounded below: inputs contradict the comparison theorem"});
    report.contradiction = !consistent;
    report.conclusion = consistent ? Conclusion::MeasureInequality : Conclusion::Inconclusive;
    return report;
}

LipschitzProbeVerdict inner_lipschitz_probe(std::span<const RationalEntry> entries, std::span<const ArcJet> arcs) {
    if (entries.empty())
        throw ArityMismatch("no Jacobian entries to probe");
    LipschitzProbeVerdict verdict;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        std::optional<SeriesOrder> best;
        for (const auto& entry : entries) {
            const SeriesOrder o = entry_order(entry, arcs[a]);
            best = best ? min_order(*best, o) : o;
        }
        if (best->is_lower_bound() && best->value() < 0)
            throw IndeterminateAtCap("sign of the Jacobian matrix order along probe " + std::to_string(a) +
                                     " is not determined at cap " + std::to_string(arcs[a].cap()));
        verdict.orders.push_back(*best);
        if (best->is_exact() && best->value() < 0 && verdict.bounded_above) {
            verdict.bounded_above = false;
            verdict.evidence_only = false;
            verdict.witness_arc = a;
        }
    }
    return verdict;
}

} // namespace motivic
