#include <doctest.h>

#include <random>

#include "catalog.hpp"
#include "motivic/resolution_analysis.hpp"

using namespace motivic;

namespace {

ResolutionDiagram point_diagram(std::int64_t p, std::int64_t q) {
    return ResolutionDiagram{{SNCStratum{"origin", {0}, LaurentPoly(1), 1}}, {{p}}, {{q}}};
}

ResolutionDiagram crossing_diagram(MultiplicityVector p, MultiplicityVector q) {
    return ResolutionDiagram{{SNCStratum{"E1E2", {0, 1}, LaurentPoly(1), 2}}, {std::move(p)}, {std::move(q)}};
}

const HypothesisCheck& find(const TheoremReport& r, const std::string& name) {
    for (const auto& h : r.hypotheses_checked)
        if (h.name == name)
            return h;
    FAIL("missing hypothesis " << name);
    return r.hypotheses_checked.front();
}

} // namespace

TEST_CASE("ord_jac_f") {
    const auto D = crossing_diagram({1, 2}, {3, 1});
    const std::vector<std::int64_t> e{2, 5};
    CHECK(ord_jac_f(D, 0, e) == (3 * 2 + 1 * 5) - (1 * 2 + 2 * 5));
    CHECK_THROWS_AS(ord_jac_f(D, 1, e), IndexMismatch);
    const std::vector<std::int64_t> bad{0, 1};
    CHECK_THROWS_AS(ord_jac_f(D, 0, bad), BadContact);
}

TEST_CASE("check_boundedness") {
    SUBCASE("equal multiplicities: bounded both ways") {
        const auto v = check_boundedness(point_diagram(1, 1));
        CHECK(v.bounded_above);
        CHECK(v.bounded_below);
        CHECK_FALSE(v.above_witness);
    }
    SUBCASE("q < p: bounded below only") {
        const auto v = check_boundedness(point_diagram(1, 0));
        CHECK_FALSE(v.bounded_above);
        CHECK(v.bounded_below);
        REQUIRE(v.above_witness);
        CHECK(v.above_witness->order < 0);
        CHECK(v.above_witness->stratum_name == "origin");
    }
    SUBCASE("mixed signs: the witness escapes every small sample") {
        // -e1 + 5 e2 > 0 for all e in {1,2,3}^2, yet it is negative at (6, 1)
        const auto D = crossing_diagram({1, 0}, {0, 5});
        for (std::int64_t a = 1; a <= 3; ++a)
            for (std::int64_t b = 1; b <= 3; ++b) {
                const std::vector<std::int64_t> e{a, b};
                CHECK(ord_jac_f(D, 0, e) > 0);
            }
        const auto v = check_boundedness(D);
        CHECK_FALSE(v.bounded_above);
        CHECK_FALSE(v.bounded_below);
        REQUIRE(v.above_witness);
        CHECK(v.above_witness->contacts == ContactVector{6, 1});
        CHECK(v.above_witness->order == -1);
        REQUIRE(v.below_witness);
        CHECK(v.below_witness->order > 0);
    }
    SUBCASE("witness orders have the violating sign") {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> m(0, 6);
        for (int t = 0; t < 300; ++t) {
            const auto D = crossing_diagram({m(rng), m(rng)}, {m(rng), m(rng)});
            const auto v = check_boundedness(D);
            if (v.above_witness)
                REQUIRE(v.above_witness->order < 0);
            if (v.below_witness)
                REQUIRE(v.below_witness->order > 0);
            const bool above = D.p_mults[0][0] <= D.q_mults[0][0] && D.p_mults[0][1] <= D.q_mults[0][1];
            REQUIRE(v.bounded_above == above);
        }
    }
}

TEST_CASE("inverse mapping: identity diagram") {
    const auto D = point_diagram(1, 1);
    const auto mu = germ_measure(catalog::cusp(), -12);
    const auto r = inverse_mapping_report(D, mu, mu);
    CHECK(r.conclusion == Conclusion::InverseArcAnalytic);
    CHECK(r.all_passed());
    CHECK(r.hypotheses_checked.size() == 4);
    CHECK(r.relation == Order::Equal);
}

TEST_CASE("inverse mapping: gating") {
    SUBCASE("unequal measures") {
        const auto D = point_diagram(1, 0);
        const auto r = inverse_mapping_report(D, germ_measure(catalog::cusp(), -12), germ_measure(catalog::line(), -12));
        CHECK(r.conclusion == Conclusion::Inconclusive);
        CHECK_FALSE(find(r, "measures_equal").passed);
        CHECK(find(r, "jacobian_bounded_below").passed);
        CHECK_FALSE(find(r, "jacobian_bounded_above").passed);
    }
    SUBCASE("equal measures but jac_f not bounded below") {
        const auto D = point_diagram(0, 1);
        const auto mu = germ_measure(catalog::line(), -12);
        const auto r = inverse_mapping_report(D, mu, mu);
        CHECK(r.conclusion == Conclusion::Inconclusive);
        CHECK_FALSE(find(r, "jacobian_bounded_below").passed);
        CHECK_FALSE(find(r, "image_measure_equals_mu_Y").passed);
    }
    SUBCASE("both floors infinite") {
        const MotiveSeries exact(LaurentPoly::u(-1));
        CHECK_THROWS_AS(inverse_mapping_report(point_diagram(0, 0), exact, exact), InvalidArgument);
    }
}

TEST_CASE("measure comparison") {
    SUBCASE("cusp below the line") {
        const auto r = measure_comparison_report(point_diagram(1, 0), germ_measure(catalog::cusp(), -20),
                                                 germ_measure(catalog::line(), -20));
        CHECK(r.conclusion == Conclusion::MeasureInequality);
        CHECK(r.relation == Order::Less);
        CHECK_FALSE(r.contradiction);
    }
    SUBCASE("not bounded below: no conclusion") {
        const auto r = measure_comparison_report(point_diagram(0, 1), germ_measure(catalog::line(), -20),
                                                 germ_measure(catalog::cusp(), -20));
        CHECK(r.conclusion == Conclusion::Inconclusive);
        CHECK_FALSE(r.relation);
    }
    SUBCASE("inputs contradicting the inequality") {
        const auto r = measure_comparison_report(point_diagram(0, 0), germ_measure(catalog::line(), -20),
                                                 germ_measure(catalog::cusp(), -20));
        CHECK(r.conclusion == Conclusion::Inconclusive);
        CHECK(r.contradiction);
        CHECK(r.relation == Order::Greater);
    }
}

TEST_CASE("conclusions only follow passed hypotheses") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> m(0, 3), pick(0, 2);
    const std::vector<MotiveSeries> measures{germ_measure(catalog::line(), -15), germ_measure(catalog::cusp(), -15),
                                             germ_measure(catalog::e6_curve(), -15)};
    for (int t = 0; t < 300; ++t) {
        const auto D = crossing_diagram({m(rng), m(rng)}, {m(rng), m(rng)});
        const auto& a = measures[pick(rng)];
        const auto& b = measures[pick(rng)];
        const auto inv = inverse_mapping_report(D, a, b);
        if (inv.conclusion == Conclusion::InverseArcAnalytic) {
            REQUIRE(inv.all_passed());
            REQUIRE(inv.boundedness.bounded_above);
        }
        const auto cmp = measure_comparison_report(D, a, b);
        if (cmp.conclusion == Conclusion::MeasureInequality) {
            REQUIRE(cmp.all_passed());
            REQUIRE(cmp.relation != Order::Greater);
        }
    }
}

TEST_CASE("inner_lipschitz_probe") {
    const std::vector<std::string> vars{"x"};
    const auto one = MultiPoly::parse("1", vars);
    const auto x = MultiPoly::parse("x", vars);
    const auto x2 = MultiPoly::parse("x^2", vars);
    const ArcJet t = ArcJet::from_coefficients({{0, 1}}, 6);
    const ArcJet t2 = ArcJet::from_coefficients({{0, 0, 1}}, 6);
    const ArcJet zero = ArcJet::from_coefficients({{0}}, 6);

    SUBCASE("polynomial entries are bounded along every probe") {
        const std::vector<RationalEntry> entries{{x2, one}, {x, one}};
        const std::vector<ArcJet> arcs{t, t2};
        const auto v = inner_lipschitz_probe(entries, arcs);
        CHECK(v.bounded_above);
        CHECK(v.evidence_only);
        CHECK(v.orders == std::vector<SeriesOrder>{SeriesOrder::exactly(1), SeriesOrder::exactly(2)});
    }
    SUBCASE("a pole disproves boundedness") {
        const std::vector<RationalEntry> entries{{one, x}};
        const std::vector<ArcJet> arcs{t, t2};
        const auto v = inner_lipschitz_probe(entries, arcs);
        CHECK_FALSE(v.bounded_above);
        CHECK_FALSE(v.evidence_only);
        CHECK(v.witness_arc == std::size_t{0});
    }
    SUBCASE("denominator vanishing to the cap") {
        const std::vector<RationalEntry> entries{{one, x}};
        const std::vector<ArcJet> arcs{zero};
        CHECK_THROWS_AS(inner_lipschitz_probe(entries, arcs), IndeterminateAtCap);
    }
    SUBCASE("no entries") {
        const std::vector<ArcJet> arcs{t};
        CHECK_THROWS_AS(inner_lipschitz_probe({}, arcs), ArityMismatch);
    }
}

TEST_CASE("measures hidden below the floor leave the theorems undecided") {
    const auto D = point_diagram(0, 0);
    const auto tiny = MotiveSeries::unknown_below(-4);
    const auto inv = inverse_mapping_report(D, tiny, tiny);
    CHECK(inv.conclusion == Conclusion::Inconclusive);
    CHECK_FALSE(inv.relation);
    CHECK(find(inv, "measures_equal").detail.find("undecided at floor -4") != std::string::npos);
    const auto cmp = measure_comparison_report(D, tiny, tiny);
    CHECK(cmp.conclusion == Conclusion::Inconclusive);
    CHECK_FALSE(cmp.contradiction);
}
