#include <doctest.h>

#include <random>

#include "motivic/grothendieck_ring.hpp"
#include "oracles.hpp"

using namespace motivic;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
MotiveSeries S(const char* s) { return MotiveSeries::parse(s); }

} // namespace

TEST_CASE("add cancels and keeps canonical form") {
    CHECK(P("u^2 + 1") + LaurentPoly(-1) == P("u^2"));
    CHECK((LaurentPoly() + P("3*u - 2")) == P("3*u - 2"));
    CHECK((P("u - 1") + P("u + 1")).to_string() == "2*u");
    CHECK((P("u") - P("u")).terms().empty());

    // dense-vector oracle
    const auto dense = oracle::DenseLaurent::from(P("u - 1")) + oracle::DenseLaurent::from(P("u + 1"));
    CHECK(dense.to_poly() == P("2*u"));
}

TEST_CASE("mul on polynomials and series") {
    CHECK(LaurentPoly::u(1) * LaurentPoly::u(-1) == LaurentPoly(1));
    CHECK(P("u + 1") * P("u - 1") == P("u^2 - 1"));
    CHECK((oracle::DenseLaurent::from(P("u + 1")) * oracle::DenseLaurent::from(P("u - 1"))).to_poly() == P("u^2 - 1"));

    // (1 + u^-1 + O(u^-3)) * u: the unknown tail of degree <= -3 is shifted to <= -2
    const MotiveSeries product = S("1 + u^-1 + O(u^-3)") * MotiveSeries(LaurentPoly::u());
    CHECK(product.to_string() == "u + 1 + O(u^-2)");
    CHECK(product.floor() == Degree(-2));
}

TEST_CASE("series product floor covers both unknown tails") {
    // (u^2 + O(u^-1)) * (u + O(1)): error terms u^2*O(1), u*O(u^-1), O(u^-1)O(1)
    const auto r = S("u^2 + O(u^-1)") * S("u + O(1)");
    CHECK(r.floor() == Degree(2));
    CHECK(r.to_string() == "u^3 + O(u^2)");
    // two unknowns multiply to an unknown of the summed floors
    CHECK((MotiveSeries::unknown_below(-3) * MotiveSeries::unknown_below(-4)).floor() == Degree(-7));
}

TEST_CASE("series addition takes the coarser floor") {
    const auto r = S("u^-1 + u^-4 + O(u^-6)") + S("u^-2 + O(u^-3)");
    CHECK(r.floor() == Degree(-3));
    CHECK(r.to_string() == "u^-1 + u^-2 + O(u^-3)");
}

TEST_CASE("virtual dimension") {
    CHECK(virtual_dim(P("u^2 - 3*u")) == Degree(2));
    CHECK(virtual_dim(LaurentPoly()).is_neg_infinity());
    CHECK(virtual_dim(P("u^-3 + u^-7")) == Degree(-3));
    CHECK(virtual_dim(S("u^-3 + O(u^-5)")) == Degree(-3));
    CHECK_THROWS_AS(virtual_dim(S("O(u^-5)")), PrecisionExhausted);
    CHECK(virtual_dim(MotiveSeries()).is_neg_infinity());
}

TEST_CASE("leq_order") {
    CHECK(leq_order(P("u"), P("u^2")) == Order::Less);
    CHECK(leq_order(P("u^2"), P("u")) == Order::Greater);
    CHECK(leq_order(P("u - 7"), P("u - 7")) == Order::Equal);
    // b - a = u^-2 with positive leading coefficient
    CHECK(leq_order(S("u^-1 - u^-2 + O(u^-10)"), S("u^-1 + O(u^-10)")) == Order::Less);
    CHECK(leq_order(S("u^-1 + O(u^-10)"), S("u^-1 + O(u^-10)")) == Order::Equal);
    CHECK(leq_order(S("2*u^-4 + O(u^-10)"), S("u^-4 + O(u^-10)")) == Order::Greater);
}

TEST_CASE("leq_order refuses to guess below the floor") {
    CHECK_THROWS_AS(leq_order(S("O(u^-3)"), S("O(u^-3)")), PrecisionExhausted);
    // a's only term sits below b's floor
    CHECK_THROWS_AS(leq_order(S("u^-5 + O(u^-9)"), S("O(u^-3)")), PrecisionExhausted);
}

TEST_CASE("geometric_sum") {
    CHECK(geometric_sum(1, -4).to_string() == "1 + u^-1 + u^-2 + u^-3 + O(u^-4)");
    CHECK(geometric_sum(2, -5).to_string() == "1 + u^-2 + u^-4 + O(u^-5)");
    const MotiveSeries one_minus = MotiveSeries(P("1 - u^-2"));
    const MotiveSeries product = one_minus * geometric_sum(2, -20);
    CHECK(product.known_part() == LaurentPoly(1));
    CHECK(product.floor() <= Degree(-19));
    CHECK_THROWS_AS(geometric_sum(0, -5), InvalidArgument);
}

TEST_CASE("geometric_sum inverts 1 - u^-p for p in 1..8, floors -40..-10") {
    for (std::int64_t p = 1; p <= 8; ++p) {
        for (std::int64_t m = -40; m <= -10; ++m) {
            const auto r = MotiveSeries(LaurentPoly(1) - LaurentPoly::u(-p)) * geometric_sum(p, m);
            CHECK(r.truncated(Degree(m + p)) == MotiveSeries(LaurentPoly(1), Degree(m + p)));
        }
    }
}

TEST_CASE("limit_of_sequence") {
    SUBCASE("constant sequence keeps its floor when the bounds sit below it") {
        const MotiveSeries c = S("u - 2 + O(u^-10)");
        const std::vector<MotiveSeries> seq{c, c, c};
        const std::vector<std::int64_t> bounds{-20, -21};
        CHECK(limit_of_sequence(seq, bounds) == c);
    }
    SUBCASE("partial sums of sum u^-i converge to geometric_sum") {
        std::vector<MotiveSeries> seq;
        std::vector<std::int64_t> bounds;
        LaurentPoly partial;
        const int K = 12;
        for (int k = 0; k <= K; ++k) {
            partial += LaurentPoly::u(-k);
            seq.emplace_back(partial);
            if (k < K)
                bounds.push_back(-k);
        }
        // last difference u^-12 has bound -(K-1), so the limit is known above -(K-1)
        CHECK(limit_of_sequence(seq, bounds) == geometric_sum(1, -(K - 1)));
    }
    SUBCASE("difference of dimension -5 satisfies the bound -4") {
        const std::vector<MotiveSeries> seq{MotiveSeries(P("u")), MotiveSeries(P("u + u^-5"))};
        const std::vector<std::int64_t> bounds{-4};
        const auto r = limit_of_sequence(seq, bounds);
        CHECK(r.floor() == Degree(-4));
        CHECK(r.to_string() == "u + O(u^-4)");
    }
    SUBCASE("violated bound") {
        const std::vector<MotiveSeries> seq{MotiveSeries(P("u")), MotiveSeries(P("u + u^-3"))};
        const std::vector<std::int64_t> bounds{-4};
        CHECK_THROWS_AS(limit_of_sequence(seq, bounds), BoundViolated);
    }
    SUBCASE("bounds must strictly decrease") {
        const std::vector<MotiveSeries> seq{MotiveSeries(), MotiveSeries(), MotiveSeries()};
        const std::vector<std::int64_t> bounds{-4, -4};
        CHECK_THROWS_AS(limit_of_sequence(seq, bounds), BoundViolated);
    }
}

TEST_CASE("canonical rendering and parsing") {
    CHECK(P("-u^2 + 3*u - 1").to_string() == "-u^2 + 3*u - 1");
    CHECK(P("  u^-2 -  u^-3 ").to_string() == "u^-2 - u^-3");
    CHECK(P("2*u^0 + u^1").to_string() == "u + 2");
    CHECK(P("u^2 + u^2").to_string() == "2*u^2");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(S("u^-2 - u^-3 + O(u^-10)").to_string() == "u^-2 - u^-3 + O(u^-10)");
    CHECK(S("O(u^-5)").to_string() == "O(u^-5)");
    CHECK(S("1 + O(1)").to_string() == "O(1)");
    CHECK(P("123456789012345678901234567890*u").coefficient(1) == mpz_class("123456789012345678901234567890"));

    CHECK_THROWS_AS(P("u^"), ParseError);
    CHECK_THROWS_AS(P("2u"), ParseError);
    CHECK_THROWS_AS(P("u + O(u^-2)"), ParseError);
    CHECK_THROWS_AS(S("O(u^-2) + u"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
}

TEST_CASE("rendering round-trips through the parser") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        const auto p = oracle::random_laurent(rng, 6, 8, 40);
        CHECK(LaurentPoly::parse(p.to_string()) == p);
        const MotiveSeries s(p, Degree(static_cast<std::int64_t>(rng() % 10) - 9));
        CHECK(MotiveSeries::parse(s.to_string()) == s);
    }
}

TEST_CASE("ring axioms, integral domain and dimension laws") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 500; ++t) {
        const auto a = oracle::random_laurent(rng), b = oracle::random_laurent(rng), c = oracle::random_laurent(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * LaurentPoly(1) == a);
        REQUIRE((a * b).is_zero() == (a.is_zero() || b.is_zero()));
        if (!a.is_zero() && !b.is_zero())
            REQUIRE(virtual_dim(a * b) == virtual_dim(a) + virtual_dim(b));
        REQUIRE(virtual_dim(a + b) <= std::max(virtual_dim(a), virtual_dim(b)));
        // independent product
        REQUIRE((oracle::DenseLaurent::from(a) * oracle::DenseLaurent::from(b)).to_poly() == a * b);
    }
}

TEST_CASE("leq_order is a total order") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
        const auto a = oracle::random_laurent(rng), b = oracle::random_laurent(rng), c = oracle::random_laurent(rng);
        const Order ab = leq_order(a, b);
        const Order ba = leq_order(b, a);
        REQUIRE((ab == Order::Equal) == (a == b));
        if (ab == Order::Less)
            REQUIRE(ba == Order::Greater);
        if (ab != Order::Greater && leq_order(b, c) != Order::Greater)
            REQUIRE(leq_order(a, c) != Order::Greater);
    }
}

TEST_CASE("Degree arithmetic") {
    CHECK(Degree::neg_infinity() < Degree(-1000000));
    CHECK((Degree::neg_infinity() + Degree(5)).is_neg_infinity());
    CHECK(Degree(3) + Degree(-5) == Degree(-2));
    CHECK(Degree::neg_infinity() == Degree::neg_infinity());
    CHECK_THROWS_AS(Degree::neg_infinity().value(), InvalidArgument);
}
