#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braidrep/laurent.hpp"
#include "generators.hpp"

using namespace braidrep;

namespace {

const VarList qt{"q", "t"};
const VarList kt{"kappa", "t"};

LaurentPoly P(const char* s, const VarList& v = qt) { return parse_poly(s, v); }

RationalPoint point(std::initializer_list<std::pair<const char*, mpq_class>> xs) {
    RationalPoint pt;
    for (const auto& [k, v] : xs) pt.set(k, v);
    return pt;
}

}  // namespace

TEST_CASE("addition") {
    CHECK(P("1 - q") + P("q") == LaurentPoly::constant(qt, 1));
    CHECK(P("q") + LaurentPoly(qt) == P("q"));

    const LaurentPoly lhs = P("q^-1 + t") + P("q^-1 - t");
    CHECK(lhs == P("2*q^-1"));
    // Numeric cross-check at q=2, t=3.
    const auto pt = point({{"q", 2}, {"t", 3}});
    CHECK(evaluate(P("q^-1 + t"), pt) + evaluate(P("q^-1 - t"), pt) == evaluate(lhs, pt));
    CHECK(evaluate(lhs, pt) == 1);
}

TEST_CASE("multiplication") {
    CHECK((P("q") * P("q^-1")).is_one());
    CHECK(P("1 - q") * P("1 + q") == P("1 - q^2"));

    const LaurentPoly kappa = LaurentPoly::variable(kt, "kappa");
    const LaurentPoly q_image = -LaurentPoly::variable(kt, "kappa", -2);
    const LaurentPoly m = kappa * substitute(P("1 - q"), "q", q_image);
    CHECK(m == P("kappa + kappa^-1", kt));
    CHECK(evaluate(m, point({{"kappa", 2}})) == mpq_class(5, 2));
}

TEST_CASE("substitution") {
    const LaurentPoly q_image = -LaurentPoly::variable(kt, "kappa", -2);

    const LaurentPoly a = substitute(P("t*q^2"), "q", q_image);
    CHECK(a == P("t*kappa^-4", kt));
    CHECK(evaluate(a, point({{"kappa", 3}, {"t", 5}})) == mpq_class(5, 81));
    CHECK(evaluate(P("t*q^2"), point({{"q", mpq_class(-1, 9)}, {"t", 5}})) == mpq_class(5, 81));

    const LaurentPoly b = substitute(P("1 - q"), "q", q_image);
    CHECK(b == P("1 + kappa^-2", kt));
    CHECK(evaluate(b, point({{"kappa", 3}})) == mpq_class(10, 9));

    const LaurentPoly p = P("3*q^-2*t + q - 7*t^4");
    CHECK(substitute(p, "q", P("q")) == p);

    // A non-unit cannot go into a negative power.
    CHECK_THROWS_AS(substitute(P("q^-1"), "q", P("1 + t")), std::domain_error);
    CHECK(substitute(P("q^2"), "q", P("1 + t")) == P("1 + 2*t + t^2"));
}

TEST_CASE("evaluation") {
    CHECK(evaluate(P("q*q^-1"), point({{"q", mpq_class(7, 3)}})) == 1);
    CHECK(evaluate(P("t*q^2"), point({{"q", 2}, {"t", 3}})) == 12);
    CHECK(evaluate(P("kappa + kappa^-1", kt), point({{"kappa", 2}})) == mpq_class(5, 2));

    CHECK_THROWS_AS(evaluate(P("q + t"), point({{"q", 2}})), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(P("q^-1"), point({{"q", 0}})), std::domain_error);
    CHECK(evaluate(P("q^2"), point({{"q", 0}})) == 0);
}

TEST_CASE("ring mismatch is rejected") {
    CHECK_THROWS_AS(P("q") + P("t", VarList{"t"}), std::invalid_argument);
    CHECK_THROWS_AS(P("q") * P("kappa", kt), std::invalid_argument);
    // Same names from an independently built list are the same ring.
    CHECK(P("q") + P("q", VarList{"q", "t"}) == P("2*q"));
}

TEST_CASE("units") {
    CHECK(P("-q^-2*t").is_unit());
    CHECK_FALSE(P("2*q").is_unit());
    CHECK_FALSE(P("1 + q").is_unit());
    CHECK(P("-q^-2*t").unit_inverse() == P("-q^2*t^-1"));
    CHECK_THROWS_AS(P("1 + q").unit_inverse(), std::domain_error);
    CHECK(P("q").pow(-3) == P("q^-3"));
    CHECK(P("6*q - 4").divide_exact(2) == P("3*q - 2"));
    CHECK_THROWS_AS(P("6*q - 3").divide_exact(2), std::domain_error);
}

TEST_CASE("formatting") {
    CHECK(to_string(LaurentPoly(qt)) == "0");
    CHECK(to_string(P("t*q^2 - 1 + 3*q^-1")) == "3*q^-1 - 1 + q^2*t");
    CHECK(to_latex(P("t*kappa^-4 - 2*kappa", kt)) == "\\kappa^{-4} t - 2 \\kappa");
    CHECK_THROWS_AS(parse_poly("q + ", qt), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x", qt), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("", qt), std::invalid_argument);
}

TEST_CASE("large coefficients stay exact") {
    LaurentPoly p = P("1 + q");
    LaurentPoly acc = LaurentPoly::constant(qt, 1);
    for (int k = 0; k < 80; ++k) acc *= p;
    // Central binomial coefficient C(80,40) exceeds 64 bits.
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 80, 40);
    CHECK(acc.terms().at({40, 0}) == c);
    CHECK(evaluate(acc, point({{"q", 1}})) == mpq_class(mpz_class(1) << 80));
}

TEST_CASE("property: ring axioms on random inputs") {
    std::mt19937_64 rng(20240517);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = testing::random_poly(rng, qt);
        auto b = testing::random_poly(rng, qt);
        auto c = testing::random_poly(rng, qt);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        const LaurentPoly ab = a * b;
        for (const auto& [e, coeff] : ab.terms()) CHECK(coeff != 0);
    }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = testing::random_poly(rng, qt);
        auto b = testing::random_poly(rng, qt);
        RationalPoint pt;
        pt.set("q", testing::random_nonzero_rational(rng));
        pt.set("t", testing::random_nonzero_rational(rng));
        CHECK(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
        CHECK(evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt));
    }
}

TEST_CASE("property: evaluation after substitution composes assignments") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = testing::random_poly(rng, qt);
        // A unit value, so negative powers of q are allowed.
        std::uniform_int_distribution<int> e(-3, 3);
        Exponents ex{e(rng), e(rng)};
        LaurentPoly value = LaurentPoly::monomial(kt, ex, trial % 2 ? 1 : -1);
        RationalPoint pt;
        pt.set("kappa", testing::random_nonzero_rational(rng));
        pt.set("t", testing::random_nonzero_rational(rng));
        RationalPoint composed;
        composed.set("q", evaluate(value, pt));
        composed.set("t", *pt.find("t"));
        CHECK(evaluate(substitute(p, "q", value), pt) == evaluate(p, composed));
    }
}

TEST_CASE("property: text and JSON round trips") {
    std::mt19937_64 rng(3);
    const VarList kml{"kappa", "m", "l"};
    for (int trial = 0; trial < 200; ++trial) {
        auto p = testing::random_poly(rng, trial % 2 ? qt : kml, 6, 4, 1000);
        CHECK(parse_poly(to_string(p), p.vars()) == p);
        CHECK(poly_from_json(nlohmann::json::parse(to_json(p).dump())) == p);
    }
}

TEST_CASE("JSON layout") {
    const auto j = to_json(P("2*q^-1 - t"));
    CHECK(j.dump() == R"({"terms":[{"c":"2","e":[-1,0]},{"c":"-1","e":[0,1]}],"vars":["q","t"]})");
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/5") == mpq_class(3, 5));
    CHECK(parse_rational("-6/4") == mpq_class(-3, 2));
    CHECK(parse_rational("12") == 12);
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}
