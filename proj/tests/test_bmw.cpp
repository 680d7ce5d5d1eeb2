#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "braidrep/bmw.hpp"
#include "braidrep/lk.hpp"

using namespace braidrep;

namespace {

const VarList kml{"kappa", "m", "l"};

LaurentPoly K(const char* s) { return parse_poly(s, kappa_t_vars()); }
LaurentPoly G(const char* s) { return parse_poly(s, kml); }

std::map<std::string, LaurentPoly> image(const RingMatrix& m, int n, PairIndex col) {
    std::map<std::string, LaurentPoly> out;
    const auto basis = pair_basis(n);
    const std::size_t c = pair_position(n, col);
    for (std::size_t r = 0; r < basis.size(); ++r)
        if (!m(r, c).is_zero()) out.emplace(to_string(basis[r]), m(r, c));
    return out;
}

bool has_item(const CheckReport& r, const std::string& name) {
    return std::any_of(r.items.begin(), r.items.end(), [&](const CheckItem& c) { return c.name == name; });
}

}  // namespace

TEST_CASE("identified parameters follow from q = -kappa^-2") {
    const BmwParams p = BmwParams::identified();
    const LaurentPoly q = q_in_kappa();
    CHECK(q == K("-kappa^-2"));
    // m = kappa(1 - q), l^{-1} = kappa t q^2, expanded independently.
    const LaurentPoly kappa = K("kappa");
    CHECK(p.m == kappa * (K("1") - q));
    CHECK(p.l_inv == kappa * K("t") * q * q);
    CHECK(p.m == K("kappa + kappa^-1"));
    CHECK(p.l_inv == K("t*kappa^-3"));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(BmwParams(G("2*kappa"), G("m"), G("l^-1")), std::invalid_argument);
    CHECK_THROWS_AS(BmwParams(G("kappa"), G("m"), G("1 + l")), std::invalid_argument);
    CHECK_THROWS_AS(BmwParams(G("kappa"), K("t"), G("l^-1")), std::invalid_argument);
}

TEST_CASE("case A") {
    const RingMatrix generic = bmw_generator(2, 1, BmwParams::generic());
    CHECK(generic(0, 0) == G("kappa^-1*l^-1"));
    CHECK(bmw_generator(2, 1, BmwParams::identified())(0, 0) == K("t*kappa^-4"));
}

TEST_CASE("cases B, C and D") {
    const BmwParams p = BmwParams::generic();
    using Img = std::map<std::string, LaurentPoly>;

    // B
    CHECK(image(bmw_generator(4, 1, p), 4, {3, 4}) == Img{{"3,4", G("1")}});
    CHECK(image(bmw_generator(4, 2, p), 4, {1, 4}) == Img{{"1,4", G("1")}});
    CHECK(image(bmw_generator(5, 4, p), 5, {1, 3}) == Img{{"1,3", G("1")}});
    // C, both orders
    CHECK(image(bmw_generator(4, 1, p), 4, {2, 4}) == Img{{"1,4", G("kappa^-1")}});
    CHECK(image(bmw_generator(4, 3, p), 4, {1, 4}) == Img{{"1,3", G("kappa^-1")}});
    // D, j < i: exponent i-j-2 = 0
    CHECK(image(bmw_generator(4, 3, p), 4, {1, 3}) ==
          Img{{"1,3", G("m*kappa^-1")}, {"1,4", G("-kappa^-1")}, {"3,4", G("m")}});
    // D, i+1 < j: exponent i-j+1 = -3
    CHECK(image(bmw_generator(5, 1, p), 5, {1, 5}) ==
          Img{{"1,5", G("m*kappa^-1")}, {"2,5", G("-kappa^-1")}, {"1,2", G("m*l^-1*kappa^-3")}});

    CHECK_THROWS_AS(bmw_generator(4, 4, p), std::invalid_argument);
}

TEST_CASE("theorem check n = 2") {
    const CheckReport r = theorem3_check(2, 0);
    CHECK(r.passed());
    REQUIRE(r.items.size() == 1);
    const LaurentPoly lk_side = substitute(lk_generator(2, 1), "q", q_in_kappa())(0, 0);
    CHECK(lk_side == K("t*kappa^-4"));
    CHECK(bmw_generator(2, 1, BmwParams::identified())(0, 0) == lk_side);
}

TEST_CASE("theorem check for n = 3..6 and many shifts") {
    for (int n = 3; n <= 6; ++n) {
        CHECK(theorem3_check(n, 0).passed());
        CHECK(theorem3_check(n, n + 1).passed());
    }
    for (int k = -6; k <= 9; ++k) CHECK(theorem3_check(4, k).passed());
}

TEST_CASE("a wrong basis rescaling is caught") {
    // v_ij = kappa^{i+2j} T_ij is not a valid identification.
    const int n = 4;
    const VarList& v = kappa_t_vars();
    const auto basis = pair_basis(n);
    RingMatrix d(basis.size(), basis.size(), LaurentPoly(v)), d_inv = d;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        d(k, k) = LaurentPoly::variable(v, "kappa", basis[k].i + 2 * basis[k].j);
        d_inv(k, k) = LaurentPoly::variable(v, "kappa", -(basis[k].i + 2 * basis[k].j));
    }
    const RingMatrix lk = d * substitute(lk_generator(n, 2), "q", q_in_kappa()) * d_inv;
    CHECK_FALSE(lk == bmw_generator(n, 2, BmwParams::identified()));
}

TEST_CASE("BMW generators satisfy the braid relations on the identified ring") {
    const BmwParams p = BmwParams::identified();
    for (int n = 3; n <= 5; ++n)
        CHECK(check_braid_relations(n, [&](int i) { return bmw_generator(n, i, p); }, "bmw").passed());
}

TEST_CASE("relation suite") {
    const CheckReport r3 = bmw_relation_suite(3);
    CHECK(r3.passed());
    CHECK(has_item(r3, "G1^2=m(G1+l^-1E1)-1"));
    CHECK(has_item(r3, "G2^2=m(G2+l^-1E2)-1"));

    const CheckReport r4 = bmw_relation_suite(4);
    CHECK(r4.passed());
    CHECK(has_item(r4, "E1E2E1=E1"));
    CHECK(has_item(r4, "far E1G3=G3E1"));
    CHECK(has_item(r4, "E1G3E2E3=E1E2G1E3"));
    if (const CheckItem* f = r4.first_failure()) FAIL(f->name << ": " << f->detail);

    CHECK_THROWS_AS(bmw_relation_suite(2), std::invalid_argument);
}

TEST_CASE("cubic annihilates every generator") {
    for (int n = 2; n <= 5; ++n) {
        const CheckReport r = eigen_structure_check(n);
        CHECK(r.passed());
        CHECK(r.items.size() == static_cast<std::size_t>(n - 1));
    }
    // No proper factor of the cubic suffices at n = 3.
    const VarList& v = lk_vars();
    const RingMatrix m = lk_generator(3, 1);
    const RingMatrix id = ring_identity(3, v);
    const LaurentPoly q = LaurentPoly::variable(v, "q"), t = LaurentPoly::variable(v, "t");
    CHECK_FALSE(((m - id) * (m + id.scaled(q))).is_zero_matrix());
    CHECK_FALSE(((m - id) * (m - id.scaled(t * q * q))).is_zero_matrix());
    CHECK_FALSE(((m + id.scaled(q)) * (m - id.scaled(t * q * q))).is_zero_matrix());
}
