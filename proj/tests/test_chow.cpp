#include "doctest.h"

#include "vglab/chow.hpp"
#include "vglab/rng.hpp"

using namespace vglab;

namespace {

ChowClass random_unit(Rng& rng, int n) {
    ChowClass c(n);
    c.set_coeff(0, Int(1)); // invertible iff the degree-0 part is a unit
    for (int i = 1; i <= n; ++i) c.set_coeff(i, Int(rng.int_in(-9, 9)));
    return c;
}

} // namespace

TEST_CASE("chow_ring_laws_on_random_classes") {
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        int n = 2 + t % 3;
        ChowClass a = random_unit(rng, n), b = random_unit(rng, n), c = random_unit(rng, n);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * ChowClass::one(n) == a);
        CHECK(a * a.inv() == ChowClass::one(n));
    }
}

TEST_CASE("chow_parse_and_str_round_trip") {
    ChowClass c = ChowClass::parse("1 - 3t + 3t^2", 2);
    CHECK(c.coeff(0) == Int(1));
    CHECK(c.coeff(1) == Int(-3));
    CHECK(c.coeff(2) == Int(3));
    CHECK(ChowClass::parse(c.str(), 2) == c);
    CHECK(ChowClass::parse("1 + 2t", 3).coeff(3) == Int(0));
}

TEST_CASE("inverse_of_one_plus_3t_plus_6t2_truncates_to_degree_two") {
    ChowClass c = ChowClass::parse("1 + 3t + 6t^2", 2);
    CHECK(c.inv() == ChowClass::parse("1 - 3t + 3t^2", 2));
    CHECK_THROWS_AS(ChowClass::parse("2t + t^2", 2).inv(), NonInvertibleClass);
}

TEST_CASE("twisted_second_symmetric_power_of_cotangent_on_the_plane") {
    CHECK(chern_sym2_omega1_p2() == ChowClass::parse("1 - 3t + 6t^2", 2));
}

TEST_CASE("cubic_coefficient_of_rank_two_quotient_on_p3") {
    // (1 + 2t) / (1 - t) truncated on P^3 has t^3 coefficient 3
    ChowClass num = ChowClass::parse("1 + 2t", 3);
    ChowClass den = ChowClass::parse("1 - t", 3);
    ChowClass q = num * den.inv();
    CHECK(q.coeff(3) == Int(3));
    CHECK(q == ChowClass::parse("1 + 3t + 3t^2 + 3t^3", 3));
}

TEST_CASE("twisting_by_line_bundles_is_invertible") {
    Rng rng(29);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + t % 2;
        int rank = 1 + t % 3;
        int k = static_cast<int>(rng.int_in(-4, 4));
        ChowClass c = random_unit(rng, n);
        CHECK(chern_twist(chern_twist(c, rank, k), rank, -k) == c);
    }
    // O(1)+O(2) twisted by 1 is O(2)+O(3): chern (1+2t)(1+3t)
    ChowClass c = ChowClass::parse("1 + 3t + 2t^2", 2);
    CHECK(chern_twist(c, 2, 1) == ChowClass::parse("1 + 5t + 6t^2", 2));
    CHECK(ChowClass::line_bundle(2, 1) == ChowClass::parse("1 + t", 2));
}

TEST_CASE("line_sum_chern_is_product_of_factors") {
    ChowClass c = chern_line_sum(2, {0, 1, 2});
    CHECK(c == ChowClass::parse("1 + t", 2) * ChowClass::parse("1 + 2t", 2));
    ChowClass d = chern_line_sum(3, {-1, -1, -1});
    CHECK(d == ChowClass::parse("1 - 3t + 3t^2 - t^3", 3));
}

TEST_CASE("chern_data_extraction_and_rank") {
    ChernData cd = chern_data(ChowClass::parse("1 + 3t + 3t^2", 2), 2);
    CHECK(cd.rank == 2);
    CHECK(cd.c1 == Int(3));
    CHECK(cd.c2 == Int(3));
    CHECK(cd.c3 == Int(0));
}

TEST_CASE("chi_of_line_bundles_matches_binomial_count") {
    // chi(O(a)) on P^n is the signed binomial C(n+a, n)
    for (int n = 1; n <= 4; ++n)
        for (int a = -8; a <= 8; ++a)
            CHECK(chi_line_bundle(n, Int(a)) == binom(Int(n + a), n));
    CHECK(chi_line_bundle(2, Int(0)) == Int(1));
    CHECK(chi_line_bundle(2, Int(-3)) == Int(1));
    CHECK(chi_line_bundle(3, Int(-4)) == Int(-1));
}

TEST_CASE("plane_euler_characteristic_closed_form") {
    // rank 2, c1, c2 on P^2: chi(E(m)) per Riemann-Roch
    CHECK(euler_char_p2(Int(3), Int(6), Int(0)) == Int(5));
    // split bundles: chi(O(a)+O(b)) with c1 = a+b, c2 = ab
    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        int a = static_cast<int>(rng.int_in(-5, 5));
        int b = static_cast<int>(rng.int_in(-5, 5));
        int m = static_cast<int>(rng.int_in(-5, 5));
        Int split = chi_line_bundle(2, Int(a + m)) + chi_line_bundle(2, Int(b + m));
        CHECK(euler_char_p2(Int(a + b), Int(Int(a) * Int(b)), Int(m)) == split);
    }
}

TEST_CASE("space_euler_characteristic_matches_split_oracle") {
    Rng rng(37);
    for (int t = 0; t < 50; ++t) {
        int a = static_cast<int>(rng.int_in(-5, 5));
        int b = static_cast<int>(rng.int_in(-5, 5));
        int m = static_cast<int>(rng.int_in(-5, 5));
        Int split = chi_line_bundle(3, Int(a + m)) + chi_line_bundle(3, Int(b + m));
        Int c1 = Int(a) + Int(b);
        Int c2 = Int(a) * Int(b);
        CHECK(euler_char_p3(c1, c2, Int(m)) == Rat(split));
        CHECK(euler_char_p3_int(c1, c2, Int(m)) == split);
    }
    // non-integral chi certifies that no bundle has those invariants
    CHECK_FALSE(euler_char_p3(Int(1), Int(1), Int(0)).is_integer());
    CHECK_THROWS_AS(euler_char_p3_int(Int(1), Int(1), Int(0)), NonIntegerChi);
}

TEST_CASE("rank_two_space_bundles_need_even_chern_product") {
    CHECK_FALSE(schwarzenberger_ok(Int(3), Int(5)));
    CHECK(schwarzenberger_ok(Int(2), Int(3)));
    CHECK_FALSE(schwarzenberger_ok(Int(1), Int(1)));
    CHECK_FALSE(schwarzenberger_ok(Int(-3), Int(5)));
    int violations = 0;
    for (int c1 = -5; c1 <= 5; ++c1)
        for (int c2 = -5; c2 <= 5; ++c2) {
            bool ok = schwarzenberger_ok(Int(c1), Int(c2));
            // the parity predicate is exactly integrality of chi on P^3
            CHECK(ok == euler_char_p3(Int(c1), Int(c2), Int(0)).is_integer());
            if (!ok) ++violations;
        }
    CHECK(violations == 36); // both chern numbers odd
}
