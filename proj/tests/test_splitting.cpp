#include "doctest.h"

#include <set>

#include "vglab/bundle.hpp"
#include "vglab/splitting.hpp"

using namespace vglab;

namespace {

std::pair<ProjPoint, ProjPoint> distinct_pair(Rng& rng, int n) {
    ProjPoint p = random_point(rng, n);
    for (;;) {
        ProjPoint q = random_point(rng, n);
        if (q != p) return {p, q};
    }
}

} // namespace

TEST_CASE("binary_form_gcd_is_content_normalized") {
    Form s = Form::variable(2, 0), t = Form::variable(2, 1);
    CHECK(binary_gcd({s * s * t, s * t * t}) == s * t);
    CHECK(binary_gcd({Rat(2) * s, Rat(4) * s}) == s);
    CHECK(binary_gcd({s, t}) == Form::constant(2, Rat(1)));
    CHECK(binary_gcd({Form(2, 1), Form(2, 2)}).is_zero());
    Form f = Form::parse("x0^2 - x1^2", 2), g = Form::parse("x0^2 + 2*x0*x1 + x1^2", 2);
    CHECK(binary_gcd({f, g}) == Form::parse("x0 + x1", 2));
}

TEST_CASE("split_bundles_restrict_to_their_own_type") {
    ProjPoint P({1, 0, 0}), Q({0, 1, 1});
    CHECK(restrict_to_line(line_sum_presentation(2, {0, 3}), P, Q) == SplittingType{0, 3});
    CHECK(restrict_to_line(line_sum_presentation(2, {2, 1}), P, Q) == SplittingType{1, 2});

    ProjPoint P3({1, 0, 0, 0}), Q3({0, 1, -1, 2});
    CHECK(restrict_to_line(line_sum_presentation(3, {1, 2}), P3, Q3) == SplittingType{1, 2});
    CHECK(restrict_to_line(catalog_case("1a", 3).spec, P3, Q3) == SplittingType{0, 3});
}

TEST_CASE("named_cases_split_with_balanced_or_split_type_on_random_lines") {
    std::set<SplittingType> allowed = {SplittingType{0, 3}, SplittingType{1, 2}};
    Rng rng(77);
    for (const std::string id : {"1a", "1b", "2", "3", "4a", "4b", "4c", "4d"}) {
        FreePresentation p = expand_to_presentation(catalog_case(id).spec);
        for (int t = 0; t < 3; ++t) {
            auto [P, Q] = distinct_pair(rng, 2);
            SplittingType st = restrict_to_line(p, P, Q);
            CHECK(allowed.count(st) == 1);
        }
    }
}

TEST_CASE("cotangent_twist_splits_uniformly") {
    // Omega(3) restricts to O(1) + O(2) on every line
    FreePresentation om = cotangent_twist_presentation(3);
    Rng rng(78);
    for (int t = 0; t < 5; ++t) {
        auto [P, Q] = distinct_pair(rng, 2);
        CHECK(restrict_to_line(om, P, Q) == SplittingType{1, 2});
    }
}

TEST_CASE("jumping_line_changes_the_splitting_type") {
    // coker of (x2, x0^3, x1^3)^T into O(-1) + O(1) + O(1)
    FreePresentation p;
    p.n = 2;
    p.f1 = {-2};
    p.f0 = {-1, 1, 1};
    p.a1 = FormMatrix(3, 1, 3);
    p.a1.at(0, 0) = Form::parse("x2", 3);
    p.a1.at(1, 0) = Form::parse("x0^3", 3);
    p.a1.at(2, 0) = Form::parse("x1^3", 3);
    p.a2 = FormMatrix(1, 0, 3);
    Rng rng(79);
    validate_presentation(p, rng, 10);

    // on {x0 = 0} the first entry survives: balanced type
    CHECK(restrict_to_line(p, ProjPoint({0, 1, 0}), ProjPoint({0, 0, 1})) == SplittingType{1, 2});
    // on {x2 = 0} the degree-1 entry dies and O(-1) splits off
    CHECK(restrict_to_line(p, ProjPoint({1, 0, 0}), ProjPoint({0, 1, 0})) == SplittingType{-1, 4});
}

TEST_CASE("rank_drop_on_the_line_raises_degenerate_line") {
    // (x0, x1)^T into O^2 twisted up: cokernel is not locally free at (0:0:1)
    FreePresentation p;
    p.n = 2;
    p.f1 = {-1};
    p.f0 = {0, 0, 0};
    p.a1 = FormMatrix(3, 1, 3);
    p.a1.at(0, 0) = Form::parse("x0", 3);
    p.a1.at(1, 0) = Form::parse("x1", 3);
    p.a1.at(2, 0) = Form(3, 1);
    p.a2 = FormMatrix(1, 0, 3);

    ProjPoint P({1, 0, 0}), Q({0, 0, 1}); // the line {x1 = 0} passes through the bad point
    CHECK_THROWS_AS(restrict_to_line(p, P, Q), DegenerateLine);
    try {
        restrict_to_line(p, P, Q);
    } catch (const DegenerateLine& e) {
        CHECK(std::string(e.what()).find("(0:0:1)") != std::string::npos);
    }

    // lines avoiding (0:0:1) are fine
    CHECK(restrict_to_line(p, ProjPoint({1, 0, 0}), ProjPoint({0, 1, 0})) == SplittingType{0, 1});
}

TEST_CASE("splitting_type_ordering_and_text") {
    SplittingType a{0, 3}, b{1, 2};
    CHECK(a.str() == "(0,3)");
    CHECK(a < b);
    CHECK(a != b);
    CHECK_FALSE(b < a);
}
