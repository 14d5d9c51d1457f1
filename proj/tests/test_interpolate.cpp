#include "doctest.h"

#include <set>

#include "vglab/interpolate.hpp"

using namespace vglab;

TEST_CASE("vandermonde_rows_evaluate_monomials_at_points") {
    std::vector<ProjPoint> pts = {ProjPoint({1, 0, 0}), ProjPoint({1, 1, 1}),
                                  ProjPoint({2, -1, 3})};
    RatMatrix m = vandermonde(2, 2, pts);
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 6);
    auto basis = monomial_basis(2, 2);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Form mono = Form::monomial(3, basis[size_t(j)], Rat(1));
            CHECK(m.at(i, j) == mono.eval(pts[size_t(i)]));
        }
}

TEST_CASE("interpolation_recovers_random_cubics_exactly") {
    Rng rng(2026);
    for (int t = 0; t < 15; ++t) {
        Form f = random_form(rng, 3, 3);
        if (f.is_zero()) continue;
        // 10 coefficients need at least 10 samples; spend a few extra
        std::vector<std::pair<ProjPoint, Rat>> samples;
        std::set<ProjPoint> seen;
        while (samples.size() < 14) {
            ProjPoint p = random_point(rng, 2);
            if (!seen.insert(p).second) continue;
            samples.push_back({p, f.eval(p)});
        }
        Form g = interpolate_form(2, 3, samples);
        CHECK(g == f); // exact recovery, no scale ambiguity for fixed sample values
    }
}

TEST_CASE("interpolation_rejects_samples_from_a_higher_degree_form") {
    // values of a degree-2 form cannot come from a linear form
    Form f = Form::parse("x0^2 + x1*x2", 3);
    Rng rng(5);
    std::vector<std::pair<ProjPoint, Rat>> samples;
    std::set<ProjPoint> seen;
    while (samples.size() < 12) {
        ProjPoint p = random_point(rng, 2);
        if (!seen.insert(p).second) continue;
        samples.push_back({p, f.eval(p)});
    }
    CHECK_THROWS_AS(interpolate_form(2, 1, samples), InconsistentSamples);
}

TEST_CASE("interpolation_reports_underdetermined_systems") {
    // 3 points cannot pin down the 6-dimensional space of conics
    std::vector<std::pair<ProjPoint, Rat>> samples = {
        {ProjPoint({1, 0, 0}), Rat(0)},
        {ProjPoint({0, 1, 0}), Rat(0)},
        {ProjPoint({1, 1, 1}), Rat(1)},
    };
    CHECK_THROWS_AS(interpolate_form(2, 2, samples), Underdetermined);
}
