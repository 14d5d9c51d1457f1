#include "doctest.h"

#include "vglab/bundle.hpp"
#include "vglab/cohomology.hpp"
#include "vglab/presentation.hpp"

using namespace vglab;

TEST_CASE("form_matrix_evaluation_and_product") {
    FormMatrix m(2, 2, 3);
    m.at(0, 0) = Form::parse("x0", 3);
    m.at(0, 1) = Form::parse("x1", 3);
    m.at(1, 0) = Form::parse("x2", 3);
    m.at(1, 1) = Form::parse("x0", 3);

    RatMatrix v = m.eval(ProjPoint({1, 2, 3}));
    CHECK(v.at(0, 1) == Rat(2));
    CHECK(v.at(1, 0) == Rat(3));

    FormMatrix sq = m * m;
    CHECK(sq.at(0, 0) == Form::parse("x0^2 + x1*x2", 3));
    CHECK(m.transpose().at(0, 1) == Form::parse("x2", 3));
}

TEST_CASE("symbolic_determinant_and_minors") {
    FormMatrix m(2, 2, 3);
    m.at(0, 0) = Form::parse("x0", 3);
    m.at(0, 1) = Form::parse("x1", 3);
    m.at(1, 0) = Form::parse("x2", 3);
    m.at(1, 1) = Form::parse("x0", 3);
    CHECK(form_det(m) == Form::parse("x0^2 - x1*x2", 3));

    FormMatrix r(2, 3, 3);
    for (int j = 0; j < 3; ++j) {
        r.at(0, j) = Form::variable(3, j);
        r.at(1, j) = Form::variable(3, j); // duplicated row: every 2-minor vanishes
    }
    auto minors = form_minors(r, 2);
    CHECK(minors.size() == 3);
    CHECK(minors_vanish(r, 2));
    CHECK_FALSE(minors_vanish(m, 2));
}

TEST_CASE("named_case_presentations_validate_and_match_spec_chern") {
    Rng rng(404);
    for (const CatalogCase& c : catalog()) {
        if (!c.spec.presentable()) continue;
        FreePresentation p = expand_to_presentation(c.spec);
        CHECK_NOTHROW(validate_presentation(p, rng, 12));
        CHECK(p.rank() == 2);
        CHECK(p.total_chern() == c.spec.total_chern());
        CHECK(p.chern().c1 == Int(3));
    }
}

TEST_CASE("line_sum_presentation_has_no_relations") {
    FreePresentation p = line_sum_presentation(2, {1, 2});
    CHECK(p.f1.empty());
    CHECK(p.f0 == std::vector<int>{1, 2});
    CHECK(p.rank() == 2);
    CHECK(p.total_chern() == chern_line_sum(2, {1, 2}));
    CHECK_FALSE(p.length_two());
}

TEST_CASE("twisting_shifts_chern_data_consistently") {
    FreePresentation p = expand_to_presentation(catalog_case("4a").spec);
    for (int k = -2; k <= 2; ++k) {
        FreePresentation q = p.twist(k);
        CHECK(q.total_chern() == chern_twist(p.total_chern(), p.rank(), k));
        CHECK(q.chern().c1 == Int(3 + 2 * k));
    }
}

TEST_CASE("direct_sum_multiplies_total_chern_and_adds_rank") {
    FreePresentation a = expand_to_presentation(catalog_case("4a").spec);
    FreePresentation b = line_sum_presentation(2, {0, 1});
    FreePresentation s = direct_sum(a, b);
    CHECK(s.rank() == a.rank() + b.rank());
    CHECK(s.total_chern() == a.total_chern() * b.total_chern());
    Rng rng(405);
    CHECK_NOTHROW(validate_presentation(s, rng, 10));
}

TEST_CASE("minimalize_strips_padded_unit_entries") {
    FreePresentation p = expand_to_presentation(catalog_case("4b").spec);

    // pad with a redundant O -> O identity summand
    FreePresentation padded = p;
    padded.f1.push_back(0);
    padded.f0.push_back(0);
    FormMatrix a1(static_cast<int>(padded.f0.size()), static_cast<int>(padded.f1.size()), 3);
    for (int i = 0; i < p.a1.rows(); ++i)
        for (int j = 0; j < p.a1.cols(); ++j) a1.at(i, j) = p.a1.at(i, j);
    a1.at(a1.rows() - 1, a1.cols() - 1) = Form::constant(3, Rat(1));
    padded.a1 = a1;
    FormMatrix a2(a1.cols(), static_cast<int>(p.f2.size()), 3);
    for (int i = 0; i < p.a2.rows(); ++i)
        for (int j = 0; j < p.a2.cols(); ++j) a2.at(i, j) = p.a2.at(i, j);
    padded.a2 = a2;

    FreePresentation m = minimalize(padded);
    CHECK(m.f0.size() == p.f0.size());
    CHECK(m.f1.size() == p.f1.size());
    CHECK(m.total_chern() == p.total_chern());

    // already-minimal input is a fixed point up to shape
    FreePresentation mm = minimalize(m);
    CHECK(mm.f0.size() == m.f0.size());
    CHECK(mm.f1.size() == m.f1.size());

    // the padded and original presentations present the same sheaf
    CohomologyTable tp = cohomology_table(p, -3, 3);
    CohomologyTable tq = cohomology_table(padded, -3, 3);
    for (int t = -3; t <= 3; ++t) CHECK(tp.at(t) == tq.at(t));
}

TEST_CASE("alternate_presentations_share_cohomology_with_catalog") {
    for (const std::string id : {"4b", "4c", "4d"}) {
        FreePresentation alt = alternate_presentation(id);
        FreePresentation ref = expand_to_presentation(catalog_case(id).spec);
        CHECK(alt.total_chern() == ref.total_chern());
        CohomologyTable ta = cohomology_table(alt, -4, 4);
        CohomologyTable tr = cohomology_table(ref, -4, 4);
        for (int m = -4; m <= 4; ++m) CHECK(ta.at(m) == tr.at(m));
    }
}

TEST_CASE("restriction_to_a_line_lands_on_p1_with_same_twists") {
    FreePresentation p = expand_to_presentation(catalog_case("3").spec);
    ProjPoint P({1, 0, 0}), Q({0, 1, 1});
    FreePresentation r = restrict_presentation_to_line(p, P, Q);
    CHECK(r.n == 1);
    CHECK(r.f0 == p.f0);
    CHECK(r.f1 == p.f1);
    CHECK(r.a1.num_vars() == 2);
    CHECK((r.a1 * r.a2).is_zero());
    CHECK_THROWS_AS(restrict_presentation_to_line(p, P, ProjPoint({2, 0, 0})), VglabError);
}

TEST_CASE("no_common_zero_certificates_are_positive_only") {
    std::vector<Form> coords = {Form::parse("x0", 3), Form::parse("x1", 3), Form::parse("x2", 3)};
    CHECK(no_common_zero_certificate(coords, 2));
    std::vector<Form> partial = {Form::parse("x0", 3), Form::parse("x1", 3)};
    CHECK_FALSE(no_common_zero_certificate(partial, 2)); // (0:0:1) is a common zero
}

TEST_CASE("local_freeness_certificate_on_a_small_cokernel") {
    Rng rng(406);
    FreePresentation p = steiner_presentation(4, rng);
    CHECK(p.rank() == 2);
    CHECK(certify_locally_free(p));

    // cokernel of (x0, x1)^T drops rank along a line; the certificate must not pass
    FreePresentation bad;
    bad.n = 2;
    bad.f1 = {-1};
    bad.f0 = {0, 0};
    bad.a1 = FormMatrix(2, 1, 3);
    bad.a1.at(0, 0) = Form::parse("x0", 3);
    bad.a1.at(1, 0) = Form::parse("x1", 3);
    bad.a2 = FormMatrix(1, 0, 3);
    CHECK_FALSE(certify_locally_free(bad));
}
