#include "doctest.h"

#include <sstream>

#include "vglab/bundle.hpp"
#include "vglab/plucker.hpp"

using namespace vglab;

namespace {

// the two maps agree up to one global nonzero rational scale
bool equal_up_to_scale(const PluckerMap& a, const PluckerMap& b) {
    if (a.n != b.n || a.N != b.N || a.d != b.d) return false;
    if (a.p.size() != b.p.size()) return false;
    Rat scale;
    bool have = false;
    for (size_t k = 0; k < a.p.size(); ++k) {
        if (a.p[k].is_zero() != b.p[k].is_zero()) return false;
        if (a.p[k].is_zero()) continue;
        Rat s = a.p[k].leading_term().second / b.p[k].leading_term().second;
        if (!have) {
            scale = s;
            have = true;
        }
        if (a.p[k] != scale * b.p[k]) return false;
    }
    return true;
}

FreePresentation cyclic_net_cokernel() {
    // three cubics invariant under the coordinate 3-cycle; no common zero
    FreePresentation p;
    p.n = 2;
    p.f1 = {-3};
    p.f0 = {0, 0, 0};
    p.a1 = FormMatrix(3, 1, 3);
    p.a1.at(0, 0) = Form::parse("x0^3 + x1^3 + x2^3", 3);
    p.a1.at(1, 0) = Form::parse("x0^2*x1 + x1^2*x2 + x2^2*x0", 3);
    p.a1.at(2, 0) = Form::parse("x0*x1*x2", 3);
    p.a2 = FormMatrix(1, 0, 3);
    return p;
}

} // namespace

TEST_CASE("pair_indexing_is_a_bijection") {
    // indices run over 0 <= i < j <= N, one slot per Plucker coordinate of Gr(1,N)
    for (int N = 1; N <= 8; ++N) {
        int count = 0;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                int k = pair_index(i, j, N);
                CHECK(k == count);
                CHECK(pair_unindex(k, N) == std::pair<int, int>{i, j});
                ++count;
            }
        CHECK(count == N * (N + 1) / 2);
    }
}

TEST_CASE("plucker_of_line_gives_primitive_minors") {
    LineInPN line;
    line.u = {Rat(1), Rat(0), Rat(2)};
    line.v = {Rat(0), Rat(1), Rat(-1)};
    auto p = plucker_of_line(line);
    REQUIRE(p.size() == 3); // three section slots span Gr(1,2)
    CHECK(p[size_t(pair_index(0, 1, 2))] == Rat(1));
    CHECK(p[size_t(pair_index(0, 2, 2))] == Rat(-1));
    CHECK(p[size_t(pair_index(1, 2, 2))] == Rat(-2));
}

TEST_CASE("split_bundle_map_is_the_join_of_two_veroneses") {
    for (const std::string id : {"1a", "1b"}) {
        for (int n = 2; n <= 3; ++n) {
            BundleSpec spec = catalog_case(id, n).spec;
            PluckerMap sym = plucker_symbolic_det(spec);
            CHECK(sym.d == 3);
            CHECK(verify_plucker_relations(sym));
            int a = id == "1a" ? 0 : 1;
            PluckerMap join = join_map(n, a, 3);
            CHECK(equal_up_to_scale(sym, join));
        }
    }
}

TEST_CASE("symbolic_and_interpolated_coordinates_agree") {
    Rng rng(314);
    for (const std::string id : {"4a", "3"}) {
        FreePresentation p = expand_to_presentation(catalog_case(id).spec);
        SectionBasis b = h0_basis(p, 0);
        PluckerMap sym = plucker_symbolic_det(p, b);
        PluckerMap fit = plucker_interpolated(p, b, 3, rng);
        CHECK(equal_up_to_scale(sym, fit));
    }
}

TEST_CASE("quotient_lines_evaluate_the_symbolic_map") {
    FreePresentation p = expand_to_presentation(catalog_case("4b").spec);
    SectionBasis b = h0_basis(p, 0);
    PluckerMap sym = plucker_symbolic_det(p, b);
    Rng rng(315);
    for (int t = 0; t < 25; ++t) {
        ProjPoint x = random_point(rng, 2);
        LineInPN line = quotient_line_at(p, b, x);
        CHECK(projectively_equal(plucker_of_line(line), eval_map(sym, x)));
    }
}

TEST_CASE("coordinates_of_named_cases_are_cubic_and_satisfy_relations") {
    for (const std::string key : {"2", "3", "4c", "4d"}) {
        PluckerMap m = plucker_symbolic_det(catalog_case(key).spec);
        CHECK(m.d == 3);
        bool any = false;
        for (const Form& f : m.p) {
            if (f.is_zero()) continue;
            any = true;
            CHECK(f.degree() == 3);
        }
        CHECK(any);
        CHECK(verify_plucker_relations(m));
    }
}

TEST_CASE("perturbing_one_coordinate_breaks_the_relations") {
    PluckerMap m = plucker_symbolic_det(catalog_case("4a").spec);
    REQUIRE(verify_plucker_relations(m));
    PluckerMap bad = m;
    bad.p[0] = bad.p[0] + Form::parse("x0^3", 3);
    CHECK_FALSE(verify_plucker_relations(bad));
}

TEST_CASE("interpolation_at_the_wrong_degree_is_rejected") {
    // a degree-2 fiber map admits no degree-3 coordinate representation
    FreePresentation p = line_sum_presentation(2, {0, 2});
    SectionBasis b = h0_basis(p, 0);
    Rng rng(316);
    CHECK_THROWS_AS(plucker_interpolated(p, b, 3, rng), InterpolationInconsistent);
}

TEST_CASE("three_section_cokernel_fails_injectivity_on_an_orbit_pair") {
    FreePresentation p = cyclic_net_cokernel();
    Rng rng(317);
    validate_presentation(p, rng, 10);
    CHECK(h0(p, 0) == Int(3));

    PluckerMap m = plucker_symbolic_det(p);
    CHECK(m.N == 2);
    CHECK(verify_plucker_relations(m));

    // the coordinate 3-cycle fixes every coordinate form, so orbits collide
    ProjPoint x({2, -1, 1}), sx({-1, 1, 2});
    CHECK(x != sx);
    CHECK(projectively_equal(eval_map(m, x), eval_map(m, sx)));

    EmbeddingReport rep = check_embedding(m, 400, 2);
    CHECK(rep.base_point_free);
    CHECK_FALSE(rep.injective);
    REQUIRE(rep.collision.has_value());
    CHECK(projectively_equal(eval_map(m, rep.collision->first), eval_map(m, rep.collision->second)));
    CHECK(rep.collision->first != rep.collision->second);
}

TEST_CASE("embedding_checks_pass_for_an_embedding_case") {
    PluckerMap m = plucker_symbolic_det(catalog_case("4d").spec);
    EmbeddingReport rep = check_embedding(m, 60, 2026);
    CHECK(rep.ok());
    CHECK_FALSE(rep.base_point.has_value());
    CHECK_FALSE(rep.collision.has_value());
    CHECK_FALSE(rep.critical_point.has_value());
}

TEST_CASE("map_serialization_round_trip") {
    PluckerMap m = plucker_symbolic_det(catalog_case("4a").spec);
    std::ostringstream out;
    write_plucker(m, out);
    std::istringstream in(out.str());
    PluckerMap back = read_plucker(in);
    CHECK(back.n == m.n);
    CHECK(back.N == m.N);
    CHECK(back.d == m.d);
    REQUIRE(back.p.size() == m.p.size());
    for (size_t k = 0; k < m.p.size(); ++k) CHECK(back.p[k] == m.p[k]);
}

TEST_CASE("projective_equality_ignores_scale_only") {
    std::vector<Rat> u = {Rat(1), Rat(2), Rat(0)};
    std::vector<Rat> v = {Rat(-2), Rat(-4), Rat(0)};
    std::vector<Rat> w = {Rat(1), Rat(2), Rat(1)};
    std::vector<Rat> z = {Rat(0), Rat(0), Rat(0)};
    CHECK(projectively_equal(u, v));
    CHECK_FALSE(projectively_equal(u, w));
    CHECK_FALSE(projectively_equal(u, z)); // the zero vector is not a point
}
