#include "doctest.h"

#include "vglab/form.hpp"

using namespace vglab;

TEST_CASE("monomial_basis_is_graded_lex_descending") {
    auto basis = monomial_basis(2, 2); // degree-2 monomials in x0,x1,x2
    REQUIRE(basis.size() == 6);
    CHECK(basis[0] == Expo{2, 0, 0});
    CHECK(basis[1] == Expo{1, 1, 0});
    CHECK(basis[2] == Expo{1, 0, 1});
    CHECK(basis[3] == Expo{0, 2, 0});
    CHECK(basis[4] == Expo{0, 1, 1});
    CHECK(basis[5] == Expo{0, 0, 2});
    for (size_t k = 0; k < basis.size(); ++k)
        CHECK(monomial_index(basis, basis[k]) == static_cast<int>(k));
    CHECK_THROWS_AS(monomial_index(basis, Expo{1, 1, 1}), VglabError);
}

TEST_CASE("form_parse_and_str_round_trip") {
    Form f = Form::parse("x0^2 - 2*x0*x1 + x1^2", 2);
    CHECK(f.degree() == 2);
    CHECK(f.str() == "x0^2 - 2*x0*x1 + x1^2");
    CHECK(Form::parse(f.str(), 2) == f);

    Form g = Form::parse("1/3*x0*x1*x2 - x2^3", 3);
    CHECK(Form::parse(g.str(), 3) == g);
    CHECK(g.coeff(Expo{1, 1, 1}) == Rat(1, 3));

    Rng rng(7);
    for (int t = 0; t < 40; ++t) {
        Form r = random_form(rng, 3, 3);
        CHECK(Form::parse(r.str(), 3) == r);
    }
}

TEST_CASE("form_parse_rejects_malformed_and_inhomogeneous_input") {
    CHECK_THROWS_AS(Form::parse("x0 + x1^2", 2), VglabError); // mixed degrees
    CHECK_THROWS_AS(Form::parse("x5", 2), VglabError);        // variable out of range
    CHECK_THROWS_AS(Form::parse("x0 +", 2), ParseError);
    CHECK_THROWS_AS(Form::parse("x0**2", 2), ParseError);
}

TEST_CASE("zero_form_keeps_recorded_degree") {
    Form z(3, 4);
    CHECK(z.is_zero());
    CHECK(z.degree() == 4);
    CHECK(z.str() == "0");
    CHECK(Form::parse("0", 3).is_zero());

    Form f = Form::parse("x0^2", 3);
    CHECK((f - f).is_zero());
}

TEST_CASE("form_product_adds_degrees_and_matches_expansion") {
    Form a = Form::parse("x0 + x1", 2);
    Form b = Form::parse("x0 - x1", 2);
    CHECK(a * b == Form::parse("x0^2 - x1^2", 2));
    CHECK((a * b).degree() == 2);

    Form c = Form::parse("x0 + 2*x1 - x2", 3);
    CHECK((c * c * c).degree() == 3);
}

TEST_CASE("form_eval_agrees_with_direct_substitution") {
    Form f = Form::parse("x0^3 - 2*x1*x2^2", 3);
    CHECK(f.eval({Rat(1), Rat(1), Rat(1)}) == Rat(-1));
    CHECK(f.eval(ProjPoint({2, 1, -1})) == Rat(6));
}

TEST_CASE("euler_relation_for_homogeneous_forms") {
    // sum_i x_i df/dx_i = deg(f) * f
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        int d = 1 + t % 4;
        Form f = random_form(rng, 3, d);
        Form acc(3, d);
        for (int i = 0; i < 3; ++i) acc = acc + Form::variable(3, i) * f.partial(i);
        CHECK(acc == Rat(d) * f);
    }
}

TEST_CASE("partial_derivative_known_values") {
    Form f = Form::parse("x0^2*x1 + x2^3", 3);
    CHECK(f.partial(0) == Form::parse("2*x0*x1", 3));
    CHECK(f.partial(1) == Form::parse("x0^2", 3));
    CHECK(f.partial(2) == Form::parse("3*x2^2", 3));
    CHECK(f.partial(0).degree() == 2);
}

TEST_CASE("substitute_restricts_to_parametrized_line") {
    // x0 -> s, x1 -> t, x2 -> s + t turns x0*x2 - x1^2 into s^2 + s*t - t^2
    Form f = Form::parse("x0*x2 - x1^2", 3);
    std::vector<Form> images = {Form::variable(2, 0), Form::variable(2, 1),
                                Form::parse("x0 + x1", 2)};
    CHECK(f.substitute(images) == Form::parse("x0^2 + x0*x1 - x1^2", 2));
}

TEST_CASE("leading_term_follows_canonical_order") {
    Form f = Form::parse("3*x1^2 - x0*x2", 3);
    auto [e, c] = f.leading_term();
    CHECK(e == Expo{1, 0, 1});
    CHECK(c == Rat(-1));
    CHECK_THROWS_AS(Form(2, 1).leading_term(), VglabError);
}

TEST_CASE("joint_content_scale_clears_denominators") {
    Form f = Form::parse("1/2*x0 + 1/3*x1", 2);
    Form g = Form::parse("1/6*x0", 2);
    std::vector<const Form*> fam = {&f, &g};
    Rat lambda = joint_content_scale(fam);
    CHECK(lambda == Rat(6));
    std::vector<const Form*> none = {};
    CHECK(joint_content_scale(none) == Rat(1));
}
