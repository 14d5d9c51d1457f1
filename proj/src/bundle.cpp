#include "vglab/bundle.hpp"

#include <algorithm>

namespace vglab {

namespace {

Form x2(int i) { return Form::variable(3, i); }

/* Rows spanning the constant-coefficient linear syzygies of (x0,x1,x2):
 * every linear row vector L with L.(x0,x1,x2)^T = 0 is a constant
 * combination of these three. */
FormMatrix euler_syzygy_rows() {
    FormMatrix g(3, 3, 3);
    g.at(0, 0) = x2(1);
    g.at(0, 1) = -x2(0);
    g.at(1, 0) = x2(2);
    g.at(1, 2) = -x2(0);
    g.at(2, 1) = x2(2);
    g.at(2, 2) = -x2(1);
    return g;
}

FormMatrix euler_column(int num_vars) {
    FormMatrix u(num_vars, 1, num_vars);
    for (int i = 0; i < num_vars; ++i) u.at(i, 0) = Form::variable(num_vars, i);
    return u;
}

// generic constant matrix times the syzygy rows: a generic linear matrix killing the Euler column
FormMatrix generic_syzygy_combinations(int rows, Rng& rng) {
    FormMatrix g = euler_syzygy_rows();
    FormMatrix m(rows, 3, 3);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Form::constant(3, Rat(rng.int_in(-9, 9)));
    return m * g;
}

void check_built(FreePresentation& p, std::uint64_t seed) {
    Rng check(seed ^ 0xabcdef);
    validate_presentation(p, check, 25);
}

} // namespace

FreePresentation line_sum_presentation(int n, const std::vector<int>& degrees) {
    if (degrees.empty()) throw VglabError("line sum needs at least one summand");
    FreePresentation p;
    p.n = n;
    p.f0 = degrees;
    p.a1 = FormMatrix(static_cast<int>(degrees.size()), 0, n + 1);
    p.a2 = FormMatrix(0, 0, n + 1);
    return p;
}

FreePresentation cotangent_twist_presentation(int k) {
    FreePresentation p;
    p.n = 2;
    p.f1 = {k - 3};
    p.f0 = {k - 2, k - 2, k - 2};
    p.a1 = euler_column(3);
    p.a2 = FormMatrix(1, 0, 3);
    return p;
}

FreePresentation steiner_presentation(int rows, Rng& rng) {
    if (rows < 3) throw VglabError("steiner presentation needs at least 3 generators");
    FreePresentation p;
    p.n = 2;
    p.f1.assign(rows - 2, -1);
    p.f0.assign(rows, 0);
    p.a1 = FormMatrix(rows, rows - 2, 3);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows - 2; ++j) p.a1.at(i, j) = random_form(rng, 3, 1);
    p.a2 = FormMatrix(rows - 2, 0, 3);
    return p;
}

FreePresentation type3_representative(std::uint64_t seed) {
    Rng rng(seed);
    FreePresentation p;
    p.n = 2;
    p.f1 = {-3};
    p.f0 = {-2, 1, 1};
    p.a1 = FormMatrix(3, 1, 3);
    p.a1.at(0, 0) = random_form(rng, 3, 1);
    p.a1.at(1, 0) = random_form(rng, 3, 4);
    p.a1.at(2, 0) = random_form(rng, 3, 4);
    p.a2 = FormMatrix(1, 0, 3);
    check_built(p, seed);
    return p;
}

FreePresentation alternate_presentation(const std::string& case_id) {
    FreePresentation p;
    p.n = 2;
    if (case_id == "4b") {
        // kernel Omega(1) + O(-2), cover O(-1)^3 + O(-2), mapping cone over O(-2)
        Rng rng(107);
        p.f2 = {-2};
        p.f1 = {-1, -1, -1, -2};
        p.f0 = {0, 0, 0, 0, 0};
        FormMatrix lin = generic_syzygy_combinations(5, rng);
        p.a1 = FormMatrix(5, 4, 3);
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 3; ++j) p.a1.at(i, j) = lin.at(i, j);
            p.a1.at(i, 3) = random_form(rng, 3, 2);
        }
        p.a2 = FormMatrix(4, 1, 3);
        for (int i = 0; i < 3; ++i) p.a2.at(i, 0) = x2(i);
        check_built(p, 107);
        return p;
    }
    if (case_id == "4c") {
        // kernel Omega(1) + O(-1)^2
        Rng rng(108);
        p.f2 = {-2};
        p.f1 = {-1, -1, -1, -1, -1};
        p.f0 = {0, 0, 0, 0, 0, 0};
        FormMatrix lin = generic_syzygy_combinations(6, rng);
        p.a1 = FormMatrix(6, 5, 3);
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 3; ++j) p.a1.at(i, j) = lin.at(i, j);
            p.a1.at(i, 3) = random_form(rng, 3, 1);
            p.a1.at(i, 4) = random_form(rng, 3, 1);
        }
        p.a2 = FormMatrix(5, 1, 3);
        for (int i = 0; i < 3; ++i) p.a2.at(i, 0) = x2(i);
        check_built(p, 108);
        return p;
    }
    if (case_id == "4d") {
        // kernel Omega(1)^2 + O(-1): two cotangent covers, block-diagonal cone
        Rng rng(109);
        p.f2 = {-2, -2};
        p.f1 = {-1, -1, -1, -1, -1, -1, -1};
        p.f0 = {0, 0, 0, 0, 0, 0, 0};
        FormMatrix lin1 = generic_syzygy_combinations(7, rng);
        FormMatrix lin2 = generic_syzygy_combinations(7, rng);
        p.a1 = FormMatrix(7, 7, 3);
        for (int i = 0; i < 7; ++i) {
            for (int j = 0; j < 3; ++j) {
                p.a1.at(i, j) = lin1.at(i, j);
                p.a1.at(i, 3 + j) = lin2.at(i, j);
            }
            p.a1.at(i, 6) = random_form(rng, 3, 1);
        }
        p.a2 = FormMatrix(7, 2, 3);
        for (int i = 0; i < 3; ++i) {
            p.a2.at(i, 0) = x2(i);
            p.a2.at(3 + i, 1) = x2(i);
        }
        check_built(p, 109);
        return p;
    }
    throw UnknownCase("no alternate expansion for case '" + case_id + "'");
}

BundleSpec BundleSpec::line_sum(int n, const std::vector<int>& degrees) {
    BundleSpec s;
    s.n = n;
    Summand a;
    a.kind = SummandKind::LineSum;
    a.degrees = degrees;
    s.summands.push_back(std::move(a));
    return s;
}

BundleSpec BundleSpec::omega_twist(int k) {
    BundleSpec s;
    s.n = 2;
    Summand a;
    a.kind = SummandKind::OmegaTwist;
    a.twist = k;
    s.summands.push_back(std::move(a));
    return s;
}

BundleSpec BundleSpec::sym2_omega_twist(int k) {
    BundleSpec s;
    s.n = 2;
    Summand a;
    a.kind = SummandKind::Sym2OmegaTwist;
    a.twist = k;
    s.summands.push_back(std::move(a));
    return s;
}

BundleSpec BundleSpec::from_presentation(const FreePresentation& p) {
    BundleSpec s;
    s.n = p.n;
    Summand a;
    a.kind = SummandKind::Coker;
    a.pres = p;
    s.summands.push_back(std::move(a));
    return s;
}

BundleSpec BundleSpec::named(const std::string& case_id, int n) {
    BundleSpec s;
    s.n = n;
    Summand a;
    a.kind = SummandKind::Named;
    a.case_id = case_id;
    s.summands.push_back(std::move(a));
    return s;
}

BundleSpec& BundleSpec::add(const BundleSpec& other) {
    if (other.n != n) throw VglabError("bundle sum: ambient spaces differ");
    summands.insert(summands.end(), other.summands.begin(), other.summands.end());
    return *this;
}

namespace {

int summand_rank(const Summand& s, int n) {
    switch (s.kind) {
        case SummandKind::LineSum:
            return static_cast<int>(s.degrees.size());
        case SummandKind::OmegaTwist:
            if (n != 2) throw VglabError("cotangent summand only supported on P^2");
            return 2;
        case SummandKind::Sym2OmegaTwist:
            if (n != 2) throw VglabError("sym2 cotangent summand only supported on P^2");
            return 3;
        case SummandKind::Coker:
            return s.pres.rank();
        case SummandKind::Named:
            return catalog_case(s.case_id, n).spec.rank();
    }
    throw VglabError("unreachable summand kind");
}

ChowClass summand_chern(const Summand& s, int n) {
    switch (s.kind) {
        case SummandKind::LineSum:
            return chern_line_sum(n, s.degrees);
        case SummandKind::OmegaTwist:
            if (n != 2) throw VglabError("cotangent summand only supported on P^2");
            return chern_omega_twist(2, s.twist);
        case SummandKind::Sym2OmegaTwist:
            if (n != 2) throw VglabError("sym2 cotangent summand only supported on P^2");
            return chern_twist(chern_sym2_omega1_p2(), 3, s.twist - 1);
        case SummandKind::Coker:
            return s.pres.total_chern();
        case SummandKind::Named:
            return catalog_case(s.case_id, n).spec.total_chern();
    }
    throw VglabError("unreachable summand kind");
}

} // namespace

int BundleSpec::rank() const {
    if (summands.empty()) throw VglabError("empty bundle spec");
    int r = 0;
    for (const Summand& s : summands) r += summand_rank(s, n);
    return r;
}

ChowClass BundleSpec::total_chern() const {
    if (summands.empty()) throw VglabError("empty bundle spec");
    ChowClass c = ChowClass::one(n);
    for (const Summand& s : summands) c = c * summand_chern(s, n);
    return c;
}

bool BundleSpec::presentable() const {
    for (const Summand& s : summands) {
        if (s.kind == SummandKind::Sym2OmegaTwist) return false;
        if (s.kind == SummandKind::Named && !catalog_case(s.case_id, n).spec.presentable())
            return false;
    }
    return true;
}

std::string BundleSpec::str() const {
    std::string out;
    for (const Summand& s : summands) {
        if (!out.empty()) out += "+";
        switch (s.kind) {
            case SummandKind::LineSum:
                for (size_t i = 0; i < s.degrees.size(); ++i) {
                    if (i) out += "+";
                    out += "O(" + std::to_string(s.degrees[i]) + ")";
                }
                break;
            case SummandKind::OmegaTwist:
                out += "Omega(" + std::to_string(s.twist) + ")";
                break;
            case SummandKind::Sym2OmegaTwist:
                out += "Sym2Omega(" + std::to_string(s.twist) + ")";
                break;
            case SummandKind::Coker: {
                out += "coker{F1=[";
                for (size_t i = 0; i < s.pres.f1.size(); ++i)
                    out += (i ? "," : "") + std::to_string(s.pres.f1[i]);
                out += "]; F0=[";
                for (size_t i = 0; i < s.pres.f0.size(); ++i)
                    out += (i ? "," : "") + std::to_string(s.pres.f0[i]);
                out += "]}";
                break;
            }
            case SummandKind::Named:
                out += "case:" + s.case_id;
                break;
        }
    }
    return out;
}

FreePresentation expand_to_presentation(const BundleSpec& spec) {
    if (spec.summands.empty()) throw VglabError("empty bundle spec");
    std::vector<FreePresentation> parts;
    for (const Summand& s : spec.summands) {
        switch (s.kind) {
            case SummandKind::LineSum:
                parts.push_back(line_sum_presentation(spec.n, s.degrees));
                break;
            case SummandKind::OmegaTwist:
                if (spec.n != 2) throw VglabError("cotangent summand only supported on P^2");
                parts.push_back(cotangent_twist_presentation(s.twist));
                break;
            case SummandKind::Sym2OmegaTwist:
                throw NotPresentable("sym2 cotangent summands carry Chern data only");
            case SummandKind::Coker:
                parts.push_back(s.pres);
                break;
            case SummandKind::Named:
                parts.push_back(expand_to_presentation(catalog_case(s.case_id, spec.n).spec));
                break;
        }
    }
    FreePresentation out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, parts[i]);
    return out;
}

namespace {

CatalogCase split_case(const std::string& id, int n, const std::vector<int>& degrees,
                       const std::string& summary) {
    CatalogCase c;
    c.id = id;
    c.n = n;
    c.seed = 0;
    c.summary = summary;
    c.spec = BundleSpec::line_sum(n, degrees);
    return c;
}

CatalogCase make_case_2() {
    CatalogCase c;
    c.id = "2";
    c.n = 2;
    c.seed = 0;
    c.summary = "nonsplit extension with c2 = 3, unstable (h0(E(-2)) = 1)";
    FreePresentation p;
    p.n = 2;
    p.f1 = {-1};
    p.f0 = {2, 0, 0};
    p.a1 = FormMatrix(3, 1, 3);
    Expo e(3, 0);
    e[2] = 3;
    p.a1.at(0, 0) = Form::monomial(3, e, Rat(1)); // cubic not vanishing at (0:0:1)
    p.a1.at(1, 0) = x2(1);
    p.a1.at(2, 0) = -x2(0);
    p.a2 = FormMatrix(1, 0, 3);
    check_built(p, 2);
    c.spec = BundleSpec::from_presentation(p);
    return c;
}

CatalogCase make_case_3() {
    CatalogCase c;
    c.id = "3";
    c.n = 2;
    c.seed = 0;
    c.summary = "twisted cotangent bundle Omega(3), the tangent bundle";
    c.spec = BundleSpec::omega_twist(3);
    return c;
}

CatalogCase make_case_4a() {
    CatalogCase c;
    c.id = "4a";
    c.n = 2;
    c.seed = 101;
    c.summary = "generic Steiner bundle, c2 = 6";
    Rng rng(c.seed);
    FreePresentation p = steiner_presentation(5, rng);
    check_built(p, c.seed);
    c.spec = BundleSpec::from_presentation(p);
    return c;
}

CatalogCase make_case_4b() {
    CatalogCase c;
    c.id = "4b";
    c.n = 2;
    c.seed = 102;
    c.summary = "c2 = 6 bundle with h0(E(-1)) = 1";
    Rng rng(c.seed);
    FreePresentation p;
    p.n = 2;
    p.f1 = {-2};
    p.f0 = {0, 0, 1};
    p.a1 = FormMatrix(3, 1, 3);
    Form q1 = random_form(rng, 3, 2);
    Form q2 = random_form(rng, 3, 2);
    Form cu = random_form(rng, 3, 3);
    if (!no_common_zero_certificate({q1, q2, cu}, 2))
        throw VglabError("case 4b seed draws entries with a common zero");
    p.a1.at(0, 0) = q1;
    p.a1.at(1, 0) = q2;
    p.a1.at(2, 0) = cu;
    p.a2 = FormMatrix(1, 0, 3);
    check_built(p, c.seed);
    c.spec = BundleSpec::from_presentation(p);
    return c;
}

CatalogCase make_case_4c() {
    CatalogCase c;
    c.id = "4c";
    c.n = 2;
    c.seed = 103;
    c.summary = "generic c2 = 5 bundle";
    Rng rng(c.seed);
    FreePresentation p;
    p.n = 2;
    p.f1 = {-1, -1};
    p.f0 = {0, 0, 0, 1};
    p.a1 = FormMatrix(4, 2, 3);
    for (int j = 0; j < 2; ++j) {
        for (int i = 0; i < 3; ++i) p.a1.at(i, j) = random_form(rng, 3, 1);
        p.a1.at(3, j) = random_form(rng, 3, 2);
    }
    p.a2 = FormMatrix(2, 0, 3);
    check_built(p, c.seed);
    c.spec = BundleSpec::from_presentation(p);
    return c;
}

CatalogCase make_case_4d() {
    CatalogCase c;
    c.id = "4d";
    c.n = 2;
    c.seed = 104;
    c.summary = "generic c2 = 4 bundle";
    Rng rng(c.seed);
    FreePresentation p;
    p.n = 2;
    p.f1 = {-1};
    p.f0 = {0, 1, 1};
    p.a1 = FormMatrix(3, 1, 3);
    p.a1.at(0, 0) = random_form(rng, 3, 1);
    p.a1.at(1, 0) = random_form(rng, 3, 2);
    p.a1.at(2, 0) = random_form(rng, 3, 2);
    p.a2 = FormMatrix(1, 0, 3);
    check_built(p, c.seed);
    c.spec = BundleSpec::from_presentation(p);
    return c;
}

CatalogCase make_case_neg33() {
    CatalogCase c;
    c.id = "neg-3.3";
    c.n = 2;
    c.seed = 105;
    c.embedding_expected = false;
    c.summary = "stable c2 = 7 bundle; its 4 sections map to Gr(1,3), not an embedding";
    Rng rng(c.seed);
    FreePresentation p;
    p.n = 2;
    p.f1 = {-1, -2};
    p.f0 = {0, 0, 0, 0};
    p.a1 = FormMatrix(4, 2, 3);
    for (int i = 0; i < 3; ++i) p.a1.at(i, 0) = x2(i);
    for (int i = 0; i < 4; ++i) p.a1.at(i, 1) = random_form(rng, 3, 2);
    p.a2 = FormMatrix(2, 0, 3);
    check_built(p, c.seed);
    c.spec = BundleSpec::from_presentation(p);
    return c;
}

} // namespace

const std::vector<CatalogCase>& catalog() {
    static const std::vector<CatalogCase> cases = [] {
        std::vector<CatalogCase> v;
        for (int n : {2, 3, 4}) {
            v.push_back(split_case("1a", n, {0, 3}, "split sum O + O(3)"));
            v.push_back(split_case("1b", n, {1, 2}, "split sum O(1) + O(2)"));
        }
        v.push_back(make_case_2());
        v.push_back(make_case_3());
        v.push_back(make_case_4a());
        v.push_back(make_case_4b());
        v.push_back(make_case_4c());
        v.push_back(make_case_4d());
        v.push_back(make_case_neg33());
        std::stable_sort(v.begin(), v.end(), [](const CatalogCase& a, const CatalogCase& b) {
            if (a.id != b.id) return a.id < b.id;
            return a.n < b.n;
        });
        return v;
    }();
    return cases;
}

std::string case_key(const std::string& id, int n) { return id + "@P" + std::to_string(n); }

const CatalogCase& catalog_case(const std::string& id, int n) {
    for (const CatalogCase& c : catalog())
        if (c.id == id && c.n == n) return c;
    throw UnknownCase("unknown case '" + case_key(id, n) + "'");
}

const CatalogCase& catalog_case(const std::string& id_with_optional_ambient) {
    const std::string& s = id_with_optional_ambient;
    auto at = s.find('@');
    if (at == std::string::npos) return catalog_case(s, 2);
    std::string id = s.substr(0, at);
    std::string amb = s.substr(at + 1);
    if (amb.size() < 2 || (amb[0] != 'P' && amb[0] != 'p'))
        throw ParseError("bad ambient tag '" + amb + "', expected P<dim>");
    int n = 0;
    for (size_t i = 1; i < amb.size(); ++i) {
        if (!isdigit(static_cast<unsigned char>(amb[i])))
            throw ParseError("bad ambient tag '" + amb + "', expected P<dim>");
        n = n * 10 + (amb[i] - '0');
    }
    return catalog_case(id, n);
}

} // namespace vglab
