// Acceptance gate: one printed line per criterion, nonzero exit on any failure.
// Everything below is exact arithmetic; there are no tolerances to tune.

#include <algorithm>
#include <array>
#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vglab/curves.hpp"
#include "vglab/dsl.hpp"
#include "vglab/interpolate.hpp"
#include "vglab/report.hpp"

using namespace vglab;

namespace {

int failures = 0;

void criterion(int idx, const std::string& label, bool pass) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << label << "\n";
    if (!pass) ++failures;
}

void note(const std::string& what) { std::cout << "       " << what << "\n"; }

const CheckResult* find_check(const VerificationReport& r, const std::string& name) {
    for (const CheckResult& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool check_passed(const VerificationReport& r, const std::string& name) {
    const CheckResult* c = find_check(r, name);
    return c != nullptr && c->pass;
}

bool equal_up_to_scale(const PluckerMap& a, const PluckerMap& b) {
    if (a.n != b.n || a.N != b.N || a.d != b.d || a.p.size() != b.p.size()) return false;
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

ProjPoint cycle(const ProjPoint& x) {
    // coordinate 3-cycle x0 -> x1 -> x2 -> x0 acting on points
    std::vector<Int> c = {x[1], x[2], x[0]};
    return ProjPoint(c);
}

} // namespace

int main() {
    const std::uint64_t seed = 2026;
    const std::vector<std::string> run_keys = {"1a@P2", "1b@P2", "2@P2",  "3@P2",
                                               "4a@P2", "4b@P2", "4c@P2", "4d@P2",
                                               "1a@P3", "1b@P3", "1a@P4", "1b@P4"};
    std::map<std::string, VerificationReport> reports;

    // ---- criterion 1: the twelve verification runs --------------------------
    bool c1 = true;
    auto t0 = std::chrono::steady_clock::now();
    for (const std::string& key : run_keys) {
        reports.emplace(key, run_case(key, seed, 200));
        const VerificationReport& r = reports.at(key);
        bool case_ok = r.ok() && check_passed(r, "plucker-degree") &&
                       check_passed(r, "plucker-relations") &&
                       check_passed(r, "base-point-free") &&
                       check_passed(r, "injectivity") &&
                       check_passed(r, "immersion") && check_passed(r, "splitting-types");
        if (r.plucker.d != 3) case_ok = false;
        for (const auto& [st, count] : r.splitting_counts)
            if (!(st == SplittingType{0, 3} || st == SplittingType{1, 2})) case_ok = false;
        if (!case_ok) {
            note("case " + key + " failed its verification gates");
            c1 = false;
        }
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (elapsed >= 120.0) {
        note("twelve runs took " + std::to_string(elapsed) + " s");
        c1 = false;
    }
    criterion(1, "twelve case runs verify cubic coordinates, relations, embedding probes and "
                 "line splittings in time",
              c1);

    // the classification-forced negative case, used by later criteria
    reports.emplace("neg-3.3@P2", run_case("neg-3.3", seed, 200));

    // ---- criterion 2: section-count goldens ---------------------------------
    const std::map<std::string, long long> golden_h0 = {
        {"1a@P2", 11}, {"1b@P2", 9},  {"2@P2", 8},   {"3@P2", 8},
        {"4a@P2", 5},  {"4b@P2", 5},  {"4c@P2", 6},  {"4d@P2", 7},
        {"1a@P3", 21}, {"1b@P3", 14}, {"1a@P4", 36}, {"1b@P4", 20},
        {"neg-3.3@P2", 4}};
    bool c2 = true;
    for (const auto& [key, h] : golden_h0) {
        const VerificationReport& r = reports.at(key);
        if (r.sections != Int(h) || r.target_N != h - 1) {
            note(key + ": sections " + r.sections.str() + ", expected " + std::to_string(h));
            c2 = false;
        }
    }
    // the split O+O(3) rows carry the recorded off-by-one remark about the naive
    // binomial section count
    for (const std::string key : {"1a@P2", "1a@P3", "1a@P4"}) {
        const CheckResult* c = find_check(reports.at(key), "target-grassmannian");
        if (c == nullptr || !c->pass || c->note.empty()) c2 = false;
    }
    criterion(2, "section counts and grassmannian targets match the frozen goldens", c2);

    // ---- criterion 3: euler characteristics close exactly -------------------
    bool c3 = true;
    for (const auto& [key, r] : reports) {
        for (int m = -5; m <= 5; ++m) {
            Int alt(0), sgn(1);
            for (const Int& h : r.cohomology.at(m)) {
                alt += sgn * h;
                sgn = -sgn;
            }
            Int closed;
            if (r.n == 2) {
                closed = euler_char_p2(r.chern.c1, r.chern.c2, Int(m));
            } else if (r.n == 3) {
                closed = euler_char_p3_int(r.chern.c1, r.chern.c2, Int(m));
            } else {
                // P^4 cases are sums of line bundles; chi adds up
                std::vector<int> degs = key.substr(0, 2) == "1a" ? std::vector<int>{0, 3}
                                                                 : std::vector<int>{1, 2};
                closed = chi_line_bundle(4, Int(degs[0] + m)) + chi_line_bundle(4, Int(degs[1] + m));
            }
            if (alt != closed || closed != r.chi_closed[size_t(m + 5)]) {
                note(key + " twist " + std::to_string(m) + ": table gives " + alt.str() +
                     ", closed form " + closed.str());
                c3 = false;
            }
        }
    }
    {
        // independent split-bundle oracle for the cubic closed form on P^3
        Rng rng(seed);
        for (int t = 0; t < 50; ++t) {
            Int a(rng.int_in(-5, 5)), b(rng.int_in(-5, 5)), m(rng.int_in(-5, 5));
            Int split = chi_line_bundle(3, a + m) + chi_line_bundle(3, b + m);
            if (euler_char_p3_int(a + b, a * b, m) != split) c3 = false;
        }
    }
    criterion(3, "alternating cohomology sums equal the closed-form euler characteristics", c3);

    // ---- criterion 4: chern goldens -----------------------------------------
    bool c4 = true;
    c4 = c4 && ChowClass::parse("1 + 3t + 6t^2", 2).inv() == ChowClass::parse("1 - 3t + 3t^2", 2);
    c4 = c4 && chern_sym2_omega1_p2() == ChowClass::parse("1 - 3t + 6t^2", 2);
    c4 = c4 && (ChowClass::parse("1 + 2t", 3) * ChowClass::parse("1 - t", 3).inv()).coeff(3) ==
                   Int(3);
    c4 = c4 && catalog_case("2").spec.chern().c2 == Int(3);
    c4 = c4 && catalog_case("neg-3.3").spec.chern().c2 == Int(7);
    {
        ChiContradiction cc = chi_contradiction_omega();
        c4 = c4 && cc.chi == Rat(5) && cc.assumed_h0 == Int(4) && cc.forced_h1 == Rat(-1);
        c4 = c4 && cc.c_kernel == ChowClass::parse("1 - 3t + 3t^2", 2) &&
             cc.c_sym2_omega == ChowClass::parse("1 - 3t + 6t^2", 2) &&
             cc.c_kernel != cc.c_sym2_omega;
    }
    criterion(4, "chern class goldens and the chi-five contradiction record hold", c4);

    // ---- criterion 5: curve-theoretic obstructions --------------------------
    bool c5 = true;
    ObstructionsReport obs = obstructions_report();
    c5 = c5 && obs.ok();
    for (int d : {2, 4, 6}) c5 = c5 && !lemma36_oracle(d).feasible();
    {
        auto sext = lemma38_enumerate(6, 3);
        c5 = c5 && sext.size() == 4;
        auto filt = omega_trivial_filter(sext);
        CurveDatum conics3{{{2, 0}, {2, 0}, {2, 0}}};
        c5 = c5 && filt.size() == 1 && filt[0] == conics3;

        auto quart = omega_trivial_filter(lemma38_enumerate(4, 2));
        CurveDatum conics2{{{2, 0}, {2, 0}}};
        c5 = c5 && quart.size() == 1 && quart[0] == conics2;
    }
    {
        auto abc = prop39_abc_solver();
        std::sort(abc.begin(), abc.end());
        c5 = c5 && abc.size() == 2 && abc[0] == std::array<int, 3>{6, 1, 3} &&
             abc[1] == std::array<int, 3>{6, 2, 2};
    }
    c5 = c5 && min_pa_reduced(4) == -3;
    for (int a = -5; a <= 5 && c5; ++a)
        for (int b = -5; b <= 5; ++b)
            if (schwarzenberger_ok(Int(a), Int(b)) !=
                euler_char_p3(Int(a), Int(b), Int(0)).is_integer()) {
                c5 = false;
                break;
            }
    criterion(5, "curve unions, genus triples and parity obstructions enumerate as proved", c5);

    // ---- criterion 6: stratification sweep ----------------------------------
    StratifyReport strat = stratify(200, seed);
    bool c6 = strat.ok();
    c6 = c6 && 20 * strat.open_with_no_twisted_sections >= 19 * strat.samples;
    c6 = c6 && strat.type1.type == 1 && strat.type1.h0_twist_minus1 == Int(1) &&
         strat.type1.globally_generated;
    c6 = c6 && strat.type3.type == 3 && strat.type3.h0_twist_minus1 == Int(2) &&
         !strat.type3.globally_generated && !strat.type3.witness.empty() &&
         !strat.type3.degeneracy_form.empty();
    if (c6) {
        // the recorded witness must lie on the recorded degeneracy line
        try {
            ProjPoint w = ProjPoint::parse(strat.type3.witness);
            Form lin = Form::parse(strat.type3.degeneracy_form, 3);
            c6 = lin.eval(w).is_zero();
        } catch (const VglabError&) {
            c6 = false;
        }
    }
    criterion(6, "stratified sampling is dominated by the open stratum and the special "
                 "representatives behave as classified",
              c6);

    // ---- criterion 7: independent reconstructions agree ---------------------
    bool c7 = true;
    for (const std::string key :
         {"1a@P2", "1b@P2", "2@P2", "3@P2", "4a@P2", "4b@P2", "4c@P2", "4d@P2"})
        c7 = c7 && check_passed(reports.at(key), "plucker-interpolation-crosscheck");
    for (const std::string key : {"1a@P2", "1b@P2", "1a@P3", "1b@P3", "1a@P4", "1b@P4"})
        c7 = c7 && check_passed(reports.at(key), "plucker-join-crosscheck");
    {
        // direct up-to-scale comparison, independent of the report plumbing
        Rng rng(seed);
        FreePresentation p = expand_to_presentation(catalog_case("4a").spec);
        SectionBasis b = h0_basis(p, 0);
        PluckerMap sym = plucker_symbolic_det(p, b);
        c7 = c7 && equal_up_to_scale(sym, plucker_interpolated(p, b, 3, rng));

        // pointwise fiber lines reproduce the symbolic map
        for (const std::string id : {"1a", "1b", "2", "3", "4a", "4b", "4c", "4d"}) {
            FreePresentation q = expand_to_presentation(catalog_case(id).spec);
            SectionBasis qb = h0_basis(q, 0);
            PluckerMap qm = plucker_symbolic_det(q, qb);
            for (int t = 0; t < 50; ++t) {
                ProjPoint x = random_point(rng, 2);
                if (!projectively_equal(plucker_of_line(quotient_line_at(q, qb, x)),
                                        eval_map(qm, x))) {
                    c7 = false;
                    break;
                }
            }
        }

        // join construction equals the determinantal map for the split cases
        for (int n = 2; n <= 4; ++n) {
            c7 = c7 && equal_up_to_scale(plucker_symbolic_det(catalog_case("1a", n).spec),
                                         join_map(n, 0, 3));
            c7 = c7 && equal_up_to_scale(plucker_symbolic_det(catalog_case("1b", n).spec),
                                         join_map(n, 1, 3));
        }

        // interpolation recovers random cubics from exact samples
        for (int t = 0; t < 10; ++t) {
            Form f = random_form(rng, 3, 3);
            if (f.is_zero()) continue;
            std::vector<std::pair<ProjPoint, Rat>> samples;
            std::set<ProjPoint> seen;
            while (samples.size() < 14) {
                ProjPoint x = random_point(rng, 2);
                if (!seen.insert(x).second) continue;
                samples.push_back({x, f.eval(x)});
            }
            if (interpolate_form(2, 3, samples) != f) c7 = false;
        }
    }
    criterion(7, "symbolic, interpolated, pointwise and join constructions of the maps agree", c7);

    // ---- criterion 8: negative controls -------------------------------------
    bool c8 = true;
    {
        FreePresentation p = cyclic_net_cokernel();
        PluckerMap m = plucker_symbolic_det(p);
        c8 = c8 && h0(p, 0) == Int(3) && m.N == 2 && verify_plucker_relations(m);
        EmbeddingReport rep = check_embedding(m, 400, 2);
        c8 = c8 && rep.base_point_free && !rep.injective && rep.collision.has_value();
        if (rep.collision.has_value()) {
            const ProjPoint& P = rep.collision->first;
            const ProjPoint& Q = rep.collision->second;
            // the collision is an orbit of the coordinate 3-cycle, verified symbolically
            c8 = c8 && P != Q && (Q == cycle(P) || Q == cycle(cycle(P)));
            c8 = c8 && projectively_equal(eval_map(m, P), eval_map(m, Q));
        }

        PluckerMap bad = plucker_symbolic_det(catalog_case("4a").spec);
        bad.p[0] = bad.p[0] + Form::parse("x0^3", 3);
        c8 = c8 && !verify_plucker_relations(bad);

        bool threw = false;
        try {
            FreePresentation low = line_sum_presentation(2, {0, 2});
            SectionBasis lb = h0_basis(low, 0);
            Rng rng(seed);
            plucker_interpolated(low, lb, 3, rng);
        } catch (const InterpolationInconsistent&) {
            threw = true;
        }
        c8 = c8 && threw;
    }
    criterion(8, "non-embedding controls fail exactly where classification says they must", c8);

    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
