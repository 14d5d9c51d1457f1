#include "vglab/bundleops.hpp"

#include <algorithm>

namespace vglab {

RatMatrix fiber_evaluation(const FreePresentation& p, const SectionBasis& sections,
                           const ProjPoint& x) {
    const int n0 = static_cast<int>(p.f0.size());
    std::vector<std::vector<Rat>> phi;
    if (p.f1.empty()) {
        phi.assign(static_cast<size_t>(n0), std::vector<Rat>(static_cast<size_t>(n0), Rat(0)));
        for (int i = 0; i < n0; ++i) phi[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rat(1);
    } else {
        phi = kernel_basis(p.a1.eval(x).transpose());
    }
    if (static_cast<int>(phi.size()) != p.rank())
        throw VglabError("fiber_evaluation: fiber at " + x.str() + " has dimension " +
                         std::to_string(phi.size()) + ", expected " + std::to_string(p.rank()));
    RatMatrix out(static_cast<int>(phi.size()), static_cast<int>(sections.reps.size()));
    for (int k = 0; k < out.cols(); ++k) {
        std::vector<Rat> vals = eval_vec(sections.reps[static_cast<size_t>(k)], x);
        for (int r = 0; r < out.rows(); ++r) {
            Rat acc(0);
            for (int i = 0; i < n0; ++i)
                acc += phi[static_cast<size_t>(r)][static_cast<size_t>(i)] *
                       vals[static_cast<size_t>(i)];
            out.at(r, k) = acc;
        }
    }
    return out;
}

GlobalGenerationReport is_globally_generated(const FreePresentation& p, Rng& rng,
                                             int sample_points,
                                             const std::vector<ProjPoint>& extra_probe_points) {
    SectionBasis basis = h0_basis(p, 0);
    GlobalGenerationReport report;
    auto spans_fiber_at = [&](const ProjPoint& x) {
        RatMatrix fe = fiber_evaluation(p, basis, x);
        return matrix_rank(fe) == fe.rows();
    };
    for (const ProjPoint& x : extra_probe_points)
        if (!spans_fiber_at(x)) {
            report.generated = false;
            report.witness = x;
            return report;
        }
    for (int i = 0; i < sample_points; ++i) {
        ProjPoint x = random_point(rng, p.n);
        if (!spans_fiber_at(x)) {
            report.generated = false;
            report.witness = x;
            return report;
        }
    }
    return report;
}

GlobalGenerationReport is_globally_generated(const BundleSpec& spec, Rng& rng, int sample_points,
                                             const std::vector<ProjPoint>& extra_probe_points) {
    return is_globally_generated(expand_to_presentation(spec), rng, sample_points,
                                 extra_probe_points);
}

bool is_stable_c1_3(const FreePresentation& p) {
    ChernData cd = p.chern();
    if (cd.rank != 2 || cd.c1 != 3)
        throw WrongFirstChern("stability test needs rank 2 and c1 = 3, got rank " +
                              std::to_string(cd.rank) + ", c1 = " + cd.c1.str());
    return h0(p, -2) == 0;
}

bool is_stable_c1_3(const BundleSpec& spec) { return is_stable_c1_3(expand_to_presentation(spec)); }

namespace {

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

Int new_generator_count(const FreePresentation& p, int k) {
    SectionBasis below = h0_basis(p, k - 1);
    const int n = p.n;
    std::vector<std::vector<Expo>> bases;
    std::vector<int> offsets;
    int total = 0;
    for (int d : p.f0) {
        bases.push_back(monomial_basis(n, d + k));
        offsets.push_back(total);
        total += static_cast<int>(bases.back().size());
    }
    auto flatten = [&](const FormVec& sec) {
        std::vector<Rat> col(static_cast<size_t>(total), Rat(0));
        for (size_t i = 0; i < sec.size(); ++i)
            for (const auto& [e, c] : sec[i].terms())
                col[static_cast<size_t>(offsets[i] + monomial_index(bases[i], e))] = c;
        return col;
    };

    RatMatrix a1k = h0_map(p.a1, p.f0, p.f1, n, k);
    std::vector<std::vector<Rat>> rows; // relation image and multiplied sections, as row vectors
    for (int j = 0; j < a1k.cols(); ++j) {
        std::vector<Rat> row(static_cast<size_t>(total));
        for (int i = 0; i < a1k.rows(); ++i) row[static_cast<size_t>(i)] = a1k.at(i, j);
        rows.push_back(std::move(row));
    }
    const long long relation_rank = matrix_rank(a1k);

    for (const FormVec& rep : below.reps)
        for (int v = 0; v <= n; ++v) {
            Form xv = Form::variable(n + 1, v);
            FormVec mult;
            mult.reserve(rep.size());
            for (const Form& f : rep) mult.push_back(f * xv);
            rows.push_back(flatten(mult));
        }
    const long long image_rank = rows.empty() ? 0 : matrix_rank(RatMatrix(rows));
    return h0(p, k) - Int(image_rank - relation_rank);
}

int resolution_type_M36(const FreePresentation& pres) {
    ChernData cd = pres.chern();
    if (cd.rank != 2 || cd.c1 != 3 || cd.c2 != 6)
        throw NotInM36("expected a rank-2 cokernel with (c1,c2) = (3,6), got rank " +
                       std::to_string(cd.rank) + ", (" + cd.c1.str() + "," + cd.c2.str() + ")");
    if (h0(pres, -2) != 0) throw NotInM36("cokernel is not stable: h0(E(-2)) > 0");
    FreePresentation m = minimalize(pres);
    Int s = h0(m, -1);
    if (s == 0) return 4;
    if (s == 2) return 3;
    if (s != 1) throw NotInM36("h0(E(-1)) = " + s.str() + " is outside the stratification range");
    if (m.f2.empty()) {
        std::vector<int> f1 = sorted(m.f1), f0 = sorted(m.f0);
        if (f1 == std::vector<int>{-2} && f0 == std::vector<int>{0, 0, 1}) return 1;
        if (f1 == std::vector<int>{-2, -1} && f0 == std::vector<int>{-1, 0, 0, 1}) return 2;
    }
    return new_generator_count(m, 1) > 0 ? 2 : 1;
}

std::vector<ProjPoint> points_on_linear_locus(const Form& linear, Rng& rng, int count) {
    if (linear.is_zero() || linear.degree() != 1)
        throw VglabError("points_on_linear_locus: nonzero linear form required");
    const int v = linear.num_vars();
    std::vector<Rat> coeff(static_cast<size_t>(v), Rat(0));
    for (const auto& [e, c] : linear.terms())
        for (int j = 0; j < v; ++j)
            if (e[j] == 1) coeff[static_cast<size_t>(j)] = c;
    int pivot = 0;
    while (coeff[static_cast<size_t>(pivot)].is_zero()) ++pivot;
    std::vector<ProjPoint> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<Rat> pt(static_cast<size_t>(v), Rat(0));
        Rat acc(0);
        bool nonzero = false;
        for (int j = 0; j < v; ++j) {
            if (j == pivot) continue;
            pt[static_cast<size_t>(j)] = Rat(rng.int_in(-9, 9));
            acc += coeff[static_cast<size_t>(j)] * pt[static_cast<size_t>(j)];
            nonzero = nonzero || !pt[static_cast<size_t>(j)].is_zero();
        }
        pt[static_cast<size_t>(pivot)] = -acc / coeff[static_cast<size_t>(pivot)];
        nonzero = nonzero || !pt[static_cast<size_t>(pivot)].is_zero();
        if (!nonzero) continue;
        out.emplace_back(pt);
    }
    return out;
}

} // namespace vglab
