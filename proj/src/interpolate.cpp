#include "vglab/interpolate.hpp"

namespace vglab {

RatMatrix vandermonde(int n, int d, const std::vector<ProjPoint>& points) {
    const auto basis = monomial_basis(n, d);
    RatMatrix v(static_cast<int>(points.size()), static_cast<int>(basis.size()));
    for (int r = 0; r < v.rows(); ++r) {
        const auto& p = points[size_t(r)];
        for (int c = 0; c < v.cols(); ++c) {
            Int val = 1;
            for (int i = 0; i <= n; ++i)
                for (int k = 0; k < basis[size_t(c)][size_t(i)]; ++k) val *= p[i];
            v.at(r, c) = Rat(val);
        }
    }
    return v;
}

Form interpolate_form(int n, int d, const std::vector<std::pair<ProjPoint, Rat>>& samples) {
    const auto basis = monomial_basis(n, d);
    std::vector<ProjPoint> pts;
    pts.reserve(samples.size());
    for (const auto& s : samples) pts.push_back(s.first);
    RatMatrix v = vandermonde(n, d, pts);
    RatMatrix y(static_cast<int>(samples.size()), 1);
    for (int r = 0; r < y.rows(); ++r) y.at(r, 0) = samples[size_t(r)].second;
    SolveResult sr = solve(v, y);
    if (!sr.consistent) throw InconsistentSamples("no degree-" + std::to_string(d) + " form fits the samples");
    if (!sr.unique) throw Underdetermined("sample points do not determine a unique degree-" + std::to_string(d) + " form");
    Form f(n + 1, d);
    for (int c = 0; c < v.cols(); ++c)
        if (!sr.x.at(c, 0).is_zero()) f.set_coeff(basis[size_t(c)], sr.x.at(c, 0));
    return f;
}

} // namespace vglab
