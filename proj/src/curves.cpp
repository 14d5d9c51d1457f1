#include "vglab/curves.hpp"

#include <algorithm>

#include "vglab/errors.hpp"

namespace vglab {

int CurveDatum::total_degree() const {
    int d = 0;
    for (const auto& [deg, g] : components) d += deg;
    return d;
}

int CurveDatum::chi() const {
    int c = 0;
    for (const auto& [deg, g] : components) c += 1 - g;
    return c;
}

std::string CurveDatum::str() const {
    std::string s = "{";
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) s += ", ";
        s += "(d=" + std::to_string(components[i].first) +
             ",g=" + std::to_string(components[i].second) + ")";
    }
    return s + "}";
}

const std::map<int, std::vector<int>>& realizable_genera() {
    static const std::map<int, std::vector<int>> table = {
        {1, {0}},          // lines
        {2, {0}},          // conics
        {3, {0, 1}},       // twisted cubic, plane cubic
        {4, {0, 1, 3}},    // rational and elliptic quartics, plane quartic
        {5, {0, 1, 2}},    // non-planar quintics
        {6, {0, 1, 2, 3, 4, 10}}, // non-planar sextics and the plane sextic
    };
    return table;
}

bool realizable(int degree, int genus) {
    auto it = realizable_genera().find(degree);
    if (it == realizable_genera().end()) return false;
    return std::find(it->second.begin(), it->second.end(), genus) != it->second.end();
}

namespace {

// multisets built in nonincreasing (degree, genus) order so each appears once
void enumerate_rec(int degree_left, int chi_left, std::pair<int, int> max_part,
                   std::vector<std::pair<int, int>>& acc, std::vector<CurveDatum>& out) {
    if (degree_left == 0) {
        if (chi_left == 0) {
            CurveDatum z;
            z.components = acc;
            out.push_back(std::move(z));
        }
        return;
    }
    for (int d = std::min(degree_left, max_part.first); d >= 1; --d) {
        auto it = realizable_genera().find(d);
        if (it == realizable_genera().end()) continue;
        std::vector<int> genera = it->second;
        std::sort(genera.rbegin(), genera.rend());
        for (int g : genera) {
            std::pair<int, int> part{d, g};
            if (part > max_part) continue;
            acc.push_back(part);
            enumerate_rec(degree_left - d, chi_left - (1 - g), part, acc, out);
            acc.pop_back();
        }
    }
}

} // namespace

std::vector<CurveDatum> enumerate_curves(int total_degree, int chi) {
    if (total_degree < 0) throw VglabError("enumerate_curves: negative degree");
    std::vector<CurveDatum> out;
    std::vector<std::pair<int, int>> acc;
    enumerate_rec(total_degree, chi, {total_degree, 1 << 20}, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string Lemma36Verdict::str() const {
    std::string s = "degree " + std::to_string(d) + ": chi(O_Z) = " + std::to_string(3 * d / 2) +
                    " needs >= " + std::to_string(required_components) +
                    " components, degree allows <= " + std::to_string(available_components) +
                    "; enumeration found " + std::to_string(solutions.size());
    s += feasible() ? " (feasible)" : " (infeasible)";
    return s;
}

Lemma36Verdict lemma36_oracle(int d) {
    if (d < 2 || d % 2 != 0) throw VglabError("lemma36_oracle: need even d >= 2");
    Lemma36Verdict v;
    v.d = d;
    v.required_components = 3 * d / 2;
    v.available_components = d;
    v.solutions = enumerate_curves(d, 3 * d / 2);
    return v;
}

std::vector<CurveDatum> lemma38_enumerate(int total_degree, int chi) {
    return enumerate_curves(total_degree, chi);
}

std::vector<CurveDatum> omega_trivial_filter(const std::vector<CurveDatum>& list) {
    std::vector<CurveDatum> out;
    for (const CurveDatum& z : list) {
        bool ok = true;
        for (const auto& [d, g] : z.components) ok = ok && (2 * g - 2 == -d);
        if (ok) out.push_back(z);
    }
    return out;
}

std::vector<std::array<int, 3>> prop39_abc_solver() {
    std::vector<std::array<int, 3>> out;
    for (int b = 1; b <= 2; ++b) {
        int c = 4 - b;
        // -5 = (b-1)(b-2)/2 + (c-1)(c-2)/2 + b - a - 1, solved for a
        int a = (b - 1) * (b - 2) / 2 + (c - 1) * (c - 2) / 2 + b - 1 + 5;
        out.push_back({a, b, c});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x[1] > y[1]; });
    return out;
}

std::vector<std::array<int, 3>> prop39_brute(int pa, int bc_sum, int a_max) {
    std::vector<std::array<int, 3>> out;
    for (int b = 1; b <= bc_sum; ++b) {
        int c = bc_sum - b;
        if (c < b) continue;
        for (int a = 0; a <= a_max; ++a)
            if (2 * pa == (b - 1) * (b - 2) + (c - 1) * (c - 2) + 2 * (b - a - 1))
                out.push_back({a, b, c});
    }
    return out;
}

int min_pa_reduced(int d) {
    if (d < 1) throw VglabError("min_pa_reduced: need d >= 1");
    bool found = false;
    int best = 0;
    for (int chi = -10 * d; chi <= 10 * d; ++chi) {
        if (enumerate_curves(d, chi).empty()) continue;
        int pa = 1 - chi;
        if (!found || pa < best) best = pa;
        found = true;
    }
    if (!found) throw VglabError("min_pa_reduced: no realizable curve of degree " + std::to_string(d));
    return best;
}

std::string ChiContradiction::str() const {
    return "chi(E) = " + chi.str() + ", h0(E) = " + assumed_h0.str() +
           " forces h1(E) = " + forced_h1.str() + " < 0; c(kernel) = " + c_kernel.str() +
           " differs from c(S2 Omega(1)) = " + c_sym2_omega.str();
}

ChiContradiction chi_contradiction_omega() {
    ChiContradiction r;
    r.chi = Rat(euler_char_p2(3, 6, 0));
    r.assumed_h0 = 4;
    r.forced_h1 = Rat(r.assumed_h0) - r.chi;
    ChowClass denom = ChowClass::one(2);
    denom.set_coeff(1, 3);
    denom.set_coeff(2, 6);
    r.c_kernel = denom.inv();
    r.c_sym2_omega = chern_sym2_omega1_p2();
    return r;
}

} // namespace vglab
