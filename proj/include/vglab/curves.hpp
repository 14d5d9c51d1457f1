#ifndef VGLAB_CURVES_HPP
#define VGLAB_CURVES_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "vglab/chow.hpp"

namespace vglab {

/* Disjoint union of smooth space curves, recorded as the multiset of
 * (degree, genus) pairs of its components, kept sorted descending. */
struct CurveDatum {
    std::vector<std::pair<int, int>> components;

    int total_degree() const;
    int chi() const; // chi(O_Z) = sum (1 - g_i) over components
    int pa() const { return 1 - chi(); }
    std::string str() const;
    friend bool operator==(const CurveDatum& a, const CurveDatum& b) {
        return a.components == b.components;
    }
    friend bool operator<(const CurveDatum& a, const CurveDatum& b) {
        return a.components < b.components;
    }
};

/* Genera realized by smooth irreducible space curves of each degree up to 6,
 * from the standard low-degree classification. The table is data: the
 * enumerations below quantify only over it. */
const std::map<int, std::vector<int>>& realizable_genera();
bool realizable(int degree, int genus);

// all component multisets with the given total degree and chi(O_Z), under the table
std::vector<CurveDatum> enumerate_curves(int total_degree, int chi);

/* A smooth Z with chi(O_Z) = 3d/2 would need at least 3d/2 components while
 * degree d allows at most d; the enumeration must come back empty. */
struct Lemma36Verdict {
    int d = 0;
    int required_components = 0;  // = chi = 3d/2, since every genus is >= 0
    int available_components = 0; // = d, since every component has degree >= 1
    std::vector<CurveDatum> solutions;
    bool feasible() const { return !solutions.empty(); }
    std::string str() const;
};
Lemma36Verdict lemma36_oracle(int d); // d >= 2 even

std::vector<CurveDatum> lemma38_enumerate(int total_degree = 6, int chi = 3);

// keeps the data whose every component satisfies 2g - 2 = -d (omega_Z = O_Z(-1))
std::vector<CurveDatum> omega_trivial_filter(const std::vector<CurveDatum>& list);

/* Integer solutions (a,b,c) of b + c = 4, 1 <= b <= c, and
 * -5 = (b-1)(b-2)/2 + (c-1)(c-2)/2 + b - a - 1. */
std::vector<std::array<int, 3>> prop39_abc_solver();

// brute-force variant over b,c in [1,bc_sum], a in [0,a_max], for cross-checking
std::vector<std::array<int, 3>> prop39_brute(int pa, int bc_sum, int a_max = 20);

// smallest arithmetic genus of a reduced curve of total degree d, by enumeration
int min_pa_reduced(int d);

/* The chi(E) = 5 contradiction record: a globally generated E with
 * (c1,c2) = (3,6) and h0 = 4 would force h1 = -1; the companion Chern
 * comparison separates the two rank-3 candidates for the kernel bundle. */
struct ChiContradiction {
    Rat chi;
    Int assumed_h0;
    Rat forced_h1;
    ChowClass c_kernel;     // (1 + 3t + 6t^2)^(-1)
    ChowClass c_sym2_omega; // 1 - 3t + 6t^2
    ChiContradiction() : c_kernel(2), c_sym2_omega(2) {}
    std::string str() const;
};
ChiContradiction chi_contradiction_omega();

} // namespace vglab

#endif
