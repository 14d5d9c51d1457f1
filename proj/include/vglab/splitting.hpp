#ifndef VGLAB_SPLITTING_HPP
#define VGLAB_SPLITTING_HPP

#include <string>

#include "vglab/cohomology.hpp"

namespace vglab {

// restriction of a rank-2 bundle to a line: O(a) + O(b) with a <= b
struct SplittingType {
    int a = 0;
    int b = 0;
    std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
    friend bool operator==(const SplittingType& x, const SplittingType& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const SplittingType& x, const SplittingType& y) { return !(x == y); }
    friend bool operator<(const SplittingType& x, const SplittingType& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
};

/* Greatest common divisor of a family of binary forms, content-normalized
 * (integer coefficients, gcd 1, leading graded-lex coefficient positive).
 * The zero family gives the zero form; a coprime family gives 1. */
Form binary_gcd(const std::vector<Form>& forms);

/* Splitting type of the cokernel restricted to the line {sP + tQ}. The
 * fiber-rank loci of the restricted matrices are computed exactly (gcd of
 * their maximal minors); a nonconstant gcd means the cokernel is not
 * locally free on the line and raises DegenerateLine, with the witness
 * point when the degeneracy locus has a rational point. Twists are
 * recovered by inverting the exact h^0 ladder. */
SplittingType restrict_to_line(const FreePresentation& p, const ProjPoint& P, const ProjPoint& Q);
SplittingType restrict_to_line(const BundleSpec& spec, const ProjPoint& P, const ProjPoint& Q);

} // namespace vglab

#endif
