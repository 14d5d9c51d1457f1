#ifndef VGLAB_INTERPOLATE_HPP
#define VGLAB_INTERPOLATE_HPP

#include <utility>
#include <vector>

#include "vglab/form.hpp"
#include "vglab/matrix.hpp"

namespace vglab {

// rows: one per point; columns: graded-lex monomials of degree d evaluated
// at the point's integer representative
RatMatrix vandermonde(int n, int d, const std::vector<ProjPoint>& points);

/* Recover the unique degree-d form matching all (point, value) samples.
 * Values must come from evaluation at the stored point representatives.
 * Throws InconsistentSamples if no form fits, Underdetermined if the
 * sample points leave more than one. */
Form interpolate_form(int n, int d, const std::vector<std::pair<ProjPoint, Rat>>& samples);

} // namespace vglab

#endif
