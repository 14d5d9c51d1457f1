#ifndef VGLAB_BUNDLEOPS_HPP
#define VGLAB_BUNDLEOPS_HPP

#include <optional>

#include "vglab/cohomology.hpp"

namespace vglab {

struct GlobalGenerationReport {
    bool generated = true;
    std::optional<ProjPoint> witness; // first point whose fiber the sections fail to span
};

/* Surjectivity of the evaluation of global sections into the fiber, probed
 * first at extra_probe_points (so callers can aim at suspected failure loci)
 * and then at sample_points random points. */
GlobalGenerationReport is_globally_generated(const FreePresentation& p, Rng& rng,
                                             int sample_points,
                                             const std::vector<ProjPoint>& extra_probe_points = {});
GlobalGenerationReport is_globally_generated(const BundleSpec& spec, Rng& rng, int sample_points,
                                             const std::vector<ProjPoint>& extra_probe_points = {});

/* Section values in the fiber at x: rows correspond to a basis of the
 * cokernel fiber F0(x)/im a1(x), columns to the given sections. The sections
 * span the fiber exactly when this matrix has full row rank. */
RatMatrix fiber_evaluation(const FreePresentation& p, const SectionBasis& sections,
                           const ProjPoint& x);

// for a rank-2 bundle with odd c1 = 3 stability and semistability agree: stable iff h0(E(-2)) = 0
bool is_stable_c1_3(const FreePresentation& p);
bool is_stable_c1_3(const BundleSpec& spec);

/* Minimal-resolution stratum of a stable (3,6) cokernel: 4 for the generic
 * shape with h0(E(-1)) = 0, 3 for h0(E(-1)) = 2, and 1 vs 2 within
 * h0(E(-1)) = 1 by the minimalized Betti degrees. A presentation that is not
 * itself a resolution of the section module can hide the literal shape, so
 * the 1-vs-2 split falls back to counting degree-1 minimal generators of the
 * section module (type 2 has one, type 1 has none). */
int resolution_type_M36(const FreePresentation& pres);

// minimal generators of the section module in degree k, given its degree-(k-1) part
Int new_generator_count(const FreePresentation& p, int k);

// random points on the hyperplane {linear = 0}
std::vector<ProjPoint> points_on_linear_locus(const Form& linear, Rng& rng, int count);

} // namespace vglab

#endif
