#ifndef VGLAB_BUNDLE_HPP
#define VGLAB_BUNDLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vglab/presentation.hpp"

namespace vglab {

/* Symbolic bundle description: a direct sum of primitive summands. Sym2
 * cotangent summands carry Chern data only and cannot be presented. */
enum class SummandKind { LineSum, OmegaTwist, Sym2OmegaTwist, Coker, Named };

struct Summand {
    SummandKind kind = SummandKind::LineSum;
    std::vector<int> degrees;  // LineSum
    int twist = 0;             // OmegaTwist / Sym2OmegaTwist
    FreePresentation pres;     // Coker
    std::string case_id;       // Named
};

struct BundleSpec {
    int n = 2;
    std::vector<Summand> summands;

    static BundleSpec line_sum(int n, const std::vector<int>& degrees);
    static BundleSpec omega_twist(int k);      // cotangent twist, P^2 only
    static BundleSpec sym2_omega_twist(int k); // Chern-only, P^2 only
    static BundleSpec from_presentation(const FreePresentation& p);
    static BundleSpec named(const std::string& case_id, int n = 2);

    BundleSpec& add(const BundleSpec& other); // direct sum, same ambient

    int rank() const;
    ChowClass total_chern() const;
    ChernData chern() const { return chern_data(total_chern(), rank()); }
    bool presentable() const;

    std::string str() const;
};

inline ChernData chern_of(const BundleSpec& spec) { return spec.chern(); }

/* Presentation whose cokernel is the spec's bundle: line sums are free,
 * the cotangent twist expands through its Koszul cover, explicit cokernels
 * pass through, direct sums merge blockwise. Throws NotPresentable for
 * Sym2 summands. */
FreePresentation expand_to_presentation(const BundleSpec& spec);

// building blocks, also used directly by tests and the stratification sampler
FreePresentation line_sum_presentation(int n, const std::vector<int>& degrees);

// coker(O(k-3) --(x0,x1,x2)^T--> O(k-2)^3) on P^2
FreePresentation cotangent_twist_presentation(int k);

// coker(O(-1)^(rows-2) --generic linear--> O^rows) on P^2
FreePresentation steiner_presentation(int rows, Rng& rng);

/* coker(O(-3) --(g,q1,q2)^T--> O(-2)+O(1)+O(1)) with g a seeded generic
 * linear form: rank 2, (c1,c2) = (3,6), h0(E(-1)) = 2, and global
 * generation fails along {g = 0}. */
FreePresentation type3_representative(std::uint64_t seed = 106);

/* Length-two expansions of the 4b/4c/4d kernels through the cotangent
 * cover O(-2) -> O(-1)^3 (mapping cone), with seeded generic coefficients.
 * Same Chern data and cohomology tables as the catalog presentations. */
FreePresentation alternate_presentation(const std::string& case_id);

struct CatalogCase {
    std::string id;            // "1a".."4d", "neg-3.3"
    int n = 2;                 // ambient projective space
    std::uint64_t seed = 0;    // seed for any generic coefficient draws
    bool embedding_expected = true;
    std::string summary;
    BundleSpec spec;
};

// all named cases: {1a,1b} on P^2/P^3/P^4, {2,3,4a,4b,4c,4d,neg-3.3} on P^2
const std::vector<CatalogCase>& catalog();

// "4a" or "1b@P3"; bare ids default to P^2; throws UnknownCase
const CatalogCase& catalog_case(const std::string& id_with_optional_ambient);
const CatalogCase& catalog_case(const std::string& id, int n);

std::string case_key(const std::string& id, int n); // "1b@P3"

} // namespace vglab

#endif
