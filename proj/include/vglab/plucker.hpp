#ifndef VGLAB_PLUCKER_HPP
#define VGLAB_PLUCKER_HPP

#include <iosfwd>
#include <optional>
#include <utility>

#include "vglab/cohomology.hpp"

namespace vglab {

/* Morphism P^n -> Gr(1,N) composed with the Plucker embedding: one Form per
 * coordinate pair (i<j), 0 <= i < j <= N, in lexicographic pair order. All
 * nonzero coordinates share degree d and the family is jointly
 * content-normalized with the first nonzero coordinate's leading graded-lex
 * coefficient positive. */
struct PluckerMap {
    int n = 2;
    int N = 1;
    int d = 0;
    std::vector<Form> p; // size N(N+1)/2, pair-indexed, zero forms allowed
    int num_pairs() const { return N * (N + 1) / 2; }
};

// lexicographic position of the pair (i,j), 0 <= i < j <= N
int pair_index(int i, int j, int N);
std::pair<int, int> pair_unindex(int idx, int N);

// joint content normalization; no-op on the all-zero map
void normalize_map(PluckerMap& m);

// line through two fixed points of P^N, spanning vectors kept explicit
struct LineInPN {
    std::vector<Rat> u, v;
};

// pair-indexed 2x2 minors of the spanning vectors, primitive integers
std::vector<Rat> plucker_of_line(const LineInPN& line);

/* The fiber line of the evaluation H0 -> F0(x)/im A1(x): sections evaluated
 * through a basis of the 2-dimensional quotient give two spanning vectors of
 * length (number of sections). */
LineInPN quotient_line_at(const FreePresentation& p, const SectionBasis& sections,
                          const ProjPoint& x);

/* Coordinates p_ij = det [ s_i | s_j | A1 columns ] for a length-1
 * presentation with |f1| = |f0| - 2; each is a form of degree c1. */
PluckerMap plucker_symbolic_det(const FreePresentation& p, const SectionBasis& sections);
PluckerMap plucker_symbolic_det(const FreePresentation& p);
PluckerMap plucker_symbolic_det(const BundleSpec& spec);

/* Lines joining corresponding points of the degree-a and degree-(d-a)
 * Veronese images: blocks index the two monomial bases, cross-block
 * coordinate m_alpha * m_beta, intra-block coordinates zero. */
PluckerMap join_map(int n, int a, int d);

/* Independent reconstruction of the coordinate forms of the requested degree
 * from pointwise fiber lines, via a reference-coordinate gauge and exact
 * linear algebra, validated on a disjoint 20-point holdout. */
PluckerMap plucker_interpolated(const FreePresentation& p, const SectionBasis& sections, int degree,
                                Rng& rng);
PluckerMap plucker_interpolated(const FreePresentation& p, Rng& rng);

// exact expansion of p_ij p_kl - p_ik p_jl + p_il p_jk for all 4-subsets
bool verify_plucker_relations(const PluckerMap& m);

std::vector<Rat> eval_map(const PluckerMap& m, const ProjPoint& x);

// u ~ v as points of projective space (exact cross-multiplication)
bool projectively_equal(const std::vector<Rat>& u, const std::vector<Rat>& v);

struct EmbeddingReport {
    bool base_point_free = true;
    std::optional<ProjPoint> base_point;
    bool injective = true;
    std::optional<std::pair<ProjPoint, ProjPoint>> collision;
    bool immersion = true;
    std::optional<ProjPoint> critical_point;
    bool ok() const { return base_point_free && injective && immersion; }
    std::string str() const;
};

/* Sampled embedding verdicts: base-point-freeness at `trials` points,
 * injectivity on trials/2 normalized point pairs via full Plucker value
 * vectors, immersion via exact Jacobian rank n+1 at trials/4 points. */
EmbeddingReport check_embedding(const PluckerMap& m, int trials, std::uint64_t seed);

// serialization: header "n N d", then one "i j : <form>" line per nonzero coordinate
void write_plucker(const PluckerMap& m, std::ostream& os);
PluckerMap read_plucker(std::istream& is);

} // namespace vglab

#endif
