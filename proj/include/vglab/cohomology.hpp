#ifndef VGLAB_COHOMOLOGY_HPP
#define VGLAB_COHOMOLOGY_HPP

#include <vector>

#include "vglab/bundle.hpp"
#include "vglab/presentation.hpp"

namespace vglab {

// dimensions of line-bundle cohomology on P^n: nonzero only in degrees 0 and n
Int bott_h0(int n, int d);
Int bott_hn(int n, int d);
Int bott_h(int n, int i, int d);

/* Matrix of multiplication by f: monomials of degree d_src to monomials of
 * degree d_src + deg f, both in graded-lex order. Empty degrees give empty
 * blocks. */
RatMatrix mult_matrix(const Form& f, int n, int d_src);

/* The map induced on degree-0 cohomology by a graded matrix a whose entry
 * (i,j) has degree row_deg[i] - col_deg[j], after twisting all degrees by m.
 * Likewise for top (degree-n) cohomology, realized through the Serre-dual
 * pairing as transposed multiplication blocks. */
RatMatrix h0_map(const FormMatrix& a, const std::vector<int>& row_deg,
                 const std::vector<int>& col_deg, int n, int m);
RatMatrix hn_map(const FormMatrix& a, const std::vector<int>& row_deg,
                 const std::vector<int>& col_deg, int n, int m);

/* Exact h^0..h^n of the cokernel twisted by m, by chasing the presentation
 * through the two short exact sequences it splits into; all ranks taken
 * exactly. Resolutions of length up to two are supported. */
std::vector<Int> cohomology_at(const FreePresentation& p, int m);

struct CohomologyTable {
    int n = 2;
    int m_lo = 0;
    std::vector<std::vector<Int>> rows; // rows[m - m_lo][i] = h^i(E(m))

    const std::vector<Int>& at(int m) const { return rows.at(static_cast<size_t>(m - m_lo)); }
    Int chi(int m) const {
        Int s = 0;
        int sign = 1;
        for (const Int& h : at(m)) {
            s += sign * h;
            sign = -sign;
        }
        return s;
    }
};

CohomologyTable cohomology_table(const FreePresentation& p, int m_lo, int m_hi);
CohomologyTable cohomology_table(const BundleSpec& spec, int m_lo, int m_hi);

Int h0(const FreePresentation& p, int m);

/* Basis of the degree-m sections of the cokernel: coset representatives in
 * the cover's section space, echelonized against the relation space in
 * graded-lex order, plus the generating relations themselves. */
struct SectionBasis {
    int n = 2;
    int m = 0;                      // twist the basis was computed at
    std::vector<int> f0;            // cover degrees (untwisted)
    std::vector<FormVec> reps;      // one Form of degree f0[i]+m per slot
    std::vector<FormVec> relations; // images of the degree-m sections of f1
};

SectionBasis h0_basis(const FreePresentation& p, int m = 0);
SectionBasis h0_basis(const BundleSpec& spec);

} // namespace vglab

#endif
