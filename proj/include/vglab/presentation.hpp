#ifndef VGLAB_PRESENTATION_HPP
#define VGLAB_PRESENTATION_HPP

#include <vector>

#include "vglab/chow.hpp"
#include "vglab/form.hpp"
#include "vglab/matrix.hpp"

namespace vglab {

/* Matrix of homogeneous forms over a shared variable set. Entries may be
 * zero forms with any recorded degree; arithmetic treats them as absorbing. */
class FormMatrix {
  public:
    FormMatrix() : rows_(0), cols_(0), num_vars_(1) {}
    FormMatrix(int rows, int cols, int num_vars);
    explicit FormMatrix(const std::vector<std::vector<Form>>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int num_vars() const { return num_vars_; }

    const Form& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    Form& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    RatMatrix eval(const ProjPoint& p) const;
    RatMatrix eval(const std::vector<Rat>& x) const;
    FormMatrix transpose() const;

    // entrywise substitution x_i -> images[i]; see Form::substitute
    FormMatrix substitute(const std::vector<Form>& images) const;

    friend FormMatrix operator*(const FormMatrix& a, const FormMatrix& b);

    void delete_row(int i);
    void delete_col(int j);

  private:
    int rows_, cols_, num_vars_;
    std::vector<Form> a_;
};

// symbolic determinant by Laplace expansion; intended for small matrices
Form form_det(const FormMatrix& m);

// all size x size minors (row/column subsets in lexicographic order)
std::vector<Form> form_minors(const FormMatrix& m, int size);

// every minor of the given size is identically zero
bool minors_vanish(const FormMatrix& m, int size);

/* Presentation of a sheaf E on P^n by sums of line bundles,
 *
 *   0 -> F2 --a2--> F1 --a1--> F0 -> E -> 0,
 *
 * exact at F2 and F1, E = coker a1. F_k = (+)_i O(f_k[i]); f2 may be empty
 * (one-step presentation). Entry (i,j) of a1 is homogeneous of degree
 * f0[i]-f1[j] or zero; entry (j,k) of a2 has degree f1[j]-f2[k] or zero. */
struct FreePresentation {
    int n = 2;
    std::vector<int> f2, f1, f0;
    FormMatrix a1; // |f0| x |f1|
    FormMatrix a2; // |f1| x |f2|

    int rank() const {
        return static_cast<int>(f0.size()) - static_cast<int>(f1.size()) +
               static_cast<int>(f2.size());
    }
    bool length_two() const { return !f2.empty(); }

    ChowClass total_chern() const; // c(F0) c(F2) / c(F1)
    ChernData chern() const { return chern_data(total_chern(), rank()); }

    FreePresentation twist(int k) const; // presents E(k); matrices unchanged

    RatMatrix a1_at(const ProjPoint& p) const { return a1.eval(p); }
    RatMatrix a2_at(const ProjPoint& p) const { return a2.eval(p); }
};

FreePresentation direct_sum(const FreePresentation& p, const FreePresentation& q);

/* Structural checks (shapes, entry homogeneity with zero entries allowed),
 * exact a1*a2 = 0, and sampled fiber ranks rank a2(x) = |f2| and
 * rank a1(x) = |f1| - |f2| at random points. Throws VglabError on failure. */
void validate_presentation(const FreePresentation& p, Rng& rng, int samples = 25);

/* Positive certificate that the given forms have no common zero on P^n:
 * some graded piece of the ideal they generate is the whole space. Target
 * degrees up to max generator degree + extra are tried. Returns false when
 * no certificate is found (inconclusive, not a refutation). */
bool no_common_zero_certificate(const std::vector<Form>& gens, int n, int extra = 4);

/* Exact local-freeness certificate: maximal minors of a2 and the
 * rank-(|f1|-|f2|) minors of a1 each have no common zero, and the next
 * minor size of a1 vanishes identically. Gated to minor size <= 3 per
 * matrix; returns false when gated out or inconclusive. */
bool certify_locally_free(const FreePresentation& p, int extra = 4);

/* Remove unit (nonzero constant) entries of a1 and a2 by row and column
 * operations, shrinking the free modules; the cokernel is unchanged. */
FreePresentation minimalize(const FreePresentation& p);

/* Pull back along the line {P + t Q}: substitute x_i = P_i s + Q_i t.
 * Result lives on P^1 with the same twist data. P and Q must be distinct. */
FreePresentation restrict_presentation_to_line(const FreePresentation& p, const ProjPoint& P,
                                               const ProjPoint& Q);

} // namespace vglab

#endif
