#ifndef VGLAB_FORM_HPP
#define VGLAB_FORM_HPP

#include <map>
#include <string>
#include <vector>

#include "vglab/projpoint.hpp"
#include "vglab/rat.hpp"
#include "vglab/rng.hpp"

namespace vglab {

using Expo = std::vector<int>; // exponent vector, length num_vars

/* Canonical term order: graded lexicographic, written out descending
 * (x0^d first, xn^d last). Used for monomial bases, term storage,
 * printing, and every matrix row/column indexing in the library. */
struct GrlexPrecede {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da > db;
        return a > b; // lexicographically larger first
    }
};

// all exponent vectors of total degree d in n+1 variables, canonical order
std::vector<Expo> monomial_basis(int n, int d);

// position of expo within monomial_basis(n, d); throws if absent
int monomial_index(const std::vector<Expo>& basis, const Expo& e);

/* Homogeneous polynomial over Q. The zero form keeps its recorded degree.
 * Terms never store zero coefficients. */
class Form {
  public:
    Form() : num_vars_(0), degree_(0) {}
    Form(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
        if (num_vars < 1) throw VglabError("form needs at least one variable");
        if (degree < 0) degree_ = 0; // negative-degree slots hold only the zero form
    }

    static Form monomial(int num_vars, const Expo& e, const Rat& coeff);
    static Form variable(int num_vars, int i) {
        Expo e(num_vars, 0);
        e[i] = 1;
        return monomial(num_vars, e, Rat(1));
    }
    static Form constant(int num_vars, const Rat& c) {
        return monomial(num_vars, Expo(num_vars, 0), c);
    }

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Expo, Rat, GrlexPrecede>& terms() const { return terms_; }

    Rat coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    void set_coeff(const Expo& e, const Rat& c);

    // first term in canonical order; throws on the zero form
    std::pair<Expo, Rat> leading_term() const;

    Form operator-() const;
    friend Form operator+(const Form& a, const Form& b);
    friend Form operator-(const Form& a, const Form& b);
    friend Form operator*(const Form& a, const Form& b); // form_mul
    friend Form operator*(const Rat& c, const Form& f);

    friend bool operator==(const Form& a, const Form& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    Rat eval(const std::vector<Rat>& x) const;
    Rat eval(const ProjPoint& p) const;

    Form partial(int i) const;

    /* Substitute x_i -> images[i]; all images share a variable count and a
     * common degree k, result is homogeneous of degree k*deg. Used with
     * k = 1 to restrict to lines (images P_i*s + Q_i*t). */
    Form substitute(const std::vector<Form>& images) const;

    std::string str() const;
    static Form parse(const std::string& text, int num_vars);

  private:
    int num_vars_;
    int degree_;
    std::map<Expo, Rat, GrlexPrecede> terms_;
};

inline Form form_mul(const Form& a, const Form& b) { return a * b; }
inline Rat form_eval(const Form& f, const ProjPoint& p) { return f.eval(p); }
inline Form form_partial(const Form& f, int i) { return f.partial(i); }

// seeded random form, integer coefficients in [lo, hi]
Form random_form(Rng& rng, int num_vars, int degree, long long lo = -9, long long hi = 9);

using FormVec = std::vector<Form>; // section of a direct sum of line bundles

std::vector<Rat> eval_vec(const FormVec& v, const ProjPoint& p);

/* Joint normalization scale for a family of forms: positive lambda such that
 * lambda*coefficients are integers with overall gcd 1. Zero family -> 1. */
Rat joint_content_scale(const std::vector<const Form*>& forms);

} // namespace vglab

#endif
