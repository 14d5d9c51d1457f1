#ifndef VGLAB_CHOW_HPP
#define VGLAB_CHOW_HPP

#include <string>
#include <vector>

#include "vglab/rat.hpp"

namespace vglab {

/* Truncated integer polynomial c0 + c1 t + ... + cn t^n in the hyperplane
 * class t of P^n, computed mod t^(n+1). Total Chern classes of bundles
 * live here; raw arithmetic permits any constant term. */
class ChowClass {
  public:
    explicit ChowClass(int n) : c_(size_t(n) + 1, Int(0)) {
        if (n < 0) throw VglabError("negative ambient dimension");
    }
    static ChowClass one(int n) {
        ChowClass a(n);
        a.c_[0] = 1;
        return a;
    }
    static ChowClass line_bundle(int n, int d) {
        ChowClass a = one(n);
        if (n >= 1) a.c_[1] = d;
        return a;
    }

    int n() const { return static_cast<int>(c_.size()) - 1; }
    const Int& coeff(int i) const { return c_[size_t(i)]; }
    void set_coeff(int i, const Int& v) { c_[size_t(i)] = v; }

    friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
    friend ChowClass operator-(const ChowClass& a, const ChowClass& b);
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b); // truncated product
    friend bool operator==(const ChowClass& a, const ChowClass& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ChowClass& a, const ChowClass& b) { return !(a == b); }

    // formal inverse mod t^(n+1); requires constant term +-1
    ChowClass inv() const;

    std::string str() const;
    static ChowClass parse(const std::string& text, int n);

  private:
    std::vector<Int> c_;
};

inline ChowClass chow_mul(const ChowClass& a, const ChowClass& b) { return a * b; }
inline ChowClass chow_inv(const ChowClass& a) { return a.inv(); }

// Whitney product of line-bundle classes: prod (1 + d_i t)
ChowClass chern_line_sum(int n, const std::vector<int>& degrees);

// c_i(E(k)) = sum_j binom(rank - j, i - j) c_j k^(i-j)
ChowClass chern_twist(const ChowClass& c, int rank, int k);

// c(Omega_Pn) = (1 - t)^(n+1) truncated, then twisted by k; rank n
ChowClass chern_omega_twist(int n, int k);

// c(S^2 Omega_P2(1)) = c(O(1)^3)^(-1) = 1 - 3t + 6t^2
ChowClass chern_sym2_omega1_p2();

struct ChernData {
    int rank = 0;
    Int c1, c2, c3; // c3 meaningful only when the ambient n >= 3
};

ChernData chern_data(const ChowClass& total, int rank);

// chi(O_Pn(a)) = binom(a + n, n) as a polynomial in a (valid for all integers)
Int chi_line_bundle(int n, const Int& a);

// rank-2 Riemann-Roch on P2: chi(E(m)) = 2 + (3 c1' + c1'^2 - 2 c2') / 2 after twisting
Int euler_char_p2(const Int& c1, const Int& c2, const Int& m);

/* rank-2 Riemann-Roch on P3, the cubic-in-m closed form:
 * m^3/3 + (2 + c1/2) m^2 + (11/3 + 2 c1 + c1^2/2 - c2) m
 *   + 1 + binom(c1 + 3, 3) - 2 c2 - c1 c2 / 2.
 * Returns the exact rational value; it is an integer iff c1 c2 is even. */
Rat euler_char_p3(const Int& c1, const Int& c2, const Int& m);

// integral variant; throws NonIntegerChi when the value is not an integer
Int euler_char_p3_int(const Int& c1, const Int& c2, const Int& m);

// parity condition c1 c2 = 0 mod 2 for rank-2 bundles on P3
bool schwarzenberger_ok(const Int& c1, const Int& c2);

} // namespace vglab

#endif
