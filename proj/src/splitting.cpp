#include "vglab/splitting.hpp"

#include <algorithm>
#include <optional>

namespace vglab {

namespace {

// dense univariate polynomial over Q, coeffs[i] the s^i coefficient, no trailing zeros
using Poly = std::vector<Rat>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly dehomogenize(const Form& f) {
    Poly p(static_cast<size_t>(f.degree()) + 1, Rat(0));
    for (const auto& [e, c] : f.terms()) p[static_cast<size_t>(e[0])] = c;
    trim(p);
    return p;
}

void scale_to_primitive(Poly& p) {
    if (p.empty()) return;
    Int l = 1, g = 0;
    for (const Rat& c : p) l = int_lcm(l, c.den());
    for (const Rat& c : p) g = int_gcd(g, int_abs(c.num() * (l / c.den())));
    Rat s = Rat(l, g);
    if (p.back() < Rat(0)) s = -s;
    for (Rat& c : p) c *= s;
}

Poly poly_mod(Poly a, const Poly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = poly_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
        scale_to_primitive(b);
    }
    scale_to_primitive(a);
    return a;
}

int min_exponent(const Form& f, int var) {
    int e = f.degree();
    for (const auto& [ex, c] : f.terms()) e = std::min(e, ex[var]);
    return e;
}

// all positive divisors by trial division; empty when v has too many to enumerate cheaply
std::vector<Int> small_divisors(Int v) {
    v = int_abs(v);
    std::vector<Int> out;
    if (v == 0) return out;
    for (Int d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v) out.push_back(v / d);
        }
        if (out.size() > 512 || d > 100000) return {};
    }
    return out;
}

// a rational zero (u:v) of the binary form g, if one exists and is cheap to find
std::optional<std::pair<Rat, Rat>> rational_zero(const Form& g) {
    if (g.is_zero()) return std::make_pair(Rat(1), Rat(0));
    if (min_exponent(g, 1) > 0) return std::make_pair(Rat(1), Rat(0));
    if (min_exponent(g, 0) > 0) return std::make_pair(Rat(0), Rat(1));
    Poly p = dehomogenize(g);
    if (p.size() <= 1) return std::nullopt;
    scale_to_primitive(p);
    if (p.size() == 2) return std::make_pair(-p[0] / p[1], Rat(1));
    std::vector<Int> nums = small_divisors(p.front().num());
    std::vector<Int> dens = small_divisors(p.back().num());
    for (const Int& u : nums)
        for (const Int& v : dens)
            for (int sign : {1, -1}) {
                Rat root(sign * u, v);
                Rat acc(0), pw(1);
                for (const Rat& c : p) {
                    acc += c * pw;
                    pw *= root;
                }
                if (acc.is_zero()) return std::make_pair(root, Rat(1));
            }
    return std::nullopt;
}

} // namespace

Form binary_gcd(const std::vector<Form>& forms) {
    Poly g;
    int common_t = -1;
    for (const Form& f : forms) {
        if (f.is_zero()) continue;
        if (f.num_vars() != 2) throw VglabError("binary_gcd: forms must be binary");
        int tf = min_exponent(f, 1);
        common_t = common_t < 0 ? tf : std::min(common_t, tf);
        g = g.empty() ? dehomogenize(f) : poly_gcd(g, dehomogenize(f));
    }
    if (common_t < 0) return Form(2, 0);
    scale_to_primitive(g);
    int deg = static_cast<int>(g.size()) - 1;
    Form out(2, deg + common_t);
    for (int i = 0; i <= deg; ++i)
        if (!g[static_cast<size_t>(i)].is_zero())
            out.set_coeff({i, deg - i + common_t}, g[static_cast<size_t>(i)]);
    return out;
}

namespace {

[[noreturn]] void report_degenerate(const Form& g, const ProjPoint& P, const ProjPoint& Q) {
    if (g.is_zero())
        throw DegenerateLine("cokernel is degenerate along the whole line through " + P.str() +
                             " and " + Q.str());
    auto root = rational_zero(g);
    if (root) {
        std::vector<Rat> coords;
        for (size_t i = 0; i < P.size(); ++i)
            coords.push_back(root->first * Rat(P[i]) + root->second * Rat(Q[i]));
        throw DegenerateLine("cokernel drops rank at " + ProjPoint(coords).str() +
                             " on the line through " + P.str() + " and " + Q.str());
    }
    throw DegenerateLine("cokernel drops rank on the line through " + P.str() + " and " + Q.str() +
                         " at the zero locus of " + g.str() + " (no rational point)");
}

} // namespace

SplittingType restrict_to_line(const FreePresentation& p, const ProjPoint& P, const ProjPoint& Q) {
    if (p.rank() != 2) throw VglabError("splitting type: cokernel must have rank 2");
    FreePresentation rl = restrict_presentation_to_line(p, P, Q);

    const int n2 = static_cast<int>(rl.f2.size());
    const int r1 = static_cast<int>(rl.f1.size()) - n2;
    if (n2 > 0) {
        Form g = binary_gcd(form_minors(rl.a2, n2));
        if (g.is_zero() || g.degree() > 0) report_degenerate(g, P, Q);
    }
    if (r1 > 0) {
        Form g = binary_gcd(form_minors(rl.a1, r1));
        if (g.is_zero() || g.degree() > 0) report_degenerate(g, P, Q);
    }

    int c1 = 0;
    for (int d : rl.f0) c1 += d;
    for (int d : rl.f1) c1 -= d;
    for (int d : rl.f2) c1 += d;

    auto h0_at = [&](int m) { return h0(rl, m); };
    int b;
    if (h0_at(0) > 0) {
        int m = 0;
        while (h0_at(m) > 0) {
            --m;
            if (m < -64) throw VglabError("splitting type: h0 ladder does not terminate");
        }
        b = -m - 1;
    } else {
        int m = 1;
        while (h0_at(m) == 0) {
            ++m;
            if (m > 64) throw VglabError("splitting type: h0 ladder does not terminate");
        }
        b = -m;
    }
    int a = c1 - b;
    if (a > b) throw VglabError("splitting type: ladder inversion produced a > b");
    for (int m = -b - 2; m <= std::max(-a + 1, 1); ++m) {
        Int want = Int(std::max(a + m + 1, 0)) + Int(std::max(b + m + 1, 0));
        if (h0_at(m) != want)
            throw VglabError("splitting type: restricted sections do not match a split bundle");
    }
    return SplittingType{a, b};
}

SplittingType restrict_to_line(const BundleSpec& spec, const ProjPoint& P, const ProjPoint& Q) {
    return restrict_to_line(expand_to_presentation(spec), P, Q);
}

} // namespace vglab
