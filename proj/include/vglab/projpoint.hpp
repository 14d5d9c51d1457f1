#ifndef VGLAB_PROJPOINT_HPP
#define VGLAB_PROJPOINT_HPP

#include <string>
#include <vector>

#include "vglab/rat.hpp"
#include "vglab/rng.hpp"

namespace vglab {

/* Point of P^n with the canonical integer representative: denominators
 * cleared, gcd of coordinates 1, first nonzero coordinate positive.
 * Equality of normalized representatives is projective equality, and
 * form evaluation "at a point" means at this representative. */
class ProjPoint {
  public:
    explicit ProjPoint(const std::vector<Rat>& coords) { normalize_from(coords); }
    explicit ProjPoint(const std::vector<Int>& coords) {
        std::vector<Rat> rs(coords.begin(), coords.end());
        normalize_from(rs);
    }
    explicit ProjPoint(std::initializer_list<long long> coords) {
        std::vector<Rat> rs;
        for (long long c : coords) rs.emplace_back(c);
        normalize_from(rs);
    }

    int dim() const { return static_cast<int>(coords_.size()) - 1; } // ambient P^n
    const std::vector<Int>& coords() const { return coords_; }
    const Int& operator[](size_t i) const { return coords_[i]; }
    size_t size() const { return coords_.size(); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.coords_ < b.coords_; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ":";
            s += coords_[i].str();
        }
        return s + ")";
    }

    // accepts "a,b,c" or "a:b:c", entries rational
    static ProjPoint parse(const std::string& text, int expect_n = -1);

  private:
    void normalize_from(const std::vector<Rat>& coords) {
        if (coords.empty()) throw VglabError("empty projective point");
        Int l = 1;
        for (const Rat& c : coords) l = int_lcm(l, c.den());
        coords_.reserve(coords.size());
        for (const Rat& c : coords) coords_.push_back(c.num() * (l / c.den()));
        Int g = 0;
        for (const Int& c : coords_) g = int_gcd(g, int_abs(c));
        if (g == 0) throw VglabError("zero vector is not a projective point");
        for (Int& c : coords_) c /= g;
        for (const Int& c : coords_) {
            if (c != 0) {
                if (c < 0)
                    for (Int& d : coords_) d = -d;
                break;
            }
        }
    }

    std::vector<Int> coords_;
};

inline ProjPoint ProjPoint::parse(const std::string& text, int expect_n) {
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') t += c;
    std::vector<Rat> cs;
    std::string cur;
    for (char c : t) {
        if (c == ',' || c == ':') {
            cs.push_back(Rat::parse(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) cs.push_back(Rat::parse(cur));
    if (cs.empty()) throw ParseError("empty point '" + text + "'");
    if (expect_n >= 0 && static_cast<int>(cs.size()) != expect_n + 1)
        throw ParseError("point '" + text + "' has " + std::to_string(cs.size()) +
                         " coordinates, expected " + std::to_string(expect_n + 1));
    return ProjPoint(cs);
}

/* Random point of P^n with integer coordinates in [-9, 9]; all-zero draws
 * rejected, at most 64 resamples before giving up. */
inline ProjPoint random_point(Rng& rng, int n) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Int> cs(n + 1);
        bool nonzero = false;
        for (int i = 0; i <= n; ++i) {
            long long v = rng.int_in(-9, 9);
            cs[i] = v;
            if (v != 0) nonzero = true;
        }
        if (nonzero) return ProjPoint(cs);
    }
    throw VglabError("could not sample a nonzero point in 64 attempts");
}

} // namespace vglab

#endif
