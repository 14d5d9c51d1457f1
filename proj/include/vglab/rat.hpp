#ifndef VGLAB_RAT_HPP
#define VGLAB_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>

#include "vglab/errors.hpp"

namespace vglab {

using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int int_abs(const Int& a) { return boost::multiprecision::abs(a); }

/* Exact rational with canonical representation: gcd(num, den) = 1, den > 0.
 * Every arithmetic result is renormalized, so equality is plain field
 * comparison and hashing/ordering are well defined. */
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(int v) : num_(v), den_(1) {}
    Rat(long v) : num_(v), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    Rat(Int v) : num_(std::move(v)), den_(1) {}
    Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw VglabError("rational division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    // accepts "p", "-p", "p/q"
    static Rat parse(const std::string& text);

  private:
    void normalize() {
        if (den_ == 0) throw VglabError("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = int_gcd(int_abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

inline Rat Rat::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (text.empty()) throw ParseError("empty literal");
            return Rat(Int(text));
        }
        if (slash == 0 || slash + 1 == text.size()) throw ParseError("empty part");
        return Rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

// signed binomial coefficient: binom(a, k) = a(a-1)...(a-k+1)/k!, exact for any integer a
inline Int binom(const Int& a, int k) {
    if (k < 0) return 0;
    Int num = 1;
    for (int i = 0; i < k; ++i) num *= a - i;
    Int fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    return num / fact;
}

inline Int ipow(Int base, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace vglab

#endif
