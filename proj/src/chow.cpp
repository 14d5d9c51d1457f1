#include "vglab/chow.hpp"

#include <cctype>
#include <sstream>

namespace vglab {

namespace {
void require_same_n(const ChowClass& a, const ChowClass& b) {
    if (a.n() != b.n()) throw VglabError("mismatched ambient dimensions");
}
} // namespace

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
    require_same_n(a, b);
    ChowClass r(a.n());
    for (int i = 0; i <= a.n(); ++i) r.set_coeff(i, a.coeff(i) + b.coeff(i));
    return r;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) {
    require_same_n(a, b);
    ChowClass r(a.n());
    for (int i = 0; i <= a.n(); ++i) r.set_coeff(i, a.coeff(i) - b.coeff(i));
    return r;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    require_same_n(a, b);
    ChowClass r(a.n());
    for (int i = 0; i <= a.n(); ++i)
        for (int j = 0; i + j <= a.n(); ++j) r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
    return r;
}

ChowClass ChowClass::inv() const {
    const Int& u = coeff(0);
    if (u != 1 && u != -1) throw NonInvertibleClass("constant term must be +-1, got " + u.str());
    // b0 = 1/u; b_k = -(1/u) sum_{i=1..k} a_i b_{k-i}
    ChowClass b(n());
    b.set_coeff(0, u); // 1/u = u for u = +-1
    for (int k = 1; k <= n(); ++k) {
        Int acc = 0;
        for (int i = 1; i <= k; ++i) acc += coeff(i) * b.coeff(k - i);
        b.set_coeff(k, -u * acc);
    }
    return b;
}

std::string ChowClass::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= n(); ++i) {
        const Int& c = coeff(i);
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

ChowClass ChowClass::parse(const std::string& text, int n) {
    ChowClass r(n);
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    bool any = false;
    while (true) {
        skip();
        if (pos >= text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (any) {
            throw ParseError("expected + or - in chow class at position " + std::to_string(pos));
        }
        Int mag = 1;
        bool saw_number = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::string digits;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
            mag = Int(digits);
            saw_number = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
            }
        }
        int power = 0;
        if (pos < text.size() && text[pos] == 't') {
            ++pos;
            power = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::string digits;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
                if (digits.empty()) throw ParseError("missing exponent after ^ in chow class");
                power = std::stoi(digits);
            }
        } else if (!saw_number) {
            throw ParseError("expected coefficient or t in chow class at position " + std::to_string(pos));
        }
        if (power > n) throw ParseError("t power exceeds ambient dimension " + std::to_string(n));
        r.set_coeff(power, r.coeff(power) + Int(sign) * mag);
        any = true;
    }
    if (!any) throw ParseError("empty chow class");
    return r;
}

ChowClass chern_line_sum(int n, const std::vector<int>& degrees) {
    ChowClass r = ChowClass::one(n);
    for (int d : degrees) r = r * ChowClass::line_bundle(n, d);
    return r;
}

ChowClass chern_twist(const ChowClass& c, int rank, int k) {
    const int n = c.n();
    ChowClass r(n);
    for (int i = 0; i <= n; ++i) {
        Int acc = 0;
        for (int j = 0; j <= i; ++j) acc += binom(Int(rank - j), i - j) * c.coeff(j) * ipow(Int(k), i - j);
        r.set_coeff(i, acc);
    }
    return r;
}

ChowClass chern_omega_twist(int n, int k) {
    if (n < 2) throw VglabError("cotangent classes need ambient dimension >= 2");
    ChowClass omega = ChowClass::one(n);
    for (int i = 0; i <= n; ++i) omega.set_coeff(i, binom(Int(n + 1), i) * (i % 2 ? Int(-1) : Int(1)));
    return chern_twist(omega, n, k);
}

ChowClass chern_sym2_omega1_p2() { return chern_line_sum(2, {1, 1, 1}).inv(); }

ChernData chern_data(const ChowClass& total, int rank) {
    if (total.coeff(0) != 1) throw VglabError("total chern class must start at 1");
    ChernData d;
    d.rank = rank;
    d.c1 = total.n() >= 1 ? total.coeff(1) : Int(0);
    d.c2 = total.n() >= 2 ? total.coeff(2) : Int(0);
    d.c3 = total.n() >= 3 ? total.coeff(3) : Int(0);
    return d;
}

Int chi_line_bundle(int n, const Int& a) { return binom(a + n, n); }

Int euler_char_p2(const Int& c1, const Int& c2, const Int& m) {
    const Int c1m = c1 + 2 * m;
    const Int c2m = c2 + c1 * m + m * m;
    const Int num = 3 * c1m + c1m * c1m - 2 * c2m;
    // c1'(c1'+3) is even, so the division is exact
    return 2 + num / 2;
}

Rat euler_char_p3(const Int& c1, const Int& c2, const Int& m) {
    const Rat mm(m);
    const Rat rc1(c1), rc2(c2);
    return mm * mm * mm / Rat(3) + (Rat(2) + rc1 / Rat(2)) * mm * mm +
           (Rat(11, 3) + Rat(2) * rc1 + rc1 * rc1 / Rat(2) - rc2) * mm + Rat(1) +
           Rat(binom(c1 + 3, 3)) - Rat(2) * rc2 - rc1 * rc2 / Rat(2);
}

Int euler_char_p3_int(const Int& c1, const Int& c2, const Int& m) {
    Rat v = euler_char_p3(c1, c2, m);
    if (!v.is_integer())
        throw NonIntegerChi("chi(E(" + m.str() + ")) = " + v.str() + " is not an integer for (c1,c2) = (" +
                            c1.str() + "," + c2.str() + ")");
    return v.num();
}

bool schwarzenberger_ok(const Int& c1, const Int& c2) { return (c1 * c2) % 2 == 0; }

} // namespace vglab
