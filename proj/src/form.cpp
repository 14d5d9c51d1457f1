#include "vglab/form.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vglab {

static void enumerate_expos(int vars_left, int deg_left, Expo& cur, std::vector<Expo>& out) {
    if (vars_left == 1) {
        cur.push_back(deg_left);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = deg_left; e >= 0; --e) {
        cur.push_back(e);
        enumerate_expos(vars_left - 1, deg_left - e, cur, out);
        cur.pop_back();
    }
}

std::vector<Expo> monomial_basis(int n, int d) {
    if (n < 0) throw VglabError("monomial_basis: negative ambient dimension");
    std::vector<Expo> out;
    if (d < 0) return out;
    Expo cur;
    cur.reserve(n + 1);
    enumerate_expos(n + 1, d, cur, out);
    return out;
}

int monomial_index(const std::vector<Expo>& basis, const Expo& e) {
    auto it = std::lower_bound(basis.begin(), basis.end(), e, GrlexPrecede{});
    if (it == basis.end() || *it != e) throw VglabError("monomial_index: exponent not in basis");
    return static_cast<int>(it - basis.begin());
}

Form Form::monomial(int num_vars, const Expo& e, const Rat& coeff) {
    if (static_cast<int>(e.size()) != num_vars) throw VglabError("monomial: exponent length mismatch");
    int d = 0;
    for (int x : e) {
        if (x < 0) throw VglabError("monomial: negative exponent");
        d += x;
    }
    Form f(num_vars, d);
    if (!coeff.is_zero()) f.terms_[e] = coeff;
    return f;
}

void Form::set_coeff(const Expo& e, const Rat& c) {
    if (static_cast<int>(e.size()) != num_vars_) throw VglabError("set_coeff: exponent length mismatch");
    int d = 0;
    for (int x : e) d += x;
    if (d != degree_) throw VglabError("set_coeff: wrong degree for this form");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

std::pair<Expo, Rat> Form::leading_term() const {
    if (terms_.empty()) throw VglabError("leading_term of zero form");
    return *terms_.begin();
}

Form Form::operator-() const {
    Form r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Form operator+(const Form& a, const Form& b) {
    if (a.num_vars_ != b.num_vars_) throw VglabError("form addition: mismatched num_vars");
    if (a.is_zero()) {
        Form r = b;
        if (b.is_zero()) r.degree_ = std::max(a.degree_, b.degree_);
        return r;
    }
    if (b.is_zero()) return a;
    if (a.degree_ != b.degree_) throw VglabError("form addition: mismatched degrees");
    Form r = a;
    for (const auto& [e, c] : b.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

Form operator-(const Form& a, const Form& b) { return a + (-b); }

Form operator*(const Form& a, const Form& b) {
    if (a.num_vars_ != b.num_vars_) throw VglabError("form_mul: mismatched num_vars");
    Form r(a.num_vars_, a.degree_ + b.degree_);
    if (a.is_zero() || b.is_zero()) return r;
    Expo e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
            Rat prod = ca * cb;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_[e] = prod;
            } else {
                it->second += prod;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

Form operator*(const Rat& c, const Form& f) {
    Form r(f.num_vars_, f.degree_);
    if (c.is_zero()) return r;
    r.terms_ = f.terms_;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

Rat Form::eval(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != num_vars_) throw VglabError("eval: wrong coordinate count");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat m = c;
        for (int i = 0; i < num_vars_; ++i)
            for (int k = 0; k < e[i]; ++k) m *= x[i];
        acc += m;
    }
    return acc;
}

Rat Form::eval(const ProjPoint& p) const {
    if (static_cast<int>(p.size()) != num_vars_) throw VglabError("eval: point/form dimension mismatch");
    // integer representative keeps the accumulation in Z until the final coefficient product
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Int m = 1;
        for (int i = 0; i < num_vars_; ++i)
            for (int k = 0; k < e[i]; ++k) m *= p[i];
        acc += c * Rat(m);
    }
    return acc;
}

Form Form::partial(int i) const {
    if (i < 0 || i >= num_vars_) throw VglabError("partial: variable index out of range");
    Form r(num_vars_, degree_ > 0 ? degree_ - 1 : 0);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Expo d = e;
        d[i] -= 1;
        r.terms_[d] = c * Rat(e[i]);
    }
    return r;
}

Form Form::substitute(const std::vector<Form>& images) const {
    if (static_cast<int>(images.size()) != num_vars_) throw VglabError("substitute: wrong image count");
    int m = images[0].num_vars();
    int k = images[0].degree();
    for (const Form& g : images) {
        if (g.num_vars() != m || g.degree() != k) throw VglabError("substitute: images must share vars/degree");
    }
    Form acc(m, degree_ * k);
    for (const auto& [e, c] : terms_) {
        Form term = Form::constant(m, c);
        for (int i = 0; i < num_vars_; ++i)
            for (int p = 0; p < e[i]; ++p) term = term * images[i];
        // c * (product of degree-k forms) has degree sum(e) * k = degree_ * k
        acc = acc + term;
    }
    return acc;
}

static std::string monomial_str(const Expo& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c.abs();
        std::string mon = monomial_str(e);
        std::string body;
        if (mon.empty())
            body = a.str();
        else if (a == Rat(1))
            body = mon;
        else
            body = a.str() + "*" + mon;
        if (first) {
            out += (c.sign() < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

namespace {

struct FormLexer {
    const std::string& s;
    size_t i = 0;
    explicit FormLexer(const std::string& text) : s(text) {}
    void skip_ws() {
        while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip_ws();
        return s[i++];
    }
    std::string number() { // digits possibly followed by /digits
        skip_ws();
        size_t j = i;
        while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw ParseError("expected number at '" + s.substr(i) + "'");
        std::string num = s.substr(i, j - i);
        i = j;
        if (peek() == '/') {
            ++i;
            skip_ws();
            size_t k = i;
            while (k < s.size() && isdigit(static_cast<unsigned char>(s[k]))) ++k;
            if (k == i) throw ParseError("expected denominator in '" + s + "'");
            num += "/" + s.substr(i, k - i);
            i = k;
        }
        return num;
    }
    int integer() {
        skip_ws();
        size_t j = i;
        while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw ParseError("expected integer at '" + s.substr(i) + "'");
        int v = std::stoi(s.substr(i, j - i));
        i = j;
        return v;
    }
};

} // namespace

Form Form::parse(const std::string& text, int num_vars) {
    FormLexer lx(text);
    if (lx.eof()) throw ParseError("empty polynomial");
    Form acc(num_vars, 0);
    bool first_term = true;
    bool have_degree = false;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            sign = (c == '-') ? -1 : 1;
        } else if (!first_term) {
            throw ParseError("expected '+' or '-' between terms in '" + text + "'");
        }
        first_term = false;

        Rat coeff(sign);
        Expo e(num_vars, 0);
        bool saw_factor = false;
        if (isdigit(static_cast<unsigned char>(lx.peek()))) {
            coeff = coeff * Rat::parse(lx.number());
            saw_factor = true;
            if (lx.peek() == '*') lx.get();
        }
        while (lx.peek() == 'x') {
            lx.get();
            int idx = lx.integer();
            if (idx < 0 || idx >= num_vars)
                throw ParseError("variable x" + std::to_string(idx) + " out of range (num_vars=" +
                                 std::to_string(num_vars) + ")");
            int exp = 1;
            if (lx.peek() == '^') {
                lx.get();
                exp = lx.integer();
            }
            e[idx] += exp;
            saw_factor = true;
            if (lx.peek() == '*') {
                lx.get();
                if (lx.peek() != 'x' && !isdigit(static_cast<unsigned char>(lx.peek())))
                    throw ParseError("dangling '*' in '" + text + "'");
                if (isdigit(static_cast<unsigned char>(lx.peek()))) coeff = coeff * Rat::parse(lx.number());
            }
        }
        if (!saw_factor) throw ParseError("expected term at '" + text + "'");

        int d = 0;
        for (int x : e) d += x;
        if (!have_degree) {
            acc = Form(num_vars, d);
            have_degree = true;
        } else if (!acc.is_zero() && d != acc.degree()) {
            throw ParseError("inhomogeneous polynomial '" + text + "'");
        } else if (acc.is_zero()) {
            acc = Form(num_vars, d);
        }
        acc = acc + Form::monomial(num_vars, e, coeff);
    }
    return acc;
}

Form random_form(Rng& rng, int num_vars, int degree, long long lo, long long hi) {
    Form f(num_vars, degree);
    for (const Expo& e : monomial_basis(num_vars - 1, degree))
        f = f + Form::monomial(num_vars, e, Rat(rng.int_in(lo, hi)));
    return f;
}

std::vector<Rat> eval_vec(const FormVec& v, const ProjPoint& p) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (const Form& f : v) out.push_back(f.eval(p));
    return out;
}

Rat joint_content_scale(const std::vector<const Form*>& forms) {
    Int den_lcm = 1;
    for (const Form* f : forms)
        for (const auto& [e, c] : f->terms()) den_lcm = int_lcm(den_lcm, c.den());
    Int num_gcd = 0;
    for (const Form* f : forms)
        for (const auto& [e, c] : f->terms()) num_gcd = int_gcd(num_gcd, int_abs(c.num() * (den_lcm / c.den())));
    if (num_gcd == 0) return Rat(1);
    return Rat(den_lcm, num_gcd);
}

} // namespace vglab
