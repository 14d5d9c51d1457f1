#include "vglab/dsl.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "vglab/errors.hpp"

namespace vglab {
namespace {

std::string strip_ws(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// split at top-level separators; () [] {} all nest
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if (depth < 0) throw ParseError("unbalanced brackets in '" + s + "'");
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw ParseError("unbalanced brackets in '" + s + "'");
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& text) {
    std::string t = strip_ws(text);
    try {
        size_t used = 0;
        int v = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + strip_ws(text) + "'");
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::string t = strip_ws(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ParseError("expected [d0,d1,..], got '" + t + "'");
    std::string inner = strip_ws(t.substr(1, t.size() - 2));
    std::vector<int> out;
    if (inner.empty()) return out;
    for (const std::string& p : split_top(inner, ',')) out.push_back(parse_int(p));
    return out;
}

std::vector<std::vector<std::string>> parse_rows(const std::string& text) {
    std::string t = strip_ws(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ParseError("expected [[..],[..],..], got '" + t + "'");
    std::string inner = strip_ws(t.substr(1, t.size() - 2));
    std::vector<std::vector<std::string>> rows;
    if (inner.empty()) return rows;
    for (const std::string& raw : split_top(inner, ',')) {
        std::string r = strip_ws(raw);
        if (r.size() < 2 || r.front() != '[' || r.back() != ']')
            throw ParseError("expected a [..] row, got '" + r + "'");
        std::string ri = strip_ws(r.substr(1, r.size() - 2));
        std::vector<std::string> entries;
        if (!ri.empty())
            for (const std::string& e : split_top(ri, ',')) entries.push_back(strip_ws(e));
        rows.push_back(std::move(entries));
    }
    return rows;
}

FormMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows, int expect_rows,
                            int expect_cols, int num_vars, const std::string& name) {
    if (static_cast<int>(rows.size()) != expect_rows)
        throw ParseError(name + " has " + std::to_string(rows.size()) + " rows, expected " +
                         std::to_string(expect_rows));
    FormMatrix m(expect_rows, expect_cols, num_vars);
    for (int i = 0; i < expect_rows; ++i) {
        if (static_cast<int>(rows[i].size()) != expect_cols)
            throw ParseError(name + " row " + std::to_string(i) + " has " +
                             std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(expect_cols));
        for (int j = 0; j < expect_cols; ++j) m.at(i, j) = Form::parse(rows[i][j], num_vars);
    }
    return m;
}

BundleSpec parse_coker(const std::string& body, int ambient, bool ambient_explicit) {
    std::optional<int> n_key;
    std::optional<std::vector<int>> f2, f1, f0;
    std::optional<std::vector<std::vector<std::string>>> a1_rows, a2_rows;
    for (const std::string& raw : split_top(body, ';')) {
        std::string field = strip_ws(raw);
        if (field.empty()) continue;
        size_t eq = field.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value inside coker{..}, got '" + field + "'");
        std::string key = strip_ws(field.substr(0, eq));
        std::string val = strip_ws(field.substr(eq + 1));
        if (key == "n") n_key = parse_int(val);
        else if (key == "F2") f2 = parse_int_list(val);
        else if (key == "F1") f1 = parse_int_list(val);
        else if (key == "F0") f0 = parse_int_list(val);
        else if (key == "A" || key == "A1") a1_rows = parse_rows(val);
        else if (key == "A2") a2_rows = parse_rows(val);
        else
            throw ParseError("unknown coker key '" + key + "' (expected n, F2, F1, F0, A, A2)");
    }
    int n = n_key.value_or(ambient);
    if (ambient_explicit && n_key && *n_key != ambient)
        throw ParseError("coker n=" + std::to_string(*n_key) + " disagrees with the @P" +
                         std::to_string(ambient) + " tag");
    if (n < 1) throw ParseError("coker needs ambient dimension n >= 1");
    if (!f1 || !f0) throw ParseError("coker{..} needs F1=[..] and F0=[..]");
    if (!a1_rows) throw ParseError("coker{..} needs A=[[..],..]");

    FreePresentation p;
    p.n = n;
    p.f1 = *f1;
    p.f0 = *f0;
    if (f2) p.f2 = *f2;
    int nv = n + 1;
    p.a1 = matrix_from_rows(*a1_rows, static_cast<int>(p.f0.size()),
                            static_cast<int>(p.f1.size()), nv, "A");
    if (!p.f2.empty()) {
        if (!a2_rows) throw ParseError("coker with F2 needs A2=[[..],..]");
        p.a2 = matrix_from_rows(*a2_rows, static_cast<int>(p.f1.size()),
                                static_cast<int>(p.f2.size()), nv, "A2");
    } else {
        if (a2_rows && !a2_rows->empty()) throw ParseError("A2 given without F2");
        p.a2 = FormMatrix(static_cast<int>(p.f1.size()), 0, nv);
    }

    Rng rng(0xD51u);
    validate_presentation(p, rng, 25);
    return BundleSpec::from_presentation(p);
}

BundleSpec parse_atom(const std::string& text, int ambient, bool ambient_explicit) {
    std::string t = strip_ws(text);
    if (t.empty()) throw ParseError("empty summand");
    auto paren_arg = [&](size_t open) {
        if (t[open] != '(' || t.back() != ')')
            throw ParseError("expected (..) in '" + t + "'");
        return t.substr(open + 1, t.size() - open - 2);
    };
    if (t.rfind("case:", 0) == 0) {
        std::string id = strip_ws(t.substr(5));
        if (id.empty()) throw ParseError("case: needs an id");
        const CatalogCase& c =
            id.find('@') != std::string::npos ? catalog_case(id) : catalog_case(id, ambient);
        if (ambient_explicit && c.n != ambient)
            throw ParseError("case '" + id + "' lives on P^" + std::to_string(c.n) +
                             " but the spec tag says P^" + std::to_string(ambient));
        return c.spec;
    }
    if (t.rfind("coker", 0) == 0) {
        std::string rest = strip_ws(t.substr(5));
        if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
            throw ParseError("coker needs {..}, got '" + t + "'");
        return parse_coker(rest.substr(1, rest.size() - 2), ambient, ambient_explicit);
    }
    if (t.rfind("Sym2Omega(", 0) == 0) {
        if (ambient != 2) throw ParseError("Sym2Omega(..) is only available on P^2");
        return BundleSpec::sym2_omega_twist(parse_int(paren_arg(9)));
    }
    if (t.rfind("Omega(", 0) == 0) {
        if (ambient != 2) throw ParseError("Omega(..) is only available on P^2");
        return BundleSpec::omega_twist(parse_int(paren_arg(5)));
    }
    if (t.rfind("O(", 0) == 0) return BundleSpec::line_sum(ambient, {parse_int(paren_arg(1))});
    throw ParseError("cannot read summand '" + t +
                     "' (expected O(d), Omega(k), Sym2Omega(k), case:<id>, or coker{..})");
}

BundleSpec parse_term(const std::string& text, int ambient, bool ambient_explicit) {
    std::string t = strip_ws(text);
    size_t caret = std::string::npos;
    int depth = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if (c == '^' && depth == 0) caret = i;
    }
    int copies = 1;
    if (caret != std::string::npos) {
        copies = parse_int(t.substr(caret + 1));
        if (copies < 1) throw ParseError("summand exponent must be >= 1 in '" + t + "'");
        t = strip_ws(t.substr(0, caret));
    }
    BundleSpec one = parse_atom(t, ambient, ambient_explicit);
    BundleSpec out = one;
    for (int i = 1; i < copies; ++i) out.add(one);
    return out;
}

} // namespace

BundleSpec parse_spec(const std::string& text) {
    std::string t = strip_ws(text);
    if (t.empty()) throw ParseError("empty bundle spec");

    /* A trailing depth-zero '@P<k>' names the ambient space for the whole
     * spec; a lone 'case:id@Pk' ends the same way and means the same thing. */
    int ambient = 2;
    bool ambient_explicit = false;
    {
        size_t at = std::string::npos;
        int depth = 0;
        for (size_t i = 0; i < t.size(); ++i) {
            char c = t[i];
            if (c == '(' || c == '[' || c == '{') ++depth;
            if (c == ')' || c == ']' || c == '}') --depth;
            if (c == '@' && depth == 0) at = i;
        }
        if (at != std::string::npos) {
            std::string tag = strip_ws(t.substr(at + 1));
            bool tail_tag = tag.size() >= 2 && tag[0] == 'P';
            for (size_t i = 1; tail_tag && i < tag.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(tag[i]))) tail_tag = false;
            if (tail_tag) {
                ambient = parse_int(tag.substr(1));
                ambient_explicit = true;
                t = strip_ws(t.substr(0, at));
                if (t.empty()) throw ParseError("ambient tag without a bundle spec");
            }
        }
    }
    if (ambient < 1) throw ParseError("ambient space must be at least P^1");

    BundleSpec out;
    bool first = true;
    for (const std::string& part : split_top(t, '+')) {
        BundleSpec s = parse_term(part, ambient, ambient_explicit);
        if (first) {
            out = s;
            first = false;
        } else {
            if (s.n != out.n)
                throw ParseError("summands live on different ambient spaces (P^" +
                                 std::to_string(out.n) + " vs P^" + std::to_string(s.n) + ")");
            out.add(s);
        }
    }
    return out;
}

std::pair<int, int> parse_twist_range(const std::string& text) {
    std::string t = strip_ws(text);
    size_t dots = t.find("..");
    if (dots == std::string::npos) {
        int v = parse_int(t);
        return {v, v};
    }
    int a = parse_int(t.substr(0, dots));
    int b = parse_int(t.substr(dots + 2));
    if (a > b) throw ParseError("twist range '" + t + "' has lower bound above upper");
    return {a, b};
}

std::pair<ProjPoint, ProjPoint> parse_line_points(const std::string& text, int n) {
    std::vector<std::string> parts = split_top(text, ';');
    if (parts.size() != 2)
        throw ParseError("expected 'P;Q' with two points, got '" + strip_ws(text) + "'");
    ProjPoint P = ProjPoint::parse(strip_ws(parts[0]), n);
    ProjPoint Q = ProjPoint::parse(strip_ws(parts[1]), n);
    if (P == Q) throw ParseError("a line needs two distinct points");
    return {P, Q};
}

} // namespace vglab
