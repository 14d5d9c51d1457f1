#include "vglab/plucker.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace vglab {

int pair_index(int i, int j, int N) {
    if (i < 0 || i >= j || j > N) throw VglabError("pair_index: need 0 <= i < j <= N");
    return i * N - i * (i - 1) / 2 + (j - i - 1);
}

std::pair<int, int> pair_unindex(int idx, int N) {
    if (idx < 0) throw VglabError("pair_unindex: negative index");
    for (int i = 0; i < N; ++i) {
        if (idx < N - i) return {i, i + 1 + idx};
        idx -= N - i;
    }
    throw VglabError("pair_unindex: index out of range");
}

void normalize_map(PluckerMap& m) {
    std::vector<const Form*> nz;
    for (const Form& f : m.p)
        if (!f.is_zero()) nz.push_back(&f);
    if (nz.empty()) return;
    Rat scale = joint_content_scale(nz);
    if (nz.front()->leading_term().second * scale < Rat(0)) scale = -scale;
    if (scale == Rat(1)) return;
    for (Form& f : m.p) f = scale * f;
}

std::vector<Rat> plucker_of_line(const LineInPN& line) {
    if (line.u.size() != line.v.size() || line.u.size() < 2)
        throw VglabError("plucker_of_line: spanning vectors must share length >= 2");
    const int N = static_cast<int>(line.u.size()) - 1;
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(N) * (N + 1) / 2);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j <= N; ++j)
            out.push_back(line.u[static_cast<size_t>(i)] * line.v[static_cast<size_t>(j)] -
                          line.u[static_cast<size_t>(j)] * line.v[static_cast<size_t>(i)]);
    Int den_lcm = 1, num_gcd = 0;
    for (const Rat& c : out) den_lcm = int_lcm(den_lcm, c.den());
    for (const Rat& c : out) num_gcd = int_gcd(num_gcd, int_abs(c.num() * (den_lcm / c.den())));
    if (num_gcd == 0) throw VglabError("plucker_of_line: spanning vectors are dependent");
    Rat scale(den_lcm, num_gcd);
    for (const Rat& c : out)
        if (!c.is_zero()) {
            if (c < Rat(0)) scale = -scale;
            break;
        }
    for (Rat& c : out) c *= scale;
    return out;
}

LineInPN quotient_line_at(const FreePresentation& p, const SectionBasis& sections,
                          const ProjPoint& x) {
    const int n0 = static_cast<int>(p.f0.size());
    std::vector<std::vector<Rat>> phi;
    if (p.f1.empty()) {
        phi.assign(static_cast<size_t>(n0), std::vector<Rat>(static_cast<size_t>(n0), Rat(0)));
        for (int i = 0; i < n0; ++i) phi[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rat(1);
    } else {
        phi = kernel_basis(p.a1.eval(x).transpose());
    }
    if (phi.size() != 2)
        throw VglabError("quotient_line_at: fiber at " + x.str() + " has dimension " +
                         std::to_string(phi.size()) + ", expected 2");
    const int nsec = static_cast<int>(sections.reps.size());
    RatMatrix rows(2, nsec);
    for (int k = 0; k < nsec; ++k) {
        std::vector<Rat> vals = eval_vec(sections.reps[static_cast<size_t>(k)], x);
        for (int r = 0; r < 2; ++r) {
            Rat acc(0);
            for (int i = 0; i < n0; ++i)
                acc += phi[static_cast<size_t>(r)][static_cast<size_t>(i)] *
                       vals[static_cast<size_t>(i)];
            rows.at(r, k) = acc;
        }
    }
    if (matrix_rank(rows) != 2)
        throw NotGloballyGeneratedAt("sections do not span the fiber at " + x.str());
    LineInPN line;
    line.u.resize(static_cast<size_t>(nsec));
    line.v.resize(static_cast<size_t>(nsec));
    for (int k = 0; k < nsec; ++k) {
        line.u[static_cast<size_t>(k)] = rows.at(0, k);
        line.v[static_cast<size_t>(k)] = rows.at(1, k);
    }
    return line;
}

PluckerMap plucker_symbolic_det(const FreePresentation& p, const SectionBasis& sections) {
    if (!p.f2.empty())
        throw ShapeMismatch("determinant construction needs a length-1 presentation");
    const int n0 = static_cast<int>(p.f0.size());
    const int n1 = static_cast<int>(p.f1.size());
    if (n1 != n0 - 2)
        throw ShapeMismatch("determinant construction needs |f1| = |f0| - 2, got " +
                            std::to_string(n1) + " and " + std::to_string(n0));
    const int nsec = static_cast<int>(sections.reps.size());
    if (nsec < 2) throw VglabError("plucker_symbolic_det: need at least two sections");
    int c1 = 0;
    for (int d : p.f0) c1 += d;
    for (int d : p.f1) c1 -= d;

    PluckerMap m;
    m.n = p.n;
    m.N = nsec - 1;
    m.d = c1;
    m.p.reserve(static_cast<size_t>(m.num_pairs()));
    const int v = p.n + 1;
    for (int i = 0; i < m.N; ++i)
        for (int j = i + 1; j <= m.N; ++j) {
            FormMatrix sq(n0, n0, v);
            for (int r = 0; r < n0; ++r) {
                sq.at(r, 0) = sections.reps[static_cast<size_t>(i)][static_cast<size_t>(r)];
                sq.at(r, 1) = sections.reps[static_cast<size_t>(j)][static_cast<size_t>(r)];
                for (int c = 0; c < n1; ++c) sq.at(r, c + 2) = p.a1.at(r, c);
            }
            Form det = form_det(sq);
            if (!det.is_zero() && det.degree() != c1)
                throw DegreeMismatch("coordinate (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") has degree " + std::to_string(det.degree()) +
                                     ", expected c1 = " + std::to_string(c1));
            m.p.push_back(std::move(det));
        }
    bool all_zero = true;
    for (const Form& f : m.p) all_zero = all_zero && f.is_zero();
    if (all_zero) throw VglabError("plucker_symbolic_det: map is identically zero");
    normalize_map(m);
    return m;
}

PluckerMap plucker_symbolic_det(const FreePresentation& p) {
    return plucker_symbolic_det(p, h0_basis(p, 0));
}

PluckerMap plucker_symbolic_det(const BundleSpec& spec) {
    return plucker_symbolic_det(expand_to_presentation(spec));
}

PluckerMap join_map(int n, int a, int d) {
    if (n < 1 || a < 0 || a > d - a) throw VglabError("join_map: need n >= 1 and 0 <= a <= d/2");
    auto ba = monomial_basis(n, a);
    auto bb = monomial_basis(n, d - a);
    const int na = static_cast<int>(ba.size()), nb = static_cast<int>(bb.size());
    PluckerMap m;
    m.n = n;
    m.N = na + nb - 1;
    m.d = d;
    m.p.assign(static_cast<size_t>(m.num_pairs()), Form(n + 1, d));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            Expo e = ba[static_cast<size_t>(i)];
            for (int k = 0; k <= n; ++k) e[static_cast<size_t>(k)] += bb[static_cast<size_t>(j)][static_cast<size_t>(k)];
            m.p[static_cast<size_t>(pair_index(i, na + j, m.N))] = Form::monomial(n + 1, e, Rat(1));
        }
    normalize_map(m);
    return m;
}

namespace {

std::vector<ProjPoint> distinct_points(Rng& rng, int n, int count) {
    std::vector<ProjPoint> out;
    while (static_cast<int>(out.size()) < count) {
        ProjPoint x = random_point(rng, n);
        bool dup = false;
        for (const ProjPoint& y : out) dup = dup || y == x;
        if (!dup) out.push_back(x);
    }
    return out;
}

} // namespace

PluckerMap plucker_interpolated(const FreePresentation& p, const SectionBasis& sections, int degree,
                                Rng& rng) {
    const int n = p.n;
    const int nsec = static_cast<int>(sections.reps.size());
    if (nsec < 2) throw VglabError("plucker_interpolated: need at least two sections");
    const int N = nsec - 1;
    const int P = N * (N + 1) / 2;
    auto mono = monomial_basis(n, degree);
    const int M = static_cast<int>(mono.size());
    const int S = 2 * M;

    for (int attempt = 0; attempt < 10; ++attempt) {
        std::vector<ProjPoint> pts = distinct_points(rng, n, S);
        std::vector<std::vector<Rat>> val;
        val.reserve(static_cast<size_t>(S));
        for (const ProjPoint& x : pts) val.push_back(plucker_of_line(quotient_line_at(p, sections, x)));

        RatMatrix V(S, M, [&](int s, int t) {
            return Form::monomial(n + 1, mono[static_cast<size_t>(t)], Rat(1)).eval(pts[static_cast<size_t>(s)]);
        });
        if (matrix_rank(V) != M) continue;

        int ref = -1;
        for (int c = 0; c < P && ref < 0; ++c) {
            bool all_nonzero = true;
            for (int s = 0; s < S; ++s)
                all_nonzero = all_nonzero && !val[static_cast<size_t>(s)][static_cast<size_t>(c)].is_zero();
            if (all_nonzero) ref = c;
        }
        if (ref < 0) continue;

        std::vector<bool> coord_zero(static_cast<size_t>(P), false);
        for (int c = 0; c < P; ++c) {
            bool z = true;
            for (int s = 0; s < S; ++s)
                z = z && val[static_cast<size_t>(s)][static_cast<size_t>(c)].is_zero();
            coord_zero[static_cast<size_t>(c)] = z;
        }

        auto ratio = [&](int s, int c) {
            return val[static_cast<size_t>(s)][static_cast<size_t>(c)] /
                   val[static_cast<size_t>(s)][static_cast<size_t>(ref)];
        };

        // constraints on the reference coordinate: for every left-null vector u of the
        // Vandermonde and every coordinate c, u^T diag(ratio_c) V annihilates gamma_ref
        std::vector<std::vector<Rat>> null_rows = kernel_basis(V.transpose());
        std::vector<std::vector<Rat>> krows;
        bool saturated = false;
        for (int c = 0; c < P && !saturated; ++c) {
            if (c == ref || coord_zero[static_cast<size_t>(c)]) continue;
            for (const auto& u : null_rows) {
                std::vector<Rat> row(static_cast<size_t>(M), Rat(0));
                for (int s = 0; s < S; ++s) {
                    if (u[static_cast<size_t>(s)].is_zero()) continue;
                    Rat w = u[static_cast<size_t>(s)] * ratio(s, c);
                    for (int t = 0; t < M; ++t) row[static_cast<size_t>(t)] += w * V.at(s, t);
                }
                krows.push_back(std::move(row));
            }
            if (!krows.empty() && matrix_rank(RatMatrix(krows)) == M - 1) saturated = true;
        }
        std::vector<std::vector<Rat>> gamma_space =
            kernel_basis(krows.empty() ? RatMatrix(0, M) : RatMatrix(krows));
        if (gamma_space.size() != 1)
            throw InterpolationInconsistent(
                "coordinate ratios admit a " + std::to_string(gamma_space.size()) +
                "-dimensional space of degree-" + std::to_string(degree) + " reference forms");
        const std::vector<Rat>& gr = gamma_space.front();

        std::vector<Rat> vg(static_cast<size_t>(S), Rat(0)); // V * gamma_ref at the samples
        for (int s = 0; s < S; ++s)
            for (int t = 0; t < M; ++t) vg[static_cast<size_t>(s)] += V.at(s, t) * gr[static_cast<size_t>(t)];

        std::vector<int> solve_cols;
        for (int c = 0; c < P; ++c)
            if (c != ref && !coord_zero[static_cast<size_t>(c)]) solve_cols.push_back(c);
        RatMatrix B(S, static_cast<int>(solve_cols.size()), [&](int s, int k) {
            return ratio(s, solve_cols[static_cast<size_t>(k)]) * vg[static_cast<size_t>(s)];
        });
        SolveResult sol = solve(V, B);
        if (!sol.consistent)
            throw InterpolationInconsistent("coordinate samples are not values of degree-" +
                                            std::to_string(degree) + " forms");

        PluckerMap m;
        m.n = n;
        m.N = N;
        m.d = degree;
        m.p.assign(static_cast<size_t>(P), Form(n + 1, degree));
        auto form_from = [&](const std::vector<Rat>& gamma) {
            Form f(n + 1, degree);
            for (int t = 0; t < M; ++t)
                if (!gamma[static_cast<size_t>(t)].is_zero())
                    f.set_coeff(mono[static_cast<size_t>(t)], gamma[static_cast<size_t>(t)]);
            return f;
        };
        m.p[static_cast<size_t>(ref)] = form_from(gr);
        for (int k = 0; k < static_cast<int>(solve_cols.size()); ++k) {
            std::vector<Rat> gc(static_cast<size_t>(M));
            for (int t = 0; t < M; ++t) gc[static_cast<size_t>(t)] = sol.x.at(t, k);
            m.p[static_cast<size_t>(solve_cols[static_cast<size_t>(k)])] = form_from(gc);
        }

        for (const ProjPoint& x : distinct_points(rng, n, 20)) {
            std::vector<Rat> have = eval_map(m, x);
            std::vector<Rat> want = plucker_of_line(quotient_line_at(p, sections, x));
            if (!projectively_equal(have, want))
                throw InterpolationInconsistent("holdout point " + x.str() +
                                                " disagrees with the fiber line");
        }
        normalize_map(m);
        return m;
    }
    throw VglabError("plucker_interpolated: could not assemble a generic sample set");
}

PluckerMap plucker_interpolated(const FreePresentation& p, Rng& rng) {
    int c1 = 0;
    for (int d : p.f0) c1 += d;
    for (int d : p.f1) c1 -= d;
    for (int d : p.f2) c1 += d;
    return plucker_interpolated(p, h0_basis(p, 0), c1, rng);
}

bool verify_plucker_relations(const PluckerMap& m) {
    for (int i = 0; i <= m.N - 3; ++i)
        for (int j = i + 1; j <= m.N - 2; ++j)
            for (int k = j + 1; k <= m.N - 1; ++k)
                for (int l = k + 1; l <= m.N; ++l) {
                    const Form& pij = m.p[static_cast<size_t>(pair_index(i, j, m.N))];
                    const Form& pkl = m.p[static_cast<size_t>(pair_index(k, l, m.N))];
                    const Form& pik = m.p[static_cast<size_t>(pair_index(i, k, m.N))];
                    const Form& pjl = m.p[static_cast<size_t>(pair_index(j, l, m.N))];
                    const Form& pil = m.p[static_cast<size_t>(pair_index(i, l, m.N))];
                    const Form& pjk = m.p[static_cast<size_t>(pair_index(j, k, m.N))];
                    Form rel = pij * pkl - pik * pjl + pil * pjk;
                    if (!rel.is_zero()) return false;
                }
    return true;
}

std::vector<Rat> eval_map(const PluckerMap& m, const ProjPoint& x) {
    std::vector<Rat> out;
    out.reserve(m.p.size());
    for (const Form& f : m.p) out.push_back(f.eval(x));
    return out;
}

bool projectively_equal(const std::vector<Rat>& u, const std::vector<Rat>& v) {
    if (u.size() != v.size()) throw VglabError("projectively_equal: length mismatch");
    size_t iu = u.size(), iv = v.size();
    for (size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero()) {
            iu = i;
            break;
        }
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) {
            iv = i;
            break;
        }
    if (iu == u.size() || iv == v.size()) return iu == u.size() && iv == v.size();
    if (iu != iv) return false;
    for (size_t i = 0; i < u.size(); ++i)
        if (u[iu] * v[i] != v[iu] * u[i]) return false;
    return true;
}

std::string EmbeddingReport::str() const {
    std::string s;
    s += "base_point_free: ";
    s += base_point_free ? "yes" : "no";
    if (base_point) s += " (witness " + base_point->str() + ")";
    s += "\ninjective: ";
    s += injective ? "yes" : "no";
    if (collision)
        s += " (witness " + collision->first.str() + " ~ " + collision->second.str() + ")";
    s += "\nimmersion: ";
    s += immersion ? "yes" : "no";
    if (critical_point) s += " (witness " + critical_point->str() + ")";
    return s;
}

EmbeddingReport check_embedding(const PluckerMap& m, int trials, std::uint64_t seed) {
    Rng rng(seed);
    EmbeddingReport rep;
    for (int i = 0; i < trials && rep.base_point_free; ++i) {
        ProjPoint x = random_point(rng, m.n);
        bool any = false;
        for (const Form& f : m.p) any = any || !f.eval(x).is_zero();
        if (!any) {
            rep.base_point_free = false;
            rep.base_point = x;
        }
    }
    for (int i = 0; i < trials / 2 && rep.injective; ++i) {
        ProjPoint x = random_point(rng, m.n);
        ProjPoint y = random_point(rng, m.n);
        while (y == x) y = random_point(rng, m.n);
        if (projectively_equal(eval_map(m, x), eval_map(m, y))) {
            rep.injective = false;
            rep.collision = std::make_pair(x, y);
        }
    }
    std::vector<std::vector<Form>> partials;
    partials.reserve(m.p.size());
    for (const Form& f : m.p) {
        std::vector<Form> row;
        for (int v = 0; v <= m.n; ++v) row.push_back(f.is_zero() ? Form(m.n + 1, 0) : f.partial(v));
        partials.push_back(std::move(row));
    }
    for (int i = 0; i < trials / 4 && rep.immersion; ++i) {
        ProjPoint x = random_point(rng, m.n);
        RatMatrix J(static_cast<int>(m.p.size()), m.n + 1, [&](int c, int v) {
            return partials[static_cast<size_t>(c)][static_cast<size_t>(v)].eval(x);
        });
        if (matrix_rank(J) != m.n + 1) {
            rep.immersion = false;
            rep.critical_point = x;
        }
    }
    return rep;
}

void write_plucker(const PluckerMap& m, std::ostream& os) {
    os << m.n << ' ' << m.N << ' ' << m.d << '\n';
    for (int idx = 0; idx < m.num_pairs(); ++idx) {
        const Form& f = m.p[static_cast<size_t>(idx)];
        if (f.is_zero()) continue;
        auto [i, j] = pair_unindex(idx, m.N);
        os << i << ' ' << j << " : " << f.str() << '\n';
    }
}

PluckerMap read_plucker(std::istream& is) {
    PluckerMap m;
    if (!(is >> m.n >> m.N >> m.d)) throw ParseError("plucker header must be 'n N d'");
    if (m.n < 1 || m.N < 1) throw ParseError("plucker header out of range");
    std::string rest;
    std::getline(is, rest);
    m.p.assign(static_cast<size_t>(m.num_pairs()), Form(m.n + 1, m.d));
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        int i = 0, j = 0;
        char colon = 0;
        if (!(ls >> i >> j >> colon) || colon != ':')
            throw ParseError("plucker coordinate line must be 'i j : form'");
        std::string text;
        std::getline(ls, text);
        Form f = Form::parse(text, m.n + 1);
        if (!f.is_zero() && f.degree() != m.d)
            throw ParseError("plucker coordinate degree disagrees with header");
        m.p[static_cast<size_t>(pair_index(i, j, m.N))] = f;
    }
    return m;
}

} // namespace vglab
