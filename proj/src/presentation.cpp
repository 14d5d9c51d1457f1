#include "vglab/presentation.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace vglab {

FormMatrix::FormMatrix(int rows, int cols, int num_vars)
    : rows_(rows), cols_(cols), num_vars_(num_vars) {
    if (rows < 0 || cols < 0) throw VglabError("form matrix: negative dimension");
    if (num_vars < 1) throw VglabError("form matrix: needs at least one variable");
    a_.assign(static_cast<size_t>(rows) * cols, Form(num_vars, 0));
}

FormMatrix::FormMatrix(const std::vector<std::vector<Form>>& entries) {
    rows_ = static_cast<int>(entries.size());
    cols_ = rows_ ? static_cast<int>(entries[0].size()) : 0;
    num_vars_ = 1;
    for (const auto& row : entries) {
        if (static_cast<int>(row.size()) != cols_) throw VglabError("form matrix: ragged rows");
        for (const Form& f : row) num_vars_ = std::max(num_vars_, f.num_vars());
    }
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : entries)
        for (const Form& f : row) {
            if (f.num_vars() != num_vars_)
                throw VglabError("form matrix: entries disagree on variable count");
            a_.push_back(f);
        }
}

bool FormMatrix::is_zero() const {
    for (const Form& f : a_)
        if (!f.is_zero()) return false;
    return true;
}

RatMatrix FormMatrix::eval(const ProjPoint& p) const {
    return RatMatrix(rows_, cols_, [&](int i, int j) { return at(i, j).eval(p); });
}

RatMatrix FormMatrix::eval(const std::vector<Rat>& x) const {
    return RatMatrix(rows_, cols_, [&](int i, int j) { return at(i, j).eval(x); });
}

FormMatrix FormMatrix::transpose() const {
    FormMatrix t(cols_, rows_, num_vars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

FormMatrix FormMatrix::substitute(const std::vector<Form>& images) const {
    int m = images.empty() ? num_vars_ : images[0].num_vars();
    FormMatrix r(rows_, cols_, m);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).substitute(images);
    return r;
}

FormMatrix operator*(const FormMatrix& a, const FormMatrix& b) {
    if (a.cols_ != b.rows_) throw VglabError("form matrix product: inner dimensions differ");
    if (a.num_vars_ != b.num_vars_) throw VglabError("form matrix product: variable counts differ");
    FormMatrix r(a.rows_, b.cols_, a.num_vars_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < b.cols_; ++k) {
            Form s(a.num_vars_, 0);
            for (int j = 0; j < a.cols_; ++j) {
                const Form& x = a.at(i, j);
                const Form& y = b.at(j, k);
                if (x.is_zero() || y.is_zero()) continue;
                s = s + x * y;
            }
            r.at(i, k) = s;
        }
    return r;
}

void FormMatrix::delete_row(int i) {
    if (i < 0 || i >= rows_) throw VglabError("delete_row: index out of range");
    a_.erase(a_.begin() + static_cast<size_t>(i) * cols_,
             a_.begin() + static_cast<size_t>(i + 1) * cols_);
    --rows_;
}

void FormMatrix::delete_col(int j) {
    if (j < 0 || j >= cols_) throw VglabError("delete_col: index out of range");
    std::vector<Form> b;
    b.reserve(static_cast<size_t>(rows_) * (cols_ - 1));
    for (int i = 0; i < rows_; ++i)
        for (int c = 0; c < cols_; ++c)
            if (c != j) b.push_back(at(i, c));
    a_ = std::move(b);
    --cols_;
}

namespace {

Form det_submatrix(const FormMatrix& m, std::vector<int>& rows, const std::vector<int>& cols,
                   size_t col_pos) {
    const int nv = m.num_vars();
    if (col_pos == cols.size()) return Form::constant(nv, Rat(1));
    Form acc(nv, 0);
    int sign = 1;
    for (size_t r = 0; r < rows.size(); ++r, sign = -sign) {
        const Form& e = m.at(rows[r], cols[col_pos]);
        if (e.is_zero()) continue;
        int saved = rows[r];
        rows.erase(rows.begin() + r);
        Form sub = det_submatrix(m, rows, cols, col_pos + 1);
        rows.insert(rows.begin() + r, saved);
        if (!sub.is_zero()) acc = acc + Rat(sign) * (e * sub);
    }
    return acc;
}

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    if (k > n) return;
    while (true) {
        emit(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) return;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

} // namespace

Form form_det(const FormMatrix& m) {
    if (m.rows() != m.cols()) throw VglabError("form_det: matrix not square");
    std::vector<int> rows(m.rows()), cols(m.cols());
    for (int i = 0; i < m.rows(); ++i) rows[i] = i;
    for (int j = 0; j < m.cols(); ++j) cols[j] = j;
    return det_submatrix(m, rows, cols, 0);
}

std::vector<Form> form_minors(const FormMatrix& m, int size) {
    if (size < 1) throw VglabError("form_minors: size must be positive");
    std::vector<Form> out;
    if (size > m.rows() || size > m.cols()) return out;
    for_each_combination(m.rows(), size, [&](const std::vector<int>& ri) {
        for_each_combination(m.cols(), size, [&](const std::vector<int>& ci) {
            FormMatrix sub(size, size, m.num_vars());
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
            out.push_back(form_det(sub));
        });
    });
    return out;
}

bool minors_vanish(const FormMatrix& m, int size) {
    if (size > m.rows() || size > m.cols()) return true;
    bool all_zero = true;
    for (const Form& f : form_minors(m, size))
        if (!f.is_zero()) all_zero = false;
    return all_zero;
}

ChowClass FreePresentation::total_chern() const {
    ChowClass c = chern_line_sum(n, f0);
    if (!f2.empty()) c = c * chern_line_sum(n, f2);
    if (!f1.empty()) c = c * chern_line_sum(n, f1).inv();
    return c;
}

FreePresentation FreePresentation::twist(int k) const {
    FreePresentation t = *this;
    for (int& d : t.f2) d += k;
    for (int& d : t.f1) d += k;
    for (int& d : t.f0) d += k;
    return t;
}

FreePresentation direct_sum(const FreePresentation& p, const FreePresentation& q) {
    if (p.n != q.n) throw VglabError("direct_sum: presentations live on different spaces");
    FreePresentation r;
    r.n = p.n;
    r.f2 = p.f2;
    r.f2.insert(r.f2.end(), q.f2.begin(), q.f2.end());
    r.f1 = p.f1;
    r.f1.insert(r.f1.end(), q.f1.begin(), q.f1.end());
    r.f0 = p.f0;
    r.f0.insert(r.f0.end(), q.f0.begin(), q.f0.end());
    const int nv = p.n + 1;
    r.a1 = FormMatrix(static_cast<int>(r.f0.size()), static_cast<int>(r.f1.size()), nv);
    for (int i = 0; i < p.a1.rows(); ++i)
        for (int j = 0; j < p.a1.cols(); ++j) r.a1.at(i, j) = p.a1.at(i, j);
    for (int i = 0; i < q.a1.rows(); ++i)
        for (int j = 0; j < q.a1.cols(); ++j)
            r.a1.at(p.a1.rows() + i, p.a1.cols() + j) = q.a1.at(i, j);
    r.a2 = FormMatrix(static_cast<int>(r.f1.size()), static_cast<int>(r.f2.size()), nv);
    for (int i = 0; i < p.a2.rows(); ++i)
        for (int j = 0; j < p.a2.cols(); ++j) r.a2.at(i, j) = p.a2.at(i, j);
    for (int i = 0; i < q.a2.rows(); ++i)
        for (int j = 0; j < q.a2.cols(); ++j)
            r.a2.at(p.a2.rows() + i, p.a2.cols() + j) = q.a2.at(i, j);
    return r;
}

namespace {

void check_graded_entries(const FormMatrix& m, const std::vector<int>& row_deg,
                          const std::vector<int>& col_deg, const char* label) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Form& f = m.at(i, j);
            if (f.is_zero()) continue;
            int want = row_deg[i] - col_deg[j];
            if (want < 0 || f.degree() != want)
                throw VglabError(std::string(label) + " entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ") must be homogeneous of degree " +
                                 std::to_string(want));
        }
}

} // namespace

void validate_presentation(const FreePresentation& p, Rng& rng, int samples) {
    if (p.n < 1) throw VglabError("presentation: ambient dimension must be at least 1");
    const int nv = p.n + 1;
    const int n0 = static_cast<int>(p.f0.size());
    const int n1 = static_cast<int>(p.f1.size());
    const int n2 = static_cast<int>(p.f2.size());
    if (n0 == 0) throw VglabError("presentation: f0 must be nonempty");
    if (n2 > 0 && n1 == 0) throw VglabError("presentation: f2 present without f1");
    if (p.rank() < 1) throw VglabError("presentation: rank must be positive");
    if (p.a1.rows() != n0 || p.a1.cols() != n1)
        throw VglabError("presentation: a1 must be |f0| x |f1|");
    if (n2 > 0 && (p.a2.rows() != n1 || p.a2.cols() != n2))
        throw VglabError("presentation: a2 must be |f1| x |f2|");
    if (n2 == 0 && p.a2.cols() != 0)
        throw VglabError("presentation: a2 must have no columns when f2 is empty");
    if (n1 > 0 && p.a1.num_vars() != nv)
        throw VglabError("presentation: a1 variable count does not match the ambient space");
    if (n2 > 0 && p.a2.num_vars() != nv)
        throw VglabError("presentation: a2 variable count does not match the ambient space");

    check_graded_entries(p.a1, p.f0, p.f1, "presentation: a1");
    if (n2 > 0) {
        check_graded_entries(p.a2, p.f1, p.f2, "presentation: a2");
        if (!(p.a1 * p.a2).is_zero())
            throw VglabError("presentation: a1 * a2 is not zero");
    }

    for (int s = 0; s < samples; ++s) {
        ProjPoint x = random_point(rng, p.n);
        if (n2 > 0 && matrix_rank(p.a2_at(x)) != n2)
            throw VglabError("presentation: a2 drops rank at " + x.str());
        if (n1 > 0 && matrix_rank(p.a1_at(x)) != n1 - n2)
            throw VglabError("presentation: a1 has wrong fiber rank at " + x.str());
    }
}

bool no_common_zero_certificate(const std::vector<Form>& gens, int n, int extra) {
    std::vector<const Form*> live;
    int maxd = 0;
    for (const Form& g : gens) {
        if (g.is_zero()) continue;
        if (g.degree() == 0) return true; // nonzero constant generates everything
        live.push_back(&g);
        maxd = std::max(maxd, g.degree());
    }
    if (live.empty()) return false;
    for (int target = maxd; target <= maxd + extra; ++target) {
        auto basis = monomial_basis(n, target);
        std::vector<std::vector<Rat>> rows;
        for (const Form* g : live) {
            auto mults = monomial_basis(n, target - g->degree());
            for (const Expo& m : mults) {
                std::vector<Rat> row(basis.size(), Rat(0));
                Expo e(n + 1);
                for (const auto& [ge, gc] : g->terms()) {
                    for (int i = 0; i <= n; ++i) e[i] = ge[i] + m[i];
                    row[monomial_index(basis, e)] = gc;
                }
                rows.push_back(std::move(row));
            }
        }
        if (matrix_rank(RatMatrix(rows)) == static_cast<int>(basis.size())) return true;
    }
    return false;
}

bool certify_locally_free(const FreePresentation& p, int extra) {
    const int n1 = static_cast<int>(p.f1.size());
    const int n2 = static_cast<int>(p.f2.size());
    if (n1 == 0) return true; // free sheaf
    const int r1 = n1 - n2;
    if (n2 > 0) {
        if (n2 > 3) return false;
        if (!no_common_zero_certificate(form_minors(p.a2, n2), p.n, extra)) return false;
    }
    if (r1 == 0) return p.a1.is_zero();
    if (r1 > 3) return false;
    if (n2 > 0 && !minors_vanish(p.a1, r1 + 1)) return false;
    return no_common_zero_certificate(form_minors(p.a1, r1), p.n, extra);
}

namespace {

// nonzero degree-0 entry (by the grading lists) and its value, or {-1,-1}
struct UnitEntry {
    int i = -1, j = -1;
    Rat c;
};

UnitEntry find_unit(const FormMatrix& m, const std::vector<int>& row_deg,
                    const std::vector<int>& col_deg) {
    UnitEntry u;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (row_deg[i] != col_deg[j]) continue;
            const Form& f = m.at(i, j);
            if (f.is_zero()) continue;
            u.i = i;
            u.j = j;
            u.c = f.leading_term().second;
            return u;
        }
    return u;
}

} // namespace

FreePresentation minimalize(const FreePresentation& p) {
    FreePresentation q = p;
    while (true) {
        UnitEntry u = find_unit(q.a1, q.f0, q.f1);
        if (u.i >= 0) {
            const Rat inv_c = Rat(1) / u.c;
            // clear row u.i by column operations; a2 rows compensate
            for (int j = 0; j < q.a1.cols(); ++j) {
                if (j == u.j || q.a1.at(u.i, j).is_zero()) continue;
                Form mu = inv_c * q.a1.at(u.i, j); // degree f1[u.j] - f1[j]
                for (int s = 0; s < q.a1.rows(); ++s)
                    q.a1.at(s, j) = q.a1.at(s, j) - mu * q.a1.at(s, u.j);
                for (int k = 0; k < q.a2.cols(); ++k)
                    q.a2.at(u.j, k) = q.a2.at(u.j, k) + mu * q.a2.at(j, k);
            }
            // clear column u.j by row operations; no effect outside a1
            for (int i = 0; i < q.a1.rows(); ++i) {
                if (i == u.i || q.a1.at(i, u.j).is_zero()) continue;
                Form nu = inv_c * q.a1.at(i, u.j);
                for (int t = 0; t < q.a1.cols(); ++t)
                    q.a1.at(i, t) = q.a1.at(i, t) - nu * q.a1.at(u.i, t);
            }
            for (int k = 0; k < q.a2.cols(); ++k)
                if (!q.a2.at(u.j, k).is_zero())
                    throw VglabError("minimalize: relation row did not clear");
            q.a1.delete_row(u.i);
            q.a1.delete_col(u.j);
            if (q.a2.rows() > 0) q.a2.delete_row(u.j);
            q.f0.erase(q.f0.begin() + u.i);
            q.f1.erase(q.f1.begin() + u.j);
            continue;
        }
        UnitEntry v = find_unit(q.a2, q.f1, q.f2);
        if (v.i >= 0) {
            const Rat inv_c = Rat(1) / v.c;
            // clear row v.i by column operations (basis change of f2 only)
            for (int k = 0; k < q.a2.cols(); ++k) {
                if (k == v.j || q.a2.at(v.i, k).is_zero()) continue;
                Form mu = inv_c * q.a2.at(v.i, k);
                for (int s = 0; s < q.a2.rows(); ++s)
                    q.a2.at(s, k) = q.a2.at(s, k) - mu * q.a2.at(s, v.j);
            }
            // clear column v.j by row operations; a1 columns compensate
            for (int j = 0; j < q.a2.rows(); ++j) {
                if (j == v.i || q.a2.at(j, v.j).is_zero()) continue;
                Form nu = inv_c * q.a2.at(j, v.j); // degree f1[j] - f1[v.i]
                for (int k = 0; k < q.a2.cols(); ++k)
                    q.a2.at(j, k) = q.a2.at(j, k) - nu * q.a2.at(v.i, k);
                for (int s = 0; s < q.a1.rows(); ++s)
                    q.a1.at(s, v.i) = q.a1.at(s, v.i) + nu * q.a1.at(s, j);
            }
            for (int s = 0; s < q.a1.rows(); ++s)
                if (!q.a1.at(s, v.i).is_zero())
                    throw VglabError("minimalize: generator column did not clear");
            q.a2.delete_row(v.i);
            q.a2.delete_col(v.j);
            q.a1.delete_col(v.i);
            q.f1.erase(q.f1.begin() + v.i);
            q.f2.erase(q.f2.begin() + v.j);
            continue;
        }
        break;
    }
    return q;
}

FreePresentation restrict_presentation_to_line(const FreePresentation& p, const ProjPoint& P,
                                               const ProjPoint& Q) {
    if (P.dim() != p.n || Q.dim() != p.n)
        throw VglabError("line restriction: points do not live on the ambient space");
    if (P == Q) throw VglabError("line restriction: the two points must be distinct");
    std::vector<Form> images;
    images.reserve(p.n + 1);
    for (int i = 0; i <= p.n; ++i) {
        Form f(2, 1);
        f.set_coeff({1, 0}, Rat(P[i]));
        f.set_coeff({0, 1}, Rat(Q[i]));
        images.push_back(f);
    }
    FreePresentation r;
    r.n = 1;
    r.f2 = p.f2;
    r.f1 = p.f1;
    r.f0 = p.f0;
    r.a1 = p.a1.substitute(images);
    r.a2 = p.a2.substitute(images);
    return r;
}

} // namespace vglab
