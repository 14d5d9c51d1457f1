#include "vglab/cohomology.hpp"

namespace vglab {

Int bott_h0(int n, int d) { return d < 0 ? Int(0) : binom(Int(d) + n, n); }

Int bott_hn(int n, int d) { return bott_h0(n, -d - n - 1); }

Int bott_h(int n, int i, int d) {
    if (i == 0) return bott_h0(n, d);
    if (i == n) return bott_hn(n, d);
    return 0;
}

RatMatrix mult_matrix(const Form& f, int n, int d_src) {
    const int d_dst = d_src + f.degree();
    if (d_src < 0 || d_dst < 0)
        return RatMatrix(d_dst < 0 ? 0 : static_cast<int>(monomial_basis(n, d_dst).size()),
                         d_src < 0 ? 0 : static_cast<int>(monomial_basis(n, d_src).size()));
    auto src = monomial_basis(n, d_src);
    auto dst = monomial_basis(n, d_dst);
    RatMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    if (f.is_zero()) return m;
    Expo e(n + 1);
    for (size_t c = 0; c < src.size(); ++c)
        for (const auto& [fe, fc] : f.terms()) {
            for (int i = 0; i <= n; ++i) e[i] = fe[i] + src[c][i];
            m.at(monomial_index(dst, e), static_cast<int>(c)) = fc;
        }
    return m;
}

namespace {

std::vector<int> block_offsets(const std::vector<int>& degs, int n, int m, int dual) {
    std::vector<int> off(degs.size() + 1, 0);
    for (size_t i = 0; i < degs.size(); ++i) {
        int d = dual ? -(degs[i] + m) - n - 1 : degs[i] + m;
        off[i + 1] = off[i] + static_cast<int>(bott_h0(n, d).convert_to<long long>());
    }
    return off;
}

void paste_block(RatMatrix& big, const RatMatrix& blk, int r0, int c0) {
    for (int i = 0; i < blk.rows(); ++i)
        for (int j = 0; j < blk.cols(); ++j) {
            const Rat& v = blk.at(i, j);
            if (!v.is_zero()) big.at(r0 + i, c0 + j) = v;
        }
}

} // namespace

RatMatrix h0_map(const FormMatrix& a, const std::vector<int>& row_deg,
                 const std::vector<int>& col_deg, int n, int m) {
    auto roff = block_offsets(row_deg, n, m, 0);
    auto coff = block_offsets(col_deg, n, m, 0);
    RatMatrix big(roff.back(), coff.back());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            if (col_deg[j] + m < 0 || row_deg[i] + m < 0) continue;
            paste_block(big, mult_matrix(a.at(i, j), n, col_deg[j] + m), roff[i], coff[j]);
        }
    return big;
}

RatMatrix hn_map(const FormMatrix& a, const std::vector<int>& row_deg,
                 const std::vector<int>& col_deg, int n, int m) {
    auto roff = block_offsets(row_deg, n, m, 1);
    auto coff = block_offsets(col_deg, n, m, 1);
    RatMatrix big(roff.back(), coff.back());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            // dual multiplication runs from the row slot's dual degree to the column slot's
            int src = -(row_deg[i] + m) - n - 1;
            if (src < 0 || -(col_deg[j] + m) - n - 1 < 0) continue;
            paste_block(big, mult_matrix(a.at(i, j), n, src).transpose(), roff[i], coff[j]);
        }
    return big;
}

namespace {

Int kernel_dim(const RatMatrix& m) { return Int(m.cols() - matrix_rank(m)); }

Int sum_bott(const std::vector<int>& degs, int n, int i, int m) {
    Int s = 0;
    for (int d : degs) s += bott_h(n, i, d + m);
    return s;
}

} // namespace

std::vector<Int> cohomology_at(const FreePresentation& p, int m) {
    const int n = p.n;
    std::vector<Int> h(static_cast<size_t>(n) + 1, Int(0));
    RatMatrix h0a1 = h0_map(p.a1, p.f0, p.f1, n, m);
    const int rank_h0a1 = matrix_rank(h0a1);
    // sections are exact at the middle slot for an exact complex
    if (Int(h0a1.cols() - rank_h0a1) != sum_bott(p.f2, n, 0, m))
        throw VglabError("cohomology: section-level kernel does not match f2; complex not exact");

    if (n == 1) {
        RatMatrix h1a1 = hn_map(p.a1, p.f0, p.f1, 1, m);
        h[0] = sum_bott(p.f0, 1, 0, m) - rank_h0a1 + kernel_dim(h1a1) - sum_bott(p.f2, 1, 1, m);
        h[1] = sum_bott(p.f0, 1, 1, m) - matrix_rank(h1a1);
        if (h[0] < 0 || h[1] < 0)
            throw VglabError("cohomology: negative dimension; presentation is not exact");
        return h;
    }

    RatMatrix hna1 = hn_map(p.a1, p.f0, p.f1, n, m);
    const int rank_hna1 = matrix_rank(hna1);
    Int ker_hna2 = 0;
    int rank_hna2 = 0;
    if (p.length_two()) {
        RatMatrix hna2 = hn_map(p.a2, p.f1, p.f2, n, m);
        rank_hna2 = matrix_rank(hna2);
        ker_hna2 = kernel_dim(hna2);
    }
    h[0] = sum_bott(p.f0, n, 0, m) - rank_h0a1;
    h[static_cast<size_t>(n) - 2] += ker_hna2; // lands in h0 itself when n = 2
    h[static_cast<size_t>(n) - 1] = kernel_dim(hna1) - rank_hna2;
    h[static_cast<size_t>(n)] = sum_bott(p.f0, n, n, m) - rank_hna1;
    for (const Int& v : h)
        if (v < 0) throw VglabError("cohomology: negative dimension; presentation is not exact");
    return h;
}

CohomologyTable cohomology_table(const FreePresentation& p, int m_lo, int m_hi) {
    if (m_lo > m_hi) throw VglabError("cohomology table: empty twist range");
    CohomologyTable t;
    t.n = p.n;
    t.m_lo = m_lo;
    for (int m = m_lo; m <= m_hi; ++m) t.rows.push_back(cohomology_at(p, m));
    return t;
}

CohomologyTable cohomology_table(const BundleSpec& spec, int m_lo, int m_hi) {
    return cohomology_table(expand_to_presentation(spec), m_lo, m_hi);
}

Int h0(const FreePresentation& p, int m) { return cohomology_at(p, m)[0]; }

SectionBasis h0_basis(const FreePresentation& p, int m) {
    const int n = p.n;
    SectionBasis b;
    b.n = n;
    b.m = m;
    b.f0 = p.f0;

    RatMatrix h0a1 = h0_map(p.a1, p.f0, p.f1, n, m);
    Int quotient_dim = Int(h0a1.rows() - matrix_rank(h0a1));
    Int actual = cohomology_at(p, m)[0];
    if (actual != quotient_dim)
        throw VglabError("section basis: h0 has contributions beyond the section quotient at this twist");

    auto off = block_offsets(p.f0, n, m, 0);
    std::vector<std::vector<Expo>> bases(p.f0.size());
    for (size_t i = 0; i < p.f0.size(); ++i)
        if (p.f0[i] + m >= 0) bases[i] = monomial_basis(n, p.f0[i] + m);

    auto unit_vec = [&](int c) {
        FormVec v;
        for (size_t i = 0; i < p.f0.size(); ++i) {
            Form f(n + 1, p.f0[i] + m);
            if (c >= off[i] && c < off[i + 1]) f.set_coeff(bases[i][c - off[i]], Rat(1));
            v.push_back(f);
        }
        return v;
    };

    std::vector<int> pivots = pivot_columns(h0a1.transpose());
    std::vector<char> is_pivot(static_cast<size_t>(h0a1.rows()), 0);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
    for (int c = 0; c < h0a1.rows(); ++c)
        if (!is_pivot[static_cast<size_t>(c)]) b.reps.push_back(unit_vec(c));

    for (size_t j = 0; j < p.f1.size(); ++j) {
        if (p.f1[j] + m < 0) continue;
        for (const Expo& e : monomial_basis(n, p.f1[j] + m)) {
            Form mono = Form::monomial(n + 1, e, Rat(1));
            FormVec rel;
            for (size_t i = 0; i < p.f0.size(); ++i) {
                Form entry = p.a1.at(static_cast<int>(i), static_cast<int>(j));
                Form prod(n + 1, p.f0[i] + m);
                if (!entry.is_zero()) prod = entry * mono;
                rel.push_back(prod);
            }
            b.relations.push_back(std::move(rel));
        }
    }
    return b;
}

SectionBasis h0_basis(const BundleSpec& spec) { return h0_basis(expand_to_presentation(spec)); }

} // namespace vglab
