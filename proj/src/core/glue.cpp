#include "indlift/core/glue.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace indlift {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
};

} // namespace

std::optional<GlueResult> glue_setlike(Kind kind, int q,
                                       const std::vector<StructObject>& objs,
                                       const GlueArrows& arrows) {
    std::vector<int> offset;
    int total = 0;
    for (const auto& o : objs) {
        offset.push_back(total);
        total += o.n;
    }
    UnionFind uf(total);
    for (const auto& [s, d, tab] : arrows)
        for (int p = 0; p < objs[s].n; ++p)
            uf.unite(offset[s] + p, offset[d] + (*tab)[p]);

    // class representatives in first-occurrence order
    std::vector<int> cls_pos(total, -1);
    int m = 0;
    for (int i = 0; i < total; ++i)
        if (uf.find(i) == i) cls_pos[i] = m++;
    auto pos_of = [&](int flat) { return cls_pos[uf.find(flat)]; };

    GlueResult res;
    res.obj.kind = kind;
    res.obj.n = int16_t(m);
    res.obj.q = int8_t(q);
    for (size_t i = 0; i < objs.size(); ++i) {
        std::vector<int16_t> tab(objs[i].n);
        for (int p = 0; p < objs[i].n; ++p) tab[p] = int16_t(pos_of(offset[int(i)] + p));
        res.inj.push_back(std::move(tab));
    }

    if (kind == Kind::Graph || kind == Kind::SigmaGraph) {
        for (size_t i = 0; i < objs.size(); ++i)
            for (auto& e : objs[i].edges) {
                int u = res.inj[i][e.first], v = res.inj[i][e.second];
                if (u == v) return std::nullopt; // edge collapsed to a loop
                res.obj.edges.emplace_back(int16_t(std::min(u, v)), int16_t(std::max(u, v)));
            }
        res.obj.normalize_edges();
    }
    if (kind == Kind::SigmaSet || kind == Kind::SigmaGraph) {
        res.obj.endo.assign(m, -1);
        for (size_t i = 0; i < objs.size(); ++i)
            for (int p = 0; p < objs[i].n; ++p) {
                int u = res.inj[i][p], v = res.inj[i][objs[i].endo[p]];
                if (res.obj.endo[u] != -1 && res.obj.endo[u] != v) return std::nullopt;
                res.obj.endo[u] = int16_t(v);
            }
        for (auto v : res.obj.endo)
            if (v < 0) return std::nullopt; // would need elements outside the diagram
    }
    if (kind == Kind::BinFunc) {
        res.obj.form.assign(size_t(m) * m, -1);
        for (size_t i = 0; i < objs.size(); ++i)
            for (int p = 0; p < objs[i].n; ++p)
                for (int p2 = 0; p2 < objs[i].n; ++p2) {
                    int u = res.inj[i][p], v = res.inj[i][p2];
                    int8_t val = int8_t(objs[i].form_at(p, p2));
                    int8_t& slot = res.obj.form[size_t(u) * m + v];
                    if (slot != -1 && slot != val) return std::nullopt;
                    slot = val;
                }
        for (auto& v : res.obj.form)
            if (v == -1) v = 0; // unconstrained pairs stay zero
    }
    if (!valid_object(res.obj)) return std::nullopt;
    return res;
}

std::optional<GlueResult> glue_veclike(Kind kind, int q,
                                       const std::vector<StructObject>& objs,
                                       const GlueArrows& arrows) {
    const Field& F = Field::get(q);
    std::vector<int> offset;
    int total_dim = 0;
    for (const auto& o : objs) {
        offset.push_back(total_dim);
        total_dim += o.dim;
    }
    // relations: embed_s(basis_k) - embed_d(image of basis_k)
    FqMatrix rel(0, total_dim);
    std::vector<int8_t> row(total_dim);
    for (const auto& [s, d, tab] : arrows)
        for (int k = 0; k < objs[s].dim; ++k) {
            std::fill(row.begin(), row.end(), 0);
            row[offset[s] + k] = 1;
            auto img = vec_digits(q, objs[d].dim, (*tab)[vec_basis_elem(q, k)]);
            for (int j = 0; j < objs[d].dim; ++j)
                row[offset[d] + j] = int8_t(F.sub(row[offset[d] + j], img[j]));
            rel.a.insert(rel.a.end(), row.begin(), row.end());
            rel.rows++;
        }
    FqMatrix red = rel;
    std::vector<int> pivots = rref(F, red);
    std::vector<char> is_pivot(total_dim, 0);
    for (int p : pivots) is_pivot[p] = 1;
    int wdim = total_dim - int(pivots.size());

    // reduce a vector modulo the relation row space, read off free coords
    auto reduce = [&](std::vector<int8_t> x) {
        for (size_t i = 0; i < pivots.size(); ++i) {
            int c = x[pivots[i]];
            if (c == 0) continue;
            for (int j = 0; j < total_dim; ++j)
                x[j] = int8_t(F.sub(x[j], F.mul(c, red.at(int(i), j))));
        }
        std::vector<int8_t> w;
        for (int j = 0; j < total_dim; ++j)
            if (!is_pivot[j]) w.push_back(x[j]);
        return w;
    };

    GlueResult res;
    // injections: map every carrier element linearly
    std::vector<std::vector<std::vector<int8_t>>> basis_img(objs.size());
    for (size_t i = 0; i < objs.size(); ++i) {
        basis_img[i].resize(objs[i].dim);
        for (int k = 0; k < objs[i].dim; ++k) {
            std::vector<int8_t> x(total_dim, 0);
            x[offset[i] + k] = 1;
            basis_img[i][k] = reduce(std::move(x));
        }
        std::vector<int16_t> tab(objs[i].n);
        for (int e = 0; e < objs[i].n; ++e) {
            auto digs = vec_digits(q, objs[i].dim, e);
            std::vector<int8_t> w(wdim, 0);
            for (int k = 0; k < objs[i].dim; ++k)
                for (int j = 0; j < wdim; ++j)
                    w[j] = int8_t(F.add(w[j], F.mul(digs[k], basis_img[i][k][j])));
            tab[e] = int16_t(vec_id(q, w));
        }
        res.inj.push_back(std::move(tab));
    }

    if (kind == Kind::VecSpace) {
        res.obj = make_vec(q, wdim);
        return res;
    }
    // Bilinear: solve for a Gram matrix consistent with every piece
    int unknowns = wdim * wdim;
    FqMatrix eqs(0, unknowns);
    std::vector<int8_t> rhs;
    for (size_t i = 0; i < objs.size(); ++i) {
        auto gram = gram_of(objs[i]);
        for (int k = 0; k < objs[i].dim; ++k)
            for (int l = 0; l < objs[i].dim; ++l) {
                std::vector<int8_t> row2(unknowns, 0);
                for (int u = 0; u < wdim; ++u)
                    for (int v = 0; v < wdim; ++v)
                        row2[u * wdim + v] = int8_t(
                            F.mul(basis_img[i][k][u], basis_img[i][l][v]));
                eqs.a.insert(eqs.a.end(), row2.begin(), row2.end());
                eqs.rows++;
                rhs.push_back(int8_t(gram[k * objs[i].dim + l]));
            }
    }
    auto sol = solve(F, eqs, rhs);
    if (!sol) return std::nullopt;
    std::vector<int> gram(unknowns);
    for (int i = 0; i < unknowns; ++i) gram[i] = (*sol)[i];
    res.obj = make_bilinear(q, wdim, gram);
    // the solved Gram matrix satisfies basis constraints, hence all of them
    return res;
}

PullbackData pullback_setlike(Kind kind, const StructObject& A, const StructObject& B,
                              const StructObject& D, const std::vector<int16_t>& a,
                              const std::vector<int16_t>& b) {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < A.n; ++x)
        for (int y = 0; y < B.n; ++y)
            if (a[x] == b[y]) pairs.emplace_back(x, y);
    PullbackData pd;
    pd.apex.kind = kind;
    pd.apex.q = A.q;
    pd.apex.n = int16_t(pairs.size());
    pd.to_a.resize(pairs.size());
    pd.to_b.resize(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        pd.to_a[i] = int16_t(pairs[i].first);
        pd.to_b[i] = int16_t(pairs[i].second);
    }
    auto index_of = [&](int x, int y) {
        return int(std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(x, y)) -
                   pairs.begin());
    };
    if (kind == Kind::Graph || kind == Kind::SigmaGraph) {
        for (size_t i = 0; i < pairs.size(); ++i)
            for (size_t j = i + 1; j < pairs.size(); ++j)
                if (A.has_edge(pairs[i].first, pairs[j].first) &&
                    B.has_edge(pairs[i].second, pairs[j].second))
                    pd.apex.edges.emplace_back(int16_t(i), int16_t(j));
        pd.apex.normalize_edges();
    }
    if (kind == Kind::SigmaSet || kind == Kind::SigmaGraph) {
        pd.apex.endo.resize(pairs.size());
        for (size_t i = 0; i < pairs.size(); ++i)
            pd.apex.endo[i] =
                int16_t(index_of(A.endo[pairs[i].first], B.endo[pairs[i].second]));
    }
    if (kind == Kind::BinFunc) {
        pd.apex.form.resize(pairs.size() * pairs.size());
        for (size_t i = 0; i < pairs.size(); ++i)
            for (size_t j = 0; j < pairs.size(); ++j)
                pd.apex.form[i * pairs.size() + j] =
                    int8_t(A.form_at(pairs[i].first, pairs[j].first));
    }
    return pd;
}

FqMatrix linear_matrix(const StructObject& A, const StructObject& B,
                       const std::vector<int16_t>& tab) {
    FqMatrix m(B.dim, A.dim);
    for (int k = 0; k < A.dim; ++k) {
        auto img = vec_digits(A.q, B.dim, tab[vec_basis_elem(A.q, k)]);
        for (int j = 0; j < B.dim; ++j) m.set(j, k, img[j]);
    }
    return m;
}

std::vector<int16_t> linear_tab(const StructObject& A, const StructObject& B,
                                const FqMatrix& m) {
    const Field& F = Field::get(A.q);
    std::vector<int16_t> tab(A.n);
    for (int e = 0; e < A.n; ++e) {
        auto digs = vec_digits(A.q, A.dim, e);
        std::vector<int8_t> img(B.dim, 0);
        for (int k = 0; k < A.dim; ++k)
            for (int j = 0; j < B.dim; ++j)
                img[j] = int8_t(F.add(img[j], F.mul(digs[k], m.at(j, k))));
        tab[e] = int16_t(vec_id(A.q, img));
    }
    return tab;
}

PullbackData pullback_veclike(Kind kind, const StructObject& A, const StructObject& B,
                              const StructObject& D, const std::vector<int16_t>& a,
                              const std::vector<int16_t>& b) {
    const Field& F = Field::get(A.q);
    FqMatrix ma = linear_matrix(A, D, a), mb = linear_matrix(B, D, b);
    FqMatrix joint(D.dim, A.dim + B.dim);
    for (int i = 0; i < D.dim; ++i) {
        for (int j = 0; j < A.dim; ++j) joint.set(i, j, ma.at(i, j));
        for (int j = 0; j < B.dim; ++j) joint.set(i, A.dim + j, F.neg(mb.at(i, j)));
    }
    auto kb = kernel_basis(F, joint);
    int k = int(kb.size());
    PullbackData pd;
    StructObject apex = make_vec(A.q, k);
    pd.to_a.resize(apex.n);
    pd.to_b.resize(apex.n);
    for (int e = 0; e < apex.n; ++e) {
        auto digs = vec_digits(A.q, k, e);
        std::vector<int8_t> xa(A.dim, 0), xb(B.dim, 0);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < A.dim; ++j) xa[j] = int8_t(F.add(xa[j], F.mul(digs[i], kb[i][j])));
            for (int j = 0; j < B.dim; ++j)
                xb[j] = int8_t(F.add(xb[j], F.mul(digs[i], kb[i][A.dim + j])));
        }
        pd.to_a[e] = int16_t(vec_id(A.q, xa));
        pd.to_b[e] = int16_t(vec_id(A.q, xb));
    }
    if (kind == Kind::Bilinear) {
        std::vector<int> gram(size_t(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                gram[i * k + j] = A.form_at(pd.to_a[vec_basis_elem(A.q, i)],
                                            pd.to_a[vec_basis_elem(A.q, j)]);
        pd.apex = make_bilinear(A.q, k, gram);
    } else {
        pd.apex = apex;
    }
    return pd;
}

FactorizeResult image_factorize_setlike(const StructObject& A, const StructObject& B,
                                        const std::vector<int16_t>& tab, bool induced) {
    std::vector<int16_t> img; // image positions in B, sorted
    {
        std::vector<char> seen(B.n, 0);
        for (auto v : tab) seen[v] = 1;
        for (int p = 0; p < B.n; ++p)
            if (seen[p]) img.push_back(int16_t(p));
    }
    std::vector<int> pos_in_mid(B.n, -1);
    for (size_t i = 0; i < img.size(); ++i) pos_in_mid[img[i]] = int(i);

    FactorizeResult r;
    r.mid.kind = A.kind;
    r.mid.q = A.q;
    r.mid.n = int16_t(img.size());
    r.e_tab.resize(A.n);
    for (int p = 0; p < A.n; ++p) r.e_tab[p] = int16_t(pos_in_mid[tab[p]]);
    r.m_tab.assign(img.begin(), img.end());

    if (A.kind == Kind::Graph || A.kind == Kind::SigmaGraph) {
        if (induced) {
            for (size_t i = 0; i < img.size(); ++i)
                for (size_t j = i + 1; j < img.size(); ++j)
                    if (B.has_edge(img[i], img[j]))
                        r.mid.edges.emplace_back(int16_t(i), int16_t(j));
        } else {
            for (auto& e : A.edges) {
                int u = r.e_tab[e.first], v = r.e_tab[e.second];
                if (u != v)
                    r.mid.edges.emplace_back(int16_t(std::min(u, v)),
                                             int16_t(std::max(u, v)));
            }
        }
        r.mid.normalize_edges();
    }
    if (A.kind == Kind::SigmaSet || A.kind == Kind::SigmaGraph) {
        r.mid.endo.resize(img.size());
        for (size_t i = 0; i < img.size(); ++i)
            r.mid.endo[i] = int16_t(pos_in_mid[B.endo[img[i]]]);
    }
    if (A.kind == Kind::BinFunc) {
        r.mid.form.resize(img.size() * img.size());
        for (size_t i = 0; i < img.size(); ++i)
            for (size_t j = 0; j < img.size(); ++j)
                r.mid.form[i * img.size() + j] = int8_t(B.form_at(img[i], img[j]));
    }
    return r;
}

FactorizeResult image_factorize_vec(const StructObject& A, const StructObject& B,
                                    const std::vector<int16_t>& tab) {
    const Field& F = Field::get(A.q);
    FqMatrix m = linear_matrix(A, B, tab); // B.dim x A.dim
    // column space basis via rref of the transpose
    FqMatrix t(A.dim, B.dim);
    for (int i = 0; i < B.dim; ++i)
        for (int j = 0; j < A.dim; ++j) t.set(j, i, m.at(i, j));
    FqMatrix tr = t;
    std::vector<int> piv = rref(F, tr);
    int r = int(piv.size());
    // rows 0..r-1 of tr form a basis of the image (as row vectors in B)
    FactorizeResult res;
    res.mid = make_vec(A.q, r);
    // m_tab: mid -> B by the basis rows
    FqMatrix basis(B.dim, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < B.dim; ++j) basis.set(j, i, tr.at(i, j));
    res.m_tab = linear_tab(res.mid, B, basis);
    // e_tab: A -> mid, coordinates of each image in the basis
    res.e_tab.resize(A.n);
    for (int e = 0; e < A.n; ++e) {
        auto img = vec_digits(A.q, B.dim, tab[e]);
        auto sol = solve(F, basis, img);
        res.e_tab[e] = int16_t(vec_id(A.q, *sol));
    }
    return res;
}

} // namespace indlift
