#include "indlift/core/object.hpp"

#include <algorithm>
#include <stdexcept>

namespace indlift {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Set: return "set";
        case Kind::Graph: return "graph";
        case Kind::VecSpace: return "vec";
        case Kind::Bilinear: return "bilinear";
        case Kind::BinFunc: return "binfunc";
        case Kind::SigmaSet: return "sigma-set";
        case Kind::SigmaGraph: return "sigma-graph";
        case Kind::Product: return "product";
        case Kind::Tagged: return "tagged";
    }
    return "?";
}

bool StructObject::has_edge(int x, int y) const {
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    auto p = std::make_pair<int16_t, int16_t>(int16_t(x), int16_t(y));
    return std::binary_search(edges.begin(), edges.end(), p);
}

void StructObject::normalize_edges() {
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

int StructObject::size_measure() const {
    switch (kind) {
        case Kind::VecSpace:
        case Kind::Bilinear:
            return dim;
        case Kind::Product: {
            int m = 0;
            for (const auto& c : comps) m = std::max(m, c.size_measure());
            return m;
        }
        case Kind::Tagged:
            return comps[0].size_measure();
        default:
            return n;
    }
}

std::string StructObject::encode() const {
    std::string s;
    s.push_back(char(kind));
    s.push_back(char(n & 0xff));
    s.push_back(char((n >> 8) & 0xff));
    s.push_back(char(q));
    s.push_back(char(dim));
    s.push_back(char(tag + 1));
    for (auto& e : edges) {
        s.push_back(char(e.first));
        s.push_back(char(e.second));
    }
    s.push_back('|');
    for (auto v : endo) s.push_back(char(v));
    s.push_back('|');
    for (auto v : form) s.push_back(char(v));
    s.push_back('|');
    for (const auto& c : comps) {
        std::string inner = c.encode();
        s.push_back(char(inner.size() & 0xff));
        s.push_back(char((inner.size() >> 8) & 0xff));
        s += inner;
    }
    return s;
}

int vec_add(const Field& F, int dim, int x, int y) {
    int q = F.order(), r = 0, p = 1;
    for (int i = 0; i < dim; ++i) {
        r += F.add(x % q, y % q) * p;
        x /= q;
        y /= q;
        p *= q;
    }
    return r;
}

int vec_scale(const Field& F, int dim, int c, int x) {
    int q = F.order(), r = 0, p = 1;
    for (int i = 0; i < dim; ++i) {
        r += F.mul(c, x % q) * p;
        x /= q;
        p *= q;
    }
    return r;
}

int vec_basis_elem(int q, int i) {
    int p = 1;
    for (int k = 0; k < i; ++k) p *= q;
    return p;
}

std::vector<int> product_offsets(const StructObject& prod) {
    std::vector<int> off;
    int acc = 0;
    for (const auto& c : prod.comps) {
        off.push_back(acc);
        acc += c.n;
    }
    off.push_back(acc);
    return off;
}

StructObject make_set(int n) {
    StructObject o;
    o.kind = Kind::Set;
    o.n = int16_t(n);
    return o;
}

StructObject make_graph(int n, std::vector<std::pair<int16_t, int16_t>> edges) {
    StructObject o;
    o.kind = Kind::Graph;
    o.n = int16_t(n);
    o.edges = std::move(edges);
    o.normalize_edges();
    return o;
}

StructObject make_vec(int q, int dim) {
    StructObject o;
    o.kind = Kind::VecSpace;
    o.q = int8_t(q);
    o.dim = int8_t(dim);
    int n = 1;
    for (int i = 0; i < dim; ++i) n *= q;
    o.n = int16_t(n);
    return o;
}

StructObject make_bilinear(int q, int dim, const std::vector<int>& gram) {
    StructObject o = make_vec(q, dim);
    o.kind = Kind::Bilinear;
    const Field& F = Field::get(q);
    o.form.assign(size_t(o.n) * o.n, 0);
    // expand the Gram matrix bilinearly over the whole carrier
    for (int x = 0; x < o.n; ++x) {
        for (int y = 0; y < o.n; ++y) {
            int acc = 0, xi = x;
            for (int i = 0; i < dim; ++i, xi /= q) {
                int ci = xi % q;
                if (ci == 0) continue;
                int yj = y;
                for (int j = 0; j < dim; ++j, yj /= q) {
                    int cj = yj % q;
                    if (cj == 0) continue;
                    acc = F.add(acc, F.mul(F.mul(ci, cj), gram[i * dim + j]));
                }
            }
            o.form[x * o.n + y] = int8_t(acc);
        }
    }
    return o;
}

StructObject make_binfunc(int q, int n, std::vector<int8_t> table) {
    StructObject o;
    o.kind = Kind::BinFunc;
    o.q = int8_t(q);
    o.n = int16_t(n);
    o.form = std::move(table);
    return o;
}

StructObject make_sigma_set(int n, std::vector<int16_t> endo) {
    StructObject o;
    o.kind = Kind::SigmaSet;
    o.n = int16_t(n);
    o.endo = std::move(endo);
    return o;
}

StructObject make_sigma_graph(int n, std::vector<std::pair<int16_t, int16_t>> edges,
                              std::vector<int16_t> endo) {
    StructObject o;
    o.kind = Kind::SigmaGraph;
    o.n = int16_t(n);
    o.edges = std::move(edges);
    o.normalize_edges();
    o.endo = std::move(endo);
    return o;
}

StructObject make_product(std::vector<StructObject> comps) {
    StructObject o;
    o.kind = Kind::Product;
    int n = 0;
    for (const auto& c : comps) n += c.n;
    o.n = int16_t(n);
    o.comps = std::move(comps);
    return o;
}

StructObject make_tagged(int tag, StructObject inner) {
    StructObject o;
    o.kind = Kind::Tagged;
    o.tag = int8_t(tag);
    o.n = inner.n;
    o.comps.push_back(std::move(inner));
    return o;
}

std::vector<int> gram_of(const StructObject& bil) {
    std::vector<int> g(size_t(bil.dim) * bil.dim);
    for (int i = 0; i < bil.dim; ++i)
        for (int j = 0; j < bil.dim; ++j)
            g[i * bil.dim + j] =
                bil.form_at(vec_basis_elem(bil.q, i), vec_basis_elem(bil.q, j));
    return g;
}

bool valid_object(const StructObject& o) {
    switch (o.kind) {
        case Kind::Set:
            return o.n >= 0;
        case Kind::Graph:
            for (auto& e : o.edges)
                if (e.first < 0 || e.second >= o.n || e.first >= e.second) return false;
            return true;
        case Kind::VecSpace: {
            if (!Field::supported(o.q)) return false;
            int n = 1;
            for (int i = 0; i < o.dim; ++i) n *= o.q;
            return o.n == n;
        }
        case Kind::Bilinear: {
            if (!Field::supported(o.q)) return false;
            if (int(o.form.size()) != int(o.n) * o.n) return false;
            // bilinearity in both arguments over the carrier
            const Field& F = Field::get(o.q);
            for (int x = 0; x < o.n; ++x)
                for (int y = 0; y < o.n; ++y)
                    for (int z = 0; z < o.n; ++z) {
                        if (o.form_at(vec_add(F, o.dim, x, y), z) !=
                            F.add(o.form_at(x, z), o.form_at(y, z)))
                            return false;
                        if (o.form_at(z, vec_add(F, o.dim, x, y)) !=
                            F.add(o.form_at(z, x), o.form_at(z, y)))
                            return false;
                    }
            return true;
        }
        case Kind::BinFunc:
            return Field::supported(o.q) && int(o.form.size()) == int(o.n) * o.n;
        case Kind::SigmaSet: {
            if (int(o.endo.size()) != o.n) return false;
            for (auto v : o.endo)
                if (v < 0 || v >= o.n) return false;
            return true;
        }
        case Kind::SigmaGraph: {
            if (int(o.endo.size()) != o.n) return false;
            for (auto v : o.endo)
                if (v < 0 || v >= o.n) return false;
            // the endomorphism must be a graph homomorphism
            for (auto& e : o.edges)
                if (!o.has_edge(o.endo[e.first], o.endo[e.second])) return false;
            return true;
        }
        case Kind::Product: {
            int n = 0;
            for (const auto& c : o.comps) {
                if (!valid_object(c)) return false;
                n += c.n;
            }
            return n == o.n;
        }
        case Kind::Tagged:
            return o.comps.size() == 1 && o.tag >= 0 && valid_object(o.comps[0]) &&
                   o.n == o.comps[0].n;
    }
    return false;
}

} // namespace indlift
