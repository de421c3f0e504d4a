#include "indlift/core/linalg.hpp"

namespace indlift {

std::vector<int> rref(const Field& F, FqMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) {
                int t = m.at(r, j);
                m.set(r, j, m.at(pr, j));
                m.set(pr, j, t);
            }
        int piv_inv = F.inv(m.at(r, c));
        for (int j = 0; j < m.cols; ++j) m.set(r, j, F.mul(piv_inv, m.at(r, j)));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            int factor = m.at(i, c);
            if (factor == 0) continue;
            for (int j = 0; j < m.cols; ++j)
                m.set(i, j, F.sub(m.at(i, j), F.mul(factor, m.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const Field& F, FqMatrix m) { return int(rref(F, m).size()); }

std::vector<std::vector<int8_t>> kernel_basis(const Field& F, const FqMatrix& m) {
    FqMatrix r = m;
    std::vector<int> pivots = rref(F, r);
    std::vector<char> is_pivot(m.cols, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<std::vector<int8_t>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<int8_t> v(m.cols, 0);
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = int8_t(F.neg(r.at(int(i), c)));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<int8_t>> solve(const Field& F, const FqMatrix& A,
                                         const std::vector<int8_t>& b) {
    FqMatrix aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.set(i, j, A.at(i, j));
        aug.set(i, A.cols, b[i]);
    }
    std::vector<int> pivots = rref(F, aug);
    for (int p : pivots)
        if (p == A.cols) return std::nullopt;
    std::vector<int8_t> x(A.cols, 0);
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = int8_t(aug.at(int(i), A.cols));
    return x;
}

bool in_row_space(const Field& F, const FqMatrix& m, const std::vector<int8_t>& v) {
    FqMatrix a = m;
    int base = rank(F, a);
    FqMatrix ext(m.rows + 1, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) ext.set(i, j, m.at(i, j));
    for (int j = 0; j < m.cols; ++j) ext.set(m.rows, j, v[j]);
    return rank(F, ext) == base;
}

bool same_row_space(const Field& F, const FqMatrix& m1, const FqMatrix& m2) {
    FqMatrix a = m1, b = m2;
    int r1 = rank(F, a), r2 = rank(F, b);
    if (r1 != r2) return false;
    FqMatrix joint(m1.rows + m2.rows, m1.cols);
    for (int i = 0; i < m1.rows; ++i)
        for (int j = 0; j < m1.cols; ++j) joint.set(i, j, m1.at(i, j));
    for (int i = 0; i < m2.rows; ++i)
        for (int j = 0; j < m2.cols; ++j) joint.set(m1.rows + i, j, m2.at(i, j));
    return rank(F, joint) == r1;
}

std::vector<int8_t> vec_digits(int q, int dim, int id) {
    std::vector<int8_t> d(dim);
    for (int i = 0; i < dim; ++i) {
        d[i] = int8_t(id % q);
        id /= q;
    }
    return d;
}

int vec_id(int q, const std::vector<int8_t>& digits) {
    int id = 0, p = 1;
    for (auto v : digits) {
        id += v * p;
        p *= q;
    }
    return id;
}

} // namespace indlift
