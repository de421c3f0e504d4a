#pragma once

#include <optional>
#include <vector>

#include "indlift/core/field.hpp"

namespace indlift {

// Dense matrices over F_q, row-major. Small sizes only.
struct FqMatrix {
    int rows = 0, cols = 0;
    std::vector<int8_t> a;

    FqMatrix() = default;
    FqMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}
    int at(int r, int c) const { return a[size_t(r) * cols + c]; }
    void set(int r, int c, int v) { a[size_t(r) * cols + c] = int8_t(v); }
};

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(const Field& F, FqMatrix& m);

int rank(const Field& F, FqMatrix m);

// Basis vectors (length = cols) of the right kernel.
std::vector<std::vector<int8_t>> kernel_basis(const Field& F, const FqMatrix& m);

// Solve A x = b; nullopt if inconsistent. Free variables are set to zero.
std::optional<std::vector<int8_t>> solve(const Field& F, const FqMatrix& A,
                                         const std::vector<int8_t>& b);

// Row space membership and equality of row spaces.
bool in_row_space(const Field& F, const FqMatrix& m, const std::vector<int8_t>& v);
bool same_row_space(const Field& F, const FqMatrix& m1, const FqMatrix& m2);

// Decode/encode between a vec-kind carrier element id and its digit tuple.
std::vector<int8_t> vec_digits(int q, int dim, int id);
int vec_id(int q, const std::vector<int8_t>& digits);

} // namespace indlift
