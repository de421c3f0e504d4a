#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "indlift/core/field.hpp"

namespace indlift {

enum class Kind : uint8_t {
    Set,
    Graph,
    VecSpace,
    Bilinear,
    BinFunc,
    SigmaSet,
    SigmaGraph,
    Product,
    Tagged,
};

const char* kind_name(Kind k);

// A finite concrete structure. The carrier is always normalized to the
// element ids 0..n-1; kind-specific payload refers to those ids.
struct StructObject {
    Kind kind = Kind::Set;
    int16_t n = 0;     // carrier size
    int8_t q = 0;      // field order (vec-like kinds)
    int8_t dim = 0;    // dimension (vec-like kinds); n == q^dim
    int8_t tag = -1;   // Tagged component index
    std::vector<std::pair<int16_t, int16_t>> edges; // graph kinds, normalized a<b, sorted
    std::vector<int16_t> endo;                      // sigma kinds, size n
    std::vector<int8_t> form;                       // bilinear/binfunc, row-major n*n
    std::vector<StructObject> comps;                // product/tagged

    int form_at(int x, int y) const { return form[x * n + y]; }
    bool has_edge(int x, int y) const;
    void normalize_edges();

    // Size measure used for enumeration bounds: carrier cardinality, except
    // dimension for vec-like kinds and max-of-components for products.
    int size_measure() const;

    // Deterministic byte encoding; equal encodings iff equal objects.
    std::string encode() const;

    bool operator==(const StructObject& o) const { return encode() == o.encode(); }
    bool operator!=(const StructObject& o) const { return !(*this == o); }
};

// ---- element arithmetic for vec-like kinds (ids are base-q digit tuples) --

int vec_add(const Field& F, int dim, int x, int y);
int vec_scale(const Field& F, int dim, int c, int x);
int vec_basis_elem(int q, int i); // id of i-th standard basis vector

// Positions where the product object's component i starts in the flat carrier.
std::vector<int> product_offsets(const StructObject& prod);

// ---- constructors -----------------------------------------------------

StructObject make_set(int n);
StructObject make_graph(int n, std::vector<std::pair<int16_t, int16_t>> edges);
StructObject make_vec(int q, int dim);
// form given as dim x dim Gram matrix on the standard basis
StructObject make_bilinear(int q, int dim, const std::vector<int>& gram);
StructObject make_binfunc(int q, int n, std::vector<int8_t> table);
StructObject make_sigma_set(int n, std::vector<int16_t> endo);
StructObject make_sigma_graph(int n, std::vector<std::pair<int16_t, int16_t>> edges,
                              std::vector<int16_t> endo);
StructObject make_product(std::vector<StructObject> comps);
StructObject make_tagged(int tag, StructObject inner);

// Gram matrix of a bilinear object, read off the standard basis.
std::vector<int> gram_of(const StructObject& bil);

// Validity per the kind's invariants (total tables, structure-respecting endo, ...).
bool valid_object(const StructObject& o);

} // namespace indlift
