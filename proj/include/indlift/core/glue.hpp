#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "indlift/core/category.hpp"
#include "indlift/core/linalg.hpp"

namespace indlift {

using GlueArrows = std::vector<std::tuple<int, int, const std::vector<int16_t>*>>;

// Free gluing (colimit construction) of a finite diagram for the carrier-based
// kinds (Set, Graph, BinFunc, SigmaSet, SigmaGraph). Unconstrained binfunc
// values default to zero. Returns nullopt when the glued structure would be
// inconsistent (conflicting endomorphism images, conflicting function values,
// or an edge collapsing to a loop).
std::optional<GlueResult> glue_setlike(Kind kind, int q,
                                       const std::vector<StructObject>& objs,
                                       const GlueArrows& arrows);

// Linear colimit for VecSpace/Bilinear diagrams: quotient of the direct sum
// by the arrow relations. Bilinear Gram entries are solved from the pieces,
// with free entries set to zero; inconsistency yields nullopt.
std::optional<GlueResult> glue_veclike(Kind kind, int q,
                                       const std::vector<StructObject>& objs,
                                       const GlueArrows& arrows);

// Fiber-product pullback for carrier-based kinds.
PullbackData pullback_setlike(Kind kind, const StructObject& A, const StructObject& B,
                              const StructObject& D, const std::vector<int16_t>& a,
                              const std::vector<int16_t>& b);

// Kernel-style pullback for VecSpace/Bilinear.
PullbackData pullback_veclike(Kind kind, const StructObject& A, const StructObject& B,
                              const StructObject& D, const std::vector<int16_t>& a,
                              const std::vector<int16_t>& b);

// Image factorization. For graphs `induced` selects the embedding system's
// induced-subgraph image; otherwise the edge-image subgraph.
FactorizeResult image_factorize_setlike(const StructObject& A, const StructObject& B,
                                        const std::vector<int16_t>& tab, bool induced);

FactorizeResult image_factorize_vec(const StructObject& A, const StructObject& B,
                                    const std::vector<int16_t>& tab);

// Matrix of a linear map on standard bases (dim_B x dim_A columns of images).
FqMatrix linear_matrix(const StructObject& A, const StructObject& B,
                       const std::vector<int16_t>& tab);

// Table of a linear map given its matrix.
std::vector<int16_t> linear_tab(const StructObject& A, const StructObject& B,
                                const FqMatrix& m);

} // namespace indlift
