#pragma once

#include <optional>
#include <string>

#include "koszulkit/complex.hpp"

namespace koszulkit {

/// B ≅ Q^⊥ ⊕ Q with q : B → Q the universal degree-n map killing f.
struct HomogeneousCokernel {
    AddObject q_object;
    AddObject complement;
    AddMorphism q;  // B → Q
    AddMorphism u;  // Q^⊥ ⊕ Q → B, q ∘ u = [0 id]
};

/// Requires B = target of f homogeneous; throws InputError otherwise.
HomogeneousCokernel homogeneous_cokernel(const AddMorphism& f);
/// Idempotent θ on B with g ∘ θ = g iff g ∘ f = 0 for homogeneous same-degree g.
AddMorphism coker_idempotent(const AddMorphism& f);

struct TopExtraction {
    SupportPoint point;
    Complex p, y;
    ChainMap delta;     // Y[-1] → P, cone(delta) ≅ X
    SplitTriangle triangle;  // P → X → Y → P[1]
};

/// Splits off the summands at the lex-largest point of sigma (support(X) when empty).
TopExtraction top_extraction(const Complex& x, const Support& sigma = {});

struct FillResult {
    std::optional<ChainMap> q;
    bool unique = false;
    std::size_t fill_space_dim = 0;
    std::string witness;
};

/// Solves q : X → X' with q∘a ≃ a'∘p and b'∘q ≃ r∘b, and measures the fill space modulo homotopy.
FillResult unique_fill(const ChainMap& a, const ChainMap& b, const ChainMap& a2, const ChainMap& b2,
                       const ChainMap& p, const ChainMap& r);

struct CompletedSquare {
    ChainMap r;  // cone(f) → cone(i)
    Homotopy h;  // q f - i p = d h + h d
};

/// Completes the square q∘f ≃ i∘p to a morphism of cone triangles; throws CheckFailure if it does not commute.
CompletedSquare complete_square(const ChainMap& f, const ChainMap& i, const ChainMap& p, const ChainMap& q,
                                const std::optional<Homotopy>& h = std::nullopt);

} // namespace koszulkit
