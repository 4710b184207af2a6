#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszulkit/extraction.hpp"

namespace koszulkit {

enum class Region { left, right, antidiagonal };

/// Pointwise test of i ≤ -j (left), i ≥ -j (right) or i = -j, after shifting points by offset.
bool in_region(const Support& s, Region r, int offset = 0);

struct AisleMembership {
    bool in_left = false;
    bool in_right = false;
    bool in_heart = false;
};
AisleMembership aisle_membership(const Complex& x);

/// Antidiagonal minimal complex, with an isomorphism from the complex it came from.
struct HeartObject {
    Complex normal_form;
    std::optional<ChainMap> from_origin;  // origin → normal_form
};
/// Normalizes a heart object; throws CheckFailure if the minimal model is not antidiagonal.
HeartObject to_heart(const Complex& x);

struct Truncation {
    Complex a, b;
    ChainMap f, g, h;  // A → X → B → A[1]
    TriangleCertificate certificate;
};
/// A ∈ ◁ and B[1] ∈ ▷ with a certified triangle A → X → B → A[1].
Truncation truncate(const Complex& x);
/// τ_{≤n} X and τ_{≥n+1} X via shift conjugation.
Truncation truncate_at(const Complex& x, int n);

struct ConeThroughSimple {
    Complex y;
    ChainMap iso;  // cone(f) → Y
};
/// f : S[deg S] → X with X ∈ ▷; returns Y ∈ ▷ isomorphic to cone(f).
ConeThroughSimple cone_through_simple(const ChainMap& f);

/// H^n(X) in antidiagonal normal form.
HeartObject t_cohomology(const Complex& x, int n);
/// Degrees n with H^n(X) ≠ 0 lie in the returned closed range.
std::pair<int, int> cohomology_window(const Complex& x);

/// S[deg S] for every indecomposable, in presentation order.
std::vector<Complex> heart_simples(const Presentation& p);
Complex heart_simple(const Presentation& p, int s);

/// gr^W_k for each weight k, as one-term complexes X^{-k} in degree -k.
std::map<int, Complex> weight_filtration(const HeartObject& m);
/// W_k as the stupid truncation σ_{≥-k} of the normal form.
Complex weight_subobject(const HeartObject& m, int k);
/// Multiplicity of each simple (indexed by indecomposable).
std::map<int, int> composition_factors(const HeartObject& m);

struct VanishingCell {
    int source, target, shift;
    std::size_t dim;
    bool allowed;
};
struct VanishingReport {
    std::pair<int, int> window;
    std::vector<VanishingCell> nonzero;
    std::vector<VanishingCell> violations;
    bool pass() const { return violations.empty(); }
};
/// Hom(S[deg S], T[deg T][i]) over the window; nonzero only when deg T = deg S - i.
VanishingReport mixed_vanishing_report(const Presentation& p, std::pair<int, int> window);

/// Random antidiagonal minimal complex of the given weight span.
Complex random_heart_complex(const Presentation& p, std::mt19937_64& rng, int max_multiplicity = 2,
                             double density = 0.7);
/// Hides a heart object inside a larger homotopy-equivalent complex.
Complex disguise(const Complex& x, std::mt19937_64& rng);

} // namespace koszulkit
