#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koszulkit/extraction.hpp"

namespace koszulkit {

/// Morphism X → Y of the infinitesimal extension: f0 : X → Y and finf : X → Y[-1].
struct InfMorphism {
    ChainMap f0;
    ChainMap finf;

    const Complex& source() const { return f0.source; }
    const Complex& target() const { return f0.target; }
};

InfMorphism make_inf(const ChainMap& f0, const ChainMap& finf);
InfMorphism iota(const ChainMap& f);
/// υ(f') = (0, f') for f' : X → Y[-1]; target is given explicitly.
InfMorphism upsilon(const ChainMap& finf, const Complex& target);
const ChainMap& varpi(const InfMorphism& f);
InfMorphism inf_identity(const Complex& x);
InfMorphism inf_zero(const Complex& x, const Complex& y);

/// (g0 f0, g0[-1] f' + g' f0).
InfMorphism inf_compose(const InfMorphism& g, const InfMorphism& f);
InfMorphism inf_add(const InfMorphism& a, const InfMorphism& b);
InfMorphism inf_scale(const InfMorphism& a, const Scalar& s);
/// Componentwise equality of homotopy classes.
bool inf_equal(const InfMorphism& a, const InfMorphism& b);
bool is_infinitesimal(const InfMorphism& f);
bool is_genuine(const InfMorphism& f);
/// (p0[n], (-1)^n p'[n]).
InfMorphism inf_shift(const InfMorphism& p, int n);

/// (f0^{-1}, -f0^{-1}[-1] ∘ f' ∘ f0^{-1}) when f0 is invertible in K^b.
std::optional<InfMorphism> inf_invert(const InfMorphism& f);

/// ϱ(X) = X ⊕ X[-1].
Complex rho(const Complex& x);
/// [[f0, 0], [f', f0[-1]]].
ChainMap rho_map(const InfMorphism& f);

struct AdjunctionReport {
    bool iota_rho_counit_unit = false;   // ε_ι ∘ ι(η) = id
    bool iota_rho_rho_unit = false;      // ϱ(ε) ∘ η_ϱ = id
    bool rho1_iota_counit_unit = false;  // ι(ε) ∘ η_ι = id
    bool rho1_iota_rho_unit = false;     // ε_{ϱ[1]} ∘ ϱ[1](η) = id
    bool pass() const {
        return iota_rho_counit_unit && iota_rho_rho_unit && rho1_iota_counit_unit && rho1_iota_rho_unit;
    }
};
struct AdjunctionData {
    ChainMap unit_iota_rho;         // X → ϱX
    InfMorphism counit_iota_rho;    // ιϱX → X
    InfMorphism unit_rho1_iota;     // X → ιϱ[1]X
    ChainMap counit_rho1_iota;      // ϱ(X)[1] → X
};
AdjunctionData adjunction_data(const Complex& x);
AdjunctionReport adjunction_check(const Complex& x);

/// X → Y → Z → X[1] in the infinitesimal extension.
struct InfTriangle {
    InfMorphism f, g, h;
};
InfTriangle iota_cone_triangle(const ChainMap& f);

/// Hom_Ĩ(X, Y) = Hom(X, Y) ⊕ Hom(X, Y[-1]) with coordinates.
struct InfHomSpace {
    HomSpace genuine, infinitesimal;
    InfHomSpace(const Complex& x, const Complex& y);
    std::size_t dim() const { return genuine.dim() + infinitesimal.dim(); }
    Vector coords(const InfMorphism& f) const;
    InfMorphism element(const Vector& c) const;
};

struct LesNode {
    std::string label;
    std::size_t dim, rank_in, rank_out;
    bool composite_zero;
    bool exact() const { return composite_zero && rank_in + rank_out == dim; }
};
struct LesReport {
    std::vector<LesNode> covariant, contravariant;
    bool pass() const;
};
/// Exactness of Hom_Ĩ(A, T[n]) and Hom_Ĩ(T[n], A) at every interior node for n in the window.
LesReport inf_les_check(const Complex& a, const InfTriangle& t, std::pair<int, int> window);

struct InfSquareCompletion {
    InfMorphism r;  // cone(f) → cone(i)
    bool squares_commute = false;
    std::optional<InfMorphism> inverse;
};
/// Completes q ∘ ι(f) = ι(i) ∘ p to a morphism of triangles; throws CheckFailure if the square fails.
InfSquareCompletion complete_inf_square(const InfMorphism& p, const InfMorphism& q, const ChainMap& f,
                                        const ChainMap& i);

InfMorphism random_inf_morphism(const Complex& x, const Complex& y, std::mt19937_64& rng);

} // namespace koszulkit
