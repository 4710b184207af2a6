#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "koszulkit/infext.hpp"

namespace koszulkit {

/// Additive functor given on indecomposables and Hom bases.
struct HomogeneousFunctor {
    const Presentation* source = nullptr;
    const Presentation* target = nullptr;
    std::vector<AddObject> on_objects;
    /// (s, t) → matrix from Hom(s, t) coordinates to Hom(F s, F t) coordinates.
    std::map<std::pair<int, int>, Matrix> on_hom;

    AddObject object(const AddObject& x) const;
    AddMorphism morphism(const AddMorphism& f) const;
};

/// Throws InputError on shape problems, inhomogeneity, or failure of identities or composition.
void validate_functor(const HomogeneousFunctor& f);

HomogeneousFunctor identity_functor(const Presentation& p);
/// x ↦ c^{deg S - deg T} x on Hom(S, T).
HomogeneousFunctor twist_functor(const Presentation& p, const Scalar& c);
HomogeneousFunctor zero_functor(const Presentation& p);
HomogeneousFunctor compose_functors(const HomogeneousFunctor& g, const HomogeneousFunctor& f);

Complex apply_to_complex(const HomogeneousFunctor& f, const Complex& x);
ChainMap apply_to_map(const HomogeneousFunctor& f, const ChainMap& m);
Homotopy apply_to_homotopy(const HomogeneousFunctor& f, const Homotopy& h);
/// (f0, f') ↦ (F f0, F f'), using F(Y[-1]) = F(Y)[-1].
InfMorphism apply_to_inf(const HomogeneousFunctor& f, const InfMorphism& m);

struct NatTrans {
    HomogeneousFunctor from, to;
    std::vector<AddMorphism> components;  // F(S) → G(S)
};

NatTrans identity_nat_trans(const HomogeneousFunctor& f);
/// twist(c1) → twist(c2) with components (c1/c2)^{deg S}.
NatTrans twist_nat_trans(const Presentation& p, const Scalar& c1, const Scalar& c2);
NatTrans zero_nat_trans(const HomogeneousFunctor& f, const HomogeneousFunctor& g);
/// First basis label where G(x) θ_S ≠ θ_T F(x), if any.
std::optional<std::string> naturality_witness(const NatTrans& t);
bool is_nat_iso(const NatTrans& t);
AddMorphism nat_component(const NatTrans& t, const AddObject& x);

struct NatTransExtension {
    ChainMap theta;  // F(X) → G(X)
    bool invertible = false;
    std::optional<ChainMap> inverse;
};
/// Termwise θ_X; throws CheckFailure if θ is not natural on the category.
NatTransExtension extend_nat_trans(const NatTrans& t, const Complex& x);
InfMorphism extend_nat_trans_inf(const NatTrans& t, const Complex& x);

struct UniquenessProbe {
    std::size_t orders = 0;
    std::size_t equal = 0;
    std::size_t unique_fills = 0;
    std::size_t extraction_steps = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty() && equal == orders; }
};
/// Recomputes θ_X by induction over top extractions on randomly re-presented copies of X.
UniquenessProbe nat_trans_uniqueness_probe(const NatTrans& t, const Complex& x, std::size_t orders = 20,
                                           std::uint64_t seed = 1);

struct GenuinenessReport {
    std::size_t objects = 0, morphisms = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};
/// ι∘F̃ = F∘ι, ϖ∘F = F̃∘ϖ and ϱ∘F = F̃∘ϱ on sampled objects and morphisms.
GenuinenessReport induced_functor_check(const HomogeneousFunctor& f, std::uint64_t seed = 1, int samples = 10);

struct InducedAdjunctionReport {
    std::size_t objects = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};
/// F[n] ⊣ G[-n] from units η : Id → GF and counits ε : FG → Id on the category, transported to ĨK^b.
InducedAdjunctionReport induced_adjunction_check(const HomogeneousFunctor& f, const HomogeneousFunctor& g,
                                                 const NatTrans& eta, const NatTrans& eps, int shift_by,
                                                 std::uint64_t seed = 1, int samples = 10);

struct FunctorSuiteReport {
    std::size_t functors = 0, extensions = 0, probes = 0, probe_orders = 0, naturality = 0, functoriality = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};
FunctorSuiteReport functor_suite(const Presentation& p, std::uint64_t seed = 1, std::size_t orders = 20);

} // namespace koszulkit
