#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "koszulkit/tstructure.hpp"

namespace koszulkit {

using ShiftWindow = std::pair<int, int>;

/// Ext groups between heart simples with chosen bases and Yoneda products.
struct ExtTable {
    ShiftWindow window;
    std::vector<Complex> simples;
    /// (S, T, i) → Hom(S, T[i]) for all nonzero cells in the window.
    std::map<std::tuple<int, int, int>, HomSpace> groups;

    std::size_t dim(int s, int t, int i) const;
    const HomSpace* group(int s, int t, int i) const;
    /// y · x = y[i] ∘ x for x ∈ Ext^i(S,T), y ∈ Ext^j(T,U), as coordinates in Ext^{i+j}(S,U).
    Vector yoneda(int s, int t, int u, int i, int j, const Vector& x, const Vector& y) const;
    ChainMap yoneda_map(int s, int t, int u, int i, int j, const ChainMap& x, const ChainMap& y) const;
};
ExtTable ext_table(const Presentation& p, ShiftWindow window);

struct KoszulityReport {
    ShiftWindow window;
    std::vector<VanishingCell> violations;
    std::size_t separated_pairs = 0;
    std::vector<std::string> separation_failures;
    std::size_t split_checks = 0;
    std::vector<std::string> split_failures;
    bool pass() const { return violations.empty() && separation_failures.empty() && split_failures.empty(); }
};
/// Ext^i(S,T) = 0 unless wt T = wt S - i, plus randomized weight-separation and splitting checks.
KoszulityReport koszulity_check(const Presentation& p, ShiftWindow window, std::uint64_t seed = 1,
                                int samples = 20);

struct SurrogateCell {
    int source, target, degree;
    std::size_t dim, generated;
};
struct SurrogateReport {
    ShiftWindow window;
    std::vector<SurrogateCell> cells;
    std::optional<SurrogateCell> witness;
    bool pass() const { return !witness.has_value(); }
};
/// Necessary condition only: every Ext^i, i ≥ 2, is spanned by Ext^1 · Ext^{i-1}.
SurrogateReport koszulescence_surrogate(const Presentation& p, ShiftWindow window);

/// A presentation whose indecomposables are given complexes, Homs computed in K^b.
struct DualPresentation {
    std::shared_ptr<Presentation> presentation;
    std::vector<Complex> objects;
    /// Chosen basis of Hom(objects[s], objects[t]) as chain maps, keyed by (s, t).
    std::map<std::pair<int, int>, std::vector<ChainMap>> basis;
};
struct NamedObject {
    std::string id;
    int degree;
    Complex x;
};
DualPresentation presentation_of_objects(const Field& field, const std::vector<NamedObject>& objects);

/// Indecomposables S in degree 0 with deg = wt S[deg S].
DualPresentation orl_of_kos(const Presentation& p);

struct RoundtripReport {
    bool degrees_match = false;
    bool dims_match = false;
    std::size_t checked = 0;
    std::optional<std::tuple<std::string, std::string, std::string>> witness;  // (left, right, object triple)
    bool pass() const { return degrees_match && dims_match && !witness.has_value(); }
};
/// Compares P with a presentation of its indecomposables placed in degree 0.
RoundtripReport roundtrip_compare(const Presentation& p, const DualPresentation& q);
RoundtripReport roundtrip_check(const Presentation& p);
/// P-coordinates to Q-coordinates on Hom(S, T).
Matrix roundtrip_change_of_basis(const Presentation& p, const DualPresentation& q, int s, int t);

/// Same terms over the Orl presentation with differential transported by the change of basis.
Complex q_functor(const HeartObject& m, const DualPresentation& orl);

struct InjectiveCandidate {
    int socle = -1;
    bool found = false;
    int degree = 0;
    std::size_t length = 0;
    Complex j;
    std::string note;
};
/// Iterated universal extensions of each simple by simples until Ext^1(-, J) vanishes.
std::vector<InjectiveCandidate> injective_detect(const Presentation& p, ShiftWindow window,
                                                 std::size_t length_bound = 6);
/// Orlov presentation on the detected injectives; throws CheckFailure if one is missing.
DualPresentation koszul_dual(const Presentation& p, ShiftWindow window, std::size_t length_bound = 6);

struct DoubleDualReport {
    std::vector<std::vector<std::size_t>> original, dual;
    std::optional<std::vector<int>> matching;  // original index → dual index
    bool transposed = false;
    bool pass() const { return matching.has_value(); }
};
std::vector<std::vector<std::size_t>> ext1_matrix(const Presentation& p);
DoubleDualReport double_dual_check(const Presentation& p, ShiftWindow window, std::size_t length_bound = 6);

/// Hom-dimension table with objects sorted by descending degree.
std::vector<std::vector<std::size_t>> hom_dimension_table(const Presentation& p);

} // namespace koszulkit
