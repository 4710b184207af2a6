#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "koszulkit/presentation.hpp"

namespace koszulkit {

/// Bounded cochain complex over add(A): d^i : X^i → X^{i+1}.
class Complex {
public:
    Complex() = default;
    explicit Complex(const Presentation& p) : cat_(&p) {}

    const Presentation& cat() const { return *cat_; }

    const AddObject& term(int i) const;
    AddMorphism d(int i) const;
    /// Replaces a term; differentials touching it are reset to zero.
    void set_term(int i, AddObject x);
    void set_d(int i, AddMorphism m);

    /// Degrees with nonempty terms, ascending.
    std::vector<int> degrees() const;
    bool empty() const { return terms_.empty(); }
    int lo() const;
    int hi() const;
    std::size_t total_rank() const;

    /// Throws CheckFailure naming the first degree with d∘d ≠ 0.
    void check() const;

    friend bool operator==(const Complex& a, const Complex& b);

private:
    const Presentation* cat_ = nullptr;
    std::map<int, AddObject> terms_;
    std::map<int, AddMorphism> diff_;
};

/// The one-term complex with x in degree i.
Complex concentrated(const Presentation& p, const AddObject& x, int i);

/// f^i : X^i → Y^i.
struct ChainMap {
    Complex source, target;
    std::map<int, AddMorphism> comp;

    AddMorphism at(int i) const;
    void set(int i, AddMorphism m);
};

/// h^i : X^i → Y^{i-1}.
struct Homotopy {
    Complex source, target;
    std::map<int, AddMorphism> comp;

    AddMorphism at(int i) const;
};

ChainMap zero_map(const Complex& x, const Complex& y);
ChainMap identity_map(const Complex& x);
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap add(const ChainMap& a, const ChainMap& b);
ChainMap subtract(const ChainMap& a, const ChainMap& b);
ChainMap scale(const ChainMap& a, const Scalar& s);
bool is_chain_map(const ChainMap& f);
/// d h + h d as a chain map source → target.
ChainMap boundary_of(const Homotopy& h);
bool equal_on_the_nose(const ChainMap& a, const ChainMap& b);

/// X[n]^i = X^{i+n}, d = (-1)^n d_X.
Complex shift(const Complex& x, int n);
/// f[n]^k = f^{k+n}.
ChainMap shift(const ChainMap& f, int n);

struct DirectSum {
    Complex sum;
    std::vector<ChainMap> inclusions;
    std::vector<ChainMap> projections;
};
DirectSum direct_sum(const std::vector<Complex>& parts);
/// Chain map between direct sums from a block matrix; blocks[r][c] : parts_src[c] → parts_tgt[r].
ChainMap block_map(const std::vector<Complex>& src_parts, const std::vector<Complex>& tgt_parts,
                   const std::vector<std::vector<std::optional<ChainMap>>>& blocks);

/// Z^i = X^{i+1} ⊕ Y^i, d = [[-d_X, 0], [f, d_Y]], summands X-part first.
struct Cone {
    Complex z;
    ChainMap inclusion;   // Y → Z
    ChainMap projection;  // Z → X[1]
};
Cone cone(const ChainMap& f);

using SupportPoint = std::pair<int, int>;
using Support = std::set<SupportPoint>;
Support support(const Complex& x);

/// ⊕_i Hom(X^i, Y^{i+delta}) flattened over the degrees where it is nonzero.
struct GradedLayout {
    int delta = 0;
    std::vector<int> degrees;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
};
GradedLayout graded_layout(const Complex& x, const Complex& y, int delta);
Vector flatten(const std::map<int, AddMorphism>& family, const Complex& x, const Complex& y,
               const GradedLayout& layout);
std::map<int, AddMorphism> unflatten(const Vector& v, const Complex& x, const Complex& y,
                                     const GradedLayout& layout);
/// f ↦ d_Y f - f d_X on degree-0 families.
Matrix chain_condition_matrix(const Complex& x, const Complex& y, const GradedLayout& l0,
                              const GradedLayout& l1);
/// h ↦ d_Y h + h d_X from degree -1 families to degree 0 families.
Matrix boundary_matrix(const Complex& x, const Complex& y, const GradedLayout& lm1, const GradedLayout& l0);

/// Matrix of g ↦ f ∘ g on degree-0 families Hom(W, source f) → Hom(W, target f).
Matrix postcompose_family_matrix(const ChainMap& f, const Complex& w);
/// Matrix of g ↦ g ∘ f on degree-0 families Hom(target f, W) → Hom(source f, W).
Matrix precompose_family_matrix(const ChainMap& f, const Complex& w);

/// Linear system assembled from rectangular blocks of unknowns and equations.
class BlockSystem {
public:
    explicit BlockSystem(const Field& field) : field_(field) {}

    std::size_t add_unknown(std::size_t n);
    std::size_t add_equation(std::size_t n);
    /// Accumulates m into the (equation, unknown) block.
    void add(std::size_t eq, std::size_t unk, const Matrix& m);
    void set_rhs(std::size_t eq, const Vector& v);

    Matrix matrix() const;
    Vector rhs() const;
    std::optional<Vector> solve() const;
    /// Columns span the solutions of the homogeneous system.
    Matrix kernel() const;
    Vector part(const Vector& x, std::size_t unk) const;
    Matrix part_rows(const Matrix& k, std::size_t unk) const;

private:
    Field field_;
    std::vector<std::size_t> unk_off_{0}, eq_off_{0};
    std::vector<std::tuple<std::size_t, std::size_t, Matrix>> blocks_;
    std::map<std::size_t, Vector> rhs_;
};

/// Hom in K^b: chain maps modulo null-homotopic maps, with a chosen quotient basis.
class HomSpace {
public:
    HomSpace(const Complex& x, const Complex& y);

    const Complex& source() const noexcept { return x_; }
    const Complex& target() const noexcept { return y_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<ChainMap>& basis() const noexcept { return basis_; }
    std::size_t cycle_dim() const noexcept { return cycle_dim_; }
    std::size_t boundary_dim() const noexcept { return boundary_dim_; }

    /// Coordinates of the class of f; f must be a chain map source → target.
    Vector coords(const ChainMap& f) const;
    ChainMap element(const Vector& c) const;
    bool is_zero_class(const ChainMap& f) const;
    std::optional<Homotopy> null_homotopy(const ChainMap& f) const;

    const GradedLayout& layout0() const noexcept { return l0_; }
    const GradedLayout& layout_minus1() const noexcept { return lm1_; }
    const Matrix& boundary() const noexcept { return bmat_; }
    const Matrix& chain_condition() const noexcept { return cmat_; }

private:
    Complex x_, y_;
    GradedLayout lm1_, l0_, l1_;
    Matrix cmat_, bmat_, left_inverse_;
    std::vector<ChainMap> basis_;
    std::size_t cycle_dim_ = 0, boundary_dim_ = 0;
};

/// Hom(X, Y[k]).
HomSpace hom_space(const Complex& x, const Complex& y, int k);
std::optional<Homotopy> is_null_homotopic(const ChainMap& f);
bool homotopic(const ChainMap& a, const ChainMap& b);

struct MinimalModel {
    Complex minimal;
    std::optional<ChainMap> to_minimal;    // X → X_min
    std::optional<ChainMap> from_minimal;  // X_min → X
};

struct EliminationStep {
    Complex reduced;
    ChainMap projection;  // X → X'
    ChainMap inclusion;   // X' → X
};

/// Gaussian elimination of the invertible block of d^i from summand a of X^i to summand b of X^{i+1}.
EliminationStep eliminate(const Complex& x, int i, std::size_t a, std::size_t b);
MinimalModel minimal_model(const Complex& x, bool with_maps = true);
bool is_minimal(const Complex& x);
bool is_contractible(const Complex& x);
/// Isomorphism in K^b, decided by contractibility of the cone.
bool is_quasi_iso(const ChainMap& f);

/// Homotopy inverse of f, or nullopt.
std::optional<ChainMap> homotopy_inverse(const ChainMap& f);

struct RandomComplexParams {
    int lo = -2;
    int amplitude = 4;
    int max_multiplicity = 3;
    double density = 0.7;
};
Complex random_complex(const Presentation& p, std::mt19937_64& rng, const RandomComplexParams& params = {});
/// A random chain map X → Y built from a random degree-0 cycle.
ChainMap random_chain_map(const Complex& x, const Complex& y, std::mt19937_64& rng);
/// Termwise random automorphism g and the conjugated complex gX with g : X → gX.
ChainMap random_conjugation(const Complex& x, std::mt19937_64& rng);

/// Direct-sum decomposition by summand selection: positions per degree forming a subcomplex.
struct SplitTriangle {
    Complex sub, quotient;
    ChainMap inclusion;   // sub → X
    ChainMap projection;  // X → quotient
    ChainMap connecting;  // quotient → sub[1], equal to -δ
};
/// Requires the selected positions to be closed under d.
SplitTriangle split_triangle(const Complex& x, const std::map<int, std::vector<std::size_t>>& sub_positions);

/// Certifies A →f X →g B →h A[1] as isomorphic to the cone triangle of f.
struct TriangleCertificate {
    bool distinguished = false;
    std::optional<ChainMap> comparison;  // B → cone(f)
    std::string reason;
};
TriangleCertificate certify_triangle(const ChainMap& f, const ChainMap& g, const ChainMap& h);

} // namespace koszulkit
