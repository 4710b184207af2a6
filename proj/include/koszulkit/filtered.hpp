#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "koszulkit/complex.hpp"

namespace koszulkit {

/// Finite decreasing filtration X_b ⊂ ... ⊂ X_a with split inclusions e_i : X_i → X_{i-1}.
/// X_i = X_a and e_i = id for i ≤ a; X_i = 0 for i > b. The zero object has b < a.
struct FilteredObject {
    const Presentation* cat = nullptr;
    int a = 0, b = -1;
    std::map<int, AddObject> x;
    std::map<int, AddMorphism> e;  // i in (a, b]
    std::map<int, AddMorphism> r;  // retractions, r_i ∘ e_i = id

    bool is_zero() const { return b < a; }
    AddObject term(int i) const;
    AddMorphism inclusion(int i) const;
    AddMorphism retraction(int i) const;
};

FilteredObject filtered_zero(const Presentation& p);
/// Throws InputError on shape mismatch or a missing retraction identity.
void validate_filtered(const FilteredObject& x);
bool same_filtered(const FilteredObject& x, const FilteredObject& y);

/// f_i : X_i → Y_i with e^Y_i f_i = f_{i-1} e^X_i; constant below the stored range.
struct FiltMorphism {
    FilteredObject source, target;
    std::map<int, AddMorphism> f;

    AddMorphism component(int i) const;
};

std::pair<int, int> filt_range(const FilteredObject& x, const FilteredObject& y);
bool is_filt_morphism(const FiltMorphism& f);
FiltMorphism filt_zero(const FilteredObject& x, const FilteredObject& y);
FiltMorphism filt_identity(const FilteredObject& x);
FiltMorphism filt_compose(const FiltMorphism& g, const FiltMorphism& f);
bool filt_equal(const FiltMorphism& f, const FiltMorphism& g);
FilteredObject filt_sum(const FilteredObject& x, const FilteredObject& y);

/// s(X)_i = X_{i-1}.
FilteredObject s_shift(const FilteredObject& x, int n = 1);
FiltMorphism s_shift(const FiltMorphism& f, int n = 1);
/// j(A)_i = A for i ≤ 0, 0 above.
FilteredObject j_embed(const Presentation& p, const AddObject& a);
FiltMorphism j_map(const AddMorphism& f);
/// α : X → s(X), α_i = e_i.
FiltMorphism alpha(const FilteredObject& x);

bool in_le(const FilteredObject& x, int n);
/// Literal membership: X_i = X_n and e_i = id for i ≤ n.
bool in_ge(const FilteredObject& x, int n);

/// Filtration-compatible morphisms as the kernel of the compatibility system.
class FiltHomSpace {
public:
    FiltHomSpace(const FilteredObject& x, const FilteredObject& y);
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<FiltMorphism>& basis() const noexcept { return basis_; }
    Vector coords(const FiltMorphism& f) const;

private:
    FilteredObject x_, y_;
    int lo_ = 0, hi_ = -1;
    Matrix kernel_;
    std::vector<FiltMorphism> basis_;
};

struct SplitDecomposition {
    FilteredObject a, b, sum;  // a ∈ F(≥1), b ∈ F(≤0), sum = a ⊕ b
    FiltMorphism to_x, from_x;
    bool oplus_shape = false;
    bool verified = false;
    std::vector<std::string> failures;
};
/// Downward induction with complements chosen by split_idempotent.
SplitDecomposition split_decompose(const FilteredObject& x);

struct FiltHomReport {
    std::size_t hom_xy = 0, hom_yx = 0, hom_y_sinv_x = 0, hom_sy_x = 0;
    std::size_t rank_alpha_post = 0, rank_alpha_pre = 0;
    bool pass() const {
        return hom_xy == 0 && hom_yx == hom_y_sinv_x && hom_yx == hom_sy_x && rank_alpha_post == hom_yx &&
               rank_alpha_pre == hom_yx;
    }
};
/// X ∈ F(≥1), Y ∈ F(≤0); throws InputError otherwise.
FiltHomReport filt_hom_report(const FilteredObject& x, const FilteredObject& y);

/// Presentation of F𝒜 on the indecomposables (S, n) = s^n j(S), n in [lo, hi].
/// Hom((S,n),(T,m)) = Hom(S,T) when n ≤ m and 0 otherwise.
struct FaCategory {
    const Presentation* base = nullptr;
    std::shared_ptr<Presentation> fa;
    int lo = 0, hi = -1;

    int index(int s, int n) const;
    int base_object(int k) const;
    int level(int k) const;
};
FaCategory fa_category(const Presentation& p, int lo, int hi);

FilteredObject realize(const FaCategory& c, const AddObject& x);
FiltMorphism realize(const FaCategory& c, const AddMorphism& f);

struct FaDecomposition {
    AddObject object;
    FiltMorphism iso;  // realize(object) → X
};
FaDecomposition fa_decompose(const FaCategory& c, const FilteredObject& x);

struct FiltTriangle {
    Complex a, b;
    ChainMap f, g, h;
    TriangleCertificate certificate;
    bool lower_left_zero = false;
    bool cone_matches = false;
    bool a_in_ge1 = false, b_in_le0 = false;
    bool b_in_heart = false;
    bool pass() const {
        return certificate.distinguished && lower_left_zero && cone_matches && a_in_ge1 && b_in_le0;
    }
};
/// Termwise split into levels ≥ 1 and ≤ 0 of a complex over the F𝒜 presentation.
FiltTriangle filt_triangle(const FaCategory& c, const Complex& x);

FilteredObject random_filtered(const Presentation& p, std::mt19937_64& rng, int lo = -2, int hi = 2,
                               int max_step = 2);

struct FilteredSuiteReport {
    std::size_t decompositions = 0, hom_reports = 0, triangles = 0, alpha_checks = 0, shift_checks = 0;
    std::size_t j_checks = 0, fa_checks = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};
FilteredSuiteReport filtered_suite(const Presentation& p, std::uint64_t seed = 1, int samples = 100);

} // namespace koszulkit
