#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "koszulkit/matrix.hpp"

namespace koszulkit {

/// Raised for data that does not fit the presentation (unknown ids, wrong shapes).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a mathematical precondition or certificate fails.
class CheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Indecomposable {
    std::string id;
    std::string name;
    int degree = 0;
};

struct ValidationIssue {
    std::string kind;
    std::string message;
    std::vector<std::string> witness;
};

struct ValidationReport {
    std::vector<ValidationIssue> malformed;
    std::vector<ValidationIssue> violations;
    bool valid() const { return malformed.empty() && violations.empty(); }
};

/// A finite k-linear category given by indecomposables, Hom bases and
/// composition structure constants.
class Presentation {
public:
    Presentation() = default;
    explicit Presentation(const Field& field) : field_(field) {}

    const Field& field() const noexcept { return field_; }

    int add_object(const std::string& id, int degree, const std::string& name = {});
    /// Declares the basis of Hom(src, tgt). Must be called before finalize().
    void set_basis(int src, int tgt, const std::vector<std::string>& labels);
    /// Allocates the composition tensor and installs implicit unit laws.
    void finalize();
    /// Overrides the product (left ∘ right) of two basis labels.
    void set_product(const std::string& left, const std::string& right, const Vector& result);
    /// Records a load-time shape problem without aborting.
    void note_malformed(ValidationIssue issue) { malformed_.push_back(std::move(issue)); }

    std::size_t size() const noexcept { return objects_.size(); }
    const Indecomposable& object(int i) const { return objects_.at(static_cast<std::size_t>(i)); }
    const std::vector<Indecomposable>& objects() const noexcept { return objects_; }
    int degree(int i) const { return object(i).degree; }
    int index_of(const std::string& id) const;
    std::optional<int> find(const std::string& id) const;

    std::size_t dim(int src, int tgt) const { return basis_[slot(src, tgt)].size(); }
    const std::vector<std::string>& basis(int src, int tgt) const { return basis_[slot(src, tgt)]; }
    /// (src, tgt, position) of a basis label.
    std::optional<std::tuple<int, int, std::size_t>> locate(const std::string& label) const;
    std::optional<std::size_t> identity_index(int s) const;

    /// Coefficient of basis z of Hom(a,c) in (x ∘ y), x in Hom(b,c), y in Hom(a,b).
    const Scalar& product(int a, int b, int c, std::size_t x, std::size_t y, std::size_t z) const;
    bool finalized() const noexcept { return finalized_; }

    const std::vector<ValidationIssue>& malformed() const noexcept { return malformed_; }

private:
    std::size_t slot(int a, int b) const {
        return static_cast<std::size_t>(a) * objects_.size() + static_cast<std::size_t>(b);
    }
    std::size_t tslot(int a, int b, int c) const {
        const auto n = objects_.size();
        return (static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n +
               static_cast<std::size_t>(c);
    }
    void require_finalized() const;

    Field field_;
    std::vector<Indecomposable> objects_;
    std::map<std::string, int> index_;
    std::vector<std::vector<std::string>> basis_;
    std::map<std::string, std::tuple<int, int, std::size_t>> labels_;
    std::vector<std::vector<Scalar>> tensor_;
    std::vector<ValidationIssue> malformed_;
    bool finalized_ = false;
};

/// Checks the Orlov axioms exhaustively on basis elements.
ValidationReport validate_presentation(const Presentation& p);

/// Ordered list of indecomposable indices; repetition is multiplicity.
struct AddObject {
    std::vector<int> summands;

    std::size_t size() const noexcept { return summands.size(); }
    bool empty() const noexcept { return summands.empty(); }
    int operator[](std::size_t k) const { return summands[k]; }
    friend bool operator==(const AddObject&, const AddObject&) = default;
};

AddObject concat(const AddObject& a, const AddObject& b);
/// Equality up to permutation of summands.
bool same_multiset(const AddObject& a, const AddObject& b);
bool is_homogeneous(const Presentation& p, const AddObject& x, int degree);
std::string describe(const Presentation& p, const AddObject& x);

/// Block-matrix morphism of add(A). Block (i, j) is a coordinate vector in
/// Hom(source[j], target[i]); coordinates are stored flat, block-row-major.
class AddMorphism {
public:
    AddMorphism() = default;
    AddMorphism(const Presentation& cat, AddObject source, AddObject target);

    const Presentation& cat() const { return *cat_; }
    const AddObject& source() const noexcept { return src_; }
    const AddObject& target() const noexcept { return tgt_; }

    std::size_t offset(std::size_t i, std::size_t j) const { return off_[i * src_.size() + j]; }
    std::size_t block_dim(std::size_t i, std::size_t j) const {
        return off_[i * src_.size() + j + 1] - off_[i * src_.size() + j];
    }
    std::size_t dim() const noexcept { return v_.size(); }

    Vector& coords() noexcept { return v_; }
    const Vector& coords() const noexcept { return v_; }
    Scalar& coord(std::size_t i, std::size_t j, std::size_t k) { return v_[offset(i, j) + k]; }
    const Scalar& coord(std::size_t i, std::size_t j, std::size_t k) const {
        return v_[offset(i, j) + k];
    }
    /// Coefficient of the identity in block (i, j); zero when the summands differ.
    Scalar identity_coefficient(std::size_t i, std::size_t j) const;

    bool is_zero() const;

    AddMorphism operator+(const AddMorphism& o) const;
    AddMorphism operator-(const AddMorphism& o) const;
    AddMorphism operator-() const;
    AddMorphism scaled(const Scalar& s) const;

    friend bool operator==(const AddMorphism& a, const AddMorphism& b);

private:
    const Presentation* cat_ = nullptr;
    AddObject src_, tgt_;
    std::vector<std::size_t> off_;
    Vector v_;
};

AddMorphism zero_morphism(const Presentation& p, const AddObject& x, const AddObject& y);
AddMorphism identity_morphism(const Presentation& p, const AddObject& x);
AddMorphism compose(const AddMorphism& g, const AddMorphism& f);

std::size_t hom_dim(const Presentation& p, const AddObject& x, const AddObject& y);
/// Elementary single-block morphisms in coordinate order.
std::vector<AddMorphism> hom_basis(const Presentation& p, const AddObject& x, const AddObject& y);
AddMorphism from_coords(const Presentation& p, const AddObject& x, const AddObject& y, const Vector& v);

/// Matrix of f ↦ g ∘ f, Hom(X, source g) → Hom(X, target g).
Matrix post_compose_matrix(const AddMorphism& g, const AddObject& x);
/// Matrix of g ↦ g ∘ f, Hom(target f, Z) → Hom(source f, Z).
Matrix pre_compose_matrix(const AddMorphism& f, const AddObject& z);

/// Sub-block with the chosen target rows and source columns (summand positions).
AddMorphism restrict_morphism(const AddMorphism& f, const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols);
/// Writes f into the (rows, cols) summand positions of big.
void place_morphism(AddMorphism& big, const AddMorphism& f, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols);
AddMorphism direct_sum(const AddMorphism& f, const AddMorphism& g);

/// Two-sided inverse, or nullopt when f is not an isomorphism.
std::optional<AddMorphism> invert(const AddMorphism& f);

struct IdempotentSplitting {
    AddObject image;
    AddMorphism projection;  // X → Z
    AddMorphism inclusion;   // Z → X
};

/// Splits e = inclusion ∘ projection with projection ∘ inclusion = id.
IdempotentSplitting split_idempotent(const AddMorphism& e);

/// Random small-integer coordinates; density in [0,1].
AddMorphism random_morphism(const Presentation& p, const AddObject& x, const AddObject& y,
                            std::mt19937_64& rng, double density = 0.6);
/// Random automorphism: invertible scalar part on each isotypic block plus random radical part.
AddMorphism random_automorphism(const Presentation& p, const AddObject& x, std::mt19937_64& rng);

Scalar random_scalar(const Field& f, std::mt19937_64& rng, int bound = 3);

} // namespace koszulkit
