#pragma once

// Finite-dimensional algebras kQ/I and their structural invariants.
//
// Paths compose left to right: p·q traverses p, then q.  A basis monomial
// running from u to v spans part of e_u A e_v, and the right projective
// P(v) = e_v A is spanned by the monomials starting at v.

#include "tiltcert/exactla.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tiltcert::quiv {

using la::Rational;
using la::Vector;

struct ArrowSpec {
    std::string id;
    std::string source;
    std::string target;
};

struct Arrow {
    std::string id;
    std::size_t source = 0;
    std::size_t target = 0;
};

class Quiver {
public:
    Quiver() = default;
    /// Throws InvalidQuiver on duplicate labels/ids, UnknownVertex on dangling arrows.
    Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const std::string& vertex(std::size_t v) const { return vertices_.at(v); }
    const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

    std::size_t vertex_index(const std::string& label) const;
    std::size_t arrow_index(const std::string& id) const;
    bool has_vertex(const std::string& label) const { return vertex_lookup_.count(label) != 0; }
    bool has_arrow(const std::string& id) const { return arrow_lookup_.count(id) != 0; }

    std::vector<ArrowSpec> arrow_specs() const;
    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.vertices_ == b.vertices_ && a.arrow_specs() == b.arrow_specs();
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, std::size_t> vertex_lookup_;
    std::map<std::string, std::size_t> arrow_lookup_;
};

inline bool operator==(const ArrowSpec& a, const ArrowSpec& b) {
    return a.id == b.id && a.source == b.source && a.target == b.target;
}

struct Path {
    std::size_t start = 0;
    std::size_t end = 0;
    std::vector<std::size_t> arrows;

    static Path trivial(std::size_t v) { return Path{v, v, {}}; }
    static Path from_ids(const Quiver& q, const std::vector<std::string>& ids,
                         std::optional<std::size_t> start = std::nullopt);

    std::size_t length() const noexcept { return arrows.size(); }
    bool is_trivial() const noexcept { return arrows.empty(); }
    std::vector<std::string> ids(const Quiver& q) const;
    std::string to_string(const Quiver& q) const;

    friend bool operator==(const Path&, const Path&) = default;
};

/// Deglex order: length first, then arrows lexicographically, then endpoints.
bool deglex_less(const Path& a, const Path& b);
/// Concatenation; nullopt when end(p) != start(q).
std::optional<Path> concat(const Path& p, const Path& q);

struct Relation {
    std::vector<std::pair<Rational, Path>> terms;

    std::size_t source() const { return terms.at(0).second.start; }
    std::size_t target() const { return terms.at(0).second.end; }
    std::size_t max_length() const;
};

/// Throws InvalidRelation unless the relation is nonempty, parallel, nonzero and free of trivial paths.
void validate_relation(const Quiver& q, const Relation& r);

struct BasisElement {
    std::size_t source = 0;
    std::size_t target = 0;
    std::optional<Path> path;  // normal-form monomial when the algebra is presented
    std::string label;
};

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

class FDAlgebra;
using AlgebraPtr = std::shared_ptr<const FDAlgebra>;

/// Coefficient vector over an algebra's basis.
struct AlgebraElement {
    std::uint64_t algebra_id = 0;
    Vector coeffs;

    bool is_zero() const { return la::is_zero(coeffs); }
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const Rational& c, const AlgebraElement& a);

/// Data retained when an algebra comes from a quiver with relations.
struct Presentation {
    Quiver quiver;
    std::vector<Relation> relations;
    std::vector<Relation> groebner_basis;  // monic, leading term first
    std::size_t stabilization_length = 0;
    std::size_t max_len = 0;
};

class FDAlgebra {
public:
    /// Validates orthogonality of idempotents, grading, unit and associativity.
    FDAlgebra(std::vector<std::string> vertices, std::vector<BasisElement> basis,
              std::vector<std::size_t> idempotents, std::vector<std::vector<SparseVector>> table,
              std::optional<Presentation> presentation = std::nullopt);

    std::uint64_t id() const noexcept { return id_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    std::size_t vertex_index(const std::string& label) const;
    const BasisElement& basis(std::size_t i) const { return basis_.at(i); }
    const std::vector<BasisElement>& basis() const noexcept { return basis_; }
    std::size_t idempotent_index(std::size_t v) const { return idempotents_.at(v); }
    const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
    const Presentation* presentation() const noexcept { return presentation_ ? &*presentation_ : nullptr; }

    /// Basis indices spanning e_u A e_v.
    const std::vector<std::size_t>& component(std::size_t u, std::size_t v) const;
    bool in_component(const Vector& x, std::size_t u, std::size_t v) const;

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement basis_element(std::size_t i) const;
    AlgebraElement idempotent(std::size_t v) const { return basis_element(idempotent_index(v)); }
    AlgebraElement element(Vector coeffs) const;

    Vector multiply(const Vector& x, const Vector& y) const;
    AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;

    /// Normal form of a path; requires a presentation.
    AlgebraElement normal_form(const Path& p) const;
    AlgebraElement evaluate(const Relation& r) const;
    AlgebraElement from_terms(const std::vector<std::pair<Rational, Path>>& terms) const;

    std::size_t max_basis_length() const;

private:
    void verify() const;

    std::uint64_t id_;
    std::vector<std::string> vertices_;
    std::vector<BasisElement> basis_;
    std::vector<std::size_t> idempotents_;
    std::vector<std::vector<SparseVector>> table_;
    std::optional<Presentation> presentation_;
    std::vector<std::vector<std::vector<std::size_t>>> components_;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> monomial_index_;
};

/// Default length cap: 4·(#vertices + longest relation length).
std::size_t default_max_len(const Quiver& q, const std::vector<Relation>& rels);

AlgebraPtr construct_algebra(const Quiver& q, const std::vector<Relation>& rels,
                             std::optional<std::size_t> max_len = std::nullopt);

using IntMatrix = std::vector<std::vector<long long>>;

IntMatrix cartan_matrix(const FDAlgebra& a);
la::Subspace radical(const FDAlgebra& a);
std::vector<la::Subspace> radical_layers(const FDAlgebra& a);
la::Subspace product_space(const FDAlgebra& a, const la::Subspace& x, const la::Subspace& y);

struct SocleInfo {
    la::Subspace socle;
    std::vector<std::size_t> isotypes;  // one vertex per composition factor
};
SocleInfo socle_of_projective(const FDAlgebra& a, std::size_t v);

struct SelfInjectivity {
    bool self_injective = false;
    std::optional<std::vector<std::size_t>> nakayama_permutation;
};
SelfInjectivity self_injectivity(const FDAlgebra& a);

struct SymmetryReport {
    bool nakayama_trivial = false;
    std::optional<Vector> witness;  // symmetric functional with nondegenerate Gram form
    std::size_t trials_used = 0;
};
SymmetryReport symmetry_report(const FDAlgebra& a, std::size_t trials, std::uint64_t seed);
bool is_symmetric_witness(const FDAlgebra& a, const Vector& functional);

std::size_t center_dimension(const FDAlgebra& a);

/// Throws NotBasic if dim A/J differs from the number of vertices.
void require_basic(const FDAlgebra& a);

/// Gabriel quiver: #arrows u→v = dim e_u (J/J²) e_v.
Quiver recover_quiver(const FDAlgebra& a);

struct GeneratedPresentation {
    Quiver quiver;
    std::vector<Relation> relations;
    std::vector<AlgebraElement> arrow_images;
};
/// Quiver with relations for a basic algebra, with the images of its arrows.
GeneratedPresentation present_algebra(const FDAlgebra& a);

bool verify_presentation(const FDAlgebra& e, const Quiver& cand_quiver,
                         const std::vector<Relation>& cand_rels,
                         const std::vector<std::size_t>& vertex_map,
                         const std::map<std::string, AlgebraElement>& arrow_map,
                         std::optional<std::size_t> max_len = std::nullopt);

/// Opposite algebra's presentation: arrows reversed, relation words reversed.
std::pair<Quiver, std::vector<Relation>> opposite_presentation(const Quiver& q,
                                                               const std::vector<Relation>& rels);

}  // namespace tiltcert::quiv
