#pragma once

// Bounded complexes of projectives and their Hom spaces in K^b(proj A).
//
// Complexes are graded homologically: d_k maps X_k to X_{k-1}.  A map of
// shift i from X to Y has components f_k : X_k -> Y_{k-i} and satisfies
//     f_{k-1} d_X = (-1)^i d_Y f_k.
// Null-homotopic maps are f_k = (-1)^i d_Y h_k + h_{k-1} d_X with
// h_k : X_k -> Y_{k+1-i}.

#include "tiltcert/quivalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tiltcert::homotopy {

using la::Rational;
using la::Vector;
using quiv::AlgebraElement;
using quiv::AlgebraPtr;
using quiv::FDAlgebra;

/// Direct sum of indecomposable projectives P(v) = e_v A.
struct ProjModule {
    AlgebraPtr algebra;
    std::vector<std::size_t> vertices;

    static ProjModule from_labels(AlgebraPtr a, const std::vector<std::string>& labels);
    std::size_t size() const noexcept { return vertices.size(); }
    bool empty() const noexcept { return vertices.empty(); }
    friend bool operator==(const ProjModule& a, const ProjModule& b) {
        return a.algebra == b.algebra && a.vertices == b.vertices;
    }
};

/// Homomorphism of projectives.  Entry (t, s) lies in e_{v_t} A e_{v_s} and
/// acts by left multiplication, so composition is the matrix product.
class ProjMap {
public:
    ProjMap() = default;
    /// Throws InvalidComplex if an entry is outside its graded component.
    ProjMap(ProjModule source, ProjModule target, std::vector<std::vector<Vector>> entries);
    static ProjMap zero(const ProjModule& source, const ProjModule& target);
    static ProjMap identity(const ProjModule& m);

    const ProjModule& source() const noexcept { return source_; }
    const ProjModule& target() const noexcept { return target_; }
    const Vector& entry(std::size_t t, std::size_t s) const { return entries_.at(t).at(s); }
    AlgebraElement element(std::size_t t, std::size_t s) const;
    bool is_zero() const;

    /// Rows and columns restricted to the given index lists.
    ProjMap block(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    friend ProjMap operator+(const ProjMap& a, const ProjMap& b);
    friend ProjMap operator-(const ProjMap& a, const ProjMap& b);
    friend ProjMap operator*(const Rational& c, const ProjMap& a);
    friend bool operator==(const ProjMap& a, const ProjMap& b);

private:
    ProjModule source_;
    ProjModule target_;
    std::vector<std::vector<Vector>> entries_;
};

/// g ∘ f.
ProjMap compose(const ProjMap& g, const ProjMap& f);

/// Basis of Hom_A(p, q): one elementary matrix per basis monomial of each e_{v_t} A e_{v_s}.
std::vector<ProjMap> hom_space(const ProjModule& p, const ProjModule& q);

struct Summand {
    std::string name;
    std::map<int, std::vector<std::size_t>> rows_by_degree;
};

class BoundedComplex;
using ComplexPtr = std::shared_ptr<const BoundedComplex>;

class BoundedComplex {
public:
    /// `modules` by degree; `differentials[k]` maps degree k to k-1.  Summands
    /// must partition every degree and the differential must be block diagonal
    /// with respect to them.  Throws InvalidComplex otherwise, or if d∘d != 0.
    BoundedComplex(AlgebraPtr algebra, std::map<int, ProjModule> modules, std::map<int, ProjMap> differentials,
                   std::vector<Summand> summands = {});

    static BoundedComplex stalk(const ProjModule& m, int degree = 0);
    static BoundedComplex two_term(const ProjModule& degree1, const ProjModule& degree0, const ProjMap& d,
                                   std::vector<Summand> summands = {});

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    /// Zero module outside the support.
    ProjModule module(int k) const;
    ProjMap differential(int k) const;
    /// Degrees carrying a nonzero module, ascending.
    std::vector<int> support() const;
    bool is_zero() const { return support().empty(); }

    const std::vector<Summand>& summands() const noexcept { return summands_; }
    bool has_summands() const noexcept { return !summands_.empty(); }
    std::size_t summand_index(const std::string& name) const;
    BoundedComplex summand(std::size_t i) const;
    BoundedComplex summand(const std::string& name) const { return summand(summand_index(name)); }
    /// Subcomplex on the given rows; the caller guarantees it is a direct summand.
    BoundedComplex restrict_rows(const std::map<int, std::vector<std::size_t>>& rows) const;
    /// Split along connected blocks of the differential.
    std::vector<Summand> connected_blocks() const;

    BoundedComplex direct_sum(const BoundedComplex& other) const;

    friend bool operator==(const BoundedComplex& a, const BoundedComplex& b);

private:
    AlgebraPtr algebra_;
    std::map<int, ProjModule> modules_;
    std::map<int, ProjMap> differentials_;
    std::vector<Summand> summands_;
};

/// Degreewise components of a map of some shift; absent degrees are zero.
struct ChainMap {
    ComplexPtr source;
    ComplexPtr target;
    int shift = 0;
    std::map<int, ProjMap> components;  // keyed by source degree

    ProjMap component(int k) const;
    bool satisfies_chain_rule() const;
};

/// Coordinates on the space of degreewise maps X_k -> Y_{k-shift}.
class MapSpace {
public:
    MapSpace(ComplexPtr x, ComplexPtr y, int shift);

    std::size_t dim() const noexcept { return width_; }
    Vector to_vector(const ChainMap& f) const;
    ChainMap from_vector(const Vector& v) const;

    const ComplexPtr& source() const noexcept { return x_; }
    const ComplexPtr& target() const noexcept { return y_; }
    int shift() const noexcept { return shift_; }

private:
    struct Block {
        int degree;
        ProjModule from, to;
        std::size_t offset;
        std::vector<std::size_t> row, col, basis_index;  // one per coordinate
    };
    ComplexPtr x_, y_;
    int shift_;
    std::size_t width_ = 0;
    std::vector<Block> blocks_;
};

/// All chain maps of the given shift, as a subspace of MapSpace(x, y, shift).
la::Subspace chain_maps(const MapSpace& space);
/// Null-homotopic maps inside the same coordinates.
la::Subspace null_homotopic_maps(const MapSpace& space);

class HomotopyClass;

/// Hom_{K^b(proj A)}(x, y[shift]) with lifted representatives.
class HomotopyHom {
public:
    /// Throws AlgebraMismatch if x and y live over different algebras.
    HomotopyHom(ComplexPtr x, ComplexPtr y, int shift);

    std::size_t dim() const noexcept { return quotient_.dim(); }
    const MapSpace& space() const noexcept { return space_; }
    HomotopyClass basis(std::size_t i) const;
    Vector coordinates(const ChainMap& f) const;
    HomotopyClass from_coordinates(const Vector& c) const;
    bool is_null_homotopic(const ChainMap& f) const;

private:
    MapSpace space_;
    la::Subspace cycles_;
    la::QuotientMap quotient_;
};

class HomotopyClass {
public:
    explicit HomotopyClass(ChainMap representative);
    static HomotopyClass identity(const ComplexPtr& x);

    const ChainMap& representative() const noexcept { return rep_; }
    const ComplexPtr& source() const noexcept { return rep_.source; }
    const ComplexPtr& target() const noexcept { return rep_.target; }
    int shift() const noexcept { return rep_.shift; }

    bool is_zero() const;
    bool equals(const HomotopyClass& other) const;

    friend HomotopyClass operator+(const HomotopyClass& a, const HomotopyClass& b);
    friend HomotopyClass operator*(const Rational& c, const HomotopyClass& a);

private:
    ChainMap rep_;
};

/// f ∘ g (first g, then f); throws ComplexMismatch unless target(g) = source(f).
HomotopyClass compose(const HomotopyClass& f, const HomotopyClass& g);

bool same_complex(const ComplexPtr& a, const ComplexPtr& b);

/// End of a complex with named summands.  Written in diagrammatic order: a
/// class S -> T lies in e_S E e_T and the product u*w means "u, then w".
struct EndomorphismAlgebra {
    AlgebraPtr algebra;
    std::vector<std::string> names;
    std::vector<ComplexPtr> summands;
    std::vector<std::vector<std::shared_ptr<const HomotopyHom>>> homs;  // [source][target]

    std::size_t index(const std::string& name) const;
    /// Element for a class between summands a and b.
    AlgebraElement element_between(std::size_t a, std::size_t b, const HomotopyClass& f) const;
    HomotopyClass class_of(std::size_t basis_index) const;
};

/// Throws NotBasicDecomposition if summands repeat up to isomorphism or are not indecomposable,
/// InvalidComplex if x has no declared decomposition.
EndomorphismAlgebra endomorphism_algebra(const ComplexPtr& x);

/// End_K(x) as a one-vertex algebra, or nullptr when x is null-homotopic.
AlgebraPtr local_endomorphisms(const ComplexPtr& x);
bool is_indecomposable(const ComplexPtr& x);
/// Throws NotIndecomposable if some entry is not indecomposable.
bool summands_pairwise_noniso(const std::vector<ComplexPtr>& xs);
bool isomorphic_indecomposables(const ComplexPtr& x, const ComplexPtr& y);

struct TiltingReport {
    bool presilting = false;
    bool no_negative = false;
    bool summand_count_ok = false;
    bool tilting = false;
    std::size_t distinct_summands = 0;
    std::size_t vertex_count = 0;
    std::vector<std::string> notes;
};

/// Throws NotTwoTerm unless x lives in degrees 0 and 1.
TiltingReport two_term_tilting_check(const ComplexPtr& x);

}  // namespace tiltcert::homotopy
