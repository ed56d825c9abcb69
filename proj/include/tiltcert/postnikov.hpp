#pragma once

// Ice quivers with potential and their frozen Jacobian quotients.

#include "tiltcert/invariants.hpp"
#include "tiltcert/quivalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tiltcert::postnikov {

struct PotentialTerm {
    int sign = 1;
    std::vector<std::size_t> cycle;  // arrow indices, canonically rotated

    friend bool operator==(const PotentialTerm&, const PotentialTerm&) = default;
};

struct IceQuiverWithPotential {
    quiv::Quiver quiver;
    std::vector<PotentialTerm> potential;
    std::vector<std::size_t> frozen;                   // sorted vertex indices
    std::optional<std::vector<std::size_t>> rotation;  // vertex permutation

    bool is_frozen(std::size_t v) const;
};

/// Raw term as read from input: sign and arrow ids.
struct TermSpec {
    int sign = 1;
    std::vector<std::string> cycle;
};

/// Validates and canonicalizes.  Throws NonCycleTerm, UnknownVertex,
/// UnknownArrow, or InputError for a bad sign or a non-bijective rotation.
IceQuiverWithPotential make_iqp(quiv::Quiver q, const std::vector<TermSpec>& potential,
                                const std::vector<std::string>& frozen,
                                const std::optional<std::map<std::string, std::string>>& rotation = std::nullopt);

/// Rotation of a cycle with the lexicographically least arrow-id sequence.
std::vector<std::size_t> canonical_rotation(const quiv::Quiver& q, const std::vector<std::size_t>& cycle);

/// Sum over occurrences of a: sign times the cycle read from just after a,
/// with a removed.  nullopt when the result is zero.
std::optional<quiv::Relation> cyclic_derivative(const quiv::Quiver& q, const std::vector<PotentialTerm>& w,
                                                std::size_t arrow);

/// Relations d_a W for every arrow a, on the full quiver.
std::vector<quiv::Relation> jacobian_relations(const IceQuiverWithPotential& iqp);
quiv::AlgebraPtr jacobian_quotient(const IceQuiverWithPotential& iqp, std::optional<std::size_t> max_len = std::nullopt);

/// Restriction to the mutable vertices.  Relations are d_a W for arrows with a
/// mutable endpoint, with every monomial through a frozen vertex deleted.
struct FrozenQuotientData {
    quiv::Quiver quiver;
    std::vector<quiv::Relation> relations;
};
FrozenQuotientData frozen_quotient_presentation(const IceQuiverWithPotential& iqp);
quiv::AlgebraPtr frozen_jacobian_quotient(const IceQuiverWithPotential& iqp,
                                          std::optional<std::size_t> max_len = std::nullopt);

/// Whether a vertex permutation is a quiver automorphism fixing the frozen set
/// and the potential up to rotation of its terms.
bool is_potential_automorphism(const IceQuiverWithPotential& iqp, const std::vector<std::size_t>& perm);

struct SymmetryResult {
    bool symmetric = false;
    std::optional<std::vector<std::size_t>> automorphism;
    std::size_t order = 0;
};

/// With a declared rotation, verifies it (and its order, if requested).
/// Otherwise searches for a non-identity automorphism, of the given order if any.
SymmetryResult check_symmetry(const IceQuiverWithPotential& iqp, std::optional<std::size_t> order = std::nullopt);

/// Relabel vertices by a permutation: vertex v becomes perm[v].
IceQuiverWithPotential relabel(const IceQuiverWithPotential& iqp, const std::vector<std::size_t>& perm);

using inv::compare_invariants;

struct CheckReport {
    bool finite_dimensional = false;
    std::optional<std::size_t> dimension;
    std::optional<bool> symmetric;  // only when a rotation is declared
    bool self_injective = false;
    std::optional<inv::InvariantTable> invariants;
    std::string note;
    bool ok() const { return finite_dimensional && symmetric.value_or(true) && self_injective; }
};
CheckReport check(const IceQuiverWithPotential& iqp, std::optional<std::size_t> max_len = std::nullopt);

}  // namespace tiltcert::postnikov
