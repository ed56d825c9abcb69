#pragma once

// From a two-term approximation datum to a certified derived equivalence.

#include "tiltcert/homotopy.hpp"
#include "tiltcert/invariants.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tiltcert::tiltbench {

using homotopy::BoundedComplex;
using homotopy::ComplexPtr;
using homotopy::HomotopyClass;
using homotopy::ProjMap;
using homotopy::ProjModule;
using homotopy::Summand;

/// phi : L1 -> L0, placed in degrees 1 and 0.
struct ApproximationDatum {
    quiv::AlgebraPtr algebra;
    ProjModule l1;
    ProjModule l0;
    ProjMap phi;
    std::vector<Summand> summands;
};

ComplexPtr build_two_term(const ApproximationDatum& d);

/// Image of one candidate arrow: a class between two named summands.
struct ArrowImage {
    std::string source_summand;
    std::string target_summand;
    HomotopyClass map;
};

/// Presented algebra B together with a proposed isomorphism B -> End(T).
struct Candidate {
    quiv::Quiver quiver;
    std::vector<quiv::Relation> relations;
    std::map<std::string, std::string> vertex_to_summand;
    std::map<std::string, ArrowImage> arrows;
    std::optional<std::size_t> max_len;
};

enum class Verdict { Certified, Consistent, NotCertified };
std::string to_string(Verdict v);

struct EquivalenceReport {
    homotopy::TiltingReport tilting;
    std::optional<homotopy::EndomorphismAlgebra> endomorphisms;
    std::optional<bool> candidate_verified;
    inv::InvariantTable source_invariants;
    std::optional<inv::InvariantTable> end_invariants;
    std::optional<inv::InvariantTable> candidate_invariants;
    bool invariants_consistent = false;
    bool source_self_injective = false;
    std::vector<std::string> warnings;
    Verdict verdict = Verdict::NotCertified;
};

/// Tilting check, End, optional presentation check, invariant table.
EquivalenceReport run_pipeline(const ApproximationDatum& d, const std::optional<Candidate>& candidate);

}  // namespace tiltcert::tiltbench
