#pragma once

// Derived-invariant tables: quantities that agree for derived equivalent algebras.

#include "tiltcert/quivalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tiltcert::inv {

struct InvariantTable {
    std::size_t dimension = 0;
    std::size_t simples = 0;
    quiv::IntMatrix cartan;
    la::Integer abs_det_cartan;
    std::vector<la::Integer> cartan_snf;
    std::size_t center_dimension = 0;
    bool basic = false;
    bool self_injective = false;
    std::optional<std::vector<std::string>> nakayama_permutation;  // image label per vertex
};

InvariantTable invariant_table(const quiv::FDAlgebra& a);

struct Comparison {
    InvariantTable a;
    InvariantTable b;
    bool simples_equal = false;
    bool det_equal = false;
    bool center_equal = false;
    bool snf_equal = false;  // reported only
    bool consistent = false;
};

/// consistent = equal #simples, |det Cartan| and center dimension.  A negative
/// answer rules out a derived equivalence; a positive one does not prove it.
Comparison compare_invariants(const quiv::FDAlgebra& a, const quiv::FDAlgebra& b);

}  // namespace tiltcert::inv
