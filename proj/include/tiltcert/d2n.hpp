#pragma once

// The self-injective pair A1(n), A2(n) of cluster-tilted type D_2n, and the
// two-term tilting complex P1(n) over A1(n) whose endomorphism ring is A2(n).
//
// A1(n): cyclic quiver on 1..2n with arrows a_v : v -> v-1, paths of length
// 2n-1 killed.  A2(n): vertices C1..Cn, B0..B(n-1) with
//   alpha_i : C_i -> C_{i+1},  gamma_i : C_i -> B_{i-1},
//   beta_i  : B_i -> C_i (beta_0 : B_0 -> C_n),
// and, written left to right, alpha^{n-1} - gamma beta, beta alpha, alpha gamma.
// Composing functionally these read alpha^{n-1} - beta gamma, alpha beta, gamma alpha.

#include "tiltcert/tiltbench.hpp"

#include <string>
#include <vector>

namespace tiltcert::d2n {

struct PresentedAlgebra {
    quiv::Quiver quiver;
    std::vector<quiv::Relation> relations;
    std::vector<std::string> functional_words;  // the same relations read right to left
};

/// Throws InputError unless n >= 4.
void require_valid_n(std::size_t n);

PresentedAlgebra a1_presentation(std::size_t n);
PresentedAlgebra a2_presentation(std::size_t n);
quiv::AlgebraPtr a1(std::size_t n);
quiv::AlgebraPtr a2(std::size_t n);

/// dim Hom(P(i), P(j)) = dim e_j A e_i for vertex labels i, j in 1..2n (0-based indices here).
quiv::IntMatrix hom_table(const quiv::FDAlgebra& a);

/// Summands B_i = (P(2i+1) -> P(2i+2)) and C_j = (0 -> P(2j)).
tiltbench::ApproximationDatum p1_datum(std::size_t n, quiv::AlgebraPtr a1_algebra = nullptr);

/// Homotopy classes for gamma, alpha and beta, with beta scaled so that
/// gamma then beta equals alpha^{n-1}.
struct Assignment {
    tiltbench::Candidate candidate;
    std::vector<la::Rational> beta_scalars;  // per i = 0..n-1
};
Assignment canonical_assignment(std::size_t n, const homotopy::ComplexPtr& p1);

tiltbench::EquivalenceReport run_demo(std::size_t n);

}  // namespace tiltcert::d2n
