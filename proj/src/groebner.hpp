#pragma once

// Noncommutative Gröbner bases in path algebras (deglex order).  Internal.

#include "tiltcert/quivalg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tiltcert::quiv::detail {

struct DeglexGreater {
    bool operator()(const Path& a, const Path& b) const { return deglex_less(b, a); }
};

/// Polynomial in paths, leading monomial first.
using Poly = std::map<Path, Rational, DeglexGreater>;

Poly to_poly(const Relation& r);
Relation to_relation(const Poly& p);
void add_scaled(Poly& p, const Rational& c, const Poly& q);
/// a·q·b; all three must compose.
Poly sandwich(const Path& a, const Poly& q, const Path& b);

/// Position of `tip` inside `word`, if it occurs.
std::optional<std::size_t> find_subword(const Path& word, const Path& tip);

/// Full reduction of p modulo the monic basis `gb`.
Poly reduce(Poly p, const std::vector<Poly>& gb);

struct GroebnerResult {
    std::vector<Poly> basis;  // reduced, monic, sorted by leading monomial
    bool complete = true;     // false if an overlap longer than the cap was skipped
};

GroebnerResult groebner_basis(const std::vector<Relation>& rels, std::size_t cap);

}  // namespace tiltcert::quiv::detail
