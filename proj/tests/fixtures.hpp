#pragma once

// Small quivers with relations shared by several test files.

#include "tiltcert/quivalg.hpp"

#include <string>
#include <vector>

namespace fixture {

using namespace tiltcert::quiv;

struct Presented {
    Quiver quiver;
    std::vector<Relation> relations;
};

inline Relation monomial(const Quiver& q, const std::vector<std::string>& ids) {
    return Relation{{{Rational(1), Path::from_ids(q, ids)}}};
}

/// Cyclic quiver on m vertices with arrows v → v−1, all paths of length `len` killed.
inline Presented cyclic_truncated(std::size_t m, std::size_t len) {
    std::vector<std::string> vs;
    std::vector<ArrowSpec> as;
    for (std::size_t v = 1; v <= m; ++v) vs.push_back(std::to_string(v));
    for (std::size_t v = 1; v <= m; ++v)
        as.push_back({"a" + std::to_string(v), std::to_string(v), std::to_string(v == 1 ? m : v - 1)});
    Quiver q(vs, as);
    std::vector<Relation> rels;
    for (std::size_t v = 1; v <= m; ++v) {
        std::vector<std::string> ids;
        std::size_t cur = v;
        for (std::size_t k = 0; k < len; ++k) {
            ids.push_back("a" + std::to_string(cur));
            cur = cur == 1 ? m : cur - 1;
        }
        rels.push_back(monomial(q, ids));
    }
    return {q, rels};
}

/// One vertex with a loop x and relation x^k.
inline Presented truncated_loop(std::size_t k) {
    Quiver q({"1"}, {{"x", "1", "1"}});
    std::vector<Relation> rels;
    if (k > 0) rels.push_back(monomial(q, std::vector<std::string>(k, "x")));
    return {q, rels};
}

inline Presented single_vertex() { return {Quiver({"1"}, {}), {}}; }
inline Presented two_points() { return {Quiver({"1", "2"}, {}), {}}; }
inline Presented a2_line() { return {Quiver({"1", "2"}, {{"a", "1", "2"}}), {}}; }

/// Oriented 3-cycle a:1→2, b:2→3, c:3→1 with all length-2 paths killed.
inline Presented three_cycle_jacobian() {
    Quiver q({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}});
    return {q, {monomial(q, {"b", "c"}), monomial(q, {"c", "a"}), monomial(q, {"a", "b"})}};
}

/// Left-to-right presentation of the algebra with vertices C1..Cn, B0..B(n-1).
inline Presented a2_presentation(std::size_t n) {
    auto C = [&](std::size_t i) { return "C" + std::to_string((i + n - 1) % n + 1); };
    auto B = [&](std::size_t i) { return "B" + std::to_string(i % n); };
    std::vector<std::string> vs;
    for (std::size_t i = 1; i <= n; ++i) vs.push_back(C(i));
    for (std::size_t i = 0; i < n; ++i) vs.push_back(B(i));
    std::vector<ArrowSpec> as;
    for (std::size_t i = 1; i <= n; ++i) as.push_back({"alpha" + std::to_string(i), C(i), C(i + 1)});
    for (std::size_t i = 1; i <= n; ++i) as.push_back({"gamma" + std::to_string(i), C(i), B(i - 1)});
    for (std::size_t i = 0; i < n; ++i) as.push_back({"beta" + std::to_string(i), B(i), i == 0 ? C(n) : C(i)});
    Quiver q(vs, as);
    auto alpha = [&](std::size_t i) { return "alpha" + std::to_string((i + n - 1) % n + 1); };
    std::vector<Relation> rels;
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<std::string> power;
        for (std::size_t k = 0; k < n - 1; ++k) power.push_back(alpha(i + k));
        std::size_t b = i - 1;
        Relation r{{{Rational(1), Path::from_ids(q, power)},
                    {Rational(-1), Path::from_ids(q, {"gamma" + std::to_string(i), "beta" + std::to_string(b)})}}};
        rels.push_back(r);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t c = i == 0 ? n : i;
        rels.push_back(monomial(q, {"beta" + std::to_string(i), alpha(c)}));
    }
    for (std::size_t i = 1; i <= n; ++i) rels.push_back(monomial(q, {alpha(i), "gamma" + std::to_string(i % n + 1)}));
    return {q, rels};
}

}  // namespace fixture
