#pragma once

// Independent brute-force references used by the tests.  Nothing here calls
// into construct_algebra or the Gröbner code.

#include "tiltcert/exactla.hpp"
#include "tiltcert/quivalg.hpp"

#include <map>
#include <utility>
#include <vector>

namespace oracle {

using tiltcert::la::Rational;
using tiltcert::quiv::Path;
using tiltcert::quiv::Quiver;
using tiltcert::quiv::Relation;

/// All paths of length ≤ max_len, trivial ones included.
inline std::vector<Path> all_paths(const Quiver& q, std::size_t max_len) {
    std::vector<Path> out;
    std::vector<Path> layer;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) layer.push_back(Path::trivial(v));
    for (std::size_t len = 0;; ++len) {
        out.insert(out.end(), layer.begin(), layer.end());
        if (len == max_len) break;
        std::vector<Path> next;
        for (const auto& p : layer)
            for (std::size_t a = 0; a < q.arrow_count(); ++a)
                if (q.arrow(a).source == p.end) {
                    Path r = p;
                    r.arrows.push_back(a);
                    r.end = q.arrow(a).target;
                    next.push_back(std::move(r));
                }
        layer = std::move(next);
    }
    return out;
}

inline bool contains_word(const std::vector<std::size_t>& w, const std::vector<std::size_t>& f) {
    if (f.size() > w.size()) return false;
    for (std::size_t i = 0; i + f.size() <= w.size(); ++i)
        if (std::equal(f.begin(), f.end(), w.begin() + static_cast<long>(i))) return true;
    return false;
}

/// dim kQ/I for a monomial ideal: number of paths avoiding every forbidden word.
/// Returns -1 if some path of length `limit` still survives.
inline long count_surviving_paths(const Quiver& q, const std::vector<std::vector<std::size_t>>& forbidden,
                                  std::size_t limit) {
    long count = 0;
    for (const auto& p : all_paths(q, limit)) {
        bool dead = false;
        for (const auto& f : forbidden) dead = dead || contains_word(p.arrows, f);
        if (dead) continue;
        if (p.length() == limit) return -1;
        ++count;
    }
    return count;
}

/// dim of F_ell / (I ∩ F_ell) where I is spanned by a·r·b of length ≤ ell + slack.
/// Elimination is done per endpoint pair.  Also reports whether every path of
/// length exactly ell lies in the truncated ideal.
struct TruncatedResult {
    long dim = 0;
    bool top_layer_dead = false;
};

inline TruncatedResult truncated_quotient_dim(const Quiver& q, const std::vector<Relation>& rels, std::size_t ell,
                                              std::size_t slack) {
    using tiltcert::la::EchelonBasis;
    using tiltcert::la::Vector;
    const std::size_t big = ell + slack;
    auto paths = all_paths(q, big);
    TruncatedResult res{0, true};
    for (std::size_t u = 0; u < q.vertex_count(); ++u)
        for (std::size_t v = 0; v < q.vertex_count(); ++v) {
            // columns: long paths first, then paths of length ≤ ell
            std::vector<Path> cols;
            for (const auto& p : paths)
                if (p.start == u && p.end == v && p.length() > ell) cols.push_back(p);
            std::size_t long_count = cols.size();
            for (const auto& p : paths)
                if (p.start == u && p.end == v && p.length() <= ell) cols.push_back(p);
            std::map<std::vector<std::size_t>, std::size_t> index;
            for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i].arrows] = i;

            EchelonBasis ideal(cols.size());
            for (const auto& a : paths) {
                if (a.start != u) continue;
                for (const auto& r : rels) {
                    if (r.source() != a.end) continue;
                    for (const auto& b : paths) {
                        if (b.start != r.target() || b.end != v) continue;
                        if (a.length() + r.max_length() + b.length() > big) continue;
                        Vector vec(cols.size());
                        for (const auto& [c, p] : r.terms) {
                            std::vector<std::size_t> w = a.arrows;
                            w.insert(w.end(), p.arrows.begin(), p.arrows.end());
                            w.insert(w.end(), b.arrows.begin(), b.arrows.end());
                            vec[index.at(w)] += c;
                        }
                        ideal.insert(vec);
                    }
                }
            }
            std::size_t short_in_ideal = 0;
            for (std::size_t k = 0; k < ideal.dim(); ++k)
                if (ideal.pivots()[k] >= long_count) ++short_in_ideal;
            res.dim += static_cast<long>(cols.size() - long_count - short_in_ideal);

            for (std::size_t i = long_count; i < cols.size(); ++i) {
                if (cols[i].length() != ell) continue;
                Vector e(cols.size());
                e[i] = 1;
                if (!tiltcert::la::is_zero(ideal.reduce(e))) res.top_layer_dead = false;
            }
        }
    return res;
}

}  // namespace oracle
