#include "tiltcert/postnikov.hpp"

#include "tiltcert/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace tiltcert::postnikov {

using quiv::Path;
using quiv::Quiver;
using quiv::Relation;
using la::Rational;

bool IceQuiverWithPotential::is_frozen(std::size_t v) const {
    return std::binary_search(frozen.begin(), frozen.end(), v);
}

namespace {

std::vector<std::string> ids_of(const Quiver& q, const std::vector<std::size_t>& arrows) {
    std::vector<std::string> out;
    for (auto a : arrows) out.push_back(q.arrow(a).id);
    return out;
}

std::size_t permutation_order(const std::vector<std::size_t>& perm) {
    std::size_t order = 1;
    std::vector<bool> seen(perm.size());
    for (std::size_t v = 0; v < perm.size(); ++v) {
        if (seen[v]) continue;
        std::size_t len = 0;
        for (std::size_t w = v; !seen[w]; w = perm[w]) {
            seen[w] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

bool is_bijection(const std::vector<std::size_t>& perm) {
    std::vector<bool> hit(perm.size());
    for (auto w : perm) {
        if (w >= perm.size() || hit[w]) return false;
        hit[w] = true;
    }
    return true;
}

using ArrowCount = std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>;

ArrowCount arrows_by_ends(const Quiver& q) {
    ArrowCount m;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) m[{q.arrow(a).source, q.arrow(a).target}].push_back(a);
    return m;
}

std::size_t count_between(const ArrowCount& m, std::size_t u, std::size_t v) {
    auto it = m.find({u, v});
    return it == m.end() ? 0 : it->second.size();
}

std::vector<std::pair<int, std::vector<std::string>>> potential_key(const Quiver& q,
                                                                    const std::vector<PotentialTerm>& w,
                                                                    const std::vector<std::size_t>& arrow_map) {
    std::vector<std::pair<int, std::vector<std::string>>> key;
    for (const auto& t : w) {
        std::vector<std::size_t> mapped;
        for (auto a : t.cycle) mapped.push_back(arrow_map[a]);
        key.emplace_back(t.sign, ids_of(q, canonical_rotation(q, mapped)));
    }
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

std::vector<std::size_t> canonical_rotation(const Quiver& q, const std::vector<std::size_t>& cycle) {
    std::vector<std::size_t> best = cycle;
    auto best_ids = ids_of(q, best);
    for (std::size_t r = 1; r < cycle.size(); ++r) {
        std::vector<std::size_t> c(cycle.begin() + static_cast<long>(r), cycle.end());
        c.insert(c.end(), cycle.begin(), cycle.begin() + static_cast<long>(r));
        auto ids = ids_of(q, c);
        if (ids < best_ids) {
            best = std::move(c);
            best_ids = std::move(ids);
        }
    }
    return best;
}

IceQuiverWithPotential make_iqp(Quiver q, const std::vector<TermSpec>& potential, const std::vector<std::string>& frozen,
                                const std::optional<std::map<std::string, std::string>>& rotation) {
    IceQuiverWithPotential iqp;
    for (const auto& f : frozen) iqp.frozen.push_back(q.vertex_index(f));
    std::sort(iqp.frozen.begin(), iqp.frozen.end());
    iqp.frozen.erase(std::unique(iqp.frozen.begin(), iqp.frozen.end()), iqp.frozen.end());

    for (const auto& t : potential) {
        if (t.sign != 1 && t.sign != -1) throw InputError("potential sign must be 1 or -1");
        if (t.cycle.empty()) throw NonCycleTerm("empty potential term");
        std::vector<std::size_t> c;
        for (const auto& id : t.cycle) c.push_back(q.arrow_index(id));
        for (std::size_t i = 0; i < c.size(); ++i) {
            const auto& a = q.arrow(c[i]);
            const auto& b = q.arrow(c[(i + 1) % c.size()]);
            if (a.target != b.source) {
                std::string word;
                for (const auto& id : t.cycle) word += (word.empty() ? "" : " ") + id;
                throw NonCycleTerm("potential term is not a cycle: " + word);
            }
        }
        iqp.potential.push_back({t.sign, canonical_rotation(q, c)});
    }

    if (rotation) {
        std::vector<std::size_t> perm(q.vertex_count(), q.vertex_count());
        for (const auto& [from, to] : *rotation) perm[q.vertex_index(from)] = q.vertex_index(to);
        if (!is_bijection(perm)) throw InputError("rotation is not a permutation of the vertices");
        iqp.rotation = std::move(perm);
    }
    iqp.quiver = std::move(q);
    return iqp;
}

std::optional<Relation> cyclic_derivative(const Quiver& q, const std::vector<PotentialTerm>& w, std::size_t arrow) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, Rational> acc;
    for (const auto& t : w) {
        const std::size_t m = t.cycle.size();
        for (std::size_t j = 0; j < m; ++j) {
            if (t.cycle[j] != arrow) continue;
            std::vector<std::size_t> rest;
            for (std::size_t k = 1; k < m; ++k) rest.push_back(t.cycle[(j + k) % m]);
            acc[{q.arrow(arrow).target, rest}] += Rational(t.sign);
        }
    }
    std::vector<std::pair<Rational, Path>> terms;
    for (const auto& [key, c] : acc) {
        if (sgn(c) == 0) continue;
        Path p{key.first, q.arrow(arrow).source, key.second};
        terms.emplace_back(c, p);
    }
    if (terms.empty()) return std::nullopt;
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return quiv::deglex_less(b.second, a.second); });
    return Relation{std::move(terms)};
}

std::vector<Relation> jacobian_relations(const IceQuiverWithPotential& iqp) {
    std::vector<Relation> rels;
    for (std::size_t a = 0; a < iqp.quiver.arrow_count(); ++a)
        if (auto r = cyclic_derivative(iqp.quiver, iqp.potential, a)) rels.push_back(std::move(*r));
    return rels;
}

quiv::AlgebraPtr jacobian_quotient(const IceQuiverWithPotential& iqp, std::optional<std::size_t> max_len) {
    return quiv::construct_algebra(iqp.quiver, jacobian_relations(iqp), max_len);
}

FrozenQuotientData frozen_quotient_presentation(const IceQuiverWithPotential& iqp) {
    const Quiver& q = iqp.quiver;
    std::vector<std::string> vs;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        if (!iqp.is_frozen(v)) vs.push_back(q.vertex(v));
    std::vector<quiv::ArrowSpec> as;
    for (const auto& a : q.arrows())
        if (!iqp.is_frozen(a.source) && !iqp.is_frozen(a.target)) as.push_back({a.id, q.vertex(a.source), q.vertex(a.target)});
    FrozenQuotientData out{Quiver(vs, as), {}};
    const Quiver& sub = out.quiver;

    auto survives = [&](const Path& p) {
        if (iqp.is_frozen(p.start)) return false;
        for (auto a : p.arrows)
            if (iqp.is_frozen(q.arrow(a).target)) return false;
        return true;
    };
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        if (iqp.is_frozen(q.arrow(a).source) && iqp.is_frozen(q.arrow(a).target)) continue;
        auto r = cyclic_derivative(q, iqp.potential, a);
        if (!r) continue;
        Relation kept;
        for (const auto& [c, p] : r->terms) {
            if (!survives(p)) continue;
            Path m{sub.vertex_index(q.vertex(p.start)), sub.vertex_index(q.vertex(p.end)), {}};
            for (auto b : p.arrows) m.arrows.push_back(sub.arrow_index(q.arrow(b).id));
            kept.terms.emplace_back(c, std::move(m));
        }
        if (!kept.terms.empty()) out.relations.push_back(std::move(kept));
    }
    return out;
}

quiv::AlgebraPtr frozen_jacobian_quotient(const IceQuiverWithPotential& iqp, std::optional<std::size_t> max_len) {
    auto d = frozen_quotient_presentation(iqp);
    return quiv::construct_algebra(d.quiver, d.relations, max_len);
}

bool is_potential_automorphism(const IceQuiverWithPotential& iqp, const std::vector<std::size_t>& perm) {
    const Quiver& q = iqp.quiver;
    if (perm.size() != q.vertex_count() || !is_bijection(perm)) return false;
    for (std::size_t v = 0; v < perm.size(); ++v)
        if (iqp.is_frozen(v) != iqp.is_frozen(perm[v])) return false;
    auto ends = arrows_by_ends(q);
    for (const auto& [uv, list] : ends)
        if (count_between(ends, perm[uv.first], perm[uv.second]) != list.size()) return false;

    const auto target_key = potential_key(q, iqp.potential, [&] {
        std::vector<std::size_t> id(q.arrow_count());
        std::iota(id.begin(), id.end(), 0);
        return id;
    }());
    // parallel arrows may be matched in any order
    std::vector<std::size_t> arrow_map(q.arrow_count());
    std::vector<bool> used(q.arrow_count());
    std::function<bool(std::size_t)> assign = [&](std::size_t a) -> bool {
        if (a == q.arrow_count()) return potential_key(q, iqp.potential, arrow_map) == target_key;
        const auto& arr = q.arrow(a);
        for (auto b : ends.at({perm[arr.source], perm[arr.target]})) {
            if (used[b]) continue;
            used[b] = true;
            arrow_map[a] = b;
            if (assign(a + 1)) return true;
            used[b] = false;
        }
        return false;
    };
    return assign(0);
}

SymmetryResult check_symmetry(const IceQuiverWithPotential& iqp, std::optional<std::size_t> order) {
    SymmetryResult r;
    if (iqp.rotation) {
        r.order = permutation_order(*iqp.rotation);
        r.symmetric = is_potential_automorphism(iqp, *iqp.rotation) && (!order || *order == r.order);
        if (r.symmetric) r.automorphism = iqp.rotation;
        return r;
    }
    const Quiver& q = iqp.quiver;
    const std::size_t n = q.vertex_count();
    auto ends = arrows_by_ends(q);
    std::vector<std::tuple<bool, std::size_t, std::size_t, std::size_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) std::get<0>(sig[v]) = iqp.is_frozen(v);
    for (const auto& a : q.arrows()) {
        ++std::get<1>(sig[a.source]);
        ++std::get<2>(sig[a.target]);
        if (a.source == a.target) ++std::get<3>(sig[a.source]);
    }
    std::vector<std::size_t> perm(n);
    std::vector<bool> used(n);
    std::function<bool(std::size_t)> search = [&](std::size_t v) -> bool {
        if (v == n) {
            bool identity = true;
            for (std::size_t k = 0; k < n; ++k) identity = identity && perm[k] == k;
            if (identity) return false;
            if (order && permutation_order(perm) != *order) return false;
            return is_potential_automorphism(iqp, perm);
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || sig[w] != sig[v]) continue;
            perm[v] = w;
            bool ok = true;
            for (std::size_t u = 0; u <= v && ok; ++u)
                ok = count_between(ends, u, v) == count_between(ends, perm[u], w) &&
                     count_between(ends, v, u) == count_between(ends, w, perm[u]);
            if (!ok) continue;
            used[w] = true;
            if (search(v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    if (search(0)) {
        r.symmetric = true;
        r.automorphism = perm;
        r.order = permutation_order(perm);
    }
    return r;
}

IceQuiverWithPotential relabel(const IceQuiverWithPotential& iqp, const std::vector<std::size_t>& perm) {
    const Quiver& q = iqp.quiver;
    if (perm.size() != q.vertex_count() || !is_bijection(perm)) throw InputError("relabeling is not a permutation");
    std::vector<quiv::ArrowSpec> as;
    for (const auto& a : q.arrows()) as.push_back({a.id, q.vertex(perm[a.source]), q.vertex(perm[a.target])});
    IceQuiverWithPotential out;
    out.quiver = Quiver(q.vertices(), as);
    for (const auto& t : iqp.potential) out.potential.push_back({t.sign, canonical_rotation(out.quiver, t.cycle)});
    for (auto f : iqp.frozen) out.frozen.push_back(perm[f]);
    std::sort(out.frozen.begin(), out.frozen.end());
    if (iqp.rotation) {
        std::vector<std::size_t> rot(q.vertex_count());
        for (std::size_t v = 0; v < rot.size(); ++v) rot[perm[v]] = perm[(*iqp.rotation)[v]];
        out.rotation = std::move(rot);
    }
    return out;
}

CheckReport check(const IceQuiverWithPotential& iqp, std::optional<std::size_t> max_len) {
    CheckReport r;
    quiv::AlgebraPtr a;
    try {
        a = frozen_jacobian_quotient(iqp, max_len);
    } catch (const NotStabilized&) {
        r.note = "quotient not certified finite-dimensional at cap";
    }
    if (iqp.rotation) r.symmetric = check_symmetry(iqp).symmetric;
    if (!a) return r;
    r.finite_dimensional = true;
    r.dimension = a->dim();
    r.invariants = inv::invariant_table(*a);
    r.self_injective = r.invariants->self_injective;
    return r;
}

}  // namespace tiltcert::postnikov
