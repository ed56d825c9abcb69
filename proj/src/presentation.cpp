#include "groebner.hpp"
#include "tiltcert/errors.hpp"
#include "tiltcert/quivalg.hpp"

#include <set>

namespace tiltcert::quiv {

namespace {

Vector restrict_to(const FDAlgebra& a, const Vector& x, std::size_t u, std::size_t v) {
    Vector out(x.size());
    for (auto i : a.component(u, v)) out[i] = x[i];
    return out;
}

la::Subspace component_of(const FDAlgebra& a, const la::Subspace& s, std::size_t u, std::size_t v) {
    la::Subspace out(a.dim());
    for (const auto& x : s.basis()) out.add(restrict_to(a, x, u, v));
    return out;
}

std::string arrow_name(std::size_t k) { return "x" + std::to_string(k + 1); }

}  // namespace

Quiver recover_quiver(const FDAlgebra& a) {
    require_basic(a);
    auto layers = radical_layers(a);
    const la::Subspace& j = layers[0];
    la::Subspace j2 = layers.size() > 1 ? layers[1] : la::Subspace(a.dim());
    std::vector<ArrowSpec> arrows;
    for (std::size_t u = 0; u < a.vertex_count(); ++u)
        for (std::size_t v = 0; v < a.vertex_count(); ++v) {
            std::size_t m = component_of(a, j, u, v).dim() - component_of(a, j2, u, v).dim();
            for (std::size_t k = 0; k < m; ++k)
                arrows.push_back({arrow_name(arrows.size()), a.vertices()[u], a.vertices()[v]});
        }
    return Quiver(a.vertices(), arrows);
}

GeneratedPresentation present_algebra(const FDAlgebra& a) {
    require_basic(a);
    auto layers = radical_layers(a);
    const std::size_t loewy = layers.size();  // J^loewy = 0
    const la::Subspace& j = layers[0];
    la::Subspace j2 = loewy > 1 ? layers[1] : la::Subspace(a.dim());

    std::vector<ArrowSpec> specs;
    std::vector<Vector> images;
    for (std::size_t u = 0; u < a.vertex_count(); ++u)
        for (std::size_t v = 0; v < a.vertex_count(); ++v) {
            la::Subspace top = component_of(a, j2, u, v);
            for (const auto& x : component_of(a, j, u, v).basis()) {
                if (top.contains(x)) continue;
                top.add(x);
                specs.push_back({arrow_name(specs.size()), a.vertices()[u], a.vertices()[v]});
                images.push_back(x);
            }
        }
    Quiver q(a.vertices(), specs);

    // paths of length 1..loewy with their images, grouped by endpoints
    struct Walk {
        Path path;
        Vector image;
    };
    std::vector<std::vector<Walk>> by_length(loewy + 1);
    for (std::size_t ar = 0; ar < q.arrow_count(); ++ar)
        by_length[1].push_back({Path{q.arrow(ar).source, q.arrow(ar).target, {ar}}, images[ar]});
    for (std::size_t len = 2; len <= loewy; ++len)
        for (const auto& w : by_length[len - 1])
            for (std::size_t ar = 0; ar < q.arrow_count(); ++ar) {
                if (q.arrow(ar).source != w.path.end) continue;
                Path p = w.path;
                p.arrows.push_back(ar);
                p.end = q.arrow(ar).target;
                by_length[len].push_back({std::move(p), a.multiply(w.image, images[ar])});
            }

    std::vector<Relation> rels;
    const std::size_t cap = 2 * loewy + 2;
    for (std::size_t len = 2; len <= loewy; ++len)
        for (std::size_t u = 0; u < a.vertex_count(); ++u)
            for (std::size_t v = 0; v < a.vertex_count(); ++v) {
                std::vector<const Walk*> walks;
                for (std::size_t l = 1; l <= len; ++l)
                    for (const auto& w : by_length[l])
                        if (w.path.start == u && w.path.end == v) walks.push_back(&w);
                if (walks.empty()) continue;
                std::vector<Vector> cols;
                for (const auto* w : walks) cols.push_back(w->image);
                la::Subspace ker = la::kernel(la::Matrix::from_columns(cols, a.dim()));
                for (const auto& c : ker.basis()) {
                    Relation r;
                    for (std::size_t k = 0; k < walks.size(); ++k)
                        if (sgn(c[k]) != 0) r.terms.emplace_back(c[k], walks[k]->path);
                    auto gb = detail::groebner_basis(rels, cap).basis;
                    if (detail::reduce(detail::to_poly(r), gb).empty()) continue;
                    rels.push_back(std::move(r));
                }
            }

    GeneratedPresentation out{q, rels, {}};
    for (auto& x : images) out.arrow_images.push_back(a.element(std::move(x)));
    if (construct_algebra(q, rels)->dim() != a.dim())
        throw std::logic_error("generated presentation does not reproduce the algebra");
    return out;
}

bool verify_presentation(const FDAlgebra& e, const Quiver& cand_quiver, const std::vector<Relation>& cand_rels,
                         const std::vector<std::size_t>& vertex_map,
                         const std::map<std::string, AlgebraElement>& arrow_map, std::optional<std::size_t> max_len) {
    const std::size_t nv = cand_quiver.vertex_count();
    if (vertex_map.size() != nv || nv != e.vertex_count()) return false;
    std::set<std::size_t> seen(vertex_map.begin(), vertex_map.end());
    if (seen.size() != nv || *seen.rbegin() >= e.vertex_count()) return false;
    if (arrow_map.size() != cand_quiver.arrow_count()) return false;

    std::vector<Vector> images;
    for (const auto& arrow : cand_quiver.arrows()) {
        auto it = arrow_map.find(arrow.id);
        if (it == arrow_map.end()) return false;
        const AlgebraElement& x = it->second;
        if (x.algebra_id != e.id() || x.coeffs.size() != e.dim()) return false;
        if (!e.in_component(x.coeffs, vertex_map[arrow.source], vertex_map[arrow.target])) return false;
        images.push_back(x.coeffs);
    }

    // (1) relations vanish
    for (const auto& r : cand_rels) {
        Vector total(e.dim());
        for (const auto& [c, p] : r.terms) {
            Vector x = e.idempotent(vertex_map[p.start]).coeffs;
            for (auto ar : p.arrows) x = e.multiply(x, images.at(ar));
            la::axpy(total, c, x);
        }
        if (!la::is_zero(total)) return false;
    }

    // (2) idempotents and arrow images generate e
    la::Subspace generated(e.dim());
    std::vector<Vector> frontier;
    for (std::size_t v = 0; v < nv; ++v) {
        Vector x = e.idempotent(vertex_map[v]).coeffs;
        if (!generated.contains(x)) {
            generated.add(x);
            frontier.push_back(std::move(x));
        }
    }
    while (!frontier.empty()) {
        std::vector<Vector> next;
        for (const auto& x : frontier)
            for (const auto& g : images) {
                Vector y = e.multiply(x, g);
                if (la::is_zero(y) || generated.contains(y)) continue;
                generated.add(y);
                next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    if (generated.dim() != e.dim()) return false;

    // (3) the candidate presentation has the same dimension
    return construct_algebra(cand_quiver, cand_rels, max_len)->dim() == e.dim();
}

}  // namespace tiltcert::quiv
