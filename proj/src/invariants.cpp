#include "tiltcert/errors.hpp"
#include "tiltcert/quivalg.hpp"

#include <algorithm>
#include <random>

namespace tiltcert::quiv {

IntMatrix cartan_matrix(const FDAlgebra& a) {
    const std::size_t n = a.vertex_count();
    IntMatrix c(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[i][j] = static_cast<long long>(a.component(i, j).size());
    return c;
}

namespace {

// tr(L_b) for each basis element b
Vector left_traces(const FDAlgebra& a) {
    Vector tr(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k)
        for (std::size_t m = 0; m < a.dim(); ++m)
            for (const auto& [idx, c] : a.product(k, m))
                if (idx == m) tr[k] += c;
    return tr;
}

Vector restrict_to(const FDAlgebra& a, const Vector& x, std::size_t u, std::size_t v) {
    Vector out(x.size());
    for (auto i : a.component(u, v)) out[i] = x[i];
    return out;
}

}  // namespace

la::Subspace radical(const FDAlgebra& a) {
    const std::size_t d = a.dim();
    Vector tr = left_traces(a);
    la::Matrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, c] : a.product(i, j)) gram(i, j) += c * tr[k];
    la::Subspace j = la::kernel(gram);

    if (a.presentation()) {
        // relations carry no trivial terms, so the arrow ideal is the radical
        la::Subspace arrows(d);
        for (std::size_t i = 0; i < d; ++i)
            if (a.basis(i).path && a.basis(i).path->length() >= 1) arrows.add(la::unit_vector(d, i));
        if (!(arrows == j)) throw std::logic_error("trace radical disagrees with the arrow ideal");
    }
    return j;
}

la::Subspace product_space(const FDAlgebra& a, const la::Subspace& x, const la::Subspace& y) {
    la::Subspace out(a.dim());
    auto xb = x.basis();
    auto yb = y.basis();
    for (const auto& u : xb)
        for (const auto& v : yb) {
            Vector p = a.multiply(u, v);
            if (!la::is_zero(p)) out.add(p);
        }
    return out;
}

std::vector<la::Subspace> radical_layers(const FDAlgebra& a) {
    std::vector<la::Subspace> layers;
    la::Subspace j = radical(a);
    layers.push_back(j);
    while (layers.back().dim() > 0) layers.push_back(product_space(a, layers.back(), j));
    return layers;
}

SocleInfo socle_of_projective(const FDAlgebra& a, std::size_t v) {
    const std::size_t d = a.dim();
    std::vector<std::size_t> support;
    for (std::size_t u = 0; u < a.vertex_count(); ++u)
        for (auto i : a.component(v, u)) support.push_back(i);
    auto jb = radical(a).basis();

    // x = Σ c_i b_i with x·y = 0 for every y in J
    la::Matrix sys(jb.size() * d, support.size());
    for (std::size_t col = 0; col < support.size(); ++col) {
        Vector b = la::unit_vector(d, support[col]);
        for (std::size_t r = 0; r < jb.size(); ++r) {
            Vector p = a.multiply(b, jb[r]);
            for (std::size_t k = 0; k < d; ++k) sys(r * d + k, col) = p[k];
        }
    }
    la::Subspace ker = la::kernel(sys);
    SocleInfo info{la::Subspace(d), {}};
    for (const auto& c : ker.basis()) {
        Vector x(d);
        for (std::size_t col = 0; col < support.size(); ++col) x[support[col]] = c[col];
        info.socle.add(x);
    }
    auto sb = info.socle.basis();
    for (std::size_t w = 0; w < a.vertex_count(); ++w) {
        la::Subspace part(d);
        for (const auto& x : sb) part.add(restrict_to(a, x, v, w));
        for (std::size_t k = 0; k < part.dim(); ++k) info.isotypes.push_back(w);
    }
    return info;
}

namespace {

// Left socle of A e_v with its isotypes (isotype of e_w A e_v is w).
std::vector<std::size_t> left_socle_isotypes(const FDAlgebra& a, std::size_t v, const std::vector<Vector>& jb) {
    const std::size_t d = a.dim();
    std::vector<std::size_t> support;
    for (std::size_t u = 0; u < a.vertex_count(); ++u)
        for (auto i : a.component(u, v)) support.push_back(i);
    la::Matrix sys(jb.size() * d, support.size());
    for (std::size_t col = 0; col < support.size(); ++col) {
        Vector b = la::unit_vector(d, support[col]);
        for (std::size_t r = 0; r < jb.size(); ++r) {
            Vector p = a.multiply(jb[r], b);
            for (std::size_t k = 0; k < d; ++k) sys(r * d + k, col) = p[k];
        }
    }
    la::Subspace ker = la::kernel(sys);
    std::vector<Vector> soc;
    for (const auto& c : ker.basis()) {
        Vector x(d);
        for (std::size_t col = 0; col < support.size(); ++col) x[support[col]] = c[col];
        soc.push_back(x);
    }
    std::vector<std::size_t> iso;
    for (std::size_t w = 0; w < a.vertex_count(); ++w) {
        la::Subspace part(d);
        for (const auto& x : soc) part.add(restrict_to(a, x, w, v));
        for (std::size_t k = 0; k < part.dim(); ++k) iso.push_back(w);
    }
    return iso;
}

}  // namespace

void require_basic(const FDAlgebra& a) {
    std::size_t top = a.dim() - radical(a).dim();
    if (top != a.vertex_count())
        throw NotBasic("dim A/J = " + std::to_string(top) + " but there are " + std::to_string(a.vertex_count()) +
                       " vertices");
}

SelfInjectivity self_injectivity(const FDAlgebra& a) {
    require_basic(a);
    const std::size_t n = a.vertex_count();
    std::vector<std::size_t> perm(n);
    std::vector<bool> hit(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        auto info = socle_of_projective(a, v);
        if (info.isotypes.size() != 1) return {};
        perm[v] = info.isotypes[0];
        if (hit[perm[v]]) return {};
        hit[perm[v]] = true;
    }
    // left side of Nakayama's criterion: soc(A e_{ν(v)}) is simple of isotype v
    auto jb = radical(a).basis();
    for (std::size_t v = 0; v < n; ++v) {
        auto iso = left_socle_isotypes(a, perm[v], jb);
        if (iso.size() != 1 || iso[0] != v) return {};
    }
    return {true, perm};
}

bool is_symmetric_witness(const FDAlgebra& a, const Vector& lambda) {
    const std::size_t d = a.dim();
    if (lambda.size() != d) return false;
    auto value = [&](const SparseVector& s) {
        Rational r;
        for (const auto& [k, c] : s) r += c * lambda[k];
        return r;
    };
    la::Matrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            gram(i, j) = value(a.product(i, j));
            if (gram(i, j) != value(a.product(j, i))) return false;
        }
    return sgn(la::determinant(gram)) != 0;
}

SymmetryReport symmetry_report(const FDAlgebra& a, std::size_t trials, std::uint64_t seed) {
    SymmetryReport rep;
    auto si = self_injectivity(a);
    if (!si.self_injective) return rep;
    const auto& perm = *si.nakayama_permutation;
    for (std::size_t v = 0; v < perm.size(); ++v)
        if (perm[v] != v) return rep;
    rep.nakayama_trivial = true;

    // symmetric functionals: λ vanishing on every commutator b_i b_j − b_j b_i
    const std::size_t d = a.dim();
    la::Subspace commutators(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vector c(d);
            for (const auto& [k, x] : a.product(i, j)) c[k] += x;
            for (const auto& [k, x] : a.product(j, i)) c[k] -= x;
            if (!la::is_zero(c)) commutators.add(c);
        }
    auto comm = commutators.basis();
    la::Subspace functionals = la::kernel(comm.empty() ? la::Matrix(0, d) : la::Matrix::from_rows(comm, d));
    auto fb = functionals.basis();
    if (fb.empty()) return rep;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (std::size_t t = 0; t < trials; ++t) {
        Vector lambda(d);
        for (const auto& f : fb) la::axpy(lambda, Rational(coeff(rng)), f);
        ++rep.trials_used;
        if (la::is_zero(lambda)) continue;
        if (is_symmetric_witness(a, lambda)) {
            rep.witness = lambda;
            break;
        }
    }
    return rep;
}

std::size_t center_dimension(const FDAlgebra& a) {
    const std::size_t d = a.dim();
    // central elements commute with the idempotents, so they live in ⊕ e_v A e_v
    std::vector<std::size_t> diag;
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
        for (auto i : a.component(v, v)) diag.push_back(i);
    std::vector<Vector> gens;
    if (const Presentation* p = a.presentation()) {
        for (std::size_t v = 0; v < a.vertex_count(); ++v) gens.push_back(a.idempotent(v).coeffs);
        for (std::size_t ar = 0; ar < p->quiver.arrow_count(); ++ar) {
            const Arrow& arrow = p->quiver.arrow(ar);
            gens.push_back(a.normal_form(Path{arrow.source, arrow.target, {ar}}).coeffs);
        }
    } else {
        for (std::size_t i = 0; i < d; ++i) gens.push_back(la::unit_vector(d, i));
    }
    la::EchelonBasis image(gens.size() * d);
    for (auto i : diag) {
        Vector b = la::unit_vector(d, i);
        Vector col(gens.size() * d);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Vector l = a.multiply(b, gens[g]);
            Vector r = a.multiply(gens[g], b);
            for (std::size_t k = 0; k < d; ++k) col[g * d + k] = l[k] - r[k];
        }
        image.insert(col);
    }
    return diag.size() - image.dim();
}

}  // namespace tiltcert::quiv
