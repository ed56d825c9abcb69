#include "tiltcert/d2n.hpp"

#include "tiltcert/errors.hpp"

#include <sstream>

namespace tiltcert::d2n {

using homotopy::ChainMap;
using homotopy::ProjMap;
using homotopy::ProjModule;
using quiv::ArrowSpec;
using quiv::Path;
using quiv::Quiver;
using quiv::Relation;
using la::Rational;

void require_valid_n(std::size_t n) {
    if (n < 4) throw InputError("n must be at least 4, got " + std::to_string(n));
}

namespace {

std::string join_reversed(const std::vector<std::string>& ids) {
    std::ostringstream os;
    for (std::size_t i = ids.size(); i-- > 0;) os << ids[i] << (i ? " " : "");
    return os.str();
}

// Label of vertex v in 1..m, taken cyclically.
std::string cyc(long v, long m) { return std::to_string(((v - 1) % m + m) % m + 1); }

// Arrow ids of the descending path of the given length starting at vertex v.
std::vector<std::string> descending(long v, std::size_t length, long m) {
    std::vector<std::string> ids;
    for (std::size_t k = 0; k < length; ++k) ids.push_back("a" + cyc(v - static_cast<long>(k), m));
    return ids;
}

}  // namespace

PresentedAlgebra a1_presentation(std::size_t n) {
    require_valid_n(n);
    const long m = static_cast<long>(2 * n);
    std::vector<std::string> vs;
    std::vector<ArrowSpec> as;
    for (long v = 1; v <= m; ++v) vs.push_back(std::to_string(v));
    for (long v = 1; v <= m; ++v) as.push_back({"a" + std::to_string(v), cyc(v, m), cyc(v - 1, m)});
    PresentedAlgebra p{Quiver(vs, as), {}, {}};
    for (long v = 1; v <= m; ++v) {
        auto ids = descending(v, 2 * n - 1, m);
        p.relations.push_back(Relation{{{Rational(1), Path::from_ids(p.quiver, ids)}}});
        p.functional_words.push_back(join_reversed(ids));
    }
    return p;
}

PresentedAlgebra a2_presentation(std::size_t n) {
    require_valid_n(n);
    const long m = static_cast<long>(n);
    auto C = [&](long i) { return "C" + cyc(i, m); };
    auto B = [&](long i) { return "B" + std::to_string(((i % m) + m) % m); };
    auto alpha = [&](long i) { return "alpha" + cyc(i, m); };
    auto gamma = [&](long i) { return "gamma" + cyc(i, m); };
    auto beta = [&](long i) { return "beta" + std::to_string(((i % m) + m) % m); };

    std::vector<std::string> vs;
    for (long i = 1; i <= m; ++i) vs.push_back(C(i));
    for (long i = 0; i < m; ++i) vs.push_back(B(i));
    std::vector<ArrowSpec> as;
    for (long i = 1; i <= m; ++i) as.push_back({alpha(i), C(i), C(i + 1)});
    for (long i = 1; i <= m; ++i) as.push_back({gamma(i), C(i), B(i - 1)});
    for (long i = 0; i < m; ++i) as.push_back({beta(i), B(i), C(i)});  // C(0) is C_n
    PresentedAlgebra p{Quiver(vs, as), {}, {}};
    const Quiver& q = p.quiver;

    for (long i = 1; i <= m; ++i) {
        std::vector<std::string> power;
        for (long k = 0; k < m - 1; ++k) power.push_back(alpha(i + k));
        std::vector<std::string> gb{gamma(i), beta(i - 1)};
        p.relations.push_back(Relation{{{Rational(1), Path::from_ids(q, power)}, {Rational(-1), Path::from_ids(q, gb)}}});
        p.functional_words.push_back(join_reversed(power) + " - " + join_reversed(gb));
    }
    for (long i = 0; i < m; ++i) {
        std::vector<std::string> ids{beta(i), alpha(i)};
        p.relations.push_back(Relation{{{Rational(1), Path::from_ids(q, ids)}}});
        p.functional_words.push_back(join_reversed(ids));
    }
    for (long i = 1; i <= m; ++i) {
        std::vector<std::string> ids{alpha(i), gamma(i + 1)};
        p.relations.push_back(Relation{{{Rational(1), Path::from_ids(q, ids)}}});
        p.functional_words.push_back(join_reversed(ids));
    }
    return p;
}

quiv::AlgebraPtr a1(std::size_t n) {
    auto p = a1_presentation(n);
    return quiv::construct_algebra(p.quiver, p.relations);
}

quiv::AlgebraPtr a2(std::size_t n) {
    auto p = a2_presentation(n);
    return quiv::construct_algebra(p.quiver, p.relations);
}

quiv::IntMatrix hom_table(const quiv::FDAlgebra& a) {
    const std::size_t m = a.vertex_count();
    quiv::IntMatrix t(m, std::vector<long long>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) t[i][j] = static_cast<long long>(a.component(j, i).size());
    return t;
}

namespace {

la::Vector path_element(const quiv::FDAlgebra& a, const std::vector<std::string>& ids) {
    const Quiver& q = a.presentation()->quiver;
    return a.normal_form(Path::from_ids(q, ids)).coeffs;
}

}  // namespace

tiltbench::ApproximationDatum p1_datum(std::size_t n, quiv::AlgebraPtr a) {
    require_valid_n(n);
    if (!a) a = a1(n);
    const long m = static_cast<long>(2 * n);
    tiltbench::ApproximationDatum d;
    d.algebra = a;
    std::vector<std::string> l1, l0;
    for (std::size_t i = 0; i < n; ++i) l1.push_back(std::to_string(2 * i + 1));
    for (std::size_t i = 0; i < n; ++i) l0.push_back(std::to_string(2 * i + 2));
    for (std::size_t j = 1; j <= n; ++j) l0.push_back(std::to_string(2 * j));
    d.l1 = ProjModule::from_labels(a, l1);
    d.l0 = ProjModule::from_labels(a, l0);
    std::vector<std::vector<la::Vector>> e(d.l0.size(), std::vector<la::Vector>(d.l1.size(), la::Vector(a->dim())));
    for (std::size_t i = 0; i < n; ++i) e[i][i] = path_element(*a, descending(static_cast<long>(2 * i + 2), 1, m));
    d.phi = ProjMap(d.l1, d.l0, std::move(e));
    for (std::size_t i = 0; i < n; ++i) d.summands.push_back({"B" + std::to_string(i), {{1, {i}}, {0, {i}}}});
    for (std::size_t j = 1; j <= n; ++j) d.summands.push_back({"C" + std::to_string(j), {{0, {n + j - 1}}}});
    return d;
}

namespace {

using homotopy::ComplexPtr;
using tiltbench::HomotopyClass;

// Class of the degree-0 map given by a single path between one-row degree-0 parts.
HomotopyClass degree0_class(const quiv::FDAlgebra& a, const ComplexPtr& from, const ComplexPtr& to,
                            std::size_t to_row, const la::Vector& entry) {
    ProjModule src = from->module(0), tgt = to->module(0);
    std::vector<std::vector<la::Vector>> e(tgt.size(), std::vector<la::Vector>(src.size(), la::Vector(a.dim())));
    e[to_row][0] = entry;
    ChainMap f{from, to, 0, {{0, ProjMap(src, tgt, std::move(e))}}};
    return HomotopyClass(std::move(f));
}

}  // namespace

Assignment canonical_assignment(std::size_t n, const ComplexPtr& p1) {
    require_valid_n(n);
    const auto& a = *p1->algebra();
    const long m = static_cast<long>(2 * n);
    const long nn = static_cast<long>(n);
    auto pres = a2_presentation(n);
    auto summand = [&](const std::string& name) { return std::make_shared<const homotopy::BoundedComplex>(p1->summand(name)); };
    auto Cname = [&](long i) { return "C" + cyc(i, nn); };
    auto Bname = [&](long i) { return "B" + std::to_string(((i % nn) + nn) % nn); };

    Assignment out;
    out.candidate.quiver = pres.quiver;
    out.candidate.relations = pres.relations;
    for (const auto& v : pres.quiver.vertices()) out.candidate.vertex_to_summand.emplace(v, v);

    std::vector<HomotopyClass> alphas, gammas;
    for (long i = 1; i <= nn; ++i) {
        auto Ci = summand(Cname(i)), Cn = summand(Cname(i + 1)), Bp = summand(Bname(i - 1));
        // B_{i-1} has P(2i) as its only degree-0 row
        gammas.push_back(degree0_class(a, Ci, Bp, 0, a.idempotent(a.vertex_index(cyc(2 * i, m))).coeffs));
        alphas.push_back(degree0_class(a, Ci, Cn, 0, path_element(a, descending(2 * i + 2, 2, m))));
        out.candidate.arrows.emplace("gamma" + cyc(i, nn), tiltbench::ArrowImage{Cname(i), Bname(i - 1), gammas.back()});
        out.candidate.arrows.emplace("alpha" + cyc(i, nn), tiltbench::ArrowImage{Cname(i), Cname(i + 1), alphas.back()});
    }
    for (long i = 0; i < nn; ++i) {
        auto Bi = summand(Bname(i)), Ci = summand(Cname(i));
        HomotopyClass raw = degree0_class(a, Bi, Ci, 0, path_element(a, descending(2 * i, 2 * n - 2, m)));
        // gamma_{i+1} then beta_i must equal alpha^{n-1} starting at C_{i+1}
        const HomotopyClass& g = gammas[static_cast<std::size_t>(i)];
        HomotopyClass power = alphas[static_cast<std::size_t>(i)];
        for (long k = 1; k < nn - 1; ++k) power = homotopy::compose(alphas[static_cast<std::size_t>((i + k) % nn)], power);
        HomotopyClass bg = homotopy::compose(raw, g);
        homotopy::HomotopyHom hom(g.source(), Ci, 0);
        auto x = hom.coordinates(bg.representative());
        auto y = hom.coordinates(power.representative());
        std::optional<Rational> scalar;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (sgn(x[k]) != 0) {
                scalar = y[k] / x[k];
                break;
            }
        if (!scalar || sgn(*scalar) == 0) throw std::logic_error("beta composed with gamma is null-homotopic");
        la::Vector scaled = x;
        for (auto& c : scaled) c *= *scalar;
        if (scaled != y) throw std::logic_error("beta composed with gamma is not proportional to alpha^{n-1}");
        out.beta_scalars.push_back(*scalar);
        out.candidate.arrows.emplace("beta" + std::to_string(i),
                                     tiltbench::ArrowImage{Bname(i), Cname(i), (*scalar) * raw});
    }
    return out;
}

tiltbench::EquivalenceReport run_demo(std::size_t n) {
    require_valid_n(n);
    auto datum = p1_datum(n);
    auto x = tiltbench::build_two_term(datum);
    auto assignment = canonical_assignment(n, x);
    return tiltbench::run_pipeline(datum, assignment.candidate);
}

}  // namespace tiltcert::d2n
