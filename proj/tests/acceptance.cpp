// Acceptance run: one PASS/FAIL line per criterion.  Limits are wall-clock
// seconds; every comparison is exact.

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tiltcert/d2n.hpp"
#include "tiltcert/io.hpp"
#include "tiltcert/postnikov.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace tiltcert;
using namespace tiltcert::homotopy;
using la::Rational;

namespace {

const std::string data_dir = TILTCERT_DATA_DIR;

constexpr double kHomTableLimit = 10;
constexpr double kTiltingLimit = 60;
constexpr double kDemoLimitEach = 300;
constexpr double kSelfInjectiveLimit = 30;
constexpr double kOracleLimit = 120;
constexpr double kJacobianLimit = 30;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

ComplexPtr p1(std::size_t n) { return tiltbench::build_two_term(d2n::p1_datum(n)); }

ComplexPtr part(const ComplexPtr& x, const std::string& name) {
    return std::make_shared<const BoundedComplex>(x->summand(name));
}

std::string C(std::size_t i, std::size_t n) { return "C" + std::to_string((i + n - 1) % n + 1); }
std::string B(std::size_t i, std::size_t n) { return "B" + std::to_string(i % n); }

// beta gamma = alpha^{n-1}, alpha beta = 0, gamma alpha = 0 on the canonical assignment.
void check_relations(std::size_t n, const ComplexPtr& x, Outcome& out) {
    auto as = d2n::canonical_assignment(n, x);
    const auto& arrows = as.candidate.arrows;
    auto arrow = [&](const std::string& id) -> const HomotopyClass& { return arrows.at(id).map; };
    auto alpha = [&](std::size_t i) { return arrow("alpha" + std::to_string((i + n - 1) % n + 1)); };
    for (std::size_t i = 1; i <= n; ++i) {
        const auto& gamma = arrow("gamma" + std::to_string(i));
        const auto& beta = arrow("beta" + std::to_string(i - 1));
        HomotopyClass power = alpha(i);
        for (std::size_t k = 1; k + 1 < n; ++k) power = compose(alpha(i + k), power);
        auto delta = compose(beta, gamma);
        out.require(!delta.is_zero() && delta.equals(power), "beta gamma = alpha^(n-1) at C" + std::to_string(i));
        out.require(compose(arrow("gamma" + std::to_string(i % n + 1)), alpha(i)).is_zero(),
                    "gamma alpha = 0 at C" + std::to_string(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& beta = arrow("beta" + std::to_string(i));
        out.require(compose(alpha(i == 0 ? n : i), beta).is_zero(), "alpha beta = 0 at B" + std::to_string(i));
    }
}

void criterion_hom_table(Outcome& out) {
    for (std::size_t n : {4u, 5u}) {
        auto t = d2n::hom_table(*d2n::a1(n));
        const std::size_t m = 2 * n;
        std::size_t zeros = 0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                long long want = (j + 1) % m == i ? 0 : 1;
                zeros += t[i][j] == 0;
                out.require(t[i][j] == want, "n=" + std::to_string(n) + " entry (" + std::to_string(i + 1) + "," +
                                                 std::to_string(j + 1) + ")");
            }
        out.detail << " n=" << n << ":" << zeros << " zeros";
    }
}

void criterion_tilting(Outcome& out) {
    for (std::size_t n : {4u, 5u}) {
        auto x = p1(n);
        auto r = two_term_tilting_check(x);
        out.require(r.tilting, "P1(" + std::to_string(n) + ") tilting");
        out.require(HomotopyHom(x, x, 1).dim() == 0, "Hom_K(P1,P1[1]) = 0");
        out.require(HomotopyHom(x, x, -1).dim() == 0, "Hom_K(P1,P1[-1]) = 0");
        out.require(r.distinct_summands == 2 * n, "2n distinct summands");
        std::vector<ComplexPtr> parts;
        for (const auto& s : x->summands()) {
            parts.push_back(part(x, s.name));
            out.require(is_indecomposable(parts.back()), s.name + " indecomposable");
        }
        out.require(summands_pairwise_noniso(parts), "pairwise non-isomorphic");
        out.detail << " n=" << n << ":" << r.distinct_summands << " summands";
    }
}

void criterion_demo(std::size_t n, Outcome& out) {
    auto t0 = Clock::now();
    auto r = d2n::run_demo(n);
    double elapsed = seconds_since(t0);
    const std::size_t want = n * n + 4 * n;
    auto p = d2n::a2_presentation(n);
    auto oracle_dim = oracle::truncated_quotient_dim(p.quiver, p.relations, n + 2, 3);
    out.require(oracle_dim.top_layer_dead && oracle_dim.dim == static_cast<long>(want), "oracle dim of a2(n)");
    out.require(r.verdict == tiltbench::Verdict::Certified, "verdict certified");
    out.require(r.candidate_verified && *r.candidate_verified, "candidate verified");
    out.require(r.endomorphisms && r.endomorphisms->algebra->dim() == want, "dim End = n^2+4n");
    check_relations(n, tiltbench::build_two_term(d2n::p1_datum(n)), out);
    out.require(elapsed < kDemoLimitEach, "run_demo time limit");
    char buf[96];
    std::snprintf(buf, sizeof buf, " n=%zu: dim End %zu, %.2f s", n,
                  r.endomorphisms ? r.endomorphisms->algebra->dim() : 0, elapsed);
    out.detail << buf;
}

void criterion_self_injective(Outcome& out) {
    for (std::size_t n : {4u, 5u, 6u}) {
        for (const auto& [name, a] : {std::pair{"A1", d2n::a1(n)}, std::pair{"A2", d2n::a2(n)}}) {
            const std::string tag = std::string(name) + "(" + std::to_string(n) + ")";
            auto si = quiv::self_injectivity(*a);
            out.require(si.self_injective && si.nakayama_permutation.has_value(), tag + " self-injective");
            if (!si.nakayama_permutation) continue;
            std::size_t moved = 0;
            for (std::size_t v = 0; v < a->vertex_count(); ++v) moved += (*si.nakayama_permutation)[v] != v;
            out.require(moved > 0, tag + " non-identity Nakayama permutation");
            out.require(!quiv::symmetry_report(*a, 5, 0).nakayama_trivial, tag + " not symmetric");
        }
    }
}

void criterion_cases(Outcome& out) {
    for (std::size_t n : {4u, 5u}) {
        auto x = p1(n);
        auto dim = [&](const std::string& s, const std::string& t) { return HomotopyHom(part(x, s), part(x, t), 0).dim(); };
        for (std::size_t i = 1; i <= n; ++i) {
            out.require(dim(C(i, n), B(i - 1, n)) == 1, "(i) Hom(C_i,B_{i-1}) != 0");
            out.require(dim(C(i + 1, n), C(i + 2, n)) == 1, "(iii) Hom(C_i,C_{i+1}) != 0");
            out.require(dim(C(i, n), C(i - 1, n)) == 1, "(v) Hom(C_i,C_{i-1}) != 0");
        }
        for (std::size_t i = 0; i < n; ++i) {
            out.require(dim(B(i, n), i == 0 ? C(n, n) : C(i, n)) == 1, "(ii) Hom(B_i,C_i) != 0");
            out.require(dim(B(i, n), B(i + 1, n)) == 0, "(iv) Hom(B_i,B_{i+1}) = 0");
        }
        // (v): the nonzero map C_i -> C_{i-1} is gamma then beta
        check_relations(n, x, out);
    }
    out.detail << " n=4,5";
}

ComplexPtr arrow_complex(const quiv::AlgebraPtr& a, std::size_t arrow) {
    const auto& q = a->presentation()->quiver;
    auto src = ProjModule::from_labels(a, {q.vertices()[q.arrow(arrow).target]});
    auto tgt = ProjModule::from_labels(a, {q.vertices()[q.arrow(arrow).source]});
    quiv::Path p = quiv::Path::trivial(q.arrow(arrow).source);
    p.arrows.push_back(arrow);
    p.end = q.arrow(arrow).target;
    ProjMap d(src, tgt, {{a->normal_form(p).coeffs}});
    return std::make_shared<const BoundedComplex>(BoundedComplex::two_term(src, tgt, d));
}

// Perturbs random classes by random null-homotopic maps and compares coordinates.
std::size_t perturbation_trials(const HomotopyHom& h, std::mt19937_64& rng, Outcome& out) {
    auto nulls = null_homotopic_maps(h.space()).basis();
    if (h.dim() == 0 || nulls.empty()) return 0;
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 3; ++trial) {
        la::Vector c(h.dim());
        for (auto& v : c) v = Rational(coef(rng));
        auto f = h.from_coordinates(c);
        la::Vector v = h.space().to_vector(f.representative());
        for (const auto& nv : nulls) {
            Rational k(coef(rng));
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += k * nv[i];
        }
        auto g = h.space().from_vector(v);
        out.require(h.coordinates(g) == h.coordinates(f.representative()), "class changed under null-homotopy");
        out.require(HomotopyClass(g).equals(f), "equals() changed under null-homotopy");
    }
    return 3;
}

void criterion_oracles(Outcome& out) {
    std::mt19937_64 rng(424242);
    std::size_t algebras = 0, perturbed = 0;
    for (int trial = 0; trial < 24; ++trial) {
        std::size_t nv = 1 + rng() % 4;
        std::size_t na = 1 + rng() % 5;
        std::vector<std::string> vs;
        for (std::size_t v = 0; v < nv; ++v) vs.push_back("v" + std::to_string(v));
        std::vector<quiv::ArrowSpec> as;
        for (std::size_t k = 0; k < na; ++k) as.push_back({"x" + std::to_string(k), vs[rng() % nv], vs[rng() % nv]});
        quiv::Quiver q(vs, as);
        std::vector<std::vector<std::size_t>> forbidden;
        std::vector<quiv::Relation> rels;
        for (const auto& path : oracle::all_paths(q, 4)) {
            if (!(path.length() == 4 || (path.length() >= 2 && rng() % 4 == 0))) continue;
            forbidden.push_back(path.arrows);
            rels.push_back(quiv::Relation{{{Rational(1), path}}});
        }
        auto a = quiv::construct_algebra(q, rels);
        long expected = oracle::count_surviving_paths(q, forbidden, 5);
        out.require(expected >= 0 && a->dim() == static_cast<std::size_t>(expected),
                    "dim trial " + std::to_string(trial));
        ++algebras;

        auto x = arrow_complex(a, rng() % na);
        auto y = std::make_shared<const BoundedComplex>(
            x->direct_sum(BoundedComplex::stalk(ProjModule::from_labels(a, {vs[rng() % nv]}), 0)));
        for (int s = -1; s <= 1; ++s) {
            perturbed += perturbation_trials(HomotopyHom(x, x, s), rng, out);
            perturbed += perturbation_trials(HomotopyHom(x, y, s), rng, out);
        }
    }
    auto x = p1(4);
    perturbed += perturbation_trials(HomotopyHom(x, x, 0), rng, out);
    out.require(perturbed >= 20, "at least 20 perturbation trials");
    out.detail << " " << algebras << " algebras, " << perturbed << " perturbed classes";
}

void criterion_jacobian(Outcome& out) {
    auto iqp = io::load_iqp(data_dir + "/postnikov_3_6_symmetric.json");
    auto rep = postnikov::check(iqp);
    out.require(rep.finite_dimensional, "fixture finite-dimensional");
    out.require(rep.self_injective, "fixture self-injective");
    out.require(rep.symmetric == std::optional<bool>(true), "fixture rotation-symmetric");
    auto d = postnikov::frozen_quotient_presentation(iqp);
    std::vector<std::vector<std::size_t>> forbidden;
    for (const auto& r : d.relations) forbidden.push_back(r.terms[0].second.arrows);
    long expected = oracle::count_surviving_paths(d.quiver, forbidden, 8);
    out.require(rep.dimension && static_cast<long>(*rep.dimension) == expected, "fixture dim matches path count");

    auto toy = io::load_iqp(data_dir + "/three_cycle.json");
    auto f = fixture::three_cycle_jacobian();
    std::vector<std::vector<std::size_t>> toy_forbidden;
    for (const auto& r : f.relations) toy_forbidden.push_back(r.terms[0].second.arrows);
    long toy_expected = oracle::count_surviving_paths(f.quiver, toy_forbidden, 4);
    auto toy_dim = postnikov::frozen_jacobian_quotient(toy)->dim();
    out.require(toy_expected == 6 && toy_dim == 6, "3-cycle Jacobian dim 6");
    out.detail << " fixture dim " << (rep.dimension ? *rep.dimension : 0) << ", 3-cycle dim " << toy_dim;
}

void criterion_invariants(Outcome& out) {
    for (std::size_t n : {4u, 5u}) {
        auto e = endomorphism_algebra(p1(n));
        auto c = inv::compare_invariants(*d2n::a1(n), *e.algebra);
        out.require(c.consistent, "n=" + std::to_string(n) + " consistent");
        out.require(c.simples_equal && c.det_equal && c.center_equal, "simples, det, center");
        out.detail << " n=" << n << ": |det C|=" << c.a.abs_det_cartan.get_str();
    }
}

bool run(int id, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail << " [exception: " << e.what() << "]";
    }
    double elapsed = seconds_since(t0);
    if (limit > 0 && elapsed >= limit) {
        out.ok = false;
        out.detail << " [time limit exceeded]";
    }
    char head[160];
    if (limit > 0)
        std::snprintf(head, sizeof head, "criterion %d %s  %-34s %8.2f s (limit %.0f s)", id, out.ok ? "PASS" : "FAIL",
                      title.c_str(), elapsed, limit);
    else
        std::snprintf(head, sizeof head, "criterion %d %s  %-34s %8.2f s (no limit)", id, out.ok ? "PASS" : "FAIL",
                      title.c_str(), elapsed);
    std::cout << head << " |" << out.detail.str() << std::endl;
    return out.ok;
}

}  // namespace

int main() {
    bool ok = true;
    ok &= run(1, "A1 Hom table", kHomTableLimit, criterion_hom_table);
    ok &= run(2, "P1 tilting certificate", kTiltingLimit, criterion_tilting);
    ok &= run(3, "End(P1) = A2 certified", 2 * kDemoLimitEach, [](Outcome& out) {
        for (std::size_t n : {4u, 5u}) criterion_demo(n, out);
    });
    ok &= run(4, "self-injective, not symmetric", kSelfInjectiveLimit, criterion_self_injective);
    ok &= run(5, "morphism cases (i)-(v)", 0, criterion_cases);
    ok &= run(6, "oracle equivalence", kOracleLimit, criterion_oracles);
    ok &= run(7, "frozen Jacobian fixture", kJacobianLimit, criterion_jacobian);
    ok &= run(8, "derived invariant consistency", 0, criterion_invariants);
    std::cout << (ok ? "all criteria PASS" : "some criteria FAIL") << std::endl;
    return ok ? 0 : 1;
}
