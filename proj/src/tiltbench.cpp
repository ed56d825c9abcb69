#include "tiltcert/tiltbench.hpp"

#include "tiltcert/errors.hpp"

namespace tiltcert::tiltbench {

ComplexPtr build_two_term(const ApproximationDatum& d) {
    if (d.l1.algebra && d.l1.algebra != d.algebra) throw AlgebraMismatch();
    if (d.l0.algebra && d.l0.algebra != d.algebra) throw AlgebraMismatch();
    return std::make_shared<const BoundedComplex>(d.algebra, std::map<int, ProjModule>{{1, d.l1}, {0, d.l0}},
                                                  std::map<int, ProjMap>{{1, d.phi}}, d.summands);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "derived-equivalence certified";
        case Verdict::Consistent: return "consistent";
        case Verdict::NotCertified: return "not certified";
    }
    return "not certified";
}

namespace {

bool check_candidate(const homotopy::EndomorphismAlgebra& e, const Candidate& c, std::vector<std::string>& warnings) {
    const auto& q = c.quiver;
    std::vector<std::size_t> vmap(q.vertex_count());
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        auto it = c.vertex_to_summand.find(q.vertex(v));
        if (it == c.vertex_to_summand.end()) {
            warnings.push_back("candidate vertex " + q.vertex(v) + " has no summand");
            return false;
        }
        vmap[v] = e.index(it->second);
    }
    std::map<std::string, quiv::AlgebraElement> amap;
    for (const auto& [id, img] : c.arrows) {
        if (!q.has_arrow(id)) throw UnknownArrow(id);
        amap.emplace(id, e.element_between(e.index(img.source_summand), e.index(img.target_summand), img.map));
    }
    return quiv::verify_presentation(*e.algebra, q, c.relations, vmap, amap, c.max_len);
}

}  // namespace

EquivalenceReport run_pipeline(const ApproximationDatum& d, const std::optional<Candidate>& candidate) {
    EquivalenceReport r;
    auto x = build_two_term(d);
    r.source_invariants = inv::invariant_table(*d.algebra);
    r.source_self_injective = r.source_invariants.self_injective;
    if (!r.source_self_injective)
        r.warnings.push_back("source algebra is not self-injective; the self-injectivity hypothesis is unmet");

    r.tilting = homotopy::two_term_tilting_check(x);
    if (!r.tilting.tilting) {
        r.warnings.push_back("complex is not tilting");
        return r;
    }
    if (!x->has_summands()) {
        auto blocks = x->connected_blocks();
        x = std::make_shared<const BoundedComplex>(d.algebra, std::map<int, ProjModule>{{1, d.l1}, {0, d.l0}},
                                                   std::map<int, ProjMap>{{1, d.phi}}, blocks);
    }
    try {
        r.endomorphisms = homotopy::endomorphism_algebra(x);
    } catch (const NotBasicDecomposition& e) {
        r.warnings.push_back(e.what());
        return r;
    }
    const auto& end = *r.endomorphisms->algebra;
    r.end_invariants = inv::invariant_table(end);
    auto cmp = inv::compare_invariants(*d.algebra, end);
    r.invariants_consistent = cmp.consistent;
    if (!cmp.consistent) r.warnings.push_back("derived invariants of the source and End(T) differ");

    if (candidate) {
        r.candidate_verified = check_candidate(*r.endomorphisms, *candidate, r.warnings);
        auto b = quiv::construct_algebra(candidate->quiver, candidate->relations, candidate->max_len);
        r.candidate_invariants = inv::invariant_table(*b);
        if (!*r.candidate_verified) r.warnings.push_back("candidate presentation was not verified");
    }
    if (r.candidate_verified.value_or(false) && r.invariants_consistent) r.verdict = Verdict::Certified;
    else if (!candidate && r.invariants_consistent) r.verdict = Verdict::Consistent;
    return r;
}

}  // namespace tiltcert::tiltbench
