#include "tiltcert/io.hpp"

#include "tiltcert/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace tiltcert::io {

using la::Rational;
using quiv::Path;
using quiv::Quiver;
using quiv::Relation;

namespace {

// Schema violations surface from nlohmann as type or range errors.
template <class F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(what + ": " + e.what());
    }
}

Rational coeff_from_json(const Json& c) {
    if (c.is_string()) return la::parse_rational(c.get<std::string>());
    if (c.is_number_integer()) return Rational(c.get<long>());
    throw ParseError("coefficient must be an integer or a \"p/q\" string");
}

std::string integer_string(const la::Integer& x) { return x.get_str(); }

int degree_key(const std::string& k) {
    try {
        std::size_t used = 0;
        int d = std::stoi(k, &used);
        if (used == k.size()) return d;
    } catch (const std::exception&) {
    }
    throw ParseError("degree key is not an integer: " + k);
}

}  // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::vector<std::pair<Rational, Path>> terms_from_json(const Json& j, const Quiver& q,
                                                       std::optional<std::size_t> default_start) {
    return guarded("terms", [&] {
        std::vector<std::pair<Rational, Path>> out;
        const Json& list = j.is_object() ? j.at("terms") : j;
        for (const auto& t : list) {
            auto ids = t.at("path").get<std::vector<std::string>>();
            std::optional<std::size_t> start = ids.empty() ? default_start : std::nullopt;
            if (t.contains("vertex")) start = q.vertex_index(t.at("vertex").get<std::string>());
            out.emplace_back(coeff_from_json(t.at("coeff")), Path::from_ids(q, ids, start));
        }
        return out;
    });
}

Json terms_to_json(const Quiver& q, const std::vector<std::pair<Rational, Path>>& terms) {
    Json out = Json::array();
    for (const auto& [c, p] : terms) {
        Json t{{"coeff", la::to_string(c)}, {"path", p.ids(q)}};
        if (p.is_trivial()) t["vertex"] = q.vertex(p.start);
        out.push_back(std::move(t));
    }
    return out;
}

AlgebraSpec algebra_spec_from_json(const Json& j) {
    return guarded("algebra", [&] {
        if (!j.is_object()) throw ParseError("algebra must be a JSON object");
        std::vector<quiv::ArrowSpec> arrows;
        for (const auto& a : j.value("arrows", Json::array()))
            arrows.push_back({a.at("id").get<std::string>(), a.at("src").get<std::string>(), a.at("tgt").get<std::string>()});
        AlgebraSpec s{Quiver(j.at("vertices").get<std::vector<std::string>>(), arrows), {}, std::nullopt};
        for (const auto& r : j.value("relations", Json::array())) {
            Relation rel{terms_from_json(r, s.quiver)};
            quiv::validate_relation(s.quiver, rel);
            s.relations.push_back(std::move(rel));
        }
        if (j.contains("max_len")) {
            auto m = j.at("max_len").get<long>();
            if (m < 2) throw InputError("max_len must be at least 2");
            s.max_len = static_cast<std::size_t>(m);
        }
        return s;
    });
}

Json algebra_spec_to_json(const Quiver& q, const std::vector<Relation>& rels) {
    Json arrows = Json::array();
    for (const auto& a : q.arrow_specs()) arrows.push_back({{"id", a.id}, {"src", a.source}, {"tgt", a.target}});
    Json relations = Json::array();
    for (const auto& r : rels) relations.push_back(terms_to_json(q, r.terms));
    return Json{{"vertices", q.vertices()}, {"arrows", arrows}, {"relations", relations}};
}

Json algebra_to_json(const quiv::FDAlgebra& a) {
    Json j;
    if (const auto* p = a.presentation()) {
        j = algebra_spec_to_json(p->quiver, p->relations);
    } else {
        auto g = quiv::present_algebra(a);
        j = algebra_spec_to_json(g.quiver, g.relations);
    }
    j["dim"] = a.dim();
    return j;
}

Json element_to_json(const quiv::FDAlgebra& a, const la::Vector& x) {
    const auto* p = a.presentation();
    if (!p) throw std::logic_error("element_to_json needs a presented algebra");
    std::vector<std::pair<Rational, Path>> terms;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0) terms.emplace_back(x[i], *a.basis(i).path);
    return terms_to_json(p->quiver, terms);
}

LoadedComplex complex_from_json(const Json& j, const std::string& base_dir, std::optional<std::size_t> max_len) {
    return guarded("complex", [&] {
        LoadedComplex out;
        const Json& alg = j.at("algebra");
        if (alg.is_string()) {
            std::filesystem::path p(alg.get<std::string>());
            if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
            out.algebra_json = read_json_file(p.string());
        } else {
            out.algebra_json = alg;
        }
        auto spec = algebra_spec_from_json(out.algebra_json);
        out.algebra = quiv::construct_algebra(spec.quiver, spec.relations, max_len ? max_len : spec.max_len);
        const auto& a = out.algebra;

        std::map<int, homotopy::ProjModule> modules;
        for (const auto& [k, labels] : j.at("degrees").items())
            modules[degree_key(k)] = homotopy::ProjModule::from_labels(a, labels.get<std::vector<std::string>>());
        auto module = [&](int k) {
            auto it = modules.find(k);
            return it == modules.end() ? homotopy::ProjModule{a, {}} : it->second;
        };

        std::map<int, std::vector<std::vector<la::Vector>>> entries;
        for (const auto& e : j.value("differential", Json::array())) {
            int k = e.value("degree", 1);
            auto src = module(k), tgt = module(k - 1);
            auto t = e.at("row").get<std::size_t>(), s = e.at("col").get<std::size_t>();
            if (t >= tgt.size() || s >= src.size())
                throw InputError("differential entry (" + std::to_string(t) + ", " + std::to_string(s) +
                                 ") out of range in degree " + std::to_string(k));
            auto& m = entries[k];
            if (m.empty()) m.assign(tgt.size(), std::vector<la::Vector>(src.size(), la::Vector(a->dim())));
            m[t][s] = a->from_terms(terms_from_json(e.at("element"), spec.quiver, tgt.vertices[t])).coeffs;
        }
        std::map<int, homotopy::ProjMap> diffs;
        for (auto& [k, m] : entries) diffs.emplace(k, homotopy::ProjMap(module(k), module(k - 1), std::move(m)));

        std::vector<homotopy::Summand> summands;
        for (const auto& s : j.value("summands", Json::array())) {
            homotopy::Summand sm{s.at("name").get<std::string>(), {}};
            for (const auto& [k, rows] : s.at("rows_by_degree").items())
                sm.rows_by_degree[degree_key(k)] = rows.get<std::vector<std::size_t>>();
            summands.push_back(std::move(sm));
        }
        out.complex = std::make_shared<const homotopy::BoundedComplex>(a, modules, diffs, summands);
        return out;
    });
}

LoadedComplex load_complex(const std::string& path, std::optional<std::size_t> max_len) {
    auto dir = std::filesystem::path(path).parent_path().string();
    return complex_from_json(read_json_file(path), dir, max_len);
}

Json complex_to_json(const homotopy::BoundedComplex& x, const Json& algebra_json) {
    const auto& a = *x.algebra();
    Json degrees = Json::object();
    for (int k : x.support()) {
        std::vector<std::string> labels;
        for (auto v : x.module(k).vertices) labels.push_back(a.vertices()[v]);
        degrees[std::to_string(k)] = labels;
    }
    Json diff = Json::array();
    for (int k : x.support()) {
        auto d = x.differential(k);
        for (std::size_t t = 0; t < d.target().size(); ++t)
            for (std::size_t s = 0; s < d.source().size(); ++s)
                if (!la::is_zero(d.entry(t, s)))
                    diff.push_back({{"degree", k}, {"row", t}, {"col", s}, {"element", element_to_json(a, d.entry(t, s))}});
    }
    Json summands = Json::array();
    for (const auto& s : x.summands()) {
        Json rows = Json::object();
        for (const auto& [k, r] : s.rows_by_degree) rows[std::to_string(k)] = r;
        summands.push_back({{"name", s.name}, {"rows_by_degree", rows}});
    }
    return Json{{"algebra", algebra_json}, {"degrees", degrees}, {"differential", diff}, {"summands", summands}};
}

postnikov::IceQuiverWithPotential parse_iqp(const Json& j) {
    return guarded("ice quiver", [&] {
        auto spec = algebra_spec_from_json(j);
        if (!spec.relations.empty()) throw InputError("an ice quiver carries its relations in the potential");
        std::vector<postnikov::TermSpec> w;
        for (const auto& t : j.value("potential", Json::array()))
            w.push_back({t.at("sign").get<int>(), t.at("cycle").get<std::vector<std::string>>()});
        auto frozen = j.value("frozen", std::vector<std::string>{});
        std::optional<std::map<std::string, std::string>> rot;
        if (j.contains("rotation") && !j.at("rotation").is_null())
            rot = j.at("rotation").get<std::map<std::string, std::string>>();
        return postnikov::make_iqp(spec.quiver, w, frozen, rot);
    });
}

postnikov::IceQuiverWithPotential load_iqp(const std::string& path) { return parse_iqp(read_json_file(path)); }

Json iqp_to_json(const postnikov::IceQuiverWithPotential& iqp) {
    const auto& q = iqp.quiver;
    Json j = algebra_spec_to_json(q, {});
    Json w = Json::array();
    for (const auto& t : iqp.potential) {
        std::vector<std::string> ids;
        for (auto a : t.cycle) ids.push_back(q.arrow(a).id);
        w.push_back({{"sign", t.sign}, {"cycle", ids}});
    }
    j["potential"] = w;
    std::vector<std::string> frozen;
    for (auto v : iqp.frozen) frozen.push_back(q.vertex(v));
    j["frozen"] = frozen;
    if (iqp.rotation) {
        Json rot = Json::object();
        for (std::size_t v = 0; v < q.vertex_count(); ++v) rot[q.vertex(v)] = q.vertex((*iqp.rotation)[v]);
        j["rotation"] = rot;
    }
    return j;
}

Json invariant_table_json(const inv::InvariantTable& t) {
    std::vector<std::string> snf;
    for (const auto& x : t.cartan_snf) snf.push_back(integer_string(x));
    Json nak = nullptr;
    if (t.nakayama_permutation) nak = *t.nakayama_permutation;
    return Json{{"dimension", t.dimension},
                {"simples", t.simples},
                {"cartan", t.cartan},
                {"abs_det_cartan", integer_string(t.abs_det_cartan)},
                {"cartan_snf", snf},
                {"center_dimension", t.center_dimension},
                {"basic", t.basic},
                {"self_injective", t.self_injective},
                {"nakayama_permutation", nak}};
}

Json comparison_json(const inv::Comparison& c) {
    return Json{{"a", invariant_table_json(c.a)},
                {"b", invariant_table_json(c.b)},
                {"simples_equal", c.simples_equal},
                {"det_equal", c.det_equal},
                {"center_equal", c.center_equal},
                {"snf_equal", c.snf_equal},
                {"consistent", c.consistent}};
}

Json tilting_report_json(const homotopy::TiltingReport& r) {
    return Json{{"presilting", r.presilting},
                {"no_negative", r.no_negative},
                {"summand_count_ok", r.summand_count_ok},
                {"tilting", r.tilting},
                {"distinct_summands", r.distinct_summands},
                {"vertex_count", r.vertex_count},
                {"notes", r.notes}};
}

Json equivalence_report_json(const tiltbench::EquivalenceReport& r) {
    Json j{{"verdict", tiltbench::to_string(r.verdict)}, {"tilting", tilting_report_json(r.tilting)}};
    if (r.endomorphisms) {
        j["end_dimension"] = r.endomorphisms->algebra->dim();
        j["end_summands"] = r.endomorphisms->names;
    } else {
        j["end_dimension"] = nullptr;
    }
    j["candidate_verified"] = r.candidate_verified ? Json(*r.candidate_verified) : Json(nullptr);
    j["invariants_consistent"] = r.invariants_consistent;
    j["source_self_injective"] = r.source_self_injective;
    j["source_invariants"] = invariant_table_json(r.source_invariants);
    j["end_invariants"] = r.end_invariants ? invariant_table_json(*r.end_invariants) : Json(nullptr);
    j["candidate_invariants"] = r.candidate_invariants ? invariant_table_json(*r.candidate_invariants) : Json(nullptr);
    j["warnings"] = r.warnings;
    return j;
}

Json postnikov_report_json(const postnikov::CheckReport& r) {
    return Json{{"ok", r.ok()},
                {"finite_dimensional", r.finite_dimensional},
                {"dimension", r.dimension ? Json(*r.dimension) : Json(nullptr)},
                {"symmetric", r.symmetric ? Json(*r.symmetric) : Json(nullptr)},
                {"self_injective", r.self_injective},
                {"invariants", r.invariants ? invariant_table_json(*r.invariants) : Json(nullptr)},
                {"note", r.note}};
}

}  // namespace tiltcert::io
