// Command-line front end.  Exit codes: 0 success, 1 check failed,
// 2 input or usage error, 3 stabilization failure.

#include "CLI11.hpp"
#include "tiltcert/d2n.hpp"
#include "tiltcert/errors.hpp"
#include "tiltcert/io.hpp"
#include "tiltcert/postnikov.hpp"

#include <filesystem>
#include <iostream>

using namespace tiltcert;
using io::Json;

namespace {

struct Options {
    std::optional<std::size_t> max_len;
    std::string json_path;
    std::uint64_t seed = 0;
    bool quiet = false;
};

// Plain-text rendering of a report: one "key: value" per scalar, nested by indentation.
void render(std::ostream& os, const Json& j, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [k, v] : j.items()) {
        bool scalar_list = v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_structured(); });
        if (v.is_object() || (v.is_array() && !scalar_list && !v.empty())) {
            os << pad << k << ":\n";
            if (v.is_object()) {
                render(os, v, indent + 2);
            } else {
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (v[i].is_object()) {
                        os << pad << "  [" << i << "]\n";
                        render(os, v[i], indent + 4);
                    } else {
                        os << pad << "  " << v[i].dump() << "\n";
                    }
                }
            }
        } else {
            os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

void emit(const Options& opt, const Json& j) {
    if (!opt.json_path.empty()) {
        if (opt.json_path == "-")
            std::cout << j.dump(2) << "\n";
        else
            io::write_json_file(opt.json_path, j);
    }
    if (!opt.quiet && opt.json_path != "-") render(std::cout, j);
}

std::string base_dir(const std::string& path) { return std::filesystem::path(path).parent_path().string(); }

quiv::AlgebraPtr load_algebra(const Json& j, const Options& opt) {
    auto spec = io::algebra_spec_from_json(j);
    return quiv::construct_algebra(spec.quiver, spec.relations, opt.max_len ? opt.max_len : spec.max_len);
}

Json resolve(const Json& j, const std::string& dir) {
    if (!j.is_string()) return j;
    std::filesystem::path p(j.get<std::string>());
    if (p.is_relative()) p = std::filesystem::path(dir) / p;
    return io::read_json_file(p.string());
}

// Algebra file or ice quiver file; the latter gives its frozen Jacobian quotient.
quiv::AlgebraPtr load_any_algebra(const std::string& path, const Options& opt) {
    Json j = io::read_json_file(path);
    if (j.is_object() && j.contains("potential")) return postnikov::frozen_jacobian_quotient(io::parse_iqp(j), opt.max_len);
    return load_algebra(j, opt);
}

int cmd_algebra_build(const std::string& file, const Options& opt) {
    auto a = load_algebra(io::read_json_file(file), opt);
    Json j;
    j["dim"] = a->dim();
    j["vertices"] = a->vertices();
    j["component_dims"] = quiv::cartan_matrix(*a);
    std::vector<std::size_t> powers;
    for (const auto& layer : quiv::radical_layers(*a)) powers.push_back(layer.dim());
    j["radical_power_dims"] = powers;
    auto table = inv::invariant_table(*a);
    j["basic"] = table.basic;
    j["self_injective"] = table.self_injective;
    j["nakayama_permutation"] = table.nakayama_permutation ? Json(*table.nakayama_permutation) : Json(nullptr);
    j["center_dimension"] = table.center_dimension;
    j["abs_det_cartan"] = table.abs_det_cartan.get_str();
    auto sym = quiv::symmetry_report(*a, 20, opt.seed);
    j["symmetry"] = {{"nakayama_trivial", sym.nakayama_trivial},
                     {"witness_found", sym.witness.has_value()},
                     {"trials_used", sym.trials_used},
                     {"seed", opt.seed}};
    emit(opt, j);
    return 0;
}

// {"algebra": A, "candidate": B, "vertex_map": {B vertex: A vertex}, "arrow_map": {B arrow: terms in A}}
int cmd_algebra_verify_iso(const std::string& file, const Options& opt) {
    Json j = io::read_json_file(file);
    const auto dir = base_dir(file);
    Json target_json = resolve(j.at("algebra"), dir);
    auto target_spec = io::algebra_spec_from_json(target_json);
    auto a = quiv::construct_algebra(target_spec.quiver, target_spec.relations, opt.max_len ? opt.max_len : target_spec.max_len);
    auto cand = io::algebra_spec_from_json(resolve(j.at("candidate"), dir));

    std::vector<std::size_t> vmap(cand.quiver.vertex_count(), a->vertex_count());
    for (const auto& [from, to] : j.at("vertex_map").items())
        vmap.at(cand.quiver.vertex_index(from)) = a->vertex_index(to.get<std::string>());
    for (auto v : vmap)
        if (v == a->vertex_count()) throw InputError("vertex_map does not cover every candidate vertex");
    std::map<std::string, quiv::AlgebraElement> amap;
    for (const auto& [id, terms] : j.at("arrow_map").items()) {
        if (!cand.quiver.has_arrow(id)) throw UnknownArrow(id);
        amap.emplace(id, a->from_terms(io::terms_from_json(terms, target_spec.quiver)));
    }
    bool ok = quiv::verify_presentation(*a, cand.quiver, cand.relations, vmap, amap,
                                        opt.max_len ? opt.max_len : cand.max_len);
    emit(opt, Json{{"isomorphism_verified", ok}, {"dim", a->dim()}});
    return ok ? 0 : 1;
}

int cmd_complex_check(const std::string& file, const Options& opt) {
    auto loaded = io::load_complex(file, opt.max_len);
    auto r = homotopy::two_term_tilting_check(loaded.complex);
    emit(opt, io::tilting_report_json(r));
    return r.tilting ? 0 : 1;
}

int cmd_complex_endo(const std::string& file, const Options& opt) {
    auto loaded = io::load_complex(file, opt.max_len);
    auto e = homotopy::endomorphism_algebra(loaded.complex);
    Json j = io::algebra_to_json(*e.algebra);
    j["summands"] = e.names;
    emit(opt, j);
    return 0;
}

int cmd_d2n_demo(std::size_t n, const Options& opt) {
    auto r = d2n::run_demo(n);
    Json j{{"n", n}};
    j["a2_relations"] = d2n::a2_presentation(n).functional_words;
    Json report = io::equivalence_report_json(r);
    for (const auto& [k, v] : report.items()) j[k] = v;
    emit(opt, j);
    return r.verdict == tiltbench::Verdict::Certified ? 0 : 1;
}

int cmd_d2n_export(std::size_t n, const std::string& what, const Options& opt) {
    Json j;
    if (what == "a1" || what == "a2") {
        auto p = what == "a1" ? d2n::a1_presentation(n) : d2n::a2_presentation(n);
        j = io::algebra_spec_to_json(p.quiver, p.relations);
    } else {
        auto p = d2n::a1_presentation(n);
        auto x = tiltbench::build_two_term(d2n::p1_datum(n));
        j = io::complex_to_json(*x, io::algebra_spec_to_json(p.quiver, p.relations));
        if (what == "c1") {
            auto c1 = x->summand("C1");
            j = io::complex_to_json(c1, j["algebra"]);
        }
    }
    Options o = opt;
    if (o.json_path.empty()) o.json_path = "-";
    emit(o, j);
    return 0;
}

int cmd_postnikov_check(const std::string& file, const Options& opt) {
    auto iqp = io::load_iqp(file);
    auto r = postnikov::check(iqp, opt.max_len);
    emit(opt, io::postnikov_report_json(r));
    if (!r.finite_dimensional) return 3;
    return r.ok() ? 0 : 1;
}

int cmd_postnikov_compare(const std::string& a, const std::string& b, const Options& opt) {
    auto x = load_any_algebra(a, opt), y = load_any_algebra(b, opt);
    auto c = postnikov::compare_invariants(*x, *y);
    emit(opt, io::comparison_json(c));
    return c.consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tilting complexes, endomorphism algebras and derived invariants over exact rationals"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    std::size_t max_len = 0;
    app.add_option("--max-len", max_len, "length cap for normal-form completion")->check(CLI::Range(2, 1 << 20));
    app.add_option("--json", opt.json_path, "write the JSON report to this path ('-' for stdout)");
    app.add_option("--seed", opt.seed, "seed for the randomized symmetry search");
    app.add_flag("--quiet", opt.quiet, "suppress the text rendering");

    std::string file, file2, what = "p1";
    std::size_t n = 0;
    std::function<int()> action;

    auto* algebra = app.add_subcommand("algebra", "finite-dimensional algebras from quivers with relations");
    algebra->require_subcommand(1);
    algebra->fallthrough();
    auto* build = algebra->add_subcommand("build", "construct an algebra and report its invariants");
    build->add_option("file", file, "algebra JSON")->required();
    build->callback([&] { action = [&] { return cmd_algebra_build(file, opt); }; });
    auto* iso = algebra->add_subcommand("verify-iso", "verify a proposed isomorphism onto an algebra");
    iso->add_option("file", file, "assignment JSON")->required();
    iso->callback([&] { action = [&] { return cmd_algebra_verify_iso(file, opt); }; });

    auto* complex = app.add_subcommand("complex", "two-term complexes of projectives");
    complex->require_subcommand(1);
    complex->fallthrough();
    auto* check = complex->add_subcommand("check", "two-term tilting check");
    check->add_option("file", file, "complex JSON")->required();
    check->callback([&] { action = [&] { return cmd_complex_check(file, opt); }; });
    auto* endo = complex->add_subcommand("endo", "endomorphism algebra in the homotopy category");
    endo->add_option("file", file, "complex JSON")->required();
    endo->callback([&] { action = [&] { return cmd_complex_endo(file, opt); }; });

    auto* d2n_cmd = app.add_subcommand("d2n", "the A1(n), A2(n) family");
    d2n_cmd->require_subcommand(1);
    d2n_cmd->fallthrough();
    auto* demo = d2n_cmd->add_subcommand("demo", "certify End(P1(n)) = A2(n)");
    demo->add_option("--n", n, "n >= 4")->required();
    demo->callback([&] { action = [&] { return cmd_d2n_demo(n, opt); }; });
    auto* exp = d2n_cmd->add_subcommand("export", "write a1, a2, the complex p1 or its summand c1 as JSON");
    exp->add_option("--n", n, "n >= 4")->required();
    exp->add_option("--what", what, "a1, a2, p1 or c1")->check(CLI::IsMember({"a1", "a2", "p1", "c1"}));
    exp->callback([&] { action = [&] { return cmd_d2n_export(n, what, opt); }; });

    auto* post = app.add_subcommand("postnikov", "ice quivers with potential");
    post->require_subcommand(1);
    post->fallthrough();
    auto* pcheck = post->add_subcommand("check", "finite dimension, symmetry and self-injectivity");
    pcheck->add_option("file", file, "ice quiver JSON")->required();
    pcheck->callback([&] { action = [&] { return cmd_postnikov_check(file, opt); }; });
    auto* cmp = post->add_subcommand("compare", "derived-invariant comparison of two algebras");
    cmp->add_option("a", file, "algebra or ice quiver JSON")->required();
    cmp->add_option("b", file2, "algebra or ice quiver JSON")->required();
    cmp->callback([&] { action = [&] { return cmd_postnikov_compare(file, file2, opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (max_len) opt.max_len = max_len;

    try {
        return action();
    } catch (const NotStabilized& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NotTwoTerm& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const AlgebraMismatch& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
}
