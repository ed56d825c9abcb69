#pragma once

// JSON encodings of algebras, complexes, ice quivers and reports.
//
// Algebra:  {"vertices":[..], "arrows":[{"id","src","tgt"}],
//            "relations":[[{"coeff":"p/q","path":[ids]}, ...], ...], "max_len":N?}
// Element:  list of terms {"coeff":"p/q","path":[ids],"vertex":label?};
//           "vertex" names the start of an empty path.
// Complex:  {"algebra":<path or object>, "degrees":{"0":[labels],"1":[..]},
//            "differential":[{"degree":k?,"row":t,"col":s,"element":[terms]}],
//            "summands":[{"name":..,"rows_by_degree":{"0":[..],"1":[..]}}]}
//           An entry without "degree" belongs to d_1.
// IQP:      algebra fields plus {"potential":[{"sign":1|-1,"cycle":[ids]}],
//            "frozen":[labels], "rotation":{label:label}?}

#include "json.hpp"
#include "tiltcert/homotopy.hpp"
#include "tiltcert/postnikov.hpp"
#include "tiltcert/tiltbench.hpp"

#include <optional>
#include <string>

namespace tiltcert::io {

using Json = nlohmann::ordered_json;

/// Throws ParseError on unreadable files or malformed JSON.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

struct AlgebraSpec {
    quiv::Quiver quiver;
    std::vector<quiv::Relation> relations;
    std::optional<std::size_t> max_len;
};

AlgebraSpec algebra_spec_from_json(const Json& j);
Json algebra_spec_to_json(const quiv::Quiver& q, const std::vector<quiv::Relation>& rels);
/// Presented algebras use their stored presentation; others are presented first.
Json algebra_to_json(const quiv::FDAlgebra& a);

/// `default_start` supplies the vertex of an empty path without "vertex".
std::vector<std::pair<la::Rational, quiv::Path>> terms_from_json(const Json& j, const quiv::Quiver& q,
                                                                 std::optional<std::size_t> default_start = std::nullopt);
Json terms_to_json(const quiv::Quiver& q, const std::vector<std::pair<la::Rational, quiv::Path>>& terms);
/// Element of a presented algebra written in normal-form monomials.
Json element_to_json(const quiv::FDAlgebra& a, const la::Vector& x);

struct LoadedComplex {
    quiv::AlgebraPtr algebra;
    Json algebra_json;
    homotopy::ComplexPtr complex;
};
/// `base_dir` resolves a relative "algebra" path.
LoadedComplex complex_from_json(const Json& j, const std::string& base_dir, std::optional<std::size_t> max_len = {});
LoadedComplex load_complex(const std::string& path, std::optional<std::size_t> max_len = {});
Json complex_to_json(const homotopy::BoundedComplex& x, const Json& algebra_json);

postnikov::IceQuiverWithPotential parse_iqp(const Json& j);
postnikov::IceQuiverWithPotential load_iqp(const std::string& path);
Json iqp_to_json(const postnikov::IceQuiverWithPotential& iqp);

Json invariant_table_json(const inv::InvariantTable& t);
Json comparison_json(const inv::Comparison& c);
Json tilting_report_json(const homotopy::TiltingReport& r);
Json equivalence_report_json(const tiltbench::EquivalenceReport& r);
Json postnikov_report_json(const postnikov::CheckReport& r);

}  // namespace tiltcert::io
