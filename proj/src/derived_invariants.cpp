#include "tiltcert/errors.hpp"
#include "tiltcert/invariants.hpp"

namespace tiltcert::inv {

InvariantTable invariant_table(const quiv::FDAlgebra& a) {
    InvariantTable t;
    t.dimension = a.dim();
    t.simples = a.vertex_count();
    t.cartan = quiv::cartan_matrix(a);
    const std::size_t n = t.cartan.size();
    la::Matrix c(n, n);
    la::IntMatrix ci(n, std::vector<la::Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            c(i, j) = la::Rational(static_cast<long>(t.cartan[i][j]));
            ci[i][j] = la::Integer(static_cast<long>(t.cartan[i][j]));
        }
    la::Rational det = la::determinant(c);
    t.abs_det_cartan = abs(det.get_num());
    t.cartan_snf = la::smith_normal_form(ci);
    t.center_dimension = quiv::center_dimension(a);
    try {
        auto si = quiv::self_injectivity(a);
        t.basic = true;
        t.self_injective = si.self_injective;
        if (si.nakayama_permutation) {
            std::vector<std::string> perm;
            for (auto v : *si.nakayama_permutation) perm.push_back(a.vertices()[v]);
            t.nakayama_permutation = perm;
        }
    } catch (const NotBasic&) {
        t.basic = false;
    }
    return t;
}

Comparison compare_invariants(const quiv::FDAlgebra& a, const quiv::FDAlgebra& b) {
    Comparison c{invariant_table(a), invariant_table(b)};
    c.simples_equal = c.a.simples == c.b.simples;
    c.det_equal = c.a.abs_det_cartan == c.b.abs_det_cartan;
    c.center_equal = c.a.center_dimension == c.b.center_dimension;
    c.snf_equal = c.a.cartan_snf == c.b.cartan_snf;
    c.consistent = c.simples_equal && c.det_equal && c.center_equal;
    return c;
}

}  // namespace tiltcert::inv
