#include "groebner.hpp"
#include "tiltcert/errors.hpp"
#include "tiltcert/quivalg.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>

namespace tiltcert::quiv {

namespace {

std::uint64_t next_algebra_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter++;
}

void require_same(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.algebra_id != b.algebra_id || a.coeffs.size() != b.coeffs.size()) throw AlgebraMismatch();
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    require_same(a, b);
    AlgebraElement r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    require_same(a, b);
    AlgebraElement r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

AlgebraElement operator*(const Rational& c, const AlgebraElement& a) {
    AlgebraElement r = a;
    for (auto& x : r.coeffs) x *= c;
    return r;
}

FDAlgebra::FDAlgebra(std::vector<std::string> vertices, std::vector<BasisElement> basis,
                     std::vector<std::size_t> idempotents, std::vector<std::vector<SparseVector>> table,
                     std::optional<Presentation> presentation)
    : id_(next_algebra_id()),
      vertices_(std::move(vertices)),
      basis_(std::move(basis)),
      idempotents_(std::move(idempotents)),
      table_(std::move(table)),
      presentation_(std::move(presentation)) {
    const std::size_t n = vertices_.size();
    if (n == 0) throw InvalidQuiver("algebra without vertices");
    if (idempotents_.size() != n) throw std::invalid_argument("one idempotent per vertex required");
    if (table_.size() != basis_.size()) throw std::invalid_argument("multiplication table size mismatch");
    components_.assign(n, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const auto& b = basis_[i];
        if (b.source >= n || b.target >= n) throw std::invalid_argument("basis grading out of range");
        components_[b.source][b.target].push_back(i);
        if (b.path) monomial_index_.emplace(std::pair{b.path->start, b.path->arrows}, i);
    }
    verify();
}

std::size_t FDAlgebra::vertex_index(const std::string& label) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end()) throw UnknownVertex(label);
    return static_cast<std::size_t>(it - vertices_.begin());
}

const std::vector<std::size_t>& FDAlgebra::component(std::size_t u, std::size_t v) const {
    return components_.at(u).at(v);
}

bool FDAlgebra::in_component(const Vector& x, std::size_t u, std::size_t v) const {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0 && (basis_[i].source != u || basis_[i].target != v)) return false;
    return true;
}

AlgebraElement FDAlgebra::zero() const { return {id_, Vector(dim())}; }

AlgebraElement FDAlgebra::one() const {
    AlgebraElement e = zero();
    for (auto i : idempotents_) e.coeffs[i] = 1;
    return e;
}

AlgebraElement FDAlgebra::basis_element(std::size_t i) const { return {id_, la::unit_vector(dim(), i)}; }

AlgebraElement FDAlgebra::element(Vector coeffs) const {
    if (coeffs.size() != dim()) throw std::invalid_argument("coefficient vector has wrong length");
    return {id_, std::move(coeffs)};
}

Vector FDAlgebra::multiply(const Vector& x, const Vector& y) const {
    Vector out(dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (sgn(y[j]) == 0) continue;
            const auto& p = table_[i][j];
            if (p.empty()) continue;
            Rational c = x[i] * y[j];
            for (const auto& [k, v] : p) out[k] += c * v;
        }
    }
    return out;
}

AlgebraElement FDAlgebra::mul(const AlgebraElement& x, const AlgebraElement& y) const {
    if (x.algebra_id != id_ || y.algebra_id != id_) throw AlgebraMismatch();
    return {id_, multiply(x.coeffs, y.coeffs)};
}

AlgebraElement FDAlgebra::normal_form(const Path& p) const {
    if (!presentation_) throw std::logic_error("normal_form requires a presented algebra");
    detail::Poly poly;
    poly.emplace(p, Rational(1));
    std::vector<detail::Poly> gb;
    for (const auto& r : presentation_->groebner_basis) gb.push_back(detail::to_poly(r));
    detail::Poly nf = detail::reduce(std::move(poly), gb);
    AlgebraElement out = zero();
    for (const auto& [word, c] : nf) {
        auto it = monomial_index_.find({word.start, word.arrows});
        if (it == monomial_index_.end()) throw std::logic_error("normal form produced a non-basis word");
        out.coeffs[it->second] += c;
    }
    return out;
}

AlgebraElement FDAlgebra::from_terms(const std::vector<std::pair<Rational, Path>>& terms) const {
    AlgebraElement out = zero();
    for (const auto& [c, p] : terms) out = out + c * normal_form(p);
    return out;
}

AlgebraElement FDAlgebra::evaluate(const Relation& r) const { return from_terms(r.terms); }

std::size_t FDAlgebra::max_basis_length() const {
    std::size_t m = 0;
    for (const auto& b : basis_)
        if (b.path) m = std::max(m, b.path->length());
    return m;
}

void FDAlgebra::verify() const {
    const std::size_t d = dim();
    auto fail = [](const std::string& what) { throw std::logic_error("algebra table invalid: " + what); };
    auto as_dense = [d](const SparseVector& s) {
        Vector v(d);
        for (const auto& [k, c] : s) v[k] += c;
        return v;
    };
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        const auto& e = basis_[idempotents_[v]];
        if (e.source != v || e.target != v) fail("idempotent grading");
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const auto& p = table_[i][j];
            if (basis_[i].target != basis_[j].source) {
                if (!p.empty()) fail("product of non-composable basis elements");
                continue;
            }
            for (const auto& [k, c] : p) {
                if (k >= d) fail("index out of range");
                if (basis_[k].source != basis_[i].source || basis_[k].target != basis_[j].target)
                    fail("product leaves its graded component");
            }
        }
    // e_u b = b for u = source(b), b e_v = b for v = target(b)
    for (std::size_t i = 0; i < d; ++i) {
        if (as_dense(table_[idempotents_[basis_[i].source]][i]) != la::unit_vector(d, i)) fail("left unit");
        if (as_dense(table_[i][idempotents_[basis_[i].target]]) != la::unit_vector(d, i)) fail("right unit");
    }
    std::vector<std::vector<std::size_t>> starting_at(vertices_.size());
    for (std::size_t k = 0; k < d; ++k) starting_at[basis_[k].source].push_back(k);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j : starting_at[basis_[i].target])
            for (std::size_t k : starting_at[basis_[j].target]) {
                std::map<std::size_t, Rational> left, right;
                for (const auto& [m, c] : table_[i][j])
                    for (const auto& [t, x] : table_[m][k]) left[t] += c * x;
                for (const auto& [m, c] : table_[j][k])
                    for (const auto& [t, x] : table_[i][m]) right[t] += c * x;
                std::erase_if(left, [](const auto& kv) { return sgn(kv.second) == 0; });
                std::erase_if(right, [](const auto& kv) { return sgn(kv.second) == 0; });
                if (left != right) fail("associativity");
            }
}

std::size_t default_max_len(const Quiver& q, const std::vector<Relation>& rels) {
    std::size_t longest = 0;
    for (const auto& r : rels) longest = std::max(longest, r.max_length());
    return 4 * (q.vertex_count() + longest);
}

AlgebraPtr construct_algebra(const Quiver& q, const std::vector<Relation>& rels, std::optional<std::size_t> max_len) {
    if (q.vertex_count() == 0) throw InvalidQuiver("quiver has no vertices");
    for (const auto& r : rels) validate_relation(q, r);
    const std::size_t cap = max_len.value_or(default_max_len(q, rels));
    if (cap < 2) throw std::invalid_argument("max_len must be at least 2");

    auto gb = detail::groebner_basis(rels, cap);
    if (!gb.complete) throw NotStabilized(cap, "overlaps beyond the cap were not resolved");

    // normal words: paths avoiding every leading monomial
    constexpr std::size_t word_budget = 500000;
    std::vector<Path> words;
    std::deque<Path> frontier;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        words.push_back(Path::trivial(v));
        frontier.push_back(Path::trivial(v));
    }
    while (!frontier.empty()) {
        Path p = std::move(frontier.front());
        frontier.pop_front();
        for (std::size_t a = 0; a < q.arrow_count(); ++a) {
            if (q.arrow(a).source != p.end) continue;
            Path x{p.start, q.arrow(a).target, p.arrows};
            x.arrows.push_back(a);
            bool reducible = false;
            for (const auto& g : gb.basis) {
                const auto& tip = g.begin()->first.arrows;
                if (tip.size() <= x.arrows.size() &&
                    std::equal(tip.begin(), tip.end(), x.arrows.end() - static_cast<long>(tip.size()))) {
                    reducible = true;
                    break;
                }
            }
            if (reducible) continue;
            if (x.length() >= cap)
                throw NotStabilized(cap, "normal words reach the cap (algebra possibly infinite-dimensional)");
            if (words.size() >= word_budget) throw NotStabilized(cap, "normal word budget exhausted");
            words.push_back(x);
            frontier.push_back(std::move(x));
        }
    }
    std::stable_sort(words.begin(), words.end(), [](const Path& a, const Path& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.start != b.start) return a.start < b.start;
        return a.arrows < b.arrows;
    });

    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < words.size(); ++i) {
        index.emplace(std::pair{words[i].start, words[i].arrows}, i);
        basis.push_back(BasisElement{words[i].start, words[i].end, words[i], words[i].to_string(q)});
    }
    std::vector<std::size_t> idempotents(q.vertex_count());
    for (std::size_t v = 0; v < q.vertex_count(); ++v) idempotents[v] = v;

    const std::size_t d = words.size();
    std::vector<std::vector<SparseVector>> table(d, std::vector<SparseVector>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto w = concat(words[i], words[j]);
            if (!w) continue;
            detail::Poly p;
            p.emplace(*w, Rational(1));
            for (const auto& [word, c] : detail::reduce(std::move(p), gb.basis))
                table[i][j].emplace_back(index.at({word.start, word.arrows}), c);
            std::sort(table[i][j].begin(), table[i][j].end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        }

    Presentation pres;
    pres.quiver = q;
    pres.relations = rels;
    for (const auto& g : gb.basis) pres.groebner_basis.push_back(detail::to_relation(g));
    std::size_t longest = 0;
    for (const auto& w : words) longest = std::max(longest, w.length());
    pres.stabilization_length = longest + 1;
    pres.max_len = cap;

    auto alg = std::make_shared<const FDAlgebra>(q.vertices(), std::move(basis), std::move(idempotents),
                                                 std::move(table), std::move(pres));
    for (const auto& r : rels)
        if (!alg->evaluate(r).is_zero()) throw std::logic_error("relation does not vanish in the constructed algebra");
    return alg;
}

}  // namespace tiltcert::quiv
