#include "tiltcert/homotopy.hpp"

#include "tiltcert/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tiltcert::homotopy {

namespace {

int sign_of_shift(int i) { return (i % 2 == 0) ? 1 : -1; }

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a != b) throw AlgebraMismatch();
}

}  // namespace

// ------------------------------------------------------------ ProjModule

ProjModule ProjModule::from_labels(AlgebraPtr a, const std::vector<std::string>& labels) {
    ProjModule m{std::move(a), {}};
    for (const auto& l : labels) {
        if (std::find(m.algebra->vertices().begin(), m.algebra->vertices().end(), l) == m.algebra->vertices().end())
            throw UnknownVertex(l);
        m.vertices.push_back(m.algebra->vertex_index(l));
    }
    return m;
}

// --------------------------------------------------------------- ProjMap

ProjMap::ProjMap(ProjModule source, ProjModule target, std::vector<std::vector<Vector>> entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
    const AlgebraPtr& a = source_.algebra ? source_.algebra : target_.algebra;
    if (source_.algebra && target_.algebra) require_same_algebra(source_.algebra, target_.algebra);
    if (!source_.algebra) source_.algebra = a;
    if (!target_.algebra) target_.algebra = a;
    if (entries_.size() != target_.size()) throw InvalidComplex("map has the wrong number of rows");
    for (std::size_t t = 0; t < entries_.size(); ++t) {
        if (entries_[t].size() != source_.size()) throw InvalidComplex("map has the wrong number of columns");
        for (std::size_t s = 0; s < source_.size(); ++s) {
            const Vector& x = entries_[t][s];
            if (x.size() != a->dim()) throw InvalidComplex("map entry has the wrong length");
            if (!a->in_component(x, target_.vertices[t], source_.vertices[s]))
                throw InvalidComplex("map entry (" + std::to_string(t) + "," + std::to_string(s) +
                                     ") is not in e_" + a->vertices()[target_.vertices[t]] + " A e_" +
                                     a->vertices()[source_.vertices[s]]);
        }
    }
}

ProjMap ProjMap::zero(const ProjModule& source, const ProjModule& target) {
    const AlgebraPtr& a = source.algebra ? source.algebra : target.algebra;
    const std::size_t d = a ? a->dim() : 0;
    return ProjMap(source, target, std::vector<std::vector<Vector>>(target.size(), std::vector<Vector>(source.size(), Vector(d))));
}

ProjMap ProjMap::identity(const ProjModule& m) {
    ProjMap id = zero(m, m);
    for (std::size_t t = 0; t < m.size(); ++t) id.entries_[t][t] = m.algebra->idempotent(m.vertices[t]).coeffs;
    return id;
}

AlgebraElement ProjMap::element(std::size_t t, std::size_t s) const {
    return source_.algebra->element(entries_.at(t).at(s));
}

bool ProjMap::is_zero() const {
    for (const auto& row : entries_)
        for (const auto& x : row)
            if (!la::is_zero(x)) return false;
    return true;
}

ProjMap ProjMap::block(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    ProjModule src{source_.algebra, {}}, tgt{target_.algebra, {}};
    for (auto c : cols) src.vertices.push_back(source_.vertices.at(c));
    for (auto r : rows) tgt.vertices.push_back(target_.vertices.at(r));
    std::vector<std::vector<Vector>> e;
    for (auto r : rows) {
        std::vector<Vector> row;
        for (auto c : cols) row.push_back(entries_[r][c]);
        e.push_back(std::move(row));
    }
    ProjMap out;
    out.source_ = std::move(src);
    out.target_ = std::move(tgt);
    out.entries_ = std::move(e);
    return out;
}

ProjMap operator+(const ProjMap& a, const ProjMap& b) {
    if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) throw ComplexMismatch("adding maps between different modules");
    ProjMap out = a;
    for (std::size_t t = 0; t < out.entries_.size(); ++t)
        for (std::size_t s = 0; s < out.entries_[t].size(); ++s) la::axpy(out.entries_[t][s], 1, b.entries_[t][s]);
    return out;
}

ProjMap operator-(const ProjMap& a, const ProjMap& b) { return a + Rational(-1) * b; }

ProjMap operator*(const Rational& c, const ProjMap& a) {
    ProjMap out = a;
    for (auto& row : out.entries_)
        for (auto& x : row)
            for (auto& v : x) v *= c;
    return out;
}

bool operator==(const ProjMap& a, const ProjMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.entries_ == b.entries_;
}

ProjMap compose(const ProjMap& g, const ProjMap& f) {
    if (!(g.source() == f.target())) throw ComplexMismatch("maps do not compose");
    const FDAlgebra& a = *f.source().algebra;
    std::vector<std::vector<Vector>> e(g.target().size(), std::vector<Vector>(f.source().size(), Vector(a.dim())));
    for (std::size_t t = 0; t < g.target().size(); ++t)
        for (std::size_t m = 0; m < f.target().size(); ++m) {
            const Vector& gx = g.entry(t, m);
            if (la::is_zero(gx)) continue;
            for (std::size_t s = 0; s < f.source().size(); ++s) {
                const Vector& fx = f.entry(m, s);
                if (la::is_zero(fx)) continue;
                la::axpy(e[t][s], 1, a.multiply(gx, fx));
            }
        }
    return ProjMap(f.source(), g.target(), std::move(e));
}

std::vector<ProjMap> hom_space(const ProjModule& p, const ProjModule& q) {
    if (p.algebra && q.algebra) require_same_algebra(p.algebra, q.algebra);
    std::vector<ProjMap> out;
    const AlgebraPtr& a = p.algebra ? p.algebra : q.algebra;
    if (!a) return out;
    for (std::size_t t = 0; t < q.size(); ++t)
        for (std::size_t s = 0; s < p.size(); ++s)
            for (auto b : a->component(q.vertices[t], p.vertices[s])) {
                std::vector<std::vector<Vector>> e(q.size(), std::vector<Vector>(p.size(), Vector(a->dim())));
                e[t][s][b] = 1;
                out.emplace_back(p, q, std::move(e));
            }
    return out;
}

// -------------------------------------------------------- BoundedComplex

BoundedComplex::BoundedComplex(AlgebraPtr algebra, std::map<int, ProjModule> modules,
                               std::map<int, ProjMap> differentials, std::vector<Summand> summands)
    : algebra_(std::move(algebra)), summands_(std::move(summands)) {
    if (!algebra_) throw InvalidComplex("complex without an algebra");
    for (auto& [k, m] : modules) {
        if (m.empty()) continue;
        if (m.algebra != algebra_) throw AlgebraMismatch();
        for (auto v : m.vertices)
            if (v >= algebra_->vertex_count()) throw InvalidComplex("vertex index out of range");
        modules_.emplace(k, m);
    }
    for (auto& [k, d] : differentials) {
        ProjModule src = module(k), tgt = module(k - 1);
        if (d.source().vertices != src.vertices || d.target().vertices != tgt.vertices)
            throw InvalidComplex("differential d_" + std::to_string(k) + " has the wrong shape");
        if ((d.source().algebra && d.source().algebra != algebra_) || (d.target().algebra && d.target().algebra != algebra_))
            throw AlgebraMismatch();
        if (src.empty() || tgt.empty()) continue;
        if (!d.is_zero()) differentials_.emplace(k, d);
    }
    for (const auto& [k, d] : differentials_) {
        auto it = differentials_.find(k - 1);
        if (it == differentials_.end()) continue;
        if (!compose(it->second, d).is_zero())
            throw InvalidComplex("d_" + std::to_string(k - 1) + " d_" + std::to_string(k) + " is not zero");
    }

    if (summands_.empty()) return;
    std::set<std::string> names;
    std::map<int, std::vector<int>> owner;
    for (const auto& [k, m] : modules_) owner[k].assign(m.size(), -1);
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        const Summand& s = summands_[i];
        if (!names.insert(s.name).second) throw InvalidComplex("duplicate summand name: " + s.name);
        for (const auto& [k, rows] : s.rows_by_degree) {
            auto& own = owner[k];
            for (auto r : rows) {
                if (r >= own.size()) throw InvalidComplex("summand " + s.name + " uses a row outside degree " + std::to_string(k));
                if (own[r] != -1) throw InvalidComplex("row " + std::to_string(r) + " in degree " + std::to_string(k) + " belongs to two summands");
                own[r] = static_cast<int>(i);
            }
        }
    }
    for (const auto& [k, own] : owner)
        for (std::size_t r = 0; r < own.size(); ++r)
            if (own[r] == -1)
                throw InvalidComplex("row " + std::to_string(r) + " in degree " + std::to_string(k) + " is in no summand");
    for (const auto& [k, d] : differentials_)
        for (std::size_t t = 0; t < d.target().size(); ++t)
            for (std::size_t s = 0; s < d.source().size(); ++s)
                if (owner[k - 1][t] != owner[k][s] && !la::is_zero(d.entry(t, s)))
                    throw InvalidComplex("differential mixes summands " + summands_[owner[k][s]].name + " and " +
                                         summands_[owner[k - 1][t]].name);
}

BoundedComplex BoundedComplex::stalk(const ProjModule& m, int degree) {
    return BoundedComplex(m.algebra, {{degree, m}}, {});
}

BoundedComplex BoundedComplex::two_term(const ProjModule& degree1, const ProjModule& degree0, const ProjMap& d,
                                        std::vector<Summand> summands) {
    AlgebraPtr a = degree0.algebra ? degree0.algebra : degree1.algebra;
    return BoundedComplex(a, {{1, degree1}, {0, degree0}}, {{1, d}}, std::move(summands));
}

ProjModule BoundedComplex::module(int k) const {
    auto it = modules_.find(k);
    return it == modules_.end() ? ProjModule{algebra_, {}} : it->second;
}

ProjMap BoundedComplex::differential(int k) const {
    auto it = differentials_.find(k);
    return it == differentials_.end() ? ProjMap::zero(module(k), module(k - 1)) : it->second;
}

std::vector<int> BoundedComplex::support() const {
    std::vector<int> out;
    for (const auto& [k, m] : modules_) out.push_back(k);
    return out;
}

std::size_t BoundedComplex::summand_index(const std::string& name) const {
    for (std::size_t i = 0; i < summands_.size(); ++i)
        if (summands_[i].name == name) return i;
    throw InvalidComplex("no summand named " + name);
}

BoundedComplex BoundedComplex::summand(std::size_t i) const { return restrict_rows(summands_.at(i).rows_by_degree); }

BoundedComplex BoundedComplex::restrict_rows(const std::map<int, std::vector<std::size_t>>& rows) const {
    auto rows_at = [&](int k) {
        auto it = rows.find(k);
        return it == rows.end() ? std::vector<std::size_t>{} : it->second;
    };
    std::map<int, ProjModule> mods;
    for (const auto& [k, r] : rows) {
        ProjModule m{algebra_, {}};
        for (auto i : r) m.vertices.push_back(module(k).vertices.at(i));
        mods.emplace(k, m);
    }
    std::map<int, ProjMap> diffs;
    for (const auto& [k, d] : differentials_) {
        auto src = rows_at(k), tgt = rows_at(k - 1);
        if (src.empty() || tgt.empty()) continue;
        diffs.emplace(k, d.block(tgt, src));
    }
    return BoundedComplex(algebra_, std::move(mods), std::move(diffs));
}

std::vector<Summand> BoundedComplex::connected_blocks() const {
    // nodes are (degree, row), numbered in ascending degree order
    std::map<int, std::size_t> offset;
    std::size_t total = 0;
    for (const auto& [k, m] : modules_) {
        offset[k] = total;
        total += m.size();
    }
    std::vector<std::size_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [k, d] : differentials_)
        for (std::size_t t = 0; t < d.target().size(); ++t)
            for (std::size_t s = 0; s < d.source().size(); ++s)
                if (!la::is_zero(d.entry(t, s))) {
                    auto a = find(offset[k] + s), b = find(offset[k - 1] + t);
                    if (a != b) parent[std::max(a, b)] = std::min(a, b);
                }
    std::map<std::size_t, Summand> blocks;
    for (const auto& [k, m] : modules_)
        for (std::size_t r = 0; r < m.size(); ++r) blocks[find(offset[k] + r)].rows_by_degree[k].push_back(r);
    std::vector<Summand> out;
    for (auto& [root, s] : blocks) {
        s.name = "block" + std::to_string(out.size());
        out.push_back(std::move(s));
    }
    return out;
}

BoundedComplex BoundedComplex::direct_sum(const BoundedComplex& other) const {
    require_same_algebra(algebra_, other.algebra_);
    std::set<int> degrees;
    for (const auto& [k, m] : modules_) degrees.insert(k);
    for (const auto& [k, m] : other.modules_) degrees.insert(k);
    std::map<int, ProjModule> mods;
    for (int k : degrees) {
        ProjModule m = module(k);
        for (auto v : other.module(k).vertices) m.vertices.push_back(v);
        mods.emplace(k, m);
    }
    std::map<int, ProjMap> diffs;
    const std::size_t d = algebra_->dim();
    for (int k : degrees) {
        if (!degrees.count(k - 1)) continue;
        ProjMap a = differential(k), b = other.differential(k);
        std::vector<std::vector<Vector>> e(mods[k - 1].size(), std::vector<Vector>(mods[k].size(), Vector(d)));
        for (std::size_t t = 0; t < a.target().size(); ++t)
            for (std::size_t s = 0; s < a.source().size(); ++s) e[t][s] = a.entry(t, s);
        for (std::size_t t = 0; t < b.target().size(); ++t)
            for (std::size_t s = 0; s < b.source().size(); ++s)
                e[a.target().size() + t][a.source().size() + s] = b.entry(t, s);
        diffs.emplace(k, ProjMap(mods[k], mods[k - 1], std::move(e)));
    }
    std::vector<Summand> sums;
    if (has_summands() && other.has_summands()) {
        sums = summands_;
        for (Summand s : other.summands_) {
            for (auto& [k, rows] : s.rows_by_degree)
                for (auto& r : rows) r += module(k).size();
            sums.push_back(std::move(s));
        }
    }
    return BoundedComplex(algebra_, std::move(mods), std::move(diffs), std::move(sums));
}

bool operator==(const BoundedComplex& a, const BoundedComplex& b) {
    if (a.algebra_ != b.algebra_ || a.modules_.size() != b.modules_.size()) return false;
    for (const auto& [k, m] : a.modules_) {
        auto it = b.modules_.find(k);
        if (it == b.modules_.end() || !(it->second == m)) return false;
    }
    for (const auto& [k, m] : a.modules_)
        if (!(a.differential(k) == b.differential(k))) return false;
    return true;
}

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) { return a == b || (a && b && *a == *b); }

// -------------------------------------------------------------- ChainMap

ProjMap ChainMap::component(int k) const {
    auto it = components.find(k);
    if (it != components.end()) return it->second;
    return ProjMap::zero(source->module(k), target->module(k - shift));
}

bool ChainMap::satisfies_chain_rule() const {
    std::set<int> degrees;
    for (int k : source->support()) degrees.insert(k);
    for (int k : target->support()) degrees.insert(k + shift);
    const int s = sign_of_shift(shift);
    for (int k : degrees) {
        ProjMap lhs = compose(component(k - 1), source->differential(k));
        ProjMap rhs = compose(target->differential(k - shift), component(k));
        if (!(lhs - Rational(s) * rhs).is_zero()) return false;
    }
    return true;
}

// -------------------------------------------------------------- MapSpace

MapSpace::MapSpace(ComplexPtr x, ComplexPtr y, int shift) : x_(std::move(x)), y_(std::move(y)), shift_(shift) {
    require_same_algebra(x_->algebra(), y_->algebra());
    const FDAlgebra& a = *x_->algebra();
    for (int k : x_->support()) {
        ProjModule to = y_->module(k - shift_);
        if (to.empty()) continue;
        Block b{k, x_->module(k), to, width_, {}, {}, {}};
        for (std::size_t t = 0; t < to.size(); ++t)
            for (std::size_t s = 0; s < b.from.size(); ++s)
                for (auto idx : a.component(to.vertices[t], b.from.vertices[s])) {
                    b.row.push_back(t);
                    b.col.push_back(s);
                    b.basis_index.push_back(idx);
                }
        width_ += b.row.size();
        blocks_.push_back(std::move(b));
    }
}

Vector MapSpace::to_vector(const ChainMap& f) const {
    if (!same_complex(f.source, x_) || !same_complex(f.target, y_) || f.shift != shift_)
        throw ComplexMismatch("map does not live in this Hom space");
    Vector v(width_);
    for (const auto& b : blocks_) {
        ProjMap m = f.component(b.degree);
        for (std::size_t i = 0; i < b.row.size(); ++i) v[b.offset + i] = m.entry(b.row[i], b.col[i])[b.basis_index[i]];
    }
    return v;
}

ChainMap MapSpace::from_vector(const Vector& v) const {
    ChainMap f{x_, y_, shift_, {}};
    const std::size_t d = x_->algebra()->dim();
    for (const auto& b : blocks_) {
        std::vector<std::vector<Vector>> e(b.to.size(), std::vector<Vector>(b.from.size(), Vector(d)));
        for (std::size_t i = 0; i < b.row.size(); ++i) e[b.row[i]][b.col[i]][b.basis_index[i]] = v[b.offset + i];
        f.components.emplace(b.degree, ProjMap(b.from, b.to, std::move(e)));
    }
    return f;
}

namespace {

// Coordinates of a map Z_k -> W_j restricted to its graded components.
void append_graded(const ProjMap& m, Vector& out) {
    const FDAlgebra& a = *m.source().algebra;
    for (std::size_t t = 0; t < m.target().size(); ++t)
        for (std::size_t s = 0; s < m.source().size(); ++s)
            for (auto idx : a.component(m.target().vertices[t], m.source().vertices[s])) out.push_back(m.entry(t, s)[idx]);
}

}  // namespace

la::Subspace chain_maps(const MapSpace& space) {
    const auto& x = space.source();
    const auto& y = space.target();
    const int i = space.shift();
    const int s = sign_of_shift(i);
    std::set<int> degrees;
    for (int k : x->support()) degrees.insert(k);
    for (int k : x->support()) degrees.insert(k + 1);

    // residual of the chain rule, one block per degree k: X_k -> Y_{k-1-i}
    auto residual = [&](const ChainMap& f) {
        Vector out;
        for (int k : degrees) {
            if (x->module(k).empty() || y->module(k - 1 - i).empty()) continue;
            ProjMap r = compose(f.component(k - 1), x->differential(k)) -
                        Rational(s) * compose(y->differential(k - i), f.component(k));
            append_graded(r, out);
        }
        return out;
    };

    const std::size_t n = space.dim();
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < n; ++c) cols.push_back(residual(space.from_vector(la::unit_vector(n, c))));
    std::size_t rows = cols.empty() ? 0 : cols[0].size();
    if (rows == 0) return la::Subspace::whole(n);
    return la::kernel(la::Matrix::from_columns(cols, rows));
}

la::Subspace null_homotopic_maps(const MapSpace& space) {
    const auto& x = space.source();
    const auto& y = space.target();
    const int i = space.shift();
    const int s = sign_of_shift(i);
    la::Subspace out(space.dim());
    // one elementary homotopy h_k : X_k -> Y_{k+1-i} at a time
    MapSpace hspace(x, y, i - 1);
    for (std::size_t c = 0; c < hspace.dim(); ++c) {
        ChainMap h = hspace.from_vector(la::unit_vector(hspace.dim(), c));
        ChainMap f{x, y, i, {}};
        for (const auto& [k, hk] : h.components) {
            // contributes s d_Y h_k to f_k and h_k d_X to f_{k+1}
            if (!y->module(k - i).empty()) {
                ProjMap term = Rational(s) * compose(y->differential(k + 1 - i), hk);
                auto [it, fresh] = f.components.emplace(k, term);
                if (!fresh) it->second = it->second + term;
            }
            if (!x->module(k + 1).empty()) {
                ProjMap term = compose(hk, x->differential(k + 1));
                auto [it, fresh] = f.components.emplace(k + 1, term);
                if (!fresh) it->second = it->second + term;
            }
        }
        out.add(space.to_vector(f));
    }
    return out;
}

// ----------------------------------------------------------- HomotopyHom

HomotopyHom::HomotopyHom(ComplexPtr x, ComplexPtr y, int shift) : space_(x, y, shift) {
    cycles_ = chain_maps(space_);
    la::Subspace boundaries = null_homotopic_maps(space_);
    std::vector<Vector> preferred;
    if (shift == 0 && same_complex(x, y)) {
        ChainMap id{x, y, 0, {}};
        for (int k : x->support()) id.components.emplace(k, ProjMap::identity(x->module(k)));
        preferred.push_back(space_.to_vector(id));
    }
    quotient_ = la::QuotientMap::build(cycles_, boundaries, preferred);
}

HomotopyClass HomotopyHom::basis(std::size_t i) const {
    return HomotopyClass(space_.from_vector(quotient_.representatives().at(i)));
}

Vector HomotopyHom::coordinates(const ChainMap& f) const { return quotient_.coordinates(space_.to_vector(f)); }

HomotopyClass HomotopyHom::from_coordinates(const Vector& c) const {
    return HomotopyClass(space_.from_vector(quotient_.lift(c)));
}

bool HomotopyHom::is_null_homotopic(const ChainMap& f) const { return la::is_zero(coordinates(f)); }

// --------------------------------------------------------- HomotopyClass

HomotopyClass::HomotopyClass(ChainMap representative) : rep_(std::move(representative)) {
    if (!rep_.source || !rep_.target) throw InvalidComplex("chain map without endpoints");
    require_same_algebra(rep_.source->algebra(), rep_.target->algebra());
    if (!rep_.satisfies_chain_rule()) throw InvalidComplex("representative is not a chain map");
}

HomotopyClass HomotopyClass::identity(const ComplexPtr& x) {
    ChainMap id{x, x, 0, {}};
    for (int k : x->support()) id.components.emplace(k, ProjMap::identity(x->module(k)));
    return HomotopyClass(std::move(id));
}

bool HomotopyClass::is_zero() const { return HomotopyHom(source(), target(), shift()).is_null_homotopic(rep_); }

bool HomotopyClass::equals(const HomotopyClass& other) const {
    if (!same_complex(source(), other.source()) || !same_complex(target(), other.target()) || shift() != other.shift())
        return false;
    return (*this + Rational(-1) * other).is_zero();
}

HomotopyClass operator+(const HomotopyClass& a, const HomotopyClass& b) {
    if (!same_complex(a.source(), b.source()) || !same_complex(a.target(), b.target()) || a.shift() != b.shift())
        throw ComplexMismatch("adding classes in different Hom spaces");
    ChainMap f{a.source(), a.target(), a.shift(), {}};
    std::set<int> degrees;
    for (const auto& [k, m] : a.rep_.components) degrees.insert(k);
    for (const auto& [k, m] : b.rep_.components) degrees.insert(k);
    for (int k : degrees) f.components.emplace(k, a.rep_.component(k) + b.rep_.component(k));
    return HomotopyClass(std::move(f));
}

HomotopyClass operator*(const Rational& c, const HomotopyClass& a) {
    ChainMap f = a.rep_;
    for (auto& [k, m] : f.components) m = c * m;
    return HomotopyClass(std::move(f));
}

HomotopyClass compose(const HomotopyClass& f, const HomotopyClass& g) {
    if (!same_complex(g.target(), f.source())) throw ComplexMismatch("target of the first map is not the source of the second");
    ChainMap h{g.source(), f.target(), f.shift() + g.shift(), {}};
    for (const auto& [k, gk] : g.representative().components) {
        ProjMap fk = f.representative().component(k - g.shift());
        h.components.emplace(k, compose(fk, gk));
    }
    return HomotopyClass(std::move(h));
}

// --------------------------------------------------- endomorphism algebras

namespace {

struct HomAlgebra {
    AlgebraPtr algebra;
    std::vector<std::vector<std::shared_ptr<const HomotopyHom>>> homs;
    std::vector<std::vector<std::size_t>> offsets;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> index;  // basis -> (a, b, i)
};

// Algebra structure on ⊕_{a,b} Hom_K(X_a, X_b); nullopt if some identity is null-homotopic.
std::optional<HomAlgebra> hom_algebra(const std::vector<ComplexPtr>& objs, const std::vector<std::string>& names) {
    const std::size_t n = objs.size();
    HomAlgebra h;
    h.homs.assign(n, std::vector<std::shared_ptr<const HomotopyHom>>(n));
    h.offsets.assign(n, std::vector<std::size_t>(n));
    std::vector<quiv::BasisElement> basis;
    std::vector<std::size_t> idempotents(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto hom = std::make_shared<const HomotopyHom>(objs[a], objs[b], 0);
            h.offsets[a][b] = basis.size();
            if (a == b) {
                if (hom->dim() == 0) return std::nullopt;
                Vector id = hom->coordinates(HomotopyClass::identity(objs[a]).representative());
                if (id != la::unit_vector(hom->dim(), 0)) throw std::logic_error("identity is not the first representative");
                idempotents[a] = basis.size();
            }
            for (std::size_t i = 0; i < hom->dim(); ++i) {
                basis.push_back({a, b, std::nullopt, names[a] + "->" + names[b] + "#" + std::to_string(i)});
                h.index.emplace_back(a, b, i);
            }
            h.homs[a][b] = std::move(hom);
        }
    const std::size_t d = basis.size();
    std::vector<std::vector<quiv::SparseVector>> table(d, std::vector<quiv::SparseVector>(d));
    std::vector<HomotopyClass> classes;
    for (const auto& [a, b, i] : h.index) classes.push_back(h.homs[a][b]->basis(i));
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t w = 0; w < d; ++w) {
            const auto& [a, b, i] = h.index[u];
            const auto& [b2, c, j] = h.index[w];
            if (b != b2) continue;
            // diagrammatic product: u, then w
            HomotopyClass prod = compose(classes[w], classes[u]);
            Vector coords = h.homs[a][c]->coordinates(prod.representative());
            for (std::size_t k = 0; k < coords.size(); ++k)
                if (sgn(coords[k]) != 0) table[u][w].emplace_back(h.offsets[a][c] + k, coords[k]);
        }
    h.algebra = std::make_shared<const FDAlgebra>(names, std::move(basis), std::move(idempotents), std::move(table));
    return h;
}

}  // namespace

std::size_t EndomorphismAlgebra::index(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    throw UnknownVertex(name);
}

AlgebraElement EndomorphismAlgebra::element_between(std::size_t a, std::size_t b, const HomotopyClass& f) const {
    if (!same_complex(f.source(), summands.at(a)) || !same_complex(f.target(), summands.at(b)) || f.shift() != 0)
        throw ComplexMismatch("class does not run between the named summands");
    Vector coords = homs[a][b]->coordinates(f.representative());
    AlgebraElement e = algebra->zero();
    std::size_t offset = 0;
    for (std::size_t i = 0; i < algebra->dim(); ++i)
        if (algebra->basis(i).source == a && algebra->basis(i).target == b) {
            offset = i;
            break;
        }
    for (std::size_t k = 0; k < coords.size(); ++k) e.coeffs[offset + k] = coords[k];
    return e;
}

HomotopyClass EndomorphismAlgebra::class_of(std::size_t basis_index) const {
    const auto& be = algebra->basis(basis_index);
    std::size_t first = basis_index;
    while (first > 0 && algebra->basis(first - 1).source == be.source && algebra->basis(first - 1).target == be.target)
        --first;
    return homs[be.source][be.target]->basis(basis_index - first);
}

EndomorphismAlgebra endomorphism_algebra(const ComplexPtr& x) {
    if (!x->has_summands()) throw InvalidComplex("endomorphism algebra needs a summand decomposition");
    EndomorphismAlgebra e;
    for (std::size_t i = 0; i < x->summands().size(); ++i) {
        e.names.push_back(x->summands()[i].name);
        e.summands.push_back(std::make_shared<const BoundedComplex>(x->summand(i)));
    }
    auto h = hom_algebra(e.summands, e.names);
    if (!h) throw NotBasicDecomposition("a declared summand is zero in the homotopy category");
    try {
        quiv::require_basic(*h->algebra);
    } catch (const NotBasic& err) {
        throw NotBasicDecomposition(std::string("summands are not pairwise non-isomorphic indecomposables: ") + err.what());
    }
    e.algebra = h->algebra;
    e.homs = std::move(h->homs);
    return e;
}

AlgebraPtr local_endomorphisms(const ComplexPtr& x) {
    auto h = hom_algebra({x}, {"x"});
    return h ? h->algebra : nullptr;
}

bool is_indecomposable(const ComplexPtr& x) {
    auto e = local_endomorphisms(x);
    if (!e) return false;
    return e->dim() - quiv::radical(*e).dim() == 1;
}

bool isomorphic_indecomposables(const ComplexPtr& x, const ComplexPtr& y) {
    require_same_algebra(x->algebra(), y->algebra());
    auto e = local_endomorphisms(x);
    if (!e) throw NotIndecomposable("complex is null-homotopic");
    la::Subspace rad = quiv::radical(*e);
    HomotopyHom end(x, x, 0), xy(x, y, 0), yx(y, x, 0);
    for (std::size_t i = 0; i < xy.dim(); ++i)
        for (std::size_t j = 0; j < yx.dim(); ++j) {
            HomotopyClass gf = compose(yx.basis(j), xy.basis(i));
            if (!rad.contains(end.coordinates(gf.representative()))) return true;
        }
    return false;
}

bool summands_pairwise_noniso(const std::vector<ComplexPtr>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (!is_indecomposable(xs[i])) throw NotIndecomposable("entry " + std::to_string(i) + " is not indecomposable");
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (isomorphic_indecomposables(xs[i], xs[j])) return false;
    return true;
}

TiltingReport two_term_tilting_check(const ComplexPtr& x) {
    for (int k : x->support())
        if (k != 0 && k != 1) throw NotTwoTerm("complex has a term in degree " + std::to_string(k));
    TiltingReport r;
    r.vertex_count = x->algebra()->vertex_count();
    r.presilting = HomotopyHom(x, x, 1).dim() == 0;
    r.no_negative = HomotopyHom(x, x, -1).dim() == 0;
    if (!r.presilting) r.notes.push_back("Hom(T, T[1]) is nonzero");
    if (!r.no_negative) r.notes.push_back("Hom(T, T[-1]) is nonzero");

    std::vector<Summand> pieces = x->has_summands() ? x->summands() : x->connected_blocks();
    std::vector<ComplexPtr> indecomposables;
    bool all_split = true;
    for (const auto& p : pieces) {
        auto c = std::make_shared<const BoundedComplex>(x->restrict_rows(p.rows_by_degree));
        if (!local_endomorphisms(c)) continue;  // contractible
        if (is_indecomposable(c)) {
            indecomposables.push_back(c);
            continue;
        }
        bool ok = true;
        for (const auto& q : c->connected_blocks()) {
            auto cq = std::make_shared<const BoundedComplex>(c->restrict_rows(q.rows_by_degree));
            if (!local_endomorphisms(cq)) continue;
            if (is_indecomposable(cq)) indecomposables.push_back(cq);
            else ok = false;
        }
        if (!ok) {
            all_split = false;
            r.notes.push_back("summand " + p.name + " could not be split into indecomposables");
        }
    }
    std::vector<ComplexPtr> classes;
    for (const auto& c : indecomposables) {
        bool seen = false;
        for (const auto& d : classes) seen = seen || isomorphic_indecomposables(c, d);
        if (!seen) classes.push_back(c);
    }
    r.distinct_summands = classes.size();
    r.summand_count_ok = all_split && r.distinct_summands == r.vertex_count;
    if (!r.summand_count_ok)
        r.notes.push_back(std::to_string(r.distinct_summands) + " distinct indecomposable summands for " +
                          std::to_string(r.vertex_count) + " vertices");
    r.tilting = r.presilting && r.no_negative && r.summand_count_ok;
    return r;
}

}  // namespace tiltcert::homotopy
