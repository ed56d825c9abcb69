#include "tiltcert/errors.hpp"
#include "tiltcert/quivalg.hpp"

#include <algorithm>
#include <sstream>

namespace tiltcert::quiv {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InvalidQuiver("quiver has no vertices");
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (!vertex_lookup_.emplace(vertices_[v], v).second)
            throw InvalidQuiver("duplicate vertex label: " + vertices_[v]);
    for (const auto& a : arrows) {
        if (a.id.empty()) throw InvalidQuiver("arrow with empty id");
        if (!arrow_lookup_.emplace(a.id, arrows_.size()).second)
            throw InvalidQuiver("duplicate arrow id: " + a.id);
        arrows_.push_back(Arrow{a.id, vertex_index(a.source), vertex_index(a.target)});
    }
}

std::size_t Quiver::vertex_index(const std::string& label) const {
    auto it = vertex_lookup_.find(label);
    if (it == vertex_lookup_.end()) throw UnknownVertex(label);
    return it->second;
}

std::size_t Quiver::arrow_index(const std::string& id) const {
    auto it = arrow_lookup_.find(id);
    if (it == arrow_lookup_.end()) throw UnknownArrow(id);
    return it->second;
}

std::vector<ArrowSpec> Quiver::arrow_specs() const {
    std::vector<ArrowSpec> out;
    out.reserve(arrows_.size());
    for (const auto& a : arrows_) out.push_back({a.id, vertices_[a.source], vertices_[a.target]});
    return out;
}

Path Path::from_ids(const Quiver& q, const std::vector<std::string>& ids, std::optional<std::size_t> start) {
    if (ids.empty()) {
        if (!start) throw InvalidRelation("trivial path needs an explicit vertex");
        return trivial(*start);
    }
    Path p;
    for (const auto& id : ids) {
        std::size_t a = q.arrow_index(id);
        const Arrow& arr = q.arrow(a);
        if (p.arrows.empty()) {
            p.start = arr.source;
            if (start && *start != arr.source) throw InvalidRelation("path does not start at the given vertex");
        } else if (p.end != arr.source) {
            throw InvalidRelation("arrows " + q.arrow(p.arrows.back()).id + " and " + id + " do not compose");
        }
        p.arrows.push_back(a);
        p.end = arr.target;
    }
    return p;
}

std::vector<std::string> Path::ids(const Quiver& q) const {
    std::vector<std::string> out;
    for (auto a : arrows) out.push_back(q.arrow(a).id);
    return out;
}

std::string Path::to_string(const Quiver& q) const {
    if (arrows.empty()) return "e_" + q.vertex(start);
    std::ostringstream os;
    for (std::size_t i = 0; i < arrows.size(); ++i) os << (i ? "." : "") << q.arrow(arrows[i]).id;
    return os.str();
}

bool deglex_less(const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    if (a.start != b.start) return a.start < b.start;
    return a.end < b.end;
}

std::optional<Path> concat(const Path& p, const Path& q) {
    if (p.end != q.start) return std::nullopt;
    Path r{p.start, q.end, p.arrows};
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

std::size_t Relation::max_length() const {
    std::size_t m = 0;
    for (const auto& [c, p] : terms) m = std::max(m, p.length());
    return m;
}

void validate_relation(const Quiver& q, const Relation& r) {
    if (r.terms.empty()) throw InvalidRelation("relation without terms");
    const Path& first = r.terms.front().second;
    for (const auto& [c, p] : r.terms) {
        if (sgn(c) == 0) throw InvalidRelation("relation term with zero coefficient");
        if (p.is_trivial()) throw InvalidRelation("relation contains a trivial path e_" + q.vertex(p.start));
        if (p.start != first.start || p.end != first.end)
            throw InvalidRelation("relation terms are not parallel: " + first.to_string(q) + " vs " + p.to_string(q));
        for (std::size_t i = 0; i < p.arrows.size(); ++i) {
            if (p.arrows[i] >= q.arrow_count()) throw InvalidRelation("arrow index out of range");
            const Arrow& a = q.arrow(p.arrows[i]);
            if (i == 0 && a.source != p.start) throw InvalidRelation("path start inconsistent");
            if (i > 0 && q.arrow(p.arrows[i - 1]).target != a.source) throw InvalidRelation("path not composable");
            if (i + 1 == p.arrows.size() && a.target != p.end) throw InvalidRelation("path end inconsistent");
        }
    }
}

std::pair<Quiver, std::vector<Relation>> opposite_presentation(const Quiver& q, const std::vector<Relation>& rels) {
    std::vector<ArrowSpec> arrows;
    for (const auto& a : q.arrow_specs()) arrows.push_back({a.id, a.target, a.source});
    Quiver op(q.vertices(), arrows);
    std::vector<Relation> out;
    for (const auto& r : rels) {
        Relation o;
        for (const auto& [c, p] : r.terms) {
            Path rp{p.end, p.start, std::vector<std::size_t>(p.arrows.rbegin(), p.arrows.rend())};
            o.terms.emplace_back(c, rp);
        }
        out.push_back(std::move(o));
    }
    return {std::move(op), std::move(out)};
}

}  // namespace tiltcert::quiv
