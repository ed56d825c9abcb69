#include "groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace tiltcert::quiv::detail {

Poly to_poly(const Relation& r) {
    Poly p;
    for (const auto& [c, path] : r.terms) {
        auto& slot = p[path];
        slot += c;
        if (sgn(slot) == 0) p.erase(path);
    }
    return p;
}

Relation to_relation(const Poly& p) {
    Relation r;
    for (const auto& [path, c] : p) r.terms.emplace_back(c, path);
    return r;
}

void add_scaled(Poly& p, const Rational& c, const Poly& q) {
    if (sgn(c) == 0) return;
    for (const auto& [path, coeff] : q) {
        auto [it, inserted] = p.emplace(path, c * coeff);
        if (!inserted) {
            it->second += c * coeff;
            if (sgn(it->second) == 0) p.erase(it);
        }
    }
}

Poly sandwich(const Path& a, const Poly& q, const Path& b) {
    Poly out;
    for (const auto& [path, c] : q) {
        Path w{a.start, b.end, a.arrows};
        w.arrows.insert(w.arrows.end(), path.arrows.begin(), path.arrows.end());
        w.arrows.insert(w.arrows.end(), b.arrows.begin(), b.arrows.end());
        out.emplace(std::move(w), c);
    }
    return out;
}

std::optional<std::size_t> find_subword(const Path& word, const Path& tip) {
    const auto& w = word.arrows;
    const auto& t = tip.arrows;
    if (t.empty() || t.size() > w.size()) return std::nullopt;
    auto it = std::search(w.begin(), w.end(), t.begin(), t.end());
    if (it == w.end()) return std::nullopt;
    return static_cast<std::size_t>(it - w.begin());
}

namespace {

// Splits `word` around the occurrence of `tip` at `pos`.
std::pair<Path, Path> split_around(const Path& word, const Path& tip, std::size_t pos) {
    Path left{word.start, tip.start,
              std::vector<std::size_t>(word.arrows.begin(), word.arrows.begin() + static_cast<long>(pos))};
    Path right{tip.end, word.end,
               std::vector<std::size_t>(word.arrows.begin() + static_cast<long>(pos + tip.length()), word.arrows.end())};
    return {std::move(left), std::move(right)};
}

void make_monic(Poly& p) {
    Rational inv = 1 / p.begin()->second;
    for (auto& [path, c] : p) c *= inv;
}

}  // namespace

Poly reduce(Poly p, const std::vector<Poly>& gb) {
    Poly done;
    while (!p.empty()) {
        auto lead = p.begin();
        const Path word = lead->first;
        const Rational coeff = lead->second;
        bool reduced = false;
        for (const auto& g : gb) {
            const Path& tip = g.begin()->first;
            if (auto pos = find_subword(word, tip)) {
                auto [left, right] = split_around(word, tip, *pos);
                add_scaled(p, -coeff, sandwich(left, g, right));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            done.emplace(word, coeff);
            p.erase(p.begin());
        }
    }
    return done;
}

GroebnerResult groebner_basis(const std::vector<Relation>& rels, std::size_t cap) {
    GroebnerResult result;
    std::vector<Poly> polys;    // every element ever added, by id
    std::vector<bool> alive;
    std::vector<Poly> pending;  // to (re)insert
    // (overlap length, id1, id2, overlap size)
    std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> pairs;

    auto live_basis = [&] {
        std::vector<Poly> out;
        for (std::size_t i = 0; i < polys.size(); ++i)
            if (alive[i]) out.push_back(polys[i]);
        return out;
    };

    auto queue_overlaps = [&](std::size_t id) {
        const Path& t_new = polys[id].begin()->first;
        for (std::size_t other = 0; other < polys.size(); ++other) {
            if (!alive[other]) continue;
            const Path& t_old = polys[other].begin()->first;
            for (auto [i1, i2] : {std::pair{id, other}, std::pair{other, id}}) {
                const Path& t1 = i1 == id ? t_new : t_old;
                const Path& t2 = i2 == id ? t_new : t_old;
                std::size_t lim = std::min(t1.length(), t2.length());
                for (std::size_t k = 1; k < lim; ++k) {
                    if (!std::equal(t1.arrows.end() - static_cast<long>(k), t1.arrows.end(), t2.arrows.begin()))
                        continue;
                    std::size_t len = t1.length() + t2.length() - k;
                    if (len > cap) {
                        result.complete = false;
                        continue;
                    }
                    pairs.emplace(len, i1, i2, k);
                }
                if (i1 == i2) break;
            }
        }
    };

    auto insert = [&](Poly p) {
        p = reduce(std::move(p), live_basis());
        if (p.empty()) return;
        make_monic(p);
        const Path& tip = p.begin()->first;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            if (!alive[i]) continue;
            if (find_subword(polys[i].begin()->first, tip)) {
                alive[i] = false;
                pending.push_back(polys[i]);
            }
        }
        polys.push_back(std::move(p));
        alive.push_back(true);
        queue_overlaps(polys.size() - 1);
    };

    auto drain = [&] {
        while (!pending.empty()) {
            Poly p = std::move(pending.back());
            pending.pop_back();
            insert(std::move(p));
        }
    };

    for (const auto& r : rels) pending.push_back(to_poly(r));
    std::reverse(pending.begin(), pending.end());
    drain();

    while (!pairs.empty()) {
        auto [len, i1, i2, k] = *pairs.begin();
        pairs.erase(pairs.begin());
        if (!alive[i1] || !alive[i2]) continue;
        const Path& t1 = polys[i1].begin()->first;
        const Path& t2 = polys[i2].begin()->first;
        // t1 = u·v, t2 = v·w with |v| = k; v runs from t2.start to t1.end
        Path u{t1.start, t2.start,
               std::vector<std::size_t>(t1.arrows.begin(), t1.arrows.end() - static_cast<long>(k))};
        Path w{t1.end, t2.end, std::vector<std::size_t>(t2.arrows.begin() + static_cast<long>(k), t2.arrows.end())};
        Poly s = sandwich(Path::trivial(t1.start), polys[i1], w);
        add_scaled(s, -1, sandwich(u, polys[i2], Path::trivial(t2.end)));
        pending.push_back(std::move(s));
        drain();
    }

    // inter-reduce tails for a canonical basis
    std::vector<Poly> basis = live_basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Poly head;
        head.emplace(*basis[i].begin());
        Poly tail = basis[i];
        tail.erase(tail.begin());
        std::vector<Poly> others;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i) others.push_back(basis[j]);
        Poly reduced_tail = reduce(std::move(tail), others);
        add_scaled(head, 1, reduced_tail);
        basis[i] = std::move(head);
    }
    std::sort(basis.begin(), basis.end(),
              [](const Poly& a, const Poly& b) { return deglex_less(a.begin()->first, b.begin()->first); });
    result.basis = std::move(basis);
    return result;
}

}  // namespace tiltcert::quiv::detail
