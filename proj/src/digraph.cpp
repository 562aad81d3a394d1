#include "stickelgraph/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace stickelgraph {

namespace {
constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kDeckFiberCap = 512;
}  // namespace

Digraph::Digraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges)
    : vertex_ids_(std::move(vertex_ids)), edges_(std::move(edges)) {
    std::unordered_set<std::string> seen;
    for (const auto& id : vertex_ids_)
        if (!seen.insert(id).second)
            throw std::invalid_argument("duplicate vertex id: " + id);
    seen.clear();
    out_.resize(vertex_ids_.size());
    in_.resize(vertex_ids_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (!seen.insert(ed.id).second) throw std::invalid_argument("duplicate edge id: " + ed.id);
        if (ed.from >= vertex_ids_.size() || ed.to >= vertex_ids_.size())
            throw std::invalid_argument("edge " + ed.id + " has a dangling endpoint");
        out_[ed.from].push_back(e);
        in_[ed.to].push_back(e);
    }
}

Digraph Digraph::from_names(std::vector<std::string> vertex_ids,
                            const std::vector<EdgeByName>& edges) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t v = 0; v < vertex_ids.size(); ++v) index.emplace(vertex_ids[v], v);
    std::vector<Edge> resolved;
    resolved.reserve(edges.size());
    for (const auto& e : edges) {
        auto fit = index.find(e.from), tit = index.find(e.to);
        if (fit == index.end())
            throw std::invalid_argument("edge " + e.id + " leaves unknown vertex " + e.from);
        if (tit == index.end())
            throw std::invalid_argument("edge " + e.id + " enters unknown vertex " + e.to);
        resolved.push_back({e.id, fit->second, tit->second});
    }
    return Digraph(std::move(vertex_ids), std::move(resolved));
}

std::size_t Digraph::vertex_index(const std::string& id) const {
    auto it = std::find(vertex_ids_.begin(), vertex_ids_.end(), id);
    if (it == vertex_ids_.end()) throw std::invalid_argument("unknown vertex id: " + id);
    return static_cast<std::size_t>(it - vertex_ids_.begin());
}

std::size_t Digraph::edge_index(const std::string& id) const {
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].id == id) return e;
    throw std::invalid_argument("unknown edge id: " + id);
}

IntMatrix Digraph::adjacency() const {
    IntMatrix a(num_vertices(), num_vertices());
    for (const Edge& e : edges_) a.at(e.to, e.from) += 1;
    return a;
}

bool Digraph::operator==(const Digraph& o) const {
    if (vertex_ids_ != o.vertex_ids_ || edges_.size() != o.edges_.size()) return false;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].id != o.edges_[e].id || edges_[e].from != o.edges_[e].from ||
            edges_[e].to != o.edges_[e].to)
            return false;
    return true;
}

std::shared_ptr<const Digraph> share(Digraph d) {
    return std::make_shared<const Digraph>(std::move(d));
}

DigraphMorphism::DigraphMorphism(std::shared_ptr<const Digraph> source,
                                 std::shared_ptr<const Digraph> target,
                                 std::vector<std::size_t> vertex_map,
                                 std::vector<std::size_t> edge_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
    if (vertex_map_.size() != source_->num_vertices() || edge_map_.size() != source_->num_edges())
        throw std::invalid_argument("morphism map sizes disagree with the source digraph");
    for (std::size_t v : vertex_map_)
        if (v >= target_->num_vertices())
            throw std::invalid_argument("morphism maps a vertex outside the target");
    for (std::size_t e = 0; e < edge_map_.size(); ++e) {
        if (edge_map_[e] >= target_->num_edges())
            throw std::invalid_argument("morphism maps an edge outside the target");
        const auto& se = source_->edge(e);
        const auto& te = target_->edge(edge_map_[e]);
        if (vertex_map_[se.from] != te.from || vertex_map_[se.to] != te.to)
            throw std::invalid_argument("morphism breaks incidence at edge " + se.id);
    }
}

DigraphMorphism DigraphMorphism::identity(std::shared_ptr<const Digraph> d) {
    std::vector<std::size_t> vm(d->num_vertices()), em(d->num_edges());
    for (std::size_t v = 0; v < vm.size(); ++v) vm[v] = v;
    for (std::size_t e = 0; e < em.size(); ++e) em[e] = e;
    return DigraphMorphism(d, d, std::move(vm), std::move(em));
}

DigraphMorphism compose(const DigraphMorphism& outer, const DigraphMorphism& inner) {
    if (!(inner.target() == outer.source()))
        throw std::invalid_argument("morphisms do not compose: target and source differ");
    std::vector<std::size_t> vm(inner.source().num_vertices()), em(inner.source().num_edges());
    for (std::size_t v = 0; v < vm.size(); ++v) vm[v] = outer.vertex_image(inner.vertex_image(v));
    for (std::size_t e = 0; e < em.size(); ++e) em[e] = outer.edge_image(inner.edge_image(e));
    return DigraphMorphism(inner.source_ptr(), outer.target_ptr(), std::move(vm), std::move(em));
}

namespace {

void require_permutation(const std::vector<std::size_t>& t, std::size_t n, const char* what) {
    if (t.size() != n) throw std::invalid_argument(std::string(what) + ": table size mismatch");
    std::vector<bool> hit(n, false);
    for (std::size_t x : t) {
        if (x >= n || hit[x]) throw std::invalid_argument(std::string(what) + ": not a permutation");
        hit[x] = true;
    }
}

std::vector<std::size_t> compose_tables(const std::vector<std::size_t>& outer,
                                        const std::vector<std::size_t>& inner) {
    std::vector<std::size_t> r(inner.size());
    for (std::size_t x = 0; x < inner.size(); ++x) r[x] = outer[inner[x]];
    return r;
}

bool is_identity_table(const std::vector<std::size_t>& t) {
    for (std::size_t x = 0; x < t.size(); ++x)
        if (t[x] != x) return false;
    return true;
}

}  // namespace

GroupAction::GroupAction(std::shared_ptr<const Digraph> d, FiniteAbelianGroup group,
                         std::vector<std::vector<std::size_t>> vertex_gen,
                         std::vector<std::vector<std::size_t>> edge_gen)
    : digraph_(std::move(d)),
      group_(std::move(group)),
      vertex_gen_(std::move(vertex_gen)),
      edge_gen_(std::move(edge_gen)) {
    std::size_t k = group_.num_factors();
    if (vertex_gen_.size() != k || edge_gen_.size() != k)
        throw std::invalid_argument("one action table per group generator is required");
    for (std::size_t i = 0; i < k; ++i) {
        require_permutation(vertex_gen_[i], digraph_->num_vertices(), "vertex action");
        require_permutation(edge_gen_[i], digraph_->num_edges(), "edge action");
        for (std::size_t e = 0; e < digraph_->num_edges(); ++e) {
            const auto& src = digraph_->edge(e);
            const auto& dst = digraph_->edge(edge_gen_[i][e]);
            if (vertex_gen_[i][src.from] != dst.from || vertex_gen_[i][src.to] != dst.to)
                throw std::invalid_argument("action breaks incidence at edge " + src.id);
        }
        // Generator order divides the cyclic order of its factor.
        std::vector<std::size_t> pv = vertex_gen_[i], pe = edge_gen_[i];
        for (long t = 1; t < group_.cyclic_orders()[i]; ++t) {
            pv = compose_tables(vertex_gen_[i], pv);
            pe = compose_tables(edge_gen_[i], pe);
        }
        if (!is_identity_table(pv) || !is_identity_table(pe))
            throw std::invalid_argument("generator action order exceeds its cyclic order");
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            if (compose_tables(vertex_gen_[i], vertex_gen_[j]) !=
                    compose_tables(vertex_gen_[j], vertex_gen_[i]) ||
                compose_tables(edge_gen_[i], edge_gen_[j]) !=
                    compose_tables(edge_gen_[j], edge_gen_[i]))
                throw std::invalid_argument("generator actions do not commute");
        }
}

std::size_t GroupAction::apply_vertex(const FiniteAbelianGroup::Element& g, std::size_t v) const {
    FiniteAbelianGroup::Element r = group_.reduce(g);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (long t = 0; t < r[i]; ++t) v = vertex_gen_[i][v];
    return v;
}

std::size_t GroupAction::apply_edge(const FiniteAbelianGroup::Element& g, std::size_t e) const {
    FiniteAbelianGroup::Element r = group_.reduce(g);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (long t = 0; t < r[i]; ++t) e = edge_gen_[i][e];
    return e;
}

bool GroupAction::vertex_free() const {
    for (long idx = 1; idx < group_.order(); ++idx) {
        FiniteAbelianGroup::Element g = group_.element(idx);
        for (std::size_t v = 0; v < digraph_->num_vertices(); ++v)
            if (apply_vertex(g, v) == v) return false;
    }
    return true;
}

Digraph digraph_from_adjacency(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("adjacency matrix must be square");
    std::size_t n = a.rows();
    std::vector<std::string> ids(n);
    for (std::size_t v = 0; v < n; ++v) ids[v] = "v" + std::to_string(v);
    std::vector<Digraph::Edge> edges;
    for (std::size_t from = 0; from < n; ++from)
        for (std::size_t to = 0; to < n; ++to) {
            const mpz_class& c = a.at(to, from);
            if (c < 0) throw std::invalid_argument("adjacency entries must be nonnegative");
            for (mpz_class k = 0; k < c; ++k)
                edges.push_back({"e" + std::to_string(from) + "_" + std::to_string(to) + "_" +
                                     k.get_str(),
                                 from, to});
        }
    return Digraph(std::move(ids), std::move(edges));
}

bool is_strongly_connected(const Digraph& d) {
    std::size_t n = d.num_vertices();
    if (n <= 1) return true;
    auto reaches_all = [&](bool forward) {
        std::vector<bool> seen(n, false);
        std::deque<std::size_t> queue{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            const auto& star = forward ? d.out_edges(v) : d.in_edges(v);
            for (std::size_t e : star) {
                std::size_t u = forward ? d.edge(e).to : d.edge(e).from;
                if (!seen[u]) {
                    seen[u] = true;
                    ++count;
                    queue.push_back(u);
                }
            }
        }
        return count == n;
    };
    return reaches_all(true) && reaches_all(false);
}

mpz_class count_closed_paths(const Digraph& d, unsigned long m) {
    if (m == 0) throw std::invalid_argument("closed paths have positive length");
    if (m > 3) return d.adjacency().power(m).trace();
    mpz_class total = 0;
    std::function<void(std::size_t, std::size_t, unsigned long)> walk =
        [&](std::size_t start, std::size_t at, unsigned long left) {
            if (left == 0) {
                if (at == start) total += 1;
                return;
            }
            for (std::size_t e : d.out_edges(at)) walk(start, d.edge(e).to, left - 1);
        };
    for (std::size_t v = 0; v < d.num_vertices(); ++v) walk(v, v, m);
    return total;
}

bool check_cover(const DigraphMorphism& f) {
    const Digraph& y = f.source();
    const Digraph& x = f.target();
    std::vector<bool> covered(x.num_vertices(), false);
    for (std::size_t w = 0; w < y.num_vertices(); ++w) covered[f.vertex_image(w)] = true;
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) return false;
    auto star_bijective = [&](const std::vector<std::size_t>& up,
                              const std::vector<std::size_t>& down) {
        if (up.size() != down.size()) return false;
        std::vector<std::size_t> images;
        images.reserve(up.size());
        for (std::size_t e : up) images.push_back(f.edge_image(e));
        std::sort(images.begin(), images.end());
        return std::adjacent_find(images.begin(), images.end()) == images.end();
    };
    for (std::size_t w = 0; w < y.num_vertices(); ++w) {
        std::size_t v = f.vertex_image(w);
        if (!star_bijective(y.out_edges(w), x.out_edges(v))) return false;
        if (!star_bijective(y.in_edges(w), x.in_edges(v))) return false;
    }
    return true;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        // Keep the smaller index as root so each orbit is named by its
        // least member.
        if (a == b) return;
        if (a < b)
            parent[b] = a;
        else
            parent[a] = b;
    }
};

}  // namespace

std::pair<Digraph, DigraphMorphism> quotient_digraph(const std::shared_ptr<const Digraph>& d,
                                                     const GroupAction& a) {
    if (!(a.digraph() == *d))
        throw std::invalid_argument("the action is defined on a different digraph");
    std::size_t nv = d->num_vertices(), ne = d->num_edges();
    UnionFind vclass(nv), eclass(ne);
    FiniteAbelianGroup::Element gen = a.group().identity();
    for (std::size_t i = 0; i < a.group().num_factors(); ++i) {
        gen.assign(a.group().num_factors(), 0);
        gen[i] = 1;
        for (std::size_t v = 0; v < nv; ++v) vclass.unite(v, a.apply_vertex(gen, v));
        for (std::size_t e = 0; e < ne; ++e) eclass.unite(e, a.apply_edge(gen, e));
    }

    std::vector<std::size_t> vrep, vmap(nv);
    for (std::size_t v = 0; v < nv; ++v)
        if (vclass.find(v) == v) vrep.push_back(v);
    for (std::size_t v = 0; v < nv; ++v) {
        std::size_t root = vclass.find(v);
        vmap[v] = static_cast<std::size_t>(
            std::lower_bound(vrep.begin(), vrep.end(), root) - vrep.begin());
    }
    std::vector<std::string> qids;
    for (std::size_t r : vrep) qids.push_back(d->vertex_ids()[r]);

    std::vector<std::size_t> erep, emap(ne);
    for (std::size_t e = 0; e < ne; ++e)
        if (eclass.find(e) == e) erep.push_back(e);
    std::vector<Digraph::Edge> qedges;
    for (std::size_t r : erep)
        qedges.push_back({d->edge(r).id, vmap[d->edge(r).from], vmap[d->edge(r).to]});
    for (std::size_t e = 0; e < ne; ++e) {
        std::size_t root = eclass.find(e);
        emap[e] = static_cast<std::size_t>(
            std::lower_bound(erep.begin(), erep.end(), root) - erep.begin());
    }

    auto quotient = share(Digraph(std::move(qids), std::move(qedges)));
    DigraphMorphism projection(d, quotient, std::move(vmap), std::move(emap));
    return {*quotient, std::move(projection)};
}

std::vector<DigraphMorphism> deck_group(const DigraphMorphism& f) {
    if (!check_cover(f)) throw std::invalid_argument("deck transformations require a cover");
    const Digraph& y = f.source();
    if (!is_strongly_connected(y))
        throw std::invalid_argument("deck transformations require a strongly connected source");
    std::size_t nv = y.num_vertices(), ne = y.num_edges();
    if (nv == 0) return {};

    // For each vertex, the unique out-edge over a given base edge.
    std::vector<std::unordered_map<std::size_t, std::size_t>> out_by_base(nv);
    for (std::size_t e = 0; e < ne; ++e) out_by_base[y.edge(e).from].emplace(f.edge_image(e), e);

    std::vector<std::size_t> fiber;
    for (std::size_t w = 0; w < nv; ++w)
        if (f.vertex_image(w) == f.vertex_image(0)) fiber.push_back(w);
    if (fiber.size() > kDeckFiberCap)
        throw std::runtime_error("fiber size " + std::to_string(fiber.size()) +
                                 " exceeds the deck enumeration cap of " +
                                 std::to_string(kDeckFiberCap));

    std::vector<DigraphMorphism> deck;
    for (std::size_t w1 : fiber) {
        std::vector<std::size_t> vimg(nv, kUnset), eimg(ne, kUnset);
        vimg[0] = w1;
        std::deque<std::size_t> queue{0};
        bool ok = true;
        while (ok && !queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t e : y.out_edges(v)) {
                auto it = out_by_base[vimg[v]].find(f.edge_image(e));
                if (it == out_by_base[vimg[v]].end()) {
                    ok = false;
                    break;
                }
                eimg[e] = it->second;
                std::size_t u = y.edge(e).to, ui = y.edge(it->second).to;
                if (vimg[u] == kUnset) {
                    vimg[u] = ui;
                    queue.push_back(u);
                } else if (vimg[u] != ui) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        std::vector<bool> vseen(nv, false), eseen(ne, false);
        for (std::size_t v = 0; ok && v < nv; ++v) {
            if (vimg[v] == kUnset || vseen[vimg[v]] || f.vertex_image(vimg[v]) != f.vertex_image(v))
                ok = false;
            else
                vseen[vimg[v]] = true;
        }
        for (std::size_t e = 0; ok && e < ne; ++e) {
            if (eimg[e] == kUnset || eseen[eimg[e]] || f.edge_image(eimg[e]) != f.edge_image(e))
                ok = false;
            else
                eseen[eimg[e]] = true;
        }
        if (!ok) continue;
        deck.emplace_back(f.source_ptr(), f.source_ptr(), std::move(vimg), std::move(eimg));
    }
    return deck;
}

bool is_galois(const DigraphMorphism& f) {
    std::vector<DigraphMorphism> deck = deck_group(f);
    const Digraph& y = f.source();
    std::vector<std::vector<std::size_t>> fibers(f.target().num_vertices());
    for (std::size_t w = 0; w < y.num_vertices(); ++w) fibers[f.vertex_image(w)].push_back(w);
    for (const auto& fiber : fibers) {
        if (fiber.empty()) continue;
        std::unordered_set<std::size_t> orbit;
        for (const auto& sigma : deck) orbit.insert(sigma.vertex_image(fiber[0]));
        if (orbit.size() != fiber.size()) return false;
    }
    return true;
}

}  // namespace stickelgraph
