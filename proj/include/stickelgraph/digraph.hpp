#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "stickelgraph/group.hpp"
#include "stickelgraph/intmatrix.hpp"

namespace stickelgraph {

// Finite directed multigraph. Parallel edges and loops are first-class
// and never merged. Vertices and edges carry string ids for I/O; their
// positions in the construction-order lists are the canonical indices
// used by every matrix built from the digraph.
class Digraph {
public:
    struct Edge {
        std::string id;
        std::size_t from = 0;
        std::size_t to = 0;
    };
    struct EdgeByName {
        std::string id;
        std::string from;
        std::string to;
    };

    Digraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges);
    static Digraph from_names(std::vector<std::string> vertex_ids,
                              const std::vector<EdgeByName>& edges);

    std::size_t num_vertices() const { return vertex_ids_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t e) const { return edges_[e]; }

    std::size_t vertex_index(const std::string& id) const;
    std::size_t edge_index(const std::string& id) const;

    // Edge indices in construction order.
    const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
    const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }

    // A(i, j) counts the edges from v_j to v_i, so A acts on column
    // vectors indexed by vertices.
    IntMatrix adjacency() const;

    bool operator==(const Digraph& o) const;

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_, in_;
};

std::shared_ptr<const Digraph> share(Digraph d);

// Digraph morphism: vertex and edge maps respecting incidence on both
// ends. Held digraphs are shared so that families of morphisms over
// one cover do not copy it.
class DigraphMorphism {
public:
    DigraphMorphism(std::shared_ptr<const Digraph> source, std::shared_ptr<const Digraph> target,
                    std::vector<std::size_t> vertex_map, std::vector<std::size_t> edge_map);
    static DigraphMorphism identity(std::shared_ptr<const Digraph> d);

    const Digraph& source() const { return *source_; }
    const Digraph& target() const { return *target_; }
    const std::shared_ptr<const Digraph>& source_ptr() const { return source_; }
    const std::shared_ptr<const Digraph>& target_ptr() const { return target_; }

    std::size_t vertex_image(std::size_t v) const { return vertex_map_[v]; }
    std::size_t edge_image(std::size_t e) const { return edge_map_[e]; }
    const std::vector<std::size_t>& vertex_map() const { return vertex_map_; }
    const std::vector<std::size_t>& edge_map() const { return edge_map_; }

private:
    std::shared_ptr<const Digraph> source_, target_;
    std::vector<std::size_t> vertex_map_, edge_map_;
};

// outer after inner; inner's target must equal outer's source.
DigraphMorphism compose(const DigraphMorphism& outer, const DigraphMorphism& inner);

// Action of a finite abelian group on a digraph, given by permutation
// tables for the canonical generators e_i of the group. The
// constructor verifies that each table is an incidence-preserving
// permutation, that the generator actions commute pairwise, and that
// the i-th generator has order dividing n_i, which together make the
// generated map a genuine action with the identity acting trivially.
class GroupAction {
public:
    GroupAction(std::shared_ptr<const Digraph> d, FiniteAbelianGroup group,
                std::vector<std::vector<std::size_t>> vertex_gen,
                std::vector<std::vector<std::size_t>> edge_gen);

    const Digraph& digraph() const { return *digraph_; }
    const std::shared_ptr<const Digraph>& digraph_ptr() const { return digraph_; }
    const FiniteAbelianGroup& group() const { return group_; }

    std::size_t apply_vertex(const FiniteAbelianGroup::Element& g, std::size_t v) const;
    std::size_t apply_edge(const FiniteAbelianGroup::Element& g, std::size_t e) const;

    // True when no nonidentity element fixes any vertex.
    bool vertex_free() const;

private:
    std::shared_ptr<const Digraph> digraph_;
    FiniteAbelianGroup group_;
    std::vector<std::vector<std::size_t>> vertex_gen_, edge_gen_;
};

// Digraph with vertices v0..v(n-1) realizing a nonnegative square
// matrix as its adjacency, A(i, j) edges from v_j to v_i named
// e<from>_<to>_<copy>.
Digraph digraph_from_adjacency(const IntMatrix& a);

bool is_strongly_connected(const Digraph& d);

// Number of closed edge paths of length m, the starting edge
// distinguished. Enumerated explicitly for m <= 3; trace of the m-th
// adjacency power beyond that.
mpz_class count_closed_paths(const Digraph& d, unsigned long m);

// True iff f is surjective on vertices and restricts to a bijection on
// each out-star and each in-star.
bool check_cover(const DigraphMorphism& f);

// Orbit digraph together with the projection. Orbits are named after
// their least-index member, listed by that representative ascending.
// The projection is a cover whenever the action is vertex-free.
std::pair<Digraph, DigraphMorphism> quotient_digraph(const std::shared_ptr<const Digraph>& d,
                                                     const GroupAction& a);

// All deck transformations of the cover f, as automorphisms of the
// source, ordered by the image of vertex 0. Requires a strongly
// connected source; each candidate image of vertex 0 in its fiber
// extends in at most one way, by lifting edges outward from vertex 0.
// Fibers larger than 512 are rejected.
std::vector<DigraphMorphism> deck_group(const DigraphMorphism& f);

// True iff the deck transformations act transitively on every fiber.
bool is_galois(const DigraphMorphism& f);

}  // namespace stickelgraph
