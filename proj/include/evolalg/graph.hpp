#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "evolalg/perm.hpp"

namespace evolalg {

/// Finite simple graph on vertices 0..n-1 with a sorted, loop-free edge set.
class SimpleGraph {
public:
    /// Normalizes each pair to u < v, sorts, and validates.
    static SimpleGraph make(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    std::vector<int> degrees() const;
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    bool operator==(const SimpleGraph& rhs) const {
        return n_ == rhs.n_ && edges_ == rhs.edges_;
    }

    /// "graph v1" text format.
    void write(std::ostream& out) const;
    static SimpleGraph read(std::istream& in);

private:
    SimpleGraph() = default;
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Injective vertex map G1 -> G2, as the image list of 0..n1-1.
using VertexMap = std::vector<int>;

/// True iff f is injective and carries every edge of g1 onto an edge of g2.
bool is_morphism(const VertexMap& f, const SimpleGraph& g1, const SimpleGraph& g2);

/// Permutation group given by generators; order is the size of the
/// generated group, computed by closure on construction.
struct PermGroup {
    int degree = 0;
    std::vector<Perm> generators; // identity excluded, sorted lexicographically
    std::uint64_t order = 1;

    static PermGroup from_generators(int degree, std::vector<Perm> gens,
                                     std::uint64_t cap = 1000000);

    /// All group elements, sorted; fails with CapError past the cap.
    std::vector<Perm> elements(std::uint64_t cap = 1000000) const;

    /// "permgroup v1" text format.
    void write(std::ostream& out) const;
    static PermGroup read(std::istream& in);
};

/// Full automorphism group via equitable-partition refinement with
/// individualization backtracking. Deterministic generator output.
PermGroup graph_automorphisms(const SimpleGraph& g);

/// Every automorphism, sorted lexicographically (same engine).
std::vector<Perm> graph_automorphism_elements(const SimpleGraph& g,
                                              std::uint64_t cap = 1000000);

/// Oracle path: filters all n! vertex permutations.
std::vector<Perm> brute_force_graph_automorphisms(const SimpleGraph& g);

/// Lexicographically least isomorphism, if any.
std::optional<VertexMap> graph_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2);

} // namespace evolalg
