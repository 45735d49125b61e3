#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "evolalg/perm.hpp"

namespace evolalg {

/// Finite group as a multiplication table with element 0 the identity.
/// Construction validates the Latin-square and identity/inverse invariants;
/// associativity is checked exhaustively up to order 64 and by seeded
/// random sampling above.
class FiniteGroup {
public:
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

    /// Closure of permutation generators; element numbering is breadth-first
    /// discovery order with generators applied in the given order.
    static FiniteGroup from_permutations(int degree, const std::vector<Perm>& gens,
                                         std::uint64_t cap = 10000);

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inverse(int a) const { return inv_[a]; }
    int element_order(int a) const;
    std::vector<int> element_order_multiset() const; // sorted

    bool operator==(const FiniteGroup& rhs) const {
        return n_ == rhs.n_ && table_ == rhs.table_;
    }

    /// "group v1" text format; reads both the table and perm forms,
    /// always writes the table form.
    void write(std::ostream& out) const;
    static FiniteGroup read(std::istream& in);

private:
    FiniteGroup(int n, std::vector<int> table);
    void validate() const;

    int n_;
    std::vector<int> table_; // row-major
    std::vector<int> inv_;
};

/// Inclusion-greedy generating set: scan elements ascending, keep the ones
/// that enlarge the generated subgroup.
std::vector<int> minimal_generators(const FiniteGroup& g);

bool is_generating_set(const FiniteGroup& g, const std::vector<int>& gens);

/// Abstract isomorphism test: order and element-order-multiset filters,
/// then backtracking over images of a minimal generating set.
bool group_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2, std::uint64_t cap = 10000);

/// Cayley data for the gadget construction: one vertex per element, arcs
/// g -> g*s per non-involution generator, one undirected edge per
/// involution pair.
struct ColoredDigraph {
    struct Arc {
        int from, to, color;
        bool operator==(const Arc&) const = default;
    };
    int n = 0;
    int colors = 0;
    std::vector<Arc> arcs;       // directed
    std::vector<Arc> undirected; // from < to
};

ColoredDigraph cayley_digraph(const FiniteGroup& g, const std::vector<int>& gens);

} // namespace evolalg
