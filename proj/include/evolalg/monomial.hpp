#pragma once

#include <iosfwd>
#include <optional>

#include "evolalg/evolution.hpp"
#include "evolalg/graph.hpp"

namespace evolalg {

/// Scaled basis permutation g(b_i) = scales[i] * b_{perm[i]} — the shape of
/// every isomorphism between regular evolution algebras in natural bases.
struct MonomialMap {
    Perm perm;
    std::vector<Scalar> scales;

    static MonomialMap identity(int n, const Field& f);
    /// Validates: perm bijective (NotAPermutation), scales nonzero (ZeroScale).
    static MonomialMap make(Perm perm, std::vector<Scalar> scales);

    int size() const { return static_cast<int>(perm.size()); }
    bool is_identity() const;
    bool scales_all_one() const;

    /// this ∘ inner: apply inner first.
    MonomialMap after(const MonomialMap& inner) const;
    MonomialMap inverse() const;

    bool operator==(const MonomialMap& rhs) const = default;
    bool operator<(const MonomialMap& rhs) const;

    /// "monomial v1" text format; scalars are read in the given field.
    void write(std::ostream& out) const;
    static MonomialMap read(std::istream& in, const Field& f);
};

/// Direct check of the defining system:
/// scales[i]^2 * w(perm(j), perm(i)) = scales[j] * w(j, i) for all i, j.
bool is_automorphism(const EvolutionAlgebra& x, const MonomialMap& m);

struct AlgebraAutomorphisms {
    std::vector<MonomialMap> elements;   // every automorphism, sorted
    std::vector<MonomialMap> generators; // greedy-reduced generating set
    PermGroup sigma_group;               // group of the permutation parts
    std::uint64_t order = 0;             // = elements.size()
    bool all_scales_one = true;
};

/// All automorphisms of a regular algebra by constrained backtracking over
/// the basis permutation with exact scale propagation. Refuses non-regular
/// input (the group may be infinite there).
AlgebraAutomorphisms algebra_automorphisms(const EvolutionAlgebra& x,
                                           std::uint64_t cap = 1000000);

/// Oracle path: every permutation of the basis, exact scale solving per
/// permutation. Limited to small dimensions.
AlgebraAutomorphisms algebra_automorphisms_brute_force(const EvolutionAlgebra& x,
                                                       std::uint64_t cap = 1000000);

/// A monomial map m with rebase(x1, m) == x2's structure matrix, if any;
/// deterministic (lexicographically least permutation).
std::optional<MonomialMap> algebra_isomorphism(const EvolutionAlgebra& x1,
                                               const EvolutionAlgebra& x2);

} // namespace evolalg
