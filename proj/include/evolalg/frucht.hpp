#pragma once

#include <string>

#include "evolalg/functor.hpp"
#include "evolalg/groups.hpp"

namespace evolalg {

/// Smallest connected graph with trivial automorphism group; also shipped
/// as data/asymmetric6.graph.
SimpleGraph asymmetric_base_graph();

/// Connected simple graph whose full automorphism group is verified to be
/// isomorphic to g. Cayley graph of a greedy generating set with arc and
/// involution gadgets; color i tails have lengths 2i+1+variant and
/// 2i+2+variant (the unequal pair encodes direction). On a failed
/// verification the construction retries once with variant+3 before
/// raising RealizationFailed. variant parametrizes the infinite family.
SimpleGraph realize_graph(const FiniteGroup& g, unsigned variant = 0);

/// build_algebra over the realized graph; regular by construction.
EvolutionAlgebra realize_algebra(const FiniteGroup& g, const Field& f, unsigned variant = 0);

struct VerificationReport {
    std::uint64_t aut_order = 0;         // monomial automorphisms of x
    std::uint64_t sigma_group_order = 0; // group of permutation parts
    bool isomorphic = false;             // reconstructed group vs g
    bool all_scales_one = false;
    std::vector<std::string> scales_observed; // distinct, sorted
};

/// Recomputes Aut(x) with the monomial engine, reconstructs the abstract
/// group from the permutation parts, and tests isomorphism against g.
VerificationReport verify_realization(const FiniteGroup& g, const EvolutionAlgebra& x);

} // namespace evolalg
