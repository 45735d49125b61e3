#include "evolalg/frucht.hpp"

#include <algorithm>
#include <set>

#include "evolalg/monomial.hpp"

namespace evolalg {

SimpleGraph asymmetric_base_graph() {
    return SimpleGraph::make(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {3, 5}});
}

namespace {

SimpleGraph build_gadget_graph(const FiniteGroup& g, const std::vector<int>& gens, unsigned t) {
    const ColoredDigraph cayley = cayley_digraph(g, gens);
    std::vector<std::pair<int, int>> edges;
    int next = cayley.n;
    auto add_tail = [&](int at, unsigned len) {
        int cur = at;
        for (unsigned l = 0; l < len; ++l) {
            edges.emplace_back(cur, next);
            cur = next++;
        }
    };
    for (const auto& arc : cayley.arcs) {
        const int a = next++;
        const int b = next++;
        edges.emplace_back(arc.from, a);
        edges.emplace_back(a, b);
        edges.emplace_back(b, arc.to);
        add_tail(a, 2 * arc.color + 1 + t);
        add_tail(b, 2 * arc.color + 2 + t);
    }
    for (const auto& e : cayley.undirected) {
        const int c = next++;
        edges.emplace_back(e.from, c);
        edges.emplace_back(c, e.to);
        add_tail(c, 2 * e.color + 1 + t);
    }
    return SimpleGraph::make(next, std::move(edges));
}

bool graph_realizes(const SimpleGraph& h, const FiniteGroup& g) {
    const PermGroup aut = graph_automorphisms(h);
    if (aut.order != static_cast<std::uint64_t>(g.order())) return false;
    const FiniteGroup reconstructed =
        FiniteGroup::from_permutations(h.vertex_count(), aut.generators);
    return group_isomorphic(reconstructed, g);
}

} // namespace

SimpleGraph realize_graph(const FiniteGroup& g, unsigned variant) {
    if (g.order() == 1) {
        SimpleGraph h = asymmetric_base_graph();
        if (!graph_realizes(h, g))
            throw RealizationError("RealizationFailed: stored asymmetric graph rejected");
        return h;
    }
    if (g.order() == 2) {
        // Short tails collide with Cayley structure at this size; the path
        // P2 already has automorphism group Z2.
        SimpleGraph h = SimpleGraph::make(2, {{0, 1}});
        if (!graph_realizes(h, g))
            throw RealizationError("RealizationFailed: P2 fast path rejected");
        return h;
    }
    const std::vector<int> gens = minimal_generators(g);
    for (const unsigned t : {variant, variant + 3}) {
        SimpleGraph h = build_gadget_graph(g, gens, t);
        if (graph_realizes(h, g)) return h;
    }
    throw RealizationError("RealizationFailed: gadget graph verification failed at variant " +
                           std::to_string(variant) + " and " + std::to_string(variant + 3));
}

EvolutionAlgebra realize_algebra(const FiniteGroup& g, const Field& f, unsigned variant) {
    return build_algebra(realize_graph(g, variant), f);
}

VerificationReport verify_realization(const FiniteGroup& g, const EvolutionAlgebra& x) {
    if (!x.is_regular())
        throw NotRegularError("NotRegular: verification requires a regular algebra");
    const AlgebraAutomorphisms aut = algebra_automorphisms(x);

    std::vector<Perm> sigmas;
    sigmas.reserve(aut.generators.size());
    for (const MonomialMap& m : aut.generators) sigmas.push_back(m.perm);
    const FiniteGroup reconstructed = FiniteGroup::from_permutations(x.dim(), sigmas);

    VerificationReport report;
    report.aut_order = aut.order;
    report.sigma_group_order = aut.sigma_group.order;
    report.isomorphic = group_isomorphic(reconstructed, g);
    report.all_scales_one = aut.all_scales_one;
    std::set<std::string> scales;
    for (const MonomialMap& m : aut.elements)
        for (const Scalar& s : m.scales) scales.insert(s.str());
    report.scales_observed.assign(scales.begin(), scales.end());
    return report;
}

} // namespace evolalg
