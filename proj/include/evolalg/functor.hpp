#pragma once

#include "evolalg/monomial.hpp"

namespace evolalg {

/// Basis position of vertex v in the image algebra of g.
int vertex_position(const SimpleGraph& g, int v);
/// Basis position of edge {u, v}: after all vertices, in sorted edge order.
int edge_position(const SimpleGraph& g, int u, int v);

/// The graph-to-algebra construction: one idempotent basis element per
/// vertex and, per edge e = {v, w}, the law b_e^2 = b_e + b_v + b_w.
/// Labels are v{i} and e{u}_{v}; the structure matrix is 0/1-valued and
/// upper triangular with unit diagonal in this basis order.
EvolutionAlgebra build_algebra(const SimpleGraph& g, const Field& f);

/// Matrix of the induced algebra morphism in the image bases:
/// b_v -> b_{f(v)} and b_e -> b_{f(e)}. Fails with NotAMorphism.
Matrix map_morphism(const VertexMap& f, const SimpleGraph& g1, const SimpleGraph& g2,
                    const Field& field);

/// Structure matrix of x in the rebased natural basis
/// b'_i = scales[i] * b_{perm[i]}; constants transform as
/// w'_ki = (scales[i]^2 / scales[k]) * w_{perm(k), perm(i)}.
EvolutionAlgebra rebase(const EvolutionAlgebra& x, const MonomialMap& m);

struct RecoveredGraph {
    SimpleGraph graph;
    /// Rebasing x by this map yields build_algebra(graph, x.field()) exactly.
    MonomialMap normalizer;
};

/// Inverse direction of the construction: succeeds iff x is monomially
/// equivalent to the image of some graph, which it returns together with
/// the normalizing monomial map. Fails with NotRegular / NotInImage.
RecoveredGraph recover_graph(const EvolutionAlgebra& x);

} // namespace evolalg
