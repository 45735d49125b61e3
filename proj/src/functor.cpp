#include "evolalg/functor.hpp"

#include <algorithm>

namespace evolalg {

int vertex_position(const SimpleGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw ValidationError("VertexOutOfRange: " + std::to_string(v));
    return v;
}

int edge_position(const SimpleGraph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    const auto& es = g.edges();
    const auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(u, v));
    if (it == es.end() || *it != std::make_pair(u, v))
        throw ValidationError("no such edge: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return g.vertex_count() + static_cast<int>(it - es.begin());
}

EvolutionAlgebra build_algebra(const SimpleGraph& g, const Field& f) {
    const int nv = g.vertex_count();
    const int n = nv + g.edge_count();
    Matrix m(f, n, n);
    std::vector<std::string> labels;
    labels.reserve(n);
    const Scalar one = Scalar::one(f);
    for (int v = 0; v < nv; ++v) {
        m.set(v, v, one);
        labels.push_back("v" + std::to_string(v));
    }
    for (int t = 0; t < g.edge_count(); ++t) {
        const auto [u, v] = g.edges()[t];
        const int col = nv + t;
        m.set(col, col, one);
        m.set(u, col, one);
        m.set(v, col, one);
        labels.push_back("e" + std::to_string(u) + "_" + std::to_string(v));
    }
    return EvolutionAlgebra(std::move(m), std::move(labels));
}

Matrix map_morphism(const VertexMap& f, const SimpleGraph& g1, const SimpleGraph& g2,
                    const Field& field) {
    if (!is_morphism(f, g1, g2))
        throw ValidationError("NotAMorphism: map does not carry edges to edges injectively");
    const int dim1 = g1.vertex_count() + g1.edge_count();
    const int dim2 = g2.vertex_count() + g2.edge_count();
    Matrix m(field, dim2, dim1);
    const Scalar one = Scalar::one(field);
    for (int v = 0; v < g1.vertex_count(); ++v) m.set(f[v], v, one);
    for (int t = 0; t < g1.edge_count(); ++t) {
        const auto [u, v] = g1.edges()[t];
        m.set(edge_position(g2, f[u], f[v]), g1.vertex_count() + t, one);
    }
    return m;
}

EvolutionAlgebra rebase(const EvolutionAlgebra& x, const MonomialMap& m) {
    const int n = x.dim();
    if (m.size() != n)
        throw ValidationError("SizeMismatch: monomial map does not fit the algebra");
    if (!is_permutation(m.perm))
        throw ValidationError("NotAPermutation: bad image list");
    for (const Scalar& s : m.scales) {
        if (s.field() != x.field())
            throw ValidationError("FieldMismatch: scale field differs from algebra field");
        if (s.is_zero()) throw ValidationError("ZeroScale: monomial scales must be nonzero");
    }
    Matrix out(x.field(), n, n);
    for (int i = 0; i < n; ++i) {
        const Scalar si2 = m.scales[i].squared();
        for (int k = 0; k < n; ++k) {
            const Scalar& w = x.structure().at(m.perm[k], m.perm[i]);
            if (w.is_zero()) continue;
            out.set(k, i, si2 / m.scales[k] * w);
        }
    }
    return EvolutionAlgebra(std::move(out));
}

RecoveredGraph recover_graph(const EvolutionAlgebra& x) {
    if (!x.is_regular())
        throw NotRegularError("NotRegular: graph recovery requires a regular algebra");
    const int n = x.dim();
    const Matrix& m = x.structure();

    std::vector<int> vertex_cols, edge_cols;
    std::vector<std::vector<int>> support(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (!m.at(j, i).is_zero()) support[i].push_back(j);
        switch (support[i].size()) {
        case 1:
            if (support[i][0] != i)
                throw NotInImageError(
                    "NotInImage: off-diagonal/diagonal mismatch (column " + std::to_string(i) +
                    " has its single nonzero off the diagonal)");
            vertex_cols.push_back(i);
            break;
        case 3:
            if (m.at(i, i).is_zero())
                throw NotInImageError("NotInImage: off-diagonal/diagonal mismatch (column " +
                                      std::to_string(i) + " has a zero diagonal entry)");
            edge_cols.push_back(i);
            break;
        default:
            throw NotInImageError("NotInImage: bad nonzero count (column " + std::to_string(i) +
                                  " has " + std::to_string(support[i].size()) + " nonzeros)");
        }
    }

    // position_of[c] = recovered vertex id of vertex column c.
    std::vector<int> position_of(n, -1);
    for (std::size_t q = 0; q < vertex_cols.size(); ++q)
        position_of[vertex_cols[q]] = static_cast<int>(q);

    struct EdgeRecord {
        std::pair<int, int> verts; // recovered ids, normalized
        int column;
    };
    std::vector<EdgeRecord> records;
    for (int c : edge_cols) {
        const Scalar& d = m.at(c, c);
        const Scalar d2 = d.squared();
        int ends[2];
        int at = 0;
        for (int r : support[c]) {
            if (r == c) continue;
            if (position_of[r] < 0)
                throw NotInImageError(
                    "NotInImage: off-diagonal rows not vertex columns (column " +
                    std::to_string(c) + ", row " + std::to_string(r) + ")");
            const Scalar vertex_scale = m.at(r, r);
            if (m.at(r, c) * vertex_scale != d2)
                throw NotInImageError(
                    "NotInImage: off-diagonal/diagonal mismatch (column " + std::to_string(c) +
                    ", row " + std::to_string(r) + " is not d^2 after vertex normalization)");
            ends[at++] = position_of[r];
        }
        std::pair<int, int> e{ends[0], ends[1]};
        if (e.first > e.second) std::swap(e.first, e.second);
        records.push_back({e, c});
    }
    std::sort(records.begin(), records.end(),
              [](const EdgeRecord& a, const EdgeRecord& b) { return a.verts < b.verts; });
    for (std::size_t t = 1; t < records.size(); ++t)
        if (records[t].verts == records[t - 1].verts)
            throw NotInImageError("NotInImage: duplicate edge (columns " +
                                  std::to_string(records[t - 1].column) + " and " +
                                  std::to_string(records[t].column) + ")");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(records.size());
    for (const auto& r : records) edges.push_back(r.verts);
    SimpleGraph graph = SimpleGraph::make(static_cast<int>(vertex_cols.size()), std::move(edges));

    Perm perm(n);
    std::vector<Scalar> scales;
    scales.reserve(n);
    for (std::size_t q = 0; q < vertex_cols.size(); ++q) {
        perm[q] = vertex_cols[q];
        scales.push_back(m.at(vertex_cols[q], vertex_cols[q]).inverse());
    }
    for (std::size_t t = 0; t < records.size(); ++t) {
        const int pos = graph.vertex_count() + static_cast<int>(t);
        perm[pos] = records[t].column;
        scales.push_back(m.at(records[t].column, records[t].column).inverse());
    }
    return RecoveredGraph{std::move(graph), MonomialMap::make(std::move(perm), std::move(scales))};
}

} // namespace evolalg
