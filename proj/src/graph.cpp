#include "evolalg/graph.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <ostream>
#include <set>

#include "evolalg/io.hpp"

namespace evolalg {

SimpleGraph SimpleGraph::make(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw ValidationError("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u == v)
            throw ValidationError("LoopEdge: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw ValidationError("VertexOutOfRange: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") with n=" + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw ValidationError("DuplicateEdge: (" + std::to_string(edges[i].first) + "," +
                                  std::to_string(edges[i].second) + ")");
    SimpleGraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<int> SimpleGraph::degrees() const {
    std::vector<int> d(n_, 0);
    for (auto [u, v] : edges_) {
        ++d[u];
        ++d[v];
    }
    return d;
}

void SimpleGraph::write(std::ostream& out) const {
    out << "graph v1\n" << n_ << ' ' << edges_.size() << "\n";
    for (auto [u, v] : edges_) out << u << ' ' << v << "\n";
}

SimpleGraph SimpleGraph::read(std::istream& in) {
    TokenReader r(in);
    r.expect("graph");
    r.expect("v1");
    const int n = static_cast<int>(r.next_int("vertex count", 0, 1000000));
    const long long m = r.next_int("edge count", 0, 10000000);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        const int u = static_cast<int>(r.next_int("edge endpoint", 0, 1000000));
        const int v = static_cast<int>(r.next_int("edge endpoint", 0, 1000000));
        edges.emplace_back(u, v);
    }
    r.expect_end();
    return make(n, std::move(edges));
}

bool is_morphism(const VertexMap& f, const SimpleGraph& g1, const SimpleGraph& g2) {
    if (static_cast<int>(f.size()) != g1.vertex_count())
        throw ValidationError("SizeMismatch: vertex map length differs from domain order");
    std::vector<char> used(g2.vertex_count(), 0);
    for (int img : f) {
        if (img < 0 || img >= g2.vertex_count())
            throw ValidationError("VertexOutOfRange: image " + std::to_string(img));
        if (used[img]) return false;
        used[img] = 1;
    }
    for (auto [u, v] : g1.edges())
        if (!g2.has_edge(f[u], f[v])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Permutation groups
// ---------------------------------------------------------------------------

namespace {

std::set<Perm> closure(int degree, const std::vector<Perm>& gens, std::uint64_t cap,
                       const char* cap_msg) {
    std::set<Perm> elems;
    std::vector<Perm> queue;
    elems.insert(identity_perm(degree));
    queue.push_back(identity_perm(degree));
    while (!queue.empty()) {
        Perm x = std::move(queue.back());
        queue.pop_back();
        for (const Perm& g : gens) {
            Perm y = compose_perm(x, g);
            if (elems.insert(y).second) {
                if (elems.size() > cap) throw CapError(cap_msg);
                queue.push_back(std::move(y));
            }
        }
    }
    return elems;
}

} // namespace

PermGroup PermGroup::from_generators(int degree, std::vector<Perm> gens, std::uint64_t cap) {
    for (const Perm& g : gens) {
        if (static_cast<int>(g.size()) != degree || !is_permutation(g))
            throw ValidationError("NotAPermutation: bad generator");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::erase_if(gens, [](const Perm& g) { return is_identity_perm(g); });

    // Greedy reduction: keep only generators that enlarge the group so far.
    std::vector<Perm> reduced;
    std::set<Perm> have{identity_perm(degree)};
    for (const Perm& g : gens) {
        if (have.count(g)) continue;
        reduced.push_back(g);
        have = closure(degree, reduced, cap, "GroupTooLarge: closure exceeded cap");
    }
    PermGroup pg;
    pg.degree = degree;
    pg.generators = std::move(reduced);
    pg.order = have.size();
    return pg;
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
    auto elems = closure(degree, generators, cap, "GroupTooLarge: closure exceeded cap");
    return {elems.begin(), elems.end()};
}

void PermGroup::write(std::ostream& out) const {
    out << "permgroup v1\n" << degree << ' ' << order << "\n";
    for (const Perm& g : generators) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (i) out << ' ';
            out << g[i];
        }
        out << "\n";
    }
}

PermGroup PermGroup::read(std::istream& in) {
    TokenReader r(in);
    r.expect("permgroup");
    r.expect("v1");
    const int degree = static_cast<int>(r.next_int("degree", 0, 1000000));
    const std::uint64_t order = r.next_int("order", 1, LLONG_MAX);
    std::vector<Perm> gens;
    if (degree > 0) {
        std::string tok;
        while (in >> tok) {
            Perm g(degree);
            std::size_t pos = 0;
            try {
                g[0] = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != tok.size() || g[0] < 0 || g[0] >= degree)
                throw ParseError("bad generator image: " + tok);
            for (int i = 1; i < degree; ++i)
                g[i] = static_cast<int>(r.next_int("generator image", 0, degree - 1));
            gens.push_back(std::move(g));
        }
    }
    PermGroup pg = from_generators(degree, std::move(gens));
    if (pg.order != order)
        throw ParseError("permgroup order field " + std::to_string(order) +
                         " does not match closure order " + std::to_string(pg.order));
    return pg;
}

// ---------------------------------------------------------------------------
// Automorphisms: equitable refinement + individualization backtracking
// ---------------------------------------------------------------------------

namespace {

using Words = std::vector<std::uint64_t>;
using Cells = std::vector<std::vector<int>>;

int popcount_and(const Words& a, const Words& b) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

class AutomorphismSearch {
public:
    AutomorphismSearch(const SimpleGraph& g, std::uint64_t cap)
        : n_(g.vertex_count()), words_((n_ + 63) / 64), cap_(cap) {
        adj_bits_.assign(n_, Words(words_, 0));
        for (auto [u, v] : g.edges()) {
            adj_bits_[u][v >> 6] |= 1ull << (v & 63);
            adj_bits_[v][u >> 6] |= 1ull << (u & 63);
        }
    }

    std::vector<Perm> run() {
        if (n_ == 0) return {Perm{}};
        Cells start(1);
        start[0].resize(n_);
        for (int i = 0; i < n_; ++i) start[0][i] = i;
        dfs(std::move(start), 0, true);
        std::sort(found_.begin(), found_.end());
        return found_;
    }

private:
    // Coarsest equitable refinement; subcells ordered by ascending count so
    // the cell sequence is invariant under relabeling.
    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t t = 0; t < cells.size() && !changed; ++t) {
                Words target(words_, 0);
                for (int v : cells[t]) target[v >> 6] |= 1ull << (v & 63);
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (cells[c].size() <= 1) continue;
                    std::vector<std::pair<int, int>> keyed;
                    keyed.reserve(cells[c].size());
                    bool uniform = true;
                    int first_cnt = -1;
                    for (int v : cells[c]) {
                        const int cnt = popcount_and(adj_bits_[v], target);
                        if (first_cnt < 0)
                            first_cnt = cnt;
                        else if (cnt != first_cnt)
                            uniform = false;
                        keyed.emplace_back(cnt, v);
                    }
                    if (uniform) continue;
                    std::stable_sort(keyed.begin(), keyed.end(),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
                    Cells repl;
                    int prev = keyed.front().first - 1;
                    for (const auto& [cnt, v] : keyed) {
                        if (cnt != prev) {
                            repl.emplace_back();
                            prev = cnt;
                        }
                        repl.back().push_back(v);
                    }
                    cells.erase(cells.begin() + c);
                    cells.insert(cells.begin() + c, std::make_move_iterator(repl.begin()),
                                 std::make_move_iterator(repl.end()));
                    changed = true;
                    break;
                }
            }
        }
    }

    std::uint64_t partition_invariant(const Cells& cells) const {
        std::uint64_t h = 1469598103934665603ull;
        for (const auto& c : cells) {
            h ^= c.size();
            h *= 1099511628211ull;
        }
        return h;
    }

    void dfs(Cells cells, int depth, bool base_path) {
        refine(cells);
        const std::uint64_t inv = partition_invariant(cells);
        if (base_path && depth == static_cast<int>(base_inv_.size()))
            base_inv_.push_back(inv);
        else if (depth >= static_cast<int>(base_inv_.size()) || inv != base_inv_[depth])
            return;

        int target = -1;
        std::size_t best = SIZE_MAX;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].size() > 1 && cells[i].size() < best) {
                best = cells[i].size();
                target = static_cast<int>(i);
            }
        }
        if (target < 0) {
            leaf(cells);
            return;
        }
        bool first = true;
        for (int v : cells[target]) {
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    rest.reserve(cells[i].size() - 1);
                    for (int w : cells[i])
                        if (w != v) rest.push_back(w);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(cells[i]);
                }
            }
            dfs(std::move(child), depth + 1, base_path && first);
            first = false;
        }
    }

    Words certificate(const Perm& labeling) const {
        const std::size_t bits = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
        Words cert((bits + 63) / 64, 0);
        std::size_t k = 0;
        for (int i = 0; i < n_; ++i) {
            const Words& row = adj_bits_[labeling[i]];
            for (int j = i + 1; j < n_; ++j, ++k) {
                const int w = labeling[j];
                if (row[w >> 6] & (1ull << (w & 63))) cert[k >> 6] |= 1ull << (k & 63);
            }
        }
        return cert;
    }

    void leaf(const Cells& cells) {
        Perm labeling(n_);
        for (std::size_t k = 0; k < cells.size(); ++k) labeling[k] = cells[k][0];
        Words cert = certificate(labeling);
        if (!have_base_) {
            have_base_ = true;
            base_labeling_ = labeling;
            base_cert_ = std::move(cert);
            found_.push_back(identity_perm(n_));
            return;
        }
        if (cert != base_cert_) return;
        Perm p(n_);
        for (int k = 0; k < n_; ++k) p[base_labeling_[k]] = labeling[k];
        found_.push_back(std::move(p));
        if (found_.size() > cap_)
            throw CapError("GroupTooLarge: more than " + std::to_string(cap_) + " automorphisms");
    }

    int n_;
    std::size_t words_;
    std::uint64_t cap_;
    std::vector<Words> adj_bits_;
    std::vector<std::uint64_t> base_inv_;
    bool have_base_ = false;
    Perm base_labeling_;
    Words base_cert_;
    std::vector<Perm> found_;
};

} // namespace

std::vector<Perm> graph_automorphism_elements(const SimpleGraph& g, std::uint64_t cap) {
    return AutomorphismSearch(g, cap).run();
}

PermGroup graph_automorphisms(const SimpleGraph& g) {
    return PermGroup::from_generators(g.vertex_count(), graph_automorphism_elements(g));
}

std::vector<Perm> brute_force_graph_automorphisms(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n > 10) throw CapError("GroupTooLarge: brute force limited to 10 vertices");
    if (n == 0) return {Perm{}};
    std::vector<Perm> found;
    Perm p = identity_perm(n);
    do {
        bool ok = true;
        for (auto [u, v] : g.edges()) {
            if (!g.has_edge(p[u], p[v])) {
                ok = false;
                break;
            }
        }
        if (ok) found.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return found;
}

std::optional<VertexMap> graph_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2) {
    const int n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    std::vector<int> d1 = g1.degrees(), d2 = g2.degrees();
    {
        std::vector<int> s1 = d1, s2 = d2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }
    VertexMap images(n, -1);
    std::vector<char> used(n, 0);
    auto dfs = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || d1[v] != d2[w]) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u) {
                if (g1.has_edge(u, v) != g2.has_edge(images[u], w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            images[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            images[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (dfs(dfs, 0)) return images;
    return std::nullopt;
}

} // namespace evolalg
