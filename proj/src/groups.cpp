#include "evolalg/groups.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <set>

#include "evolalg/io.hpp"

namespace evolalg {

FiniteGroup::FiniteGroup(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {
    validate();
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] < 0)
            throw ValidationError("group table has no inverse for element " + std::to_string(a));
    }
}

void FiniteGroup::validate() const {
    if (n_ < 1) throw ValidationError("group order must be positive");
    if (table_.size() != static_cast<std::size_t>(n_) * n_)
        throw ValidationError("group table size mismatch");
    for (int v : table_)
        if (v < 0 || v >= n_)
            throw ValidationError("group table entry out of range: " + std::to_string(v));
    std::vector<char> seen(n_);
    for (int a = 0; a < n_; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n_; ++b) {
            if (seen[mul(a, b)]++)
                throw ValidationError("group table row " + std::to_string(a) +
                                      " is not a permutation");
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n_; ++b) {
            if (seen[mul(b, a)]++)
                throw ValidationError("group table column " + std::to_string(a) +
                                      " is not a permutation");
        }
        if (mul(0, a) != a || mul(a, 0) != a)
            throw ValidationError("element 0 is not the identity");
    }
    if (n_ <= 64) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw ValidationError("group table is not associative");
    } else {
        std::mt19937_64 rng(0x9e3779b9u);
        std::uniform_int_distribution<int> pick(0, n_ - 1);
        for (int trial = 0; trial < 100000; ++trial) {
            const int a = pick(rng), b = pick(rng), c = pick(rng);
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                throw ValidationError("group table is not associative");
        }
    }
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("group table is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return FiniteGroup(n, std::move(flat));
}

FiniteGroup FiniteGroup::from_permutations(int degree, const std::vector<Perm>& gens,
                                           std::uint64_t cap) {
    for (const Perm& g : gens)
        if (static_cast<int>(g.size()) != degree || !is_permutation(g))
            throw ValidationError("NotAPermutation: bad generator");

    std::vector<Perm> elems{identity_perm(degree)};
    std::map<Perm, int> index{{elems[0], 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        const Perm current = elems[head];
        for (const Perm& g : gens) {
            Perm next = compose_perm(current, g);
            if (index.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (elems.size() > cap)
                    throw CapError("ClosureTooLarge: permutation closure exceeded " +
                                   std::to_string(cap) + " elements");
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] = index.at(compose_perm(elems[a], elems[b]));
    return FiniteGroup(n, std::move(table));
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

std::vector<int> FiniteGroup::element_order_multiset() const {
    std::vector<int> orders;
    orders.reserve(n_);
    for (int a = 0; a < n_; ++a) orders.push_back(element_order(a));
    std::sort(orders.begin(), orders.end());
    return orders;
}

void FiniteGroup::write(std::ostream& out) const {
    out << "group v1\ntable " << n_ << "\n";
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (b) out << ' ';
            out << mul(a, b);
        }
        out << "\n";
    }
}

FiniteGroup FiniteGroup::read(std::istream& in) {
    TokenReader r(in);
    r.expect("group");
    r.expect("v1");
    const std::string form = r.next("group form");
    if (form == "table") {
        const int n = static_cast<int>(r.next_int("order", 1, 10000));
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                table[a][b] = static_cast<int>(r.next_int("table entry", 0, n - 1));
        r.expect_end();
        return from_table(table);
    }
    if (form == "perm") {
        const int degree = static_cast<int>(r.next_int("degree", 0, 100000));
        const int k = static_cast<int>(r.next_int("generator count", 0, 10000));
        std::vector<Perm> gens(k, Perm(degree));
        for (int g = 0; g < k; ++g)
            for (int i = 0; i < degree; ++i)
                gens[g][i] = static_cast<int>(r.next_int("generator image", 0, degree - 1));
        r.expect_end();
        return from_permutations(degree, gens);
    }
    throw ParseError("bad group form: '" + form + "'");
}

namespace {

std::set<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::set<int> sub{0};
    std::vector<int> queue{0};
    while (!queue.empty()) {
        const int x = queue.back();
        queue.pop_back();
        for (int s : gens) {
            const int y = g.mul(x, s);
            if (sub.insert(y).second) queue.push_back(y);
        }
    }
    return sub;
}

} // namespace

std::vector<int> minimal_generators(const FiniteGroup& g) {
    std::vector<int> gens;
    std::set<int> sub{0};
    for (int e = 1; e < g.order() && static_cast<int>(sub.size()) < g.order(); ++e) {
        if (sub.count(e)) continue;
        gens.push_back(e);
        sub = subgroup_closure(g, gens);
    }
    return gens;
}

bool is_generating_set(const FiniteGroup& g, const std::vector<int>& gens) {
    return static_cast<int>(subgroup_closure(g, gens).size()) == g.order();
}

bool group_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2, std::uint64_t cap) {
    if (static_cast<std::uint64_t>(g1.order()) > cap ||
        static_cast<std::uint64_t>(g2.order()) > cap)
        throw CapError("OrderTooLarge: isomorphism test capped at order " + std::to_string(cap));
    if (g1.order() != g2.order()) return false;
    if (g1.element_order_multiset() != g2.element_order_multiset()) return false;

    const int n = g1.order();
    const std::vector<int> gens = minimal_generators(g1);
    if (gens.empty()) return true; // both trivial

    // Candidate images must match element orders.
    std::vector<std::vector<int>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const int want = g1.element_order(gens[i]);
        for (int h = 0; h < n; ++h)
            if (g2.element_order(h) == want) candidates[i].push_back(h);
    }

    // Extends generator images to a full map along the closure of g1;
    // definition phi(x*s) := phi(x)*phi(s) is checked wherever it repeats,
    // which verifies the homomorphism property on all (element, generator)
    // pairs; bijectivity then makes it an isomorphism.
    auto extends = [&](const std::vector<int>& images) -> bool {
        std::vector<int> phi(n, -1);
        phi[0] = 0;
        std::vector<int> discovered{0};
        for (std::size_t head = 0; head < discovered.size(); ++head) {
            const int x = discovered[head];
            for (std::size_t s = 0; s < gens.size(); ++s) {
                const int y = g1.mul(x, gens[s]);
                const int img = g2.mul(phi[x], images[s]);
                if (phi[y] < 0) {
                    phi[y] = img;
                    discovered.push_back(y);
                } else if (phi[y] != img) {
                    return false;
                }
            }
        }
        if (static_cast<int>(discovered.size()) != n) return false;
        std::vector<char> hit(n, 0);
        for (int v : phi) {
            if (v < 0 || hit[v]) return false;
            hit[v] = 1;
        }
        for (int x = 0; x < n; ++x)
            for (std::size_t s = 0; s < gens.size(); ++s)
                if (phi[g1.mul(x, gens[s])] != g2.mul(phi[x], images[s])) return false;
        return true;
    };

    std::vector<int> images(gens.size(), -1);
    auto dfs = [&](auto&& self, std::size_t i) -> bool {
        if (i == gens.size()) return extends(images);
        for (int h : candidates[i]) {
            bool dup = false;
            for (std::size_t j = 0; j < i; ++j)
                if (images[j] == h) dup = true;
            if (dup) continue;
            images[i] = h;
            if (self(self, i + 1)) return true;
        }
        images[i] = -1;
        return false;
    };
    return dfs(dfs, 0);
}

ColoredDigraph cayley_digraph(const FiniteGroup& g, const std::vector<int>& gens) {
    std::set<int> seen;
    for (int s : gens) {
        if (s <= 0 || s >= g.order())
            throw ValidationError("generator index out of range: " + std::to_string(s));
        if (!seen.insert(s).second)
            throw ValidationError("duplicate generator: " + std::to_string(s));
    }
    if (!is_generating_set(g, gens))
        throw ValidationError("NotGenerating: set does not generate the group");

    ColoredDigraph d;
    d.n = g.order();
    d.colors = static_cast<int>(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const int s = gens[i];
        const int color = static_cast<int>(i);
        if (g.mul(s, s) == 0) {
            for (int x = 0; x < g.order(); ++x) {
                const int y = g.mul(x, s);
                if (x < y) d.undirected.push_back({x, y, color});
            }
        } else {
            for (int x = 0; x < g.order(); ++x) d.arcs.push_back({x, g.mul(x, s), color});
        }
    }
    return d;
}

} // namespace evolalg
