#include <doctest.h>

#include <random>
#include <sstream>

#include "../support/catalog.hpp"
#include "evolalg/functor.hpp"

using namespace evolalg;
using namespace evolalg::testsupport;

namespace {

EvolutionAlgebra diag_algebra(const Field& f, const std::vector<int>& entries) {
    const int n = static_cast<int>(entries.size());
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar::of_int(f, entries[i]));
    return EvolutionAlgebra(std::move(m));
}

} // namespace

TEST_CASE("monomial map algebra") {
    const Field q = Field::rationals();
    const MonomialMap id = MonomialMap::identity(3, q);
    CHECK(id.is_identity());

    CHECK_THROWS_AS(MonomialMap::make({0, 0}, {Scalar::one(q), Scalar::one(q)}), ValidationError);
    CHECK_THROWS_AS(MonomialMap::make({0, 1}, {Scalar::one(q), Scalar::zero(q)}), ValidationError);

    const MonomialMap a =
        MonomialMap::make({1, 2, 0}, {Scalar::of_int(q, 2), Scalar::of_int(q, 3), Scalar::of_int(q, 5)});
    CHECK(a.after(a.inverse()).is_identity());
    CHECK(a.inverse().after(a).is_identity());

    // Composition law: scales compose as inner, then outer at the permuted slot.
    const MonomialMap b =
        MonomialMap::make({2, 0, 1}, {Scalar::of_int(q, 7), Scalar::of_int(q, 1), Scalar::of_int(q, 2)});
    const MonomialMap ab = a.after(b);
    for (int i = 0; i < 3; ++i) {
        CHECK(ab.perm[i] == a.perm[b.perm[i]]);
        CHECK(ab.scales[i] == b.scales[i] * a.scales[b.perm[i]]);
    }

    std::ostringstream out;
    a.write(out);
    CHECK(out.str() == "monomial v1\n3\n1 2 0\n2 3 5\n");
    std::istringstream in(out.str());
    CHECK(MonomialMap::read(in, q) == a);
}

TEST_CASE("is_automorphism checks the defining system") {
    const Field q = Field::rationals();
    const EvolutionAlgebra p2 = build_algebra(SimpleGraph::make(2, {{0, 1}}), q);

    CHECK(is_automorphism(p2, MonomialMap::identity(3, q)));
    // Swap the two vertices, fix the edge, all scales one.
    CHECK(is_automorphism(p2, MonomialMap::make({1, 0, 2}, std::vector<Scalar>(3, Scalar::one(q)))));
    CHECK(!is_automorphism(p2, MonomialMap::make({2, 1, 0}, std::vector<Scalar>(3, Scalar::one(q)))));
    CHECK(!is_automorphism(
        p2, MonomialMap::make({0, 1, 2}, {Scalar::of_int(q, 2), Scalar::one(q), Scalar::one(q)})));

    // diag(1,2): the swap works exactly with scales (1/2, 2).
    const EvolutionAlgebra d12 = diag_algebra(q, {1, 2});
    CHECK(is_automorphism(d12, MonomialMap::make({1, 0}, {Scalar::rational(1, 2), Scalar::of_int(q, 2)})));
    CHECK(!is_automorphism(d12, MonomialMap::make({1, 0}, {Scalar::one(q), Scalar::one(q)})));

    CHECK_THROWS_AS(is_automorphism(p2, MonomialMap::identity(2, q)), ValidationError);
}

TEST_CASE("automorphism groups of small algebras") {
    const Field q = Field::rationals();

    const EvolutionAlgebra dot = build_algebra(SimpleGraph::make(1, {}), q);
    const AlgebraAutomorphisms aut_dot = algebra_automorphisms(dot);
    CHECK(aut_dot.order == 1);
    CHECK(aut_dot.generators.empty());

    const EvolutionAlgebra k3 = build_algebra(SimpleGraph::make(3, {{0, 1}, {0, 2}, {1, 2}}), q);
    const AlgebraAutomorphisms aut_k3 = algebra_automorphisms(k3);
    CHECK(aut_k3.order == 6);
    CHECK(aut_k3.all_scales_one);
    CHECK(aut_k3.sigma_group.order == 6);

    const EvolutionAlgebra d12 = diag_algebra(q, {1, 2});
    const AlgebraAutomorphisms aut_d12 = algebra_automorphisms(d12);
    CHECK(aut_d12.order == 2);
    CHECK(!aut_d12.all_scales_one);
    REQUIRE(aut_d12.elements.size() == 2);
    CHECK(aut_d12.elements[1] ==
          MonomialMap::make({1, 0}, {Scalar::rational(1, 2), Scalar::of_int(q, 2)}));

    CHECK_THROWS_AS(algebra_automorphisms(diag_algebra(q, {1, 0})), NotRegularError);
}

TEST_CASE("search equals the library brute force on image algebras") {
    const Field q = Field::rationals();
    for (const SimpleGraph& g : graph_classes(3)) {
        const EvolutionAlgebra x = build_algebra(g, q);
        const AlgebraAutomorphisms fast = algebra_automorphisms(x);
        const AlgebraAutomorphisms brute = algebra_automorphisms_brute_force(x);
        CHECK(fast.elements == brute.elements);
        CHECK(fast.order == brute.order);
    }
    const SimpleGraph c4 = SimpleGraph::make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const EvolutionAlgebra x = build_algebra(c4, q);
    CHECK(algebra_automorphisms(x).elements == algebra_automorphisms_brute_force(x).elements);
}

TEST_CASE("search equals the exhaustive scale enumeration over GF(3) and GF(5)") {
    std::mt19937_64 rng(606);
    for (const Field f : {Field::gf(3), Field::gf(5)}) {
        int done = 0;
        while (done < 6) {
            std::uniform_int_distribution<int> size(1, 3);
            const Matrix m = random_matrix(rng, f, size(rng), 400);
            if (m.determinant().is_zero()) continue;
            const EvolutionAlgebra x{Matrix(m)};
            CHECK(algebra_automorphisms(x).elements == exhaustive_monomial_automorphisms(x));
            ++done;
        }
    }
    // A structure with scale cycles: b0^2 = b1, b1^2 = b0 over GF(7) has
    // the three cube roots of unity as scale solutions at the identity.
    const Field f7 = Field::gf(7);
    Matrix m(f7, 2, 2);
    m.set(1, 0, Scalar::one(f7));
    m.set(0, 1, Scalar::one(f7));
    const EvolutionAlgebra x{std::move(m)};
    const AlgebraAutomorphisms aut = algebra_automorphisms(x);
    CHECK(aut.elements == exhaustive_monomial_automorphisms(x));
    CHECK(aut.order == 6); // 3 scale choices x 2 permutations
}

TEST_CASE("image algebra automorphisms realize the graph automorphisms") {
    const Field q = Field::rationals();
    for (const SimpleGraph& g : graph_classes(4)) {
        const EvolutionAlgebra x = build_algebra(g, q);
        const AlgebraAutomorphisms aut = algebra_automorphisms(x);
        const std::vector<Perm> graph_aut = graph_automorphism_elements(g);
        CHECK(aut.order == graph_aut.size());
        CHECK(aut.all_scales_one);
        const int nv = g.vertex_count();
        for (const MonomialMap& m : aut.elements) {
            // The vertex block permutes vertices and is a graph automorphism.
            VertexMap vmap(m.perm.begin(), m.perm.begin() + nv);
            for (int v : vmap) CHECK(v < nv);
            CHECK(std::binary_search(graph_aut.begin(), graph_aut.end(), vmap));
            // Edge images follow the vertex images.
            for (int t = 0; t < g.edge_count(); ++t) {
                const auto [u, v] = g.edges()[t];
                CHECK(m.perm[nv + t] == edge_position(g, vmap[u], vmap[v]));
            }
        }
    }
}

TEST_CASE("automorphism sets are groups and conjugation preserves order") {
    std::mt19937_64 rng(909);
    const Field q = Field::rationals();
    const SimpleGraph g = SimpleGraph::make(4, {{0, 1}, {1, 2}, {2, 3}});
    const EvolutionAlgebra x = build_algebra(g, q);
    const AlgebraAutomorphisms aut = algebra_automorphisms(x);
    for (const MonomialMap& a : aut.elements) {
        CHECK(is_automorphism(x, a));
        CHECK(is_automorphism(x, a.inverse()));
        for (const MonomialMap& b : aut.elements)
            CHECK(std::binary_search(aut.elements.begin(), aut.elements.end(), a.after(b)));
    }
    for (int trial = 0; trial < 5; ++trial) {
        const MonomialMap m = random_monomial(rng, x.dim(), q);
        CHECK(algebra_automorphisms(rebase(x, m)).order == aut.order);
    }
}

TEST_CASE("algebra isomorphism search") {
    const Field q = Field::rationals();
    const SimpleGraph p3 = SimpleGraph::make(3, {{0, 1}, {1, 2}});
    const EvolutionAlgebra x = build_algebra(p3, q);

    const auto self = algebra_isomorphism(x, x);
    REQUIRE(self.has_value());
    CHECK(self->is_identity());

    const EvolutionAlgebra k3 = build_algebra(SimpleGraph::make(3, {{0, 1}, {0, 2}, {1, 2}}), q);
    CHECK(!algebra_isomorphism(x, k3).has_value());

    std::mt19937_64 rng(2718);
    for (const Field f : {Field::rationals(), Field::gf(7)}) {
        for (int trial = 0; trial < 10; ++trial) {
            const SimpleGraph g = SimpleGraph::make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
            const EvolutionAlgebra x1 = build_algebra(g, f);
            const MonomialMap m = random_monomial(rng, x1.dim(), f);
            const EvolutionAlgebra x2 = rebase(x1, m);
            const auto witness = algebra_isomorphism(x1, x2);
            REQUIRE(witness.has_value());
            CHECK(rebase(x1, *witness).structure() == x2.structure());
        }
    }

    // Diagonal constants rescale freely: diag(1,1) and diag(2,2) are
    // isomorphic via scales alone.
    const auto scaled = algebra_isomorphism(diag_algebra(q, {1, 1}), diag_algebra(q, {2, 2}));
    REQUIRE(scaled.has_value());
    CHECK(rebase(diag_algebra(q, {1, 1}), *scaled).structure() ==
          diag_algebra(q, {2, 2}).structure());

    // Scale cycles are rigid: b0^2 = b1, b1^2 = c*b0 forces a cube root of
    // c, so c = 2 is reachable over GF(5) but not over Q.
    auto antidiag = [](const Field& f, int c) {
        Matrix m(f, 2, 2);
        m.set(1, 0, Scalar::one(f));
        m.set(0, 1, Scalar::of_int(f, c));
        return EvolutionAlgebra(std::move(m));
    };
    CHECK(!algebra_isomorphism(antidiag(q, 1), antidiag(q, 2)).has_value());
    const Field f5 = Field::gf(5);
    const auto cube = algebra_isomorphism(antidiag(f5, 1), antidiag(f5, 2));
    REQUIRE(cube.has_value());
    CHECK(rebase(antidiag(f5, 1), *cube).structure() == antidiag(f5, 2).structure());

    CHECK_THROWS_AS(algebra_isomorphism(x, build_algebra(p3, Field::gf(5))), ValidationError);
    CHECK_THROWS_AS(algebra_isomorphism(x, diag_algebra(q, {1, 0, 0, 0, 0})), NotRegularError);
}

TEST_CASE("enumeration cap raises GroupTooLarge") {
    const EvolutionAlgebra x = build_algebra(SimpleGraph::make(6, {}), Field::rationals());
    CHECK_THROWS_AS(algebra_automorphisms(x, 100), CapError);
}

TEST_CASE("mid-scale image algebras stay fast and correct") {
    const SimpleGraph petersen = SimpleGraph::make(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
             {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8},
             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    const AlgebraAutomorphisms aut =
        algebra_automorphisms(build_algebra(petersen, Field::rationals()));
    CHECK(aut.order == 120);
    CHECK(aut.all_scales_one);
    CHECK(aut.sigma_group.order == graph_automorphisms(petersen).order);

    // A dense random graph is rigid; its image algebra must be too.
    std::mt19937_64 rng(123456);
    const SimpleGraph random30 = [&] {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 30; ++u)
            for (int v = u + 1; v < 30; ++v)
                if (rng() & 1) edges.emplace_back(u, v);
        return SimpleGraph::make(30, std::move(edges));
    }();
    const std::uint64_t graph_order = graph_automorphisms(random30).order;
    const AlgebraAutomorphisms big =
        algebra_automorphisms(build_algebra(random30, Field::gf(2)));
    CHECK(big.order == graph_order);
}
