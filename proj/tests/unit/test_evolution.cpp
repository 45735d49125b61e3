#include <doctest.h>

#include <random>
#include <sstream>

#include "evolalg/evolution.hpp"

using namespace evolalg;

namespace {

EvolutionAlgebra algebra_from_ints(const Field& f, const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, Scalar::of_int(f, rows[i][j]));
    return EvolutionAlgebra(std::move(m));
}

// Structure matrix of the one-edge graph P2 in basis (b_v, b_w, b_e).
EvolutionAlgebra p2_algebra(const Field& f) {
    return algebra_from_ints(f, {{1, 0, 1}, {0, 1, 1}, {0, 0, 1}});
}

Element random_element(std::mt19937_64& rng, const EvolutionAlgebra& x) {
    Element e = x.zero_element();
    std::uniform_int_distribution<int> v(-3, 3);
    for (int i = 0; i < x.dim(); ++i) e.coords[i] = Scalar::of_int(x.field(), v(rng));
    return e;
}

} // namespace

TEST_CASE("algebra construction") {
    const Field q = Field::rationals();
    const EvolutionAlgebra line = algebra_from_ints(q, {{1}});
    CHECK(line.dim() == 1);
    CHECK(line.multiply(line.basis_element(0), line.basis_element(0)) == line.basis_element(0));
    CHECK(line.labels() == std::vector<std::string>{"b0"});

    const EvolutionAlgebra empty(Matrix(q, 0, 0));
    CHECK(empty.dim() == 0);
    CHECK(empty.is_regular());
    CHECK(empty.square_rank() == 0);

    CHECK_THROWS_AS(EvolutionAlgebra(Matrix(q, 2, 3)), ValidationError);
    CHECK_THROWS_AS(EvolutionAlgebra(Matrix(q, 2, 2), {"a", "a"}), ValidationError);
    CHECK_THROWS_AS(EvolutionAlgebra(Matrix(q, 2, 2), {"a"}), ValidationError);
}

TEST_CASE("products in the one-edge image algebra") {
    const EvolutionAlgebra x = p2_algebra(Field::rationals());
    const Element bv = x.basis_element(0), bw = x.basis_element(1), be = x.basis_element(2);

    CHECK(x.multiply(bv, be) == x.zero_element()); // distinct basis elements
    Element expected = x.zero_element();
    expected.coords[0] = Scalar::of_int(x.field(), 1);
    expected.coords[1] = Scalar::of_int(x.field(), 1);
    expected.coords[2] = Scalar::of_int(x.field(), 1);
    CHECK(x.multiply(be, be) == expected); // b_e^2 = b_e + b_v + b_w

    // (b_v + b_e)^2 = 2 b_v + b_w + b_e, by bilinear expansion.
    const Element sum = element_add(bv, be);
    Element expected2 = x.zero_element();
    expected2.coords[0] = Scalar::of_int(x.field(), 2);
    expected2.coords[1] = Scalar::of_int(x.field(), 1);
    expected2.coords[2] = Scalar::of_int(x.field(), 1);
    CHECK(x.multiply(sum, sum) == expected2);

    CHECK_THROWS_AS(x.multiply(bv, Element{{Scalar::zero(x.field())}}), ValidationError);
}

TEST_CASE("regularity and square rank") {
    const Field q = Field::rationals();
    CHECK(!algebra_from_ints(q, {{0, 0}, {0, 0}}).is_regular());
    CHECK(algebra_from_ints(q, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}).square_rank() == 0);
    CHECK(!algebra_from_ints(q, {{1, 0}, {0, 0}}).is_regular());
    CHECK(algebra_from_ints(q, {{1, 0}, {0, 0}}).square_rank() == 1);
    CHECK(algebra_from_ints(q, {{1, 0}, {0, 2}}).is_regular());
    CHECK(p2_algebra(q).is_regular());
    CHECK(p2_algebra(Field::gf(2)).is_regular());
}

TEST_CASE("regular iff the square has full rank (randomized)") {
    std::mt19937_64 rng(515);
    for (const Field f : {Field::rationals(), Field::gf(3)}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::uniform_int_distribution<int> size(0, 5), v(-2, 2);
            const int n = size(rng);
            Matrix m(f, n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.set(i, j, Scalar::of_int(f, v(rng)));
            const EvolutionAlgebra x{std::move(m)};
            CHECK(x.is_regular() == (x.square_rank() == x.dim()));
        }
    }
}

TEST_CASE("product is commutative and bilinear (randomized)") {
    std::mt19937_64 rng(321);
    for (const Field f : {Field::rationals(), Field::gf(5)}) {
        const EvolutionAlgebra x = p2_algebra(f);
        for (int trial = 0; trial < 40; ++trial) {
            const Element a = random_element(rng, x);
            const Element b = random_element(rng, x);
            const Element c = random_element(rng, x);
            CHECK(x.multiply(a, b) == x.multiply(b, a));
            const Scalar s = Scalar::of_int(f, 3);
            CHECK(x.multiply(element_add(element_scale(s, a), c), b) ==
                  element_add(element_scale(s, x.multiply(a, b)), x.multiply(c, b)));
        }
    }
}

TEST_CASE("basis law: e_i * e_j is zero off-diagonal and column i on it") {
    const EvolutionAlgebra x = p2_algebra(Field::gf(7));
    for (int i = 0; i < x.dim(); ++i) {
        for (int j = 0; j < x.dim(); ++j) {
            const Element p = x.multiply(x.basis_element(i), x.basis_element(j));
            if (i != j) {
                CHECK(p == x.zero_element());
            } else {
                for (int k = 0; k < x.dim(); ++k) CHECK(p.coords[k] == x.structure().at(k, i));
            }
        }
    }
}

TEST_CASE("algebra file format round trip") {
    for (const Field f : {Field::rationals(), Field::gf(7)}) {
        const EvolutionAlgebra x = p2_algebra(f);
        std::ostringstream out;
        x.write(out);
        std::istringstream in(out.str());
        CHECK(EvolutionAlgebra::read(in) == x);
    }

    const EvolutionAlgebra empty{Matrix(Field::rationals(), 0, 0)};
    std::ostringstream out;
    empty.write(out);
    CHECK(out.str() == "evolalg v1\nQ\n0\n\n");
    std::istringstream in(out.str());
    CHECK(EvolutionAlgebra::read(in).dim() == 0);
}

TEST_CASE("algebra reader rejects malformed input") {
    auto read = [](const std::string& text) {
        std::istringstream in(text);
        return EvolutionAlgebra::read(in);
    };
    CHECK_THROWS_AS(read("evolalg v2\nQ\n0\n\n"), ParseError);
    CHECK_THROWS_AS(read("evolalg v1\nQ\n1\nb0\n1\ntrailing"), ParseError);
    CHECK_THROWS_AS(read("evolalg v1\nQ\n1\nb0\n"), ParseError);
    CHECK_THROWS_AS(read("evolalg v1\nGF:6\n0\n\n"), ValidationError);
    const std::string fraction_in_gf = "evolalg v1\nGF:5\n1\nb0\n1/2\n";
    CHECK_THROWS_AS(read(fraction_in_gf), ParseError);
}
