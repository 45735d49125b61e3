import pytest

import evolalg as ea


def p2():
    return ea.SimpleGraph(2, [(0, 1)])


def k3():
    return ea.SimpleGraph(3, [(0, 1), (0, 2), (1, 2)])


def z3():
    return ea.FiniteGroup.from_table([[0, 1, 2], [1, 2, 0], [2, 0, 1]])


def test_build_one_edge_algebra():
    x = ea.build_algebra(p2(), "Q")
    assert x.dim == 3
    assert x.labels == ["v0", "v1", "e0_1"]
    assert x.structure() == [["1", "0", "1"], ["0", "1", "1"], ["0", "0", "1"]]
    assert x.is_regular()
    assert x.determinant() == "1"
    # (b_v + b_e)^2 = 2 b_v + b_w + b_e
    assert x.multiply(["1", "0", "1"], ["1", "0", "1"]) == ["2", "1", "1"]


def test_graph_and_algebra_automorphisms_agree_on_k3():
    g = k3()
    assert ea.graph_automorphisms(g)["order"] == 6
    aut = ea.algebra_automorphisms(ea.build_algebra(g, "Q"))
    assert aut["order"] == 6
    assert aut["all_scales_one"]


def test_recover_round_trip():
    g = ea.SimpleGraph(4, [(0, 1), (1, 2), (2, 3)])
    x = ea.build_algebra(g, "GF:7")
    recovered, normalizer = ea.recover_graph(x)
    assert recovered == g
    assert normalizer["perm"] == list(range(x.dim))

    y = ea.rebase(x, [2, 0, 1, 3, 6, 4, 5], ["2", "3", "1", "5", "4", "6", "1"])
    recovered2, _ = ea.recover_graph(y)
    assert ea.graph_isomorphism(recovered2, g) is not None


def test_isomorphism_witness():
    x = ea.build_algebra(k3(), "Q")
    y = ea.rebase(x, [3, 4, 5, 0, 1, 2], ["1", "1", "1", "1", "1", "1"])
    witness = ea.algebra_isomorphism(x, y)
    assert witness is not None
    assert ea.is_automorphism(x, list(range(6)), ["1"] * 6)


def test_realize_and_verify():
    x = ea.realize_algebra(z3(), "Q", 0)
    report = ea.verify_realization(z3(), x)
    assert report["isomorphic"]
    assert report["aut_order"] == 3
    assert report["all_scales_one"]
    assert report["scales_observed"] == ["1"]

    z4 = ea.FiniteGroup.from_permutations(4, [[1, 2, 3, 0]])
    assert not ea.verify_realization(z4, x)["isomorphic"]


def test_text_round_trips():
    g = ea.SimpleGraph(3, [(0, 2)])
    assert ea.SimpleGraph.from_text(g.to_text()) == g
    x = ea.build_algebra(g, "Q")
    assert ea.EvolutionAlgebra.from_text(x.to_text()) == x
    assert z3().from_text(z3().to_text()).order == 3


def test_direct_construction():
    x = ea.EvolutionAlgebra("Q", [["1", "0"], ["0", "2"]])
    assert x.is_regular()
    aut = ea.algebra_automorphisms(x)
    assert aut["order"] == 2
    assert not aut["all_scales_one"]
    assert aut["generators"][0] == {"perm": [1, 0], "scales": ["1/2", "2"]}


def test_errors():
    with pytest.raises(ea.ValidationError):
        ea.SimpleGraph(2, [(0, 0)])
    nonregular = ea.EvolutionAlgebra("Q", [["1", "0"], ["0", "0"]])
    with pytest.raises(ea.NotRegularError):
        ea.algebra_automorphisms(nonregular)
    with pytest.raises(ea.ParseError):
        ea.EvolutionAlgebra.from_text("evolalg v1\nQ\n1\nb0\n1\njunk\n")
    with pytest.raises(ea.ValidationError):
        ea.EvolutionAlgebra("Q", [["1", "0"]])
