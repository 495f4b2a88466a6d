import json

import pytest

from decat import hochschild as hh
from decat.hochschild import CategoryError, HomologyGroup, SizeGuardError

Z = HomologyGroup(1, ())
ZERO = HomologyGroup(0, ())


def a2():
    return hh.poset_category(["x", "y"], [("x", "y")])


DUAL_JSON = {
    "objects": ["p"],
    "homs": {"p->p": {"rank": 2, "basis": ["1", "e"]}},
    "compose": [
        {"g": "1", "f": "1", "result": [{"basis": "1", "coeff": 1}]},
        {"g": "1", "f": "e", "result": [{"basis": "e", "coeff": 1}]},
        {"g": "e", "f": "1", "result": [{"basis": "e", "coeff": 1}]},
        {"g": "e", "f": "e", "result": []},
    ],
    "identities": {"p": "1"},
}


def test_a2_is_valid_and_has_free_hh0_of_rank_two():
    C = a2().validate()
    assert C.rank("x", "y") == 1 and C.rank("y", "x") == 0
    groups = hh.hh(C, 5)
    assert groups[0] == HomologyGroup(2, ())
    assert all(g.is_zero() for g in groups[1:])


@pytest.mark.parametrize(
    "objects,relations",
    [
        (["a"], []),
        (["a", "b", "c"], [("a", "b"), ("b", "c")]),
        (["a", "b", "c"], [("a", "b"), ("a", "c")]),
        (["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]),
        (["a", "b", "c", "d"], []),
    ],
)
def test_strongly_upper_triangular_posets(objects, relations):
    C = hh.poset_category(objects, relations)
    assert hh.is_strongly_upper_triangular(C)
    groups = hh.hh(C, 5)
    assert groups[0] == HomologyGroup(len(objects), ())
    assert all(g.is_zero() for g in groups[1:5])


def test_dual_numbers_have_torsion_and_sparse_matches_dense():
    C = hh.load_category(DUAL_JSON)
    groups = hh.hh(C, 5)
    assert [str(g) for g in groups] == [str(g) for g in hh.hh_dense(C, 5)]
    assert groups[0] == HomologyGroup(2, ())
    assert groups[1] == HomologyGroup(1, (2,))
    assert not groups[1].is_zero()
    assert hh.hh(hh.dual_numbers(), 5) == groups


@pytest.mark.parametrize("strategy", ["min", "first"])
def test_pivot_strategies_agree(strategy):
    C = hh.path_category(["x", "y", "z"], [("f", "x", "y"), ("g", "y", "z")])
    assert hh.hh(C, 4, strategy) == hh.hh(C, 4)


def test_boundary_squares_to_zero():
    for C in (a2(), hh.dual_numbers(), hh.path_category(["x", "y"], [("f", "x", "y"), ("g", "x", "y")])):
        assert hh.bar_complex(C, 4).check_dd() is None


def test_chain_ranks_count_cyclic_composable_tuples():
    C = a2()
    # C_0: id_x, id_y; C_1: cyclic pairs (g, f) with f: x0 -> x1 and g: x1 -> x0
    assert len(hh.chain_basis(C, 0)) == 2
    assert len(hh.chain_basis(C, 1)) == 2


def test_decomposition_along_the_order():
    C = hh.path_category(["x", "y"], [("f", "x", "y"), ("g", "x", "y")])
    result = hh.decompose(C, 4)
    assert result["order"] == ["x", "y"]
    assert result["holds"]


def test_decomposition_with_nontrivial_endomorphisms():
    D = json.loads(json.dumps(DUAL_JSON))
    D["objects"].append("q")
    D["homs"]["q->q"] = {"rank": 1, "basis": ["1q"]}
    D["homs"]["p->q"] = {"rank": 1, "basis": ["h"]}
    D["compose"] += [
        {"g": "1q", "f": "1q", "result": [{"basis": "1q", "coeff": 1}]},
        {"g": "1q", "f": "h", "result": [{"basis": "h", "coeff": 1}]},
        {"g": "h", "f": "1", "result": [{"basis": "h", "coeff": 1}]},
        {"g": "h", "f": "e", "result": []},
    ]
    D["identities"]["q"] = "1q"
    C = hh.load_category(D)
    assert hh.decompose(C, 4)["holds"]
    assert not hh.is_strongly_upper_triangular(C)


def test_oriented_cycles_in_quivers_are_rejected():
    with pytest.raises(CategoryError):
        hh.path_category(["x", "y"], [("f", "x", "y"), ("g", "y", "x")])


def test_cycles_are_reported_with_witness_morphisms():
    ids = {"x": "1x", "y": "1y"}
    homs = {"x->x": {"basis": ["1x"]}, "y->y": {"basis": ["1y"]}, "x->y": {"basis": ["f"]}, "y->x": {"basis": ["g"]}}
    compose = []
    for g, f, h in [("1x", "1x", "1x"), ("1y", "1y", "1y"), ("1y", "f", "f"), ("f", "1x", "f"), ("1x", "g", "g"), ("g", "1y", "g")]:
        compose.append({"g": g, "f": f, "result": [{"basis": h, "coeff": 1}]})
    C = hh.load_category({"objects": ["x", "y"], "homs": homs, "compose": compose, "identities": ids})
    tri = hh.check_upper_triangular(C)
    assert not tri.upper_triangular
    assert tri.cycle[0] == tri.cycle[-1]
    assert sorted(hh.cycle_witness(C, tri.cycle)) == ["f", "g"]
    with pytest.raises(CategoryError):
        hh.decompose(C, 2)


def test_invalid_categories_are_rejected():
    bad = json.loads(json.dumps(DUAL_JSON))
    bad["compose"][3]["result"] = [{"basis": "1", "coeff": 1}]  # e o e = 1 breaks nothing alone
    hh.load_category(bad)
    bad["compose"][2]["result"] = [{"basis": "1", "coeff": 1}]  # e o 1 = 1 breaks the identity law
    with pytest.raises(CategoryError, match="identity law"):
        hh.load_category(bad)
    with pytest.raises(CategoryError):
        hh.load_category({"objects": ["x"], "homs": {"x->y": {"basis": ["f"]}}, "identities": {}})
    with pytest.raises(CategoryError):
        hh.load_category({"objects": ["x"]})


def test_nonassociative_tables_name_the_failing_triple():
    # (a a) a = b a = a but a (a a) = a b = 0
    table = {("1", x): x for x in "1ab"} | {(x, "1"): x for x in "1ab"}
    table |= {("a", "a"): "b", ("a", "b"): None, ("b", "a"): "a", ("b", "b"): None}
    compose = [
        {"g": g, "f": f, "result": [] if h is None else [{"basis": h, "coeff": 1}]} for (g, f), h in table.items()
    ]
    D = {"objects": ["p"], "homs": {"p->p": {"basis": ["1", "a", "b"]}}, "compose": compose, "identities": {"p": "1"}}
    with pytest.raises(CategoryError, match="associativity fails on the triple"):
        hh.load_category(D)


def test_json_round_trip():
    C = hh.load_category(DUAL_JSON)
    assert hh.category_to_json(hh.load_category(hh.category_to_json(C))) == hh.category_to_json(C)


def test_size_guard(monkeypatch):
    C = hh.dual_numbers()
    with pytest.raises(SizeGuardError):
        hh.hh(C, 5, guard=10)
    monkeypatch.setenv("DECAT_MAX_ENTRIES", "10")
    with pytest.raises(SizeGuardError):
        hh.hh(C, 5)
    monkeypatch.setenv("DECAT_MAX_ENTRIES", "nope")
    with pytest.raises(ValueError):
        hh.max_entries()


def test_trace_of_additive_closure():
    C = a2()
    closure = hh.additive_closure(C, 2)
    T = hh.trace0(closure)
    assert T.group == HomologyGroup(2, ())
    # a block-diagonal endomorphism of x + y has class [f] + [g]
    X = "x+y"
    ident = closure.identities[X]
    objs, blocks = hh.blocks_of(closure, ident, C)
    base = hh.trace0(C)
    assert hh.matrix_trace(base, objs, blocks) == base.add(
        base.class_of(C.identities["x"]), base.class_of(C.identities["y"])
    )
    # the trace of the closure matches the trace of C
    assert hh.trace0(closure).group == base.group


def test_conjugation_invariance_of_the_trace():
    C = hh.load_category(DUAL_JSON)
    T = hh.trace0(C)
    e, one = ("p", "p", 1), ("p", "p", 0)
    assert T.class_of({e: 1}) != T.class_of({one: 1})
    # [g o f] = [f o g] in the trace
    f, g = {one: 2, e: 1}, {one: 1, e: 3}
    assert T.class_of(C.compose_elements(g, f)) == T.class_of(C.compose_elements(f, g))
    with pytest.raises(ValueError):
        T.class_of({("q", "q", 0): 1})


def test_homology_of_the_additive_closure_of_a_point():
    P = hh.poset_category(["x"], [])
    groups = hh.hh(hh.additive_closure(P, 2), 4)
    assert groups[0] == Z and all(g.is_zero() for g in groups[1:])


def test_homology_json_is_stable():
    groups = hh.hh(hh.dual_numbers(), 3)
    payload = hh.homology_json(groups)
    assert payload["1"] == HomologyGroup(1, (2,)).to_json()
    assert json.dumps(payload, sort_keys=True) == json.dumps(hh.homology_json(hh.hh(hh.dual_numbers(), 3)), sort_keys=True)
