from itertools import product

import pytest

from glhall import _pykernel
from glhall.folding import (
    FoldingTree,
    InvariantViolation,
    L_poly,
    L_table,
    c_last,
    c_pair,
    c_tableau,
    chooser_variants,
    last_step_counts,
)
from glhall.laurent import ONE, Q, HalfLaurent, NotDivisible
from glhall.roots import RootDatum, pair
from glhall.tableaux import (
    Shape,
    VertexContext,
    columns_of_height,
    content,
    enumerate_all_ssyt,
    enumerate_ssyt,
    parse_tableau,
    vertex_context,
)

A2, B2, C2 = RootDatum("A", 2), RootDatum("B", 2), RootDatum("C", 2)


def shapes(datum, bound):
    for om in product(range(bound + 1), repeat=datum.rank):
        if sum(om) <= bound:
            yield Shape(datum, om)


def small_shapes_a(max_boxes):
    for n in (1, 2, 3):
        datum = RootDatum("A", n)
        for om in product(range(max_boxes + 1), repeat=n):
            if sum((i + 1) * a for i, a in enumerate(om)) <= max_boxes:
                yield Shape(datum, om)


# ---- fixture values -------------------------------------------------------------
def test_c_last_examples():
    assert c_last((3,), A2) == ONE
    assert c_last((-2,), C2) == Q
    assert c_last((-1,), B2) == ONE


def test_a2_pair_and_tree():
    T = parse_tableau("1,3\n2", A2)
    assert c_pair(*T.columns, vertex_context(T, 0)) == Q**2 - 1
    tree = FoldingTree(*T.columns, vertex_context(T, 0))
    assert len(tree.nodes()) == 5
    assert sorted(tree.path_stats().items()) == [((0, 1), 1), ((1, 1), 1)]


def test_b2_nonspecial_tree():
    ctx = VertexContext.nonspecial(B2, (1,))
    tree = FoldingTree((1,), (-1,), ctx)
    assert [e.label for _, e in tree.edges()] == ["id1_0+"]
    assert tree.leaves()[0].left == (-1,) and tree.leaves()[0].right == (-1,)
    assert c_pair((1,), (-1,), ctx) == Q - 1
    assert c_pair((1, -2), (1,), VertexContext.special_for(B2)) == Q**2


def test_final_root_is_single_node():
    datum = RootDatum("A", 2)
    tree = FoldingTree((2, 3), (3,), VertexContext.special_for(datum))
    assert len(tree.nodes()) == 1 and tree.paths() == [[]]
    assert tree.polynomial() == ONE


def test_tableau_values():
    assert c_tableau(parse_tableau("1,3\n2", A2)) == Q**2 - 1
    assert c_tableau(parse_tableau("1,1,1'\n2'", B2)) == (Q - 1) * Q**2
    assert c_tableau(parse_tableau("1,2,2'\n2',1'", C2)) == Q * (Q - 1) ** 2


def test_dot_export():
    T = parse_tableau("1,3\n2", A2)
    dot = FoldingTree(*T.columns, vertex_context(T, 0)).to_dot()
    assert dot.startswith("digraph")
    for label in ('"s2-"', '"id2+"', '"id1+"', '"s1+"'):
        assert label in dot
    assert dot == FoldingTree(*T.columns, vertex_context(T, 0)).to_dot()


# ---- L polynomials ----------------------------------------------------------------
def test_trivial_l_values():
    assert L_poly(A2, (0, 0, 0), (0, 0, 0)) == ONE
    assert L_poly(B2, (0, 0), (0, 0)) == ONE
    assert L_poly(A2, (1, 0, 0), (1, 1, 1)) == HalfLaurent()
    assert L_poly(A2, (2, 1, 0), (1, 1, 1)) == 2 * Q**2 - Q - 1
    assert L_poly(RootDatum("A", 1), (2, 0), (1, 1)) == Q - 1
    assert L_poly(B2, (1, 0), (0, 0)) == Q**2 - 1


def test_non_dominant_inputs_rejected():
    with pytest.raises(ValueError):
        L_poly(A2, (1, 2, 0), (1, 1, 1))
    with pytest.raises(ValueError):
        L_poly(B2, (1, 0), (0, 1))
    with pytest.raises(ValueError):
        L_poly(C2, ("1/2", "1/2"), (0, 0))


def test_specialisation_at_one():
    for datum in (A2, B2, C2, RootDatum("A", 3)):
        for shape in shapes(datum, 2):
            for mu, poly in L_table(datum, shape.lam).items():
                assert poly.is_q_polynomial()
                assert poly.substitute_q(1) == (1 if mu == shape.lam else 0)


def _cyclotomic_shape(poly):
    """Return True if poly = q^b (q-1)^c prod_k [k]_q^{b_k}."""
    if poly.is_zero() or len(poly.terms) == 0:
        return False
    poly = poly.shift(-poly.min_exp)
    while True:
        try:
            poly = poly.exact_divide(Q - 1)
        except NotDivisible:
            break
    for k in range(poly.max_exp // 2 + 1, 1, -1):
        qk = HalfLaurent({2 * i: 1 for i in range(k)})
        while True:
            try:
                poly = poly.exact_divide(qk)
            except NotDivisible:
                break
    return poly == ONE


def test_type_a_monic_degree_and_factorisation():
    for shape in small_shapes_a(5):
        datum = shape.datum
        for T in enumerate_all_ssyt(shape):
            mu = content(T)
            if not datum.is_dominant(mu):
                continue
            c = c_tableau(T)
            lm = tuple(a + b for a, b in zip(shape.lam, mu))
            assert c.leading_coeff == 1
            assert c.max_exp == 2 * pair(lm, datum.rho)
            assert _cyclotomic_shape(c), (T.columns, c)


def test_type_a_leading_coefficient_counts_tableaux():
    for shape in small_shapes_a(5):
        for mu, poly in L_table(shape.datum, shape.lam).items():
            assert poly.leading_coeff == len(enumerate_ssyt(shape, mu))


# ---- tree invariants --------------------------------------------------------------
def test_tree_invariants():
    for datum in (A2, B2, C2, RootDatum("B", 3), RootDatum("C", 3)):
        for shape in shapes(datum, 2):
            for T in enumerate_all_ssyt(shape):
                for i in range(T.r):
                    tree = FoldingTree(T.columns[i], T.columns[i + 1], vertex_context(T, i))
                    for node in tree.nodes():
                        if not node.final:
                            assert node.reflection is tree.choice(node.left)
                        assert node.final == (not tree.candidates(node.left))
                    for parent, edge in tree.edges():
                        assert _rank_sum(edge.child.left, datum) > _rank_sum(parent.left, datum)
                    for p in tree.paths():
                        pr = sum(e.kind == "s+" for e in p)
                        pf = sum(e.kind == "id+" for e in p)
                        assert pr + pf <= len(p)


def _rank_sum(col, datum):
    n = datum.rank
    return sum(x if x > 0 else 2 * n + 1 + x for x in col)


def test_id_child_violation_is_loud():
    # a letter map that breaks both children of the first step
    perm = (0, 3, 2, 1)
    with pytest.raises(_pykernel.KernelError):
        _pykernel.path_stats((1,), (2,), [perm])


def test_mixed_movement_is_loud():
    perm = (0, 2, 1, 4, 3)  # swaps 1<->2 and 3<->4 on a contrived alphabet
    with pytest.raises(_pykernel.MixedMovementError):
        _pykernel.path_stats((2, 3), (4,), [perm])


# ---- choice independence -----------------------------------------------------------
def test_choice_independence_small():
    datum = RootDatum("A", 3)
    ctx = VertexContext.special_for(datum)
    for left in columns_of_height(datum, 2):
        for right in columns_of_height(datum, 1):
            if left[0] > right[0]:
                continue
            polys = {p for _, p in chooser_variants(left, right, ctx)}
            assert polys == {c_pair(left, right, ctx)}


def test_c_last_choice_independence():
    for fam in "ABC":
        for n in (1, 2, 3):
            datum = RootDatum(fam, n)
            for h in range(1, n + 1):
                for col in columns_of_height(datum, h):
                    assert len(last_step_counts(col, datum)) == 1


def test_path_guard_env(monkeypatch):
    from glhall import folding

    monkeypatch.setenv("HL_PATH_GUARD", "1")
    folding._pair_stats.cache_clear()
    with pytest.raises(_pykernel.PathGuardExceeded):
        c_pair((1, 2), (3,), VertexContext.special_for(A2))
    monkeypatch.setenv("HL_PATH_GUARD", "nope")
    with pytest.raises(ValueError):
        c_pair((1, 2), (3,), VertexContext.special_for(A2))
    monkeypatch.delenv("HL_PATH_GUARD")
    assert c_pair((1, 2), (3,), VertexContext.special_for(A2)) == Q**2 - 1


def test_invariant_violation_class():
    assert issubclass(InvariantViolation, RuntimeError)
