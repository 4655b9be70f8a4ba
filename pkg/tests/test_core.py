import itertools
import random

import pytest
from support import rel, span

from dblcoh.companions import span_companion
from dblcoh.core import (UNIT, Constraint, FrameMismatch, HComp, LeafMismatch, Sq, Square, VComp,
                         canonical_constraint, cell, check_frame, compose_h, compose_v, eval_cell, eval_pasting,
                         flat_square, flatten, htree, is_globular, leaf, leaves, node, paste_h, unit_leaf,
                         vcompose_all, verify_double_category)
from dblcoh.models.rel import Relation
from dblcoh.models.sets import FinSet, Fn
from dblcoh.models.span import Span
from dblcoh.report import SampleBudget

TWO = FinSet.range(2)


def fn(A, B, table):
    return Fn(A, B, tuple(table))


def test_identity_square_is_neutral():
    m = span()
    M = m.hcells(TWO, TWO)[7]
    assert compose_v(m, m.sq_id(M), m.sq_id(M)) == m.sq_id(M)


def test_rel_vertical_composite_matches_containment():
    m = rel(2)
    rng = random.Random(3)
    for _ in range(200):
        s = m.random_square(rng)
        t = m.random_square(rng, top=s.bottom) if s is not None else None
        if t is None:
            continue
        c = compose_v(m, s, t)
        hf, kg = s.left.then(t.left), s.right.then(t.right)
        assert (c.left, c.right) == (hf, kg)
        assert all((hf(a), kg(b)) in c.bottom for a, b in s.top.pairs)


def test_span_vertical_composite_is_table_composite():
    m = span()
    rng = random.Random(5)
    seen = 0
    for _ in range(300):
        s = m.random_square(rng)
        t = m.random_square(rng, top=s.bottom) if s is not None else None
        if t is None:
            continue
        u = dict(zip(s.top.apex, s.payload))
        v = dict(zip(t.top.apex, t.payload))
        assert compose_v(m, s, t).payload == tuple(v[u[x]] for x in s.top.apex)
        seen += 1
    assert seen > 50


def _swap(m, M):
    """Globular automorphism of ``M`` exchanging its first two apex points when the legs allow."""
    names = dict(zip(M.apex, M.apex))
    for x, y in itertools.combinations(M.apex, 2):
        if (M.l(x), M.r(x)) == (M.l(y), M.r(y)):
            names[x], names[y] = y, x
            break
    return Square(M, m.vid(M.src), m.vid(M.tgt), M, tuple(names[x] for x in M.apex))


def test_span_horizontal_composite_on_pullback():
    m = span()
    M = Span(TWO, TWO, ("a", "b"), (0, 0), (1, 1))
    N = Span(TWO, TWO, ("c", "d", "e"), (1, 1, 0), (0, 0, 1))
    s, t = _swap(m, M), _swap(m, N)
    c = compose_h(m, s, t)
    pullback = [(x, y) for x in M.apex for y in N.apex if M.r(x) == N.l(y)]
    assert list(c.top.apex) == sorted(pullback, key=lambda p: (M.apex.index(p[0]), N.apex.index(p[1])))
    assert list(c.top.apex) == [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
    assert c.payload == (("b", "d"), ("b", "c"), ("a", "d"), ("a", "c"))


def test_rel_horizontal_composite_exists():
    m = rel(2)
    rng = random.Random(8)
    for _ in range(200):
        s = m.random_square(rng)
        if s is None:
            continue
        t = m.random_square(rng, left=s.right)
        if t is None:
            continue
        c = compose_h(m, s, t)
        f, g = c.left, c.right
        assert all((f(a), g(b)) in c.bottom for a, b in c.top.pairs)


def test_unit_square_beside_itself():
    m = span()
    u = m.sq_unit(m.vid(TWO))
    c = compose_h(m, u, u)
    assert c.top == m.hcomp(m.hunit(TWO), m.hunit(TWO))
    assert m.sq_eq(m.sq_vcomp(c, m.tgt_unitor(m.hunit(TWO))), m.sq_vcomp(m.tgt_unitor(m.hunit(TWO)), u))


def test_frame_mismatch_reports_path():
    m = span()
    a = m.sq_id(m.hcells(TWO, TWO)[1])
    b = m.sq_id(m.hcells(TWO, TWO)[2])
    with pytest.raises(FrameMismatch):
        compose_v(m, a, b)
    with pytest.raises(FrameMismatch) as err:
        vcompose_all(m, a, a, b)
    assert err.value.path == (2,)
    with pytest.raises(FrameMismatch) as err:
        eval_cell(m, VComp((Sq(a), HComp((Sq(a), Sq(b))))))
    assert err.value.path[:1] == (1,)


def test_frames_and_globularity():
    m = span()
    M = m.hcells(TWO, TWO)[4]
    assert is_globular(m, m.sq_id(M))
    f = fn(TWO, TWO, (1, 0))
    assert not is_globular(m, m.sq_unit(f))
    assert check_frame(m, m.sq_unit(f)) is None
    bad = Square(M, fn(TWO, FinSet.range(1), (0, 0)), m.vid(TWO), M, ())
    assert check_frame(m, bad) == "S(bottom) != T(left)"


def test_canonical_constraint_identity_and_unitor():
    m = span()
    M = m.hcells(TWO, TWO)[9]
    t = htree(m, M)
    assert canonical_constraint(m, t, t) == m.sq_id(M)
    s = node(leaf(m, M), unit_leaf(m, TWO))
    assert canonical_constraint(m, s, t) == m.tgt_unitor(M)
    s = node(unit_leaf(m, TWO), leaf(m, M))
    assert canonical_constraint(m, s, t) == m.src_unitor(M)


def test_canonical_associator_is_rebracketing():
    m = span()
    M, N, P = (m.hcells(TWO, TWO)[i] for i in (5, 11, 20))
    s = htree(m, M, N, P)
    t = node(leaf(m, M), node(leaf(m, N), leaf(m, P)))
    a = canonical_constraint(m, s, t)
    top = m.hcomp(m.hcomp(M, N), P)
    assert a.payload == tuple((x, (y, z)) for (x, y), z in top.apex)
    assert a.bottom == m.hcomp(M, m.hcomp(N, P))


def test_canonical_constraint_composes():
    m = span()
    M, N = m.hcells(TWO, TWO)[3], m.hcells(TWO, TWO)[6]
    U = unit_leaf(m, TWO)
    trees = [
        node(node(leaf(m, M), U), leaf(m, N)),
        node(leaf(m, M), node(U, leaf(m, N))),
        node(leaf(m, M), leaf(m, N)),
        node(node(U, leaf(m, M)), node(leaf(m, N), U)),
    ]
    for s, t, u in itertools.product(trees, repeat=3):
        lhs = m.sq_vcomp(canonical_constraint(m, s, t), canonical_constraint(m, t, u))
        assert m.sq_eq(lhs, canonical_constraint(m, s, u))


def test_leaf_mismatch():
    m = span()
    M, N = m.hcells(TWO, TWO)[3], m.hcells(TWO, TWO)[6]
    with pytest.raises(LeafMismatch):
        canonical_constraint(m, htree(m, M, N), htree(m, N, M))


def test_flatten_is_idempotent():
    m = span()
    M, N = m.hcells(TWO, TWO)[3], m.hcells(TWO, TWO)[6]
    t = node(node(unit_leaf(m, TWO), leaf(m, M)), node(leaf(m, N), unit_leaf(m, TWO)))
    f = flatten(m, t)
    assert flatten(m, f) == f
    assert leaves(f) == (M, N)
    assert f == node(leaf(m, M), leaf(m, N))


def test_eval_pasting_leaf_and_homomorphism():
    m = span()
    M = m.hcells(TWO, TWO)[9]
    beta = _swap(m, M)
    assert eval_pasting(m, Sq(beta)) == beta
    f = m.vid(TWO)
    e = VComp((HComp((Sq(m.sq_id(M)), Sq(m.sq_unit(f), UNIT, UNIT))),
               Constraint(node(leaf(m, M), unit_leaf(m, TWO)), leaf(m, M)),
               Sq(beta)))
    stepwise = m.sq_vcomp(compose_h(m, m.sq_id(M), m.sq_unit(f)), m.sq_vcomp(m.tgt_unitor(M), beta))
    assert eval_pasting(m, e) == stepwise
    assert eval_pasting(m, e) == eval_pasting(m, e)


def test_companion_equations_as_pastings():
    m = span()
    f = fn(TWO, FinSet.range(1), (0, 0))
    c = span_companion(m, f)
    assert eval_pasting(m, VComp((Sq(c.up), Sq(c.down)))) == m.sq_unit(f)
    side = paste_h(m, cell(m, c.up, UNIT), cell(m, c.down, None, UNIT))
    assert m.sq_eq(flat_square(m, side), m.sq_id(c.fhat))


def test_empty_frames_are_cells():
    m = span()
    E = FinSet.range(0)
    U = m.hunit(E)
    assert U.apex == ()
    assert m.sq_id(U) == m.sq_unit(m.vid(E))
    assert Relation.of(E, TWO, ()) in rel(2).hcells(E, TWO)


@pytest.mark.parametrize("m", [rel(2), span(2, 2)], ids=["rel2", "span2"])
def test_small_models_satisfy_axioms(m):
    rep = verify_double_category(m, SampleBudget(limit=2000))
    assert rep.ok, rep.summary()
    assert {"pentagon", "triangle", "interchange"} <= {r.name for r in rep.results}
