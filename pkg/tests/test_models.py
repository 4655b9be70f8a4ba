import itertools

import pytest
from support import all_companions, cartesian, rel, span

from dblcoh.companions import (companion_defect, conjoint_defect, find_companion, find_conjoint, rel_companion,
                               span_companion, standard_conjoint, theta)
from dblcoh.core import NotInvertible
from dblcoh.models.rel import Relation, graph
from dblcoh.models.sets import UNIT_SET, FinSet, Fn, product
from dblcoh.models.span import Span
from dblcoh.models.wrappers import HOpModel
from dblcoh.monoidal import verify_braided, verify_monoidal, verify_symmetric
from dblcoh.report import SampleBudget

ONE, TWO, THREE = FinSet.range(1), FinSet.range(2), FinSet.range(3)


def test_rel_enumeration_counts():
    m = rel(2)
    for A, B in itertools.product(m.objects(), repeat=2):
        assert len(m.hcells(A, B)) == 2 ** (len(A) * len(B))
        assert len(m.vmors(A, B)) == len(B) ** len(A)


def test_span_enumeration_counts():
    m = span(2, 3)
    for A, B in itertools.product(m.objects(), repeat=2):
        assert len(m.hcells(A, B)) == sum((len(A) * len(B)) ** k for k in range(4))


def test_rel_is_strict_and_posetal():
    m = rel(2)
    M = Relation.of(TWO, TWO, [(0, 1), (1, 1)])
    N = Relation.of(TWO, TWO, [(1, 0)])
    assert m.hcomp(M, N) == Relation.of(TWO, TWO, [(0, 0), (1, 0)])
    assert m.assoc(M, N, M) == m.sq_id(m.hcomp(m.hcomp(M, N), M))
    assert m.tgt_unitor(M) == m.sq_id(M)
    assert len(m.squares(M, m.vid(TWO), m.vid(TWO), M)) == 1
    assert m.squares(M, m.vid(TWO), m.vid(TWO), N) == []


def test_span_constraints_are_weak():
    m = span()
    M = Span(TWO, TWO, (0, 1), (0, 1), (1, 0))
    a = m.assoc(M, M, M)
    assert a.top != a.bottom
    assert a.payload == tuple((x, (y, z)) for (x, y), z in a.top.apex)
    u = m.tgt_unitor(M)
    assert u.top.apex == ((0, 1), (1, 0))
    assert u.payload == (0, 1)


def test_rel_companion_of_identity_is_unit():
    m = rel(2)
    c = rel_companion(m, m.vid(TWO))
    assert c.fhat == m.hunit(TWO)
    assert companion_defect(m, c) is None


def test_rel_constant_companion_and_conjoint():
    m = rel(2)
    f = Fn(TWO, ONE, (0, 0))
    c = rel_companion(m, f)
    assert set(c.fhat.pairs) == {(0, 0), (1, 0)}
    assert companion_defect(m, c) is None
    j = find_conjoint(m, f)
    assert set(j.fcheck.pairs) == {(0, 0), (0, 1)}
    assert standard_conjoint(m, f).fcheck == j.fcheck


def test_rel_companions_are_unique():
    m = rel(2)
    for f in m.all_vmors():
        found = all_companions(m, f)
        assert [c.fhat for c in found] == [graph(f)]
        assert theta(m, found[0], rel_companion(m, f)) == m.sq_id(graph(f))


def test_span_companion_of_identity():
    m = span()
    c = span_companion(m, m.vid(TWO))
    assert (c.fhat.left, c.fhat.right) == ((0, 1), (0, 1))
    assert theta(m, c, c).payload == tuple(TWO.elems)


def test_span_companion_of_inclusion():
    m = span(3, 3)
    f = Fn(TWO, THREE, (0, 1))
    c = span_companion(m, f)
    assert c.fhat.apex == (0, 1)
    assert (c.fhat.left, c.fhat.right) == ((0, 1), (0, 1))
    assert companion_defect(m, c) is None


def test_span_conjoint_is_reversed_companion():
    m = span()
    f = Fn(TWO, TWO, (1, 1))
    j = standard_conjoint(m, f)
    assert (j.fcheck.left, j.fcheck.right) == ((1, 1), (0, 1))
    assert conjoint_defect(m, j) is None
    searched = find_conjoint(m, f)
    assert (searched.fcheck.left, searched.fcheck.right) == (j.fcheck.left, j.fcheck.right)


def test_every_span_companion_is_theta_connected():
    m = span(2, 3)
    for f in m.all_vmors():
        found = all_companions(m, f)
        assert found
        for c1, c2 in itertools.product(found, repeat=2):
            t = theta(m, c1, c2)
            assert m.is_invertible(t)


def test_cartesian_unit_and_unitors():
    T = cartesian(span())
    I = T.unit_obj()
    assert T.tensor_obj(I, I) == product(UNIT_SET, UNIT_SET)
    assert len(T.tensor_obj(I, I)) == 1
    assert T.lunit_vmor(TWO).table == (0, 1)
    assert T.runit_vmor(TWO).src.elems == ((0, ()), (1, ()))


def test_braiding_swaps_pairs():
    T = cartesian(span())
    b = T.braid_vmor(TWO, ONE)
    assert b.src.elems == ((0, 0), (1, 0))
    assert b.table == ((0, 0), (0, 1))


def test_interchanger_shuffles_pairs():
    m = span()
    T = cartesian(m)
    M1 = Span(TWO, TWO, (0, 1), (0, 1), (1, 1))
    M2 = Span(TWO, ONE, (0,), (1,), (0,))
    N1 = Span(ONE, TWO, (0, 1), (0, 0), (0, 1))
    N2 = Span(TWO, ONE, (0, 1), (0, 1), (0, 0))
    x = T.interchanger(M1, N1, M2, N2)
    top = m.hcomp(T.tensor_hcell(M1, N1), T.tensor_hcell(M2, N2))
    expected = []
    for (p, q) in top.apex:
        (x1, y1), (x2, y2) = p, q
        expected.append(((x1, x2), (y1, y2)))
    assert x.payload == tuple(expected)
    bottom = T.tensor_hcell(m.hcomp(M1, M2), m.hcomp(N1, N2))
    assert sorted(x.payload) == sorted(bottom.apex)
    assert m.is_invertible(x)


def test_non_invertible_square_raises():
    m = span()
    M = Span(TWO, TWO, (0, 1), (0, 0), (0, 0))
    N = Span(TWO, TWO, (0,), (0,), (0,))
    s = m.squares(M, m.vid(TWO), m.vid(TWO), N)[0]
    with pytest.raises(NotInvertible):
        m.sq_inverse(s)


def test_hop_companion_is_conjoint():
    m = span()
    f = Fn(TWO, ONE, (0, 0))
    c = find_companion(HOpModel(m), f)
    j = find_conjoint(m, f)
    assert c.fhat == j.fcheck
    assert conjoint_defect(m, j) is None


@pytest.mark.parametrize("m", [rel(2), span(2, 2)], ids=["rel2", "span2"])
def test_cartesian_structure_is_symmetric(m):
    T = cartesian(m)
    budget = SampleBudget(limit=200, samples=200)
    for rep in (verify_monoidal(T, budget), verify_braided(T, budget), verify_symmetric(T, budget)):
        assert rep.ok, rep.summary()
