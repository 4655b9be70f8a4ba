import itertools

import pytest
from support import cartesian, fixture, rel, span

from dblcoh.functor import verify_functor
from dblcoh.models.sets import FinSet
from dblcoh.models.span import Span
from dblcoh.models.table import load_table, table_monoidal
from dblcoh.monoidal import (braid_transformation, monoidal_structure, swap_functor, verify_braided,
                             verify_monoidal, verify_symmetric)
from dblcoh.report import SampleBudget

ONE, TWO = FinSet.range(1), FinSet.range(2)
SMALL = SampleBudget(limit=50, samples=50, seed=5)
ALL = SampleBudget(limit=2000)


def test_tensor_of_spans_is_product_span():
    m = span()
    T = cartesian(m)
    M = Span(TWO, ONE, ("p", "q"), (0, 1), (0, 0))
    N = Span(ONE, TWO, ("r",), (0,), (1,))
    P = T.tensor_hcell(M, N)
    assert P.apex == (("p", "r"), ("q", "r"))
    assert P.left == ((0, 0), (1, 0))
    assert P.right == ((0, 1), (0, 1))


def test_associator_rebrackets():
    T = cartesian(span())
    a = T.assoc_vmor(TWO, ONE, TWO)
    for (x, y), z in a.src.elems:
        assert a(((x, y), z)) == (x, (y, z))


def test_braiding_is_involutive():
    m = span()
    T = cartesian(m)
    for A, B in itertools.product(m.objects(), repeat=2):
        assert m.vcomp(T.braid_vmor(A, B), T.braid_vmor(B, A)) == m.vid(T.tensor_obj(A, B))


def test_tensor_functors_are_functors():
    m = span(2, 2)
    T = cartesian(m)
    for F in (T.tensor_functor, T.tensor_left(TWO), swap_functor(m)):
        rep = verify_functor(F, SMALL)
        assert rep.ok, rep.summary()
    assert braid_transformation(T).name == "s"


def test_monoidal_structure_needs_builtin():
    with pytest.raises(TypeError):
        monoidal_structure(load_table(fixture("two_group")))


def test_two_group_is_symmetric_monoidal():
    T = table_monoidal(load_table(fixture("two_group")))
    for verify in (verify_monoidal, verify_braided, verify_symmetric):
        rep = verify(T, ALL)
        assert rep.ok, rep.summary()
        assert all(r.coverage == "exhaustive" for r in rep.results)


@pytest.mark.parametrize("name, verify, expected", [
    ("broken_interchange", verify_monoidal, "tensor F_(.) natural"),
    ("broken_hexagon", verify_monoidal, "associator respects interchanger"),
    ("non_involutive", verify_symmetric, None),
])
def test_corrupted_two_groups_fail(name, verify, expected):
    T = table_monoidal(load_table(fixture(name)))
    rep = verify(T, ALL)
    assert not rep.ok
    bad = rep.failures()
    assert all(r.counterexample for r in bad)
    if expected:
        assert expected in {r.name for r in bad}


def test_rel_tensor_is_cartesian():
    m = rel(2)
    T = cartesian(m)
    U = m.hunit(TWO)
    assert T.tensor_hcell(U, U) == m.hunit(T.tensor_obj(TWO, TWO))
    assert T.unit_obj().elems == ((),)
