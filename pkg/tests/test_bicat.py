import random

import pytest
from support import cartesian, rel, span

from dblcoh.bicat import (chi, compose_transformations, functor_on_transformations, h_on_functor,
                          horizontal_bicategory, identity_transformation, iota, lift_transformation, mate,
                          oplax_cell_is_theta, unmate, verify_bicategory, verify_chi, verify_choice_comparison,
                          verify_lift, verify_local_functor, verify_pseudofunctor)
from dblcoh.companions import companion_of_identity, relabeled_choices, standard_choices, standard_companion, theta
from dblcoh.core import unit_leaf
from dblcoh.functor import identity_functor, verify_transformation
from dblcoh.models.rel import Relation
from dblcoh.models.sets import FinSet, Fn
from dblcoh.monoidal import braid_transformation
from dblcoh.report import SampleBudget

TWO = FinSet.range(2)
SMALL = SampleBudget(limit=30, samples=30, seed=1)


def test_rel_two_cells_are_containments():
    H = horizontal_bicategory(rel(2))
    M = Relation.of(TWO, TWO, [(0, 1)])
    N = Relation.of(TWO, TWO, [(0, 1), (1, 1)])
    assert len(H.two_cells(M, N)) == 1
    assert H.two_cells(N, M) == []
    assert H.assoc(M, N, M) == H.vcomp2(H.assoc(M, N, M), H.assoc(M, N, M))


@pytest.mark.parametrize("m", [rel(2), span(2, 2)], ids=["rel2", "span2"])
def test_horizontal_bicategory_axioms(m):
    rep = verify_bicategory(horizontal_bicategory(m), SampleBudget(limit=300, samples=300))
    assert rep.ok, rep.summary()
    assert {"pentagon", "triangle"} <= {r.name for r in rep.results}


def test_span_pentagon_is_not_strict():
    H = horizontal_bicategory(span())
    rng = random.Random(2)
    M = H.hom(TWO, TWO)[5]
    assert H.assoc(M, M, M).top != H.assoc(M, M, M).bottom
    s = H.random_two_cell(rng, M)
    assert s is None or s.top == M


@pytest.mark.parametrize("which", ["identity", "tensor_left"])
def test_h_on_functor_is_pseudofunctor(which):
    m = span()
    F = identity_functor(m) if which == "identity" else cartesian(m).tensor_left(TWO)
    rep = verify_pseudofunctor(h_on_functor(F), SMALL)
    assert rep.ok, rep.summary()


def _braid(m):
    return braid_transformation(cartesian(m))


@pytest.mark.parametrize("m", [rel(2), span(2, 2)], ids=["rel2", "span2"])
def test_braid_is_a_transformation(m):
    assert verify_transformation(_braid(m), SMALL).ok


@pytest.mark.parametrize("m", [rel(2), span(2, 2)], ids=["rel2", "span2"])
def test_lift_of_braiding_is_pseudonatural(m):
    L = lift_transformation(_braid(m), standard_choices(m))
    rep = verify_lift(L, SMALL, pseudo=True)
    assert rep.ok, rep.summary()
    assert "pseudonatural: alpha_hat_M invertible" in {r.name for r in rep.results}


def test_lift_of_identity_transformation():
    m = span()
    F = identity_functor(m)
    L = lift_transformation(identity_transformation(F), standard_choices(m))
    assert verify_lift(L, SMALL).ok
    A = TWO
    assert L.hat_obj(A).fhat == standard_companion(m, m.vid(A)).fhat


def test_local_functor_coherence():
    m = span(2, 2)
    a = _braid(m)
    b = identity_transformation(a.target)
    P = functor_on_transformations(standard_choices(m))
    rep = verify_local_functor(P, a, b, b, SMALL)
    assert rep.ok, rep.summary()
    assert len(rep.results) == 3
    f = m.vid(TWO)
    assert m.is_invertible(P.comp_constraint(f, f))
    assert m.is_invertible(P.unit_constraint(TWO))


def test_local_functor_with_relabeled_choices():
    m = span(2, 2)
    a = _braid(m)
    b = identity_transformation(a.target)
    rep = verify_local_functor(functor_on_transformations(relabeled_choices(m)), a, b, None, SMALL)
    assert rep.ok, rep.summary()


def test_mate_of_identity_modification_and_double_mate():
    m = span(2, 2)
    a = _braid(m)
    L = lift_transformation(a, standard_choices(m))
    ident = lambda A: m.sq_id(L.hat_obj(A).fhat)
    for A in [(TWO, TWO), (TWO, FinSet.range(1))]:
        assert m.sq_eq(mate(L, L, ident)(A), m.sq_id(L.check_obj(A).fcheck))
        assert m.sq_eq(unmate(L, L, mate(L, L, ident))(A), ident(A))


def test_choice_comparison_between_relabelings():
    m = span(2, 2)
    rep = verify_choice_comparison(_braid(m), standard_choices(m), relabeled_choices(m), SMALL)
    assert rep.ok, rep.summary()
    assert all(r.instances > 1 for r in rep.results)


@pytest.mark.parametrize("m", [rel(2), span(2, 2)], ids=["rel2", "span2"])
def test_choice_comparison_with_itself(m):
    assert verify_choice_comparison(_braid(m), standard_choices(m), standard_choices(m), SMALL).ok


def test_relabeling_needs_span():
    with pytest.raises(AttributeError):
        relabeled_choices(rel(2)).companion(rel(2).vid(TWO))


def test_chi_and_iota():
    m = span(2, 2)
    T = cartesian(m)
    ch = standard_choices(m)
    La = lift_transformation(_braid(m), ch)
    F = T.tensor_functor
    Lb = lift_transformation(identity_transformation(identity_functor(m)), ch)
    rep = verify_chi(La, Lb, SMALL)
    assert rep.ok, rep.summary()
    i = iota(ch, TWO)
    assert i.square == theta(m, ch.companion(m.vid(TWO)), companion_of_identity(m, TWO))
    assert i.bottom == unit_leaf(m, TWO)
    c = chi(La, Lb, (TWO, TWO))
    assert m.is_invertible(c.square)
    assert F.obj((TWO, TWO)) == T.tensor_obj(TWO, TWO)


@pytest.mark.parametrize("m", [rel(2), span(2, 2)], ids=["rel2", "span2"])
def test_oplax_cell_at_companion_is_theta(m):
    a = _braid(m)
    L = lift_transformation(a, standard_choices(m))
    D = a.source.domain
    f = Fn(TWO, FinSet.range(1), (0, 0))
    g = m.vid(TWO)
    for pair in [(f, g), (g, f), (g, g)]:
        c = standard_companion(D, pair)
        hat, th = oplax_cell_is_theta(L, c)
        assert m.sq_eq(hat, th)


def test_compose_transformations_components():
    m = span(2, 2)
    a = _braid(m)
    b = identity_transformation(a.target)
    ab = compose_transformations(a, b)
    A = (TWO, FinSet.range(1))
    assert ab.obj(A) == m.vcomp(a.obj(A), b.obj(A))
    assert verify_transformation(ab, SMALL).ok
