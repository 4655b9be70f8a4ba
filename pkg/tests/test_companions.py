import itertools
import random

import pytest
from support import cartesian, presentations, rel, span

from dblcoh.companions import (CompanionMismatch, ConjointPair, NotInverse, adjunction, adjunction_defect,
                               companion_defect, companion_of_identity, compose_companions, conjoint_defect,
                               conjoint_of_inverse, find_companion, map_companion, rel_companion, span_companion,
                               standard_companion, standard_conjoint, tensor_companions, theta, theta_by_search,
                               theta_condition, triangle_sides, verify_companion, verify_conjoint)
from dblcoh.core import FrameMismatch, Square, is_globular
from dblcoh.functor import identity_functor
from dblcoh.models.rel import Relation, graph
from dblcoh.models.sets import FinSet, Fn
from dblcoh.models.span import Span

ONE, TWO = FinSet.range(1), FinSet.range(2)
SWAP = Fn(TWO, TWO, (1, 0))
CONST = Fn(TWO, ONE, (0, 0))


def test_identity_companion_passes():
    for m in (rel(2), span()):
        for A in m.objects():
            c = companion_of_identity(m, A)
            assert c.fhat == m.hunit(A)
            assert verify_companion(m, c).ok


def test_identity_companions_concretely():
    assert companion_of_identity(rel(1), ONE).fhat == Relation.of(ONE, ONE, [(0, 0)])
    c = companion_of_identity(span(), TWO)
    assert (c.fhat.left, c.fhat.right) == ((0, 1), (0, 1))
    assert c.down == span().sq_id(c.fhat) == c.up


def test_span_companions_up_to_three():
    m = span(3, 3)
    for f in m.all_vmors():
        assert verify_companion(m, span_companion(m, f)).ok
        assert verify_conjoint(m, standard_conjoint(m, f)).ok


def test_broken_down_square_is_reported():
    m = span()
    c = span_companion(m, SWAP)
    d = c.down
    bad = Square(d.top, d.left, d.right, d.bottom, tuple(reversed(d.payload)))
    broken = type(c)(c.f, c.fhat, bad, c.up)
    rep = verify_companion(m, broken)
    assert not rep.ok
    assert rep.failures()[0].counterexample
    assert "down square" in companion_defect(m, broken)
    # a commuting but wrong square: the constant map's down square on a swapped apex
    c = span_companion(m, CONST)
    other = presentations(m, c)[1]
    mixed = type(c)(c.f, c.fhat, c.down, other.up)
    with pytest.raises(FrameMismatch):
        verify_companion(m, mixed)


def test_wrong_frame_raises():
    m = span()
    c = span_companion(m, SWAP)
    with pytest.raises(FrameMismatch):
        verify_companion(m, type(c)(c.f, c.fhat, c.up, c.up))


def test_theta_of_self_is_identity():
    m = span()
    for f in m.all_vmors():
        c = span_companion(m, f)
        assert theta(m, c, c) == m.sq_id(c.fhat)


def test_theta_between_relabelings_is_the_relabeling():
    m = span()
    c = span_companion(m, CONST)
    for c2 in presentations(m, c):
        t = theta(m, c, c2)
        expected = dict(zip(c.fhat.apex, c2.up.payload))
        assert t.payload == tuple(expected[x] for x in c.fhat.apex)
        assert theta_by_search(m, c, c2) == [t]
        assert is_globular(m, t)
        assert m.sq_vcomp(t, theta(m, c2, c)) == m.sq_id(c.fhat)


def test_theta_satisfies_its_condition():
    m = span()
    c = span_companion(m, CONST)
    assert theta_condition(m, c, c, m.sq_id(c.fhat))
    for c2 in presentations(m, c):
        assert theta_condition(m, c, c2, theta(m, c, c2))
        assert theta_condition(m, c2, c, theta(m, c2, c))


def test_theta_needs_same_morphism():
    m = span()
    with pytest.raises(CompanionMismatch):
        theta(m, span_companion(m, SWAP), span_companion(m, m.vid(TWO)))


def test_theta_composes():
    m = span()
    rng = random.Random(4)
    for f in m.all_vmors():
        c = span_companion(m, f)
        ps = presentations(m, c)
        for _ in range(5):
            c1, c2, c3 = (rng.choice(ps) for _ in range(3))
            assert m.sq_vcomp(theta(m, c1, c2), theta(m, c2, c3)) == theta(m, c1, c3)


def test_composite_with_identity_is_unit_constraint():
    m = span()
    c = span_companion(m, SWAP)
    right = compose_companions(m, c, companion_of_identity(m, TWO))
    left = compose_companions(m, companion_of_identity(m, TWO), c)
    assert theta(m, right, c) == m.tgt_unitor(c.fhat)
    assert theta(m, left, c) == m.src_unitor(c.fhat)


def test_composite_companion_in_span():
    m = span()
    g = Fn(ONE, TWO, (1,))
    cf, cg = span_companion(m, CONST), span_companion(m, g)
    c = compose_companions(m, cf, cg)
    assert len(c.fhat.apex) == 2
    assert c.f == CONST.then(g)
    assert verify_companion(m, c).ok


def test_composite_companion_in_rel_is_graph():
    m = rel(2)
    for f, g in itertools.product(m.vmors(TWO, ONE), m.vmors(ONE, TWO)):
        c = compose_companions(m, rel_companion(m, f), rel_companion(m, g))
        assert c.fhat == graph(f.then(g))
        assert companion_defect(m, c) is None


def test_composite_needs_composable_pair():
    m = span()
    with pytest.raises(FrameMismatch):
        compose_companions(m, span_companion(m, CONST), span_companion(m, SWAP))


def test_map_companion_identity_functor():
    m = span()
    c = span_companion(m, SWAP)
    mapped = map_companion(identity_functor(m), c)
    assert (mapped.f, mapped.fhat) == (c.f, c.fhat)
    assert m.sq_eq(mapped.down, c.down) and m.sq_eq(mapped.up, c.up)


def test_map_companion_tensor_left():
    m = span()
    T = cartesian(m)
    F = T.tensor_left(TWO)
    c = span_companion(m, CONST)
    mapped = map_companion(F, c)
    assert len(mapped.fhat.apex) == len(c.fhat.apex) * 2
    assert companion_defect(m, mapped) is None
    c2 = presentations(m, c)[3]
    assert theta(m, mapped, map_companion(F, c2)) == F.square(theta(m, c, c2))


def test_tensor_companions():
    m = span()
    T = cartesian(m)
    i = Fn(ONE, TWO, (0,))
    c = tensor_companions(T, span_companion(m, i), span_companion(m, SWAP))
    assert c.f == T.tensor_vmor(i, SWAP)
    assert c.fhat.apex == tuple((x, y) for x in (0,) for y in (0, 1))
    assert companion_defect(m, c) is None
    ids = tensor_companions(T, companion_of_identity(m, ONE), companion_of_identity(m, TWO))
    assert ids.f == m.vid(T.tensor_obj(ONE, TWO))
    t = theta(m, ids, companion_of_identity(m, T.tensor_obj(ONE, TWO)))
    assert m.is_invertible(t)


def test_conjoint_of_inverse():
    m = span()
    c = span_companion(m, SWAP)
    j = conjoint_of_inverse(m, c, SWAP)
    assert isinstance(j, ConjointPair) and j.fcheck == c.fhat
    assert conjoint_defect(m, j) is None
    assert (standard_conjoint(m, SWAP).fcheck.left, standard_conjoint(m, SWAP).fcheck.right) == \
        (c.fhat.right, c.fhat.left)
    ident = conjoint_of_inverse(m, companion_of_identity(m, TWO), m.vid(TWO))
    assert ident.fcheck == m.hunit(TWO)
    r = rel(2)
    jr = conjoint_of_inverse(r, rel_companion(r, SWAP), SWAP)
    assert jr.fcheck == graph(SWAP) == graph(SWAP).transpose()
    assert conjoint_defect(r, jr) is None


def test_conjoint_of_inverse_rejects_non_inverse():
    m = span()
    with pytest.raises(NotInverse):
        conjoint_of_inverse(m, span_companion(m, SWAP), m.vid(TWO))


def test_adjunction_identity_and_inclusion():
    m = span()
    adj = adjunction(m, companion_of_identity(m, TWO), standard_conjoint(m, m.vid(TWO)))
    assert adjunction_defect(m, adj, invertible=True) is None
    i = Fn(ONE, TWO, (1,))
    adj = adjunction(m, span_companion(m, i), standard_conjoint(m, i))
    assert adj.unit.payload == tuple((a, a) for a in adj.unit.top.apex)
    zig, zag = triangle_sides(m, adj)
    assert zig == m.sq_id(adj.left) and zag == m.sq_id(adj.right)


def test_adjunction_of_bijection_is_invertible():
    m = span()
    adj = adjunction(m, span_companion(m, SWAP), standard_conjoint(m, SWAP))
    assert adjunction_defect(m, adj, invertible=True) is None
    assert m.is_invertible(adj.unit) and m.is_invertible(adj.counit)


def test_adjunction_of_non_bijection_is_not_invertible():
    m = span()
    adj = adjunction(m, span_companion(m, CONST), standard_conjoint(m, CONST))
    assert adjunction_defect(m, adj) is None
    assert adjunction_defect(m, adj, invertible=True) is not None


def test_adjunction_needs_matching_morphisms():
    m = span()
    with pytest.raises(CompanionMismatch):
        adjunction(m, span_companion(m, SWAP), standard_conjoint(m, m.vid(TWO)))


def test_search_agrees_with_closed_form():
    m = span()
    for f in m.all_vmors():
        c = find_companion(m, f)
        assert c is not None
        assert m.is_invertible(theta(m, c, standard_companion(m, f)))


def test_no_companion_in_walking_arrow():
    from dblcoh.models.table import load_table
    from support import fixture

    m = load_table(fixture("nonfibrant"))
    f = next(f for f in m.all_vmors() if f == "f")
    assert find_companion(m, f) is None
    assert find_companion(m, m.vid(m.vsrc(f))) is not None


def test_empty_span_companion():
    m = span()
    E = FinSet.range(0)
    f = Fn(E, TWO, ())
    c = span_companion(m, f)
    assert c.fhat == Span(E, TWO, (), (), ())
    assert companion_defect(m, c) is None
