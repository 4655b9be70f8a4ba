"""Invariants checked on hypothesis-drawn instances of the small models."""

import random

from hypothesis import assume, given, settings
from hypothesis import strategies as st
from support import presentations, random_presentation, random_vmor, rel, span

from dblcoh.companions import companion_defect, standard_companion, theta
from dblcoh.core import canonical_constraint, flatten, leaf, leaves, node, unit_leaf
from dblcoh.models.rel import Relation
from dblcoh.models.sets import FinSet

seeds = st.integers(min_value=0, max_value=2**32 - 1)
SETTINGS = settings(max_examples=60, deadline=None)


def _grid(m, rng):
    """Four squares ``a | b`` over ``c | d``, or ``None`` when the draw does not fit."""
    a = m.random_square(rng)
    if a is None:
        return None
    b = m.random_square(rng, left=a.right)
    c = m.random_square(rng, top=a.bottom) if b is not None else None
    if c is None:
        return None
    d = m.random_square(rng, top=b.bottom, left=c.right)
    return None if d is None else (a, b, c, d)


@SETTINGS
@given(seeds, st.sampled_from(["rel", "span"]))
def test_interchange(seed, which):
    m = rel(2) if which == "rel" else span(2, 2)
    g = _grid(m, random.Random(seed))
    assume(g is not None)
    a, b, c, d = g
    lhs = m.sq_vcomp(m.sq_hcomp(a, b), m.sq_hcomp(c, d))
    rhs = m.sq_hcomp(m.sq_vcomp(a, c), m.sq_vcomp(b, d))
    assert m.sq_eq(lhs, rhs)


@SETTINGS
@given(seeds)
def test_theta_is_a_groupoid(seed):
    m = span(2, 3)
    rng = random.Random(seed)
    c = standard_companion(m, random_vmor(m, rng))
    c1, c2, c3 = (random_presentation(m, c, rng) for _ in range(3))
    assert m.sq_eq(m.sq_vcomp(theta(m, c1, c2), theta(m, c2, c3)), theta(m, c1, c3))
    assert m.sq_eq(m.sq_vcomp(theta(m, c1, c2), theta(m, c2, c1)), m.sq_id(c1.fhat))


def _tree(m, cells, rng, A):
    """A random bracketing of ``cells`` with units sprinkled in; ``A`` is the source object."""
    if not cells:
        return unit_leaf(m, A)
    if len(cells) == 1 and rng.random() < 0.7:
        return leaf(m, cells[0])
    k = rng.randint(0, len(cells))
    left, right = cells[:k], cells[k:]
    mid = m.htgt(left[-1]) if left else A
    return node(_tree(m, left, rng, A), _tree(m, right, rng, mid))


def _chain(m, rng, n):
    A = rng.choice(list(m.objects()))
    out = []
    for _ in range(n):
        M = m.random_hcell(rng, A)
        out.append(M)
        A = m.htgt(M)
    return out


@SETTINGS
@given(seeds, st.integers(min_value=0, max_value=4))
def test_flatten_is_idempotent_and_keeps_leaves(seed, n):
    m = span(2, 2)
    rng = random.Random(seed)
    cells = _chain(m, rng, n)
    A = m.hsrc(cells[0]) if cells else FinSet.range(1)
    t = _tree(m, cells, rng, A)
    f = flatten(m, t)
    assert flatten(m, f) == f
    assert tuple(leaves(f)) == tuple(cells)


@SETTINGS
@given(seeds, st.integers(min_value=1, max_value=3))
def test_canonical_constraints_are_coherent(seed, n):
    m = span(2, 2)
    rng = random.Random(seed)
    cells = _chain(m, rng, n)
    A = m.hsrc(cells[0])
    s, t, u = (_tree(m, cells, rng, A) for _ in range(3))
    st_, tu, su = (canonical_constraint(m, x, y) for x, y in ((s, t), (t, u), (s, u)))
    assert m.sq_eq(m.sq_vcomp(st_, tu), su)
    assert m.sq_eq(m.sq_vcomp(st_, canonical_constraint(m, t, s)), m.sq_id(st_.top))


@SETTINGS
@given(seeds)
def test_evaluation_is_deterministic(seed):
    m = span(2, 2)
    cells = _chain(m, random.Random(seed), 3)
    s = _tree(m, cells, random.Random(seed + 1), m.hsrc(cells[0]))
    t = _tree(m, cells, random.Random(seed + 2), m.hsrc(cells[0]))
    assert canonical_constraint(m, s, t) == canonical_constraint(span(2, 2), s, t)


def _rel_compose(M, N):
    return {(a, c) for a, b in M.pairs for b2, c in N.pairs if b == b2}


@SETTINGS
@given(seeds)
def test_relation_composite_matches_set_oracle(seed):
    m = rel(2)
    rng = random.Random(seed)
    M, N, P = _chain(m, rng, 3)
    assert set(m.hcomp(M, N).pairs) == _rel_compose(M, N)
    assert m.hcomp(m.hcomp(M, N), P) == m.hcomp(M, m.hcomp(N, P))
    assert m.hcomp(m.hunit(m.hsrc(M)), M) == M == m.hcomp(M, m.hunit(m.htgt(M)))
    assert isinstance(M, Relation)


@SETTINGS
@given(seeds)
def test_span_composition_laws(seed):
    m = span(2, 2)
    rng = random.Random(seed)
    M, N, P = _chain(m, rng, 3)
    MN = m.hcomp(M, N)
    # pullback size: pairs of apex points over a common middle element
    assert len(MN.apex) == sum(M.r(x) == N.l(y) for x in M.apex for y in N.apex)
    a = m.assoc(M, N, P)
    assert m.is_invertible(a)
    assert len(a.top.apex) == len(a.bottom.apex)
    for u in (m.src_unitor(M), m.tgt_unitor(M)):
        assert m.is_invertible(u) and u.bottom == M


@SETTINGS
@given(seeds)
def test_presentations_are_companions(seed):
    m = span(2, 2)
    rng = random.Random(seed)
    c = standard_companion(m, random_vmor(m, rng))
    ps = presentations(m, c)
    assert all(p.f == c.f and companion_defect(m, p) is None for p in ps)
    # an empty apex has a single renaming, tagged or not
    assert len({p.fhat for p in ps}) == (len(ps) if c.fhat.apex else 1)
