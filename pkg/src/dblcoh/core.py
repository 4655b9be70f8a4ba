"""Double-category data model, square algebra, coherence normalization and pasting.

Conventions used throughout the package:

* every composite is written in *diagrammatic* order: ``vcomp(f, g)`` is
  "f then g" and ``hcomp(M, N)`` is the 1-cell ``A -M-> B -N-> C``;
* a :class:`Square` stores its frame as ``top: M``, ``left: f``,
  ``right: g`` and ``bottom: N``;
* ``src_unitor(M)`` is the constraint ``U_A ; M -> M`` and ``tgt_unitor(M)``
  is ``M ; U_B -> M``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Any, Hashable, Iterable, Iterator, Sequence

from .report import Report, SampleBudget, run_axiom


class FrameMismatch(ValueError):
    def __init__(self, message: str, path: tuple = ()):
        self.path = tuple(path)
        where = f" at {'/'.join(map(str, self.path))}" if self.path else ""
        super().__init__(message + where)


class LeafMismatch(ValueError):
    pass


class NotInvertible(ValueError):
    pass


@dataclass(frozen=True)
class Square:
    top: Hashable
    left: Hashable
    right: Hashable
    bottom: Hashable
    payload: Any = None

    @property
    def frame(self) -> tuple:
        return (self.top, self.left, self.right, self.bottom)


def short(x: Any, width: int = 160) -> str:
    s = repr(x)
    return s if len(s) <= width else s[: width - 3] + "..."


class DoubleCategory:
    """Behavioral interface of a pseudo double category.

    Subclasses implement the primitive cell operations; frame checking and
    every derived construction live in module-level functions.
    """

    name = "double category"
    # at most one square per frame (parallel pastings always agree)
    locally_posetal = False

    # enumeration of the finite universe
    def objects(self) -> Sequence:
        raise NotImplementedError

    def vmors(self, A, B) -> Sequence:
        raise NotImplementedError

    def hcells(self, A, B) -> Sequence:
        raise NotImplementedError

    def squares(self, top, left, right, bottom) -> Sequence[Square]:
        raise NotImplementedError

    # frames
    def vsrc(self, f):
        raise NotImplementedError

    def vtgt(self, f):
        raise NotImplementedError

    def hsrc(self, M):
        raise NotImplementedError

    def htgt(self, M):
        raise NotImplementedError

    # vertical category D_0
    def vid(self, A):
        raise NotImplementedError

    def vcomp(self, f, g):
        raise NotImplementedError

    def vinverse(self, f):
        """Inverse of ``f`` in D_0 or ``None``."""
        return None

    # horizontal structure
    def hunit(self, A):
        raise NotImplementedError

    def hcomp(self, M, N):
        raise NotImplementedError

    # squares
    def sq_id(self, M) -> Square:
        raise NotImplementedError

    def sq_unit(self, f) -> Square:
        raise NotImplementedError

    def sq_vcomp(self, a: Square, b: Square) -> Square:
        raise NotImplementedError

    def sq_hcomp(self, a: Square, b: Square) -> Square:
        raise NotImplementedError

    def sq_inverse(self, a: Square) -> Square:
        raise NotImplementedError

    def sq_eq(self, a: Square, b: Square) -> bool:
        return a == b

    # constraints
    def assoc(self, M, N, P) -> Square:
        raise NotImplementedError

    def src_unitor(self, M) -> Square:
        raise NotImplementedError

    def tgt_unitor(self, M) -> Square:
        raise NotImplementedError

    # derived enumeration and sampling
    def all_vmors(self) -> Iterator:
        for A in self.objects():
            for B in self.objects():
                yield from self.vmors(A, B)

    def all_hcells(self) -> Iterator:
        for A in self.objects():
            for B in self.objects():
                yield from self.hcells(A, B)

    def vmors_from(self, A) -> list:
        return [f for B in self.objects() for f in self.vmors(A, B)]

    def hcells_from(self, A) -> list:
        return [M for B in self.objects() for M in self.hcells(A, B)]

    def all_squares(self) -> Iterator[Square]:
        for M in self.all_hcells():
            for f in self.vmors_from(self.hsrc(M)):
                for g in self.vmors_from(self.htgt(M)):
                    for N in self.hcells(self.vtgt(f), self.vtgt(g)):
                        yield from self.squares(M, f, g, N)

    def random_object(self, rng: random.Random):
        return rng.choice(list(self.objects()))

    def random_vmor(self, rng: random.Random, src=None):
        src = self.random_object(rng) if src is None else src
        options = self.vmors_from(src)
        return rng.choice(options) if options else None

    def random_hcell(self, rng: random.Random, src=None):
        src = self.random_object(rng) if src is None else src
        options = self.hcells_from(src)
        return rng.choice(options) if options else None

    def random_square(self, rng: random.Random, top=None, left=None, tries: int = 40):
        """A random square with the given top (and optionally left) boundary."""
        if top is None:
            top = self.random_hcell(rng, None if left is None else self.vsrc(left))
        if top is None:
            return None
        for _ in range(tries):
            f = left if left is not None else self.random_vmor(rng, self.hsrc(top))
            g = self.random_vmor(rng, self.htgt(top))
            if f is None or g is None:
                return None
            bottoms = list(self.hcells(self.vtgt(f), self.vtgt(g)))
            rng.shuffle(bottoms)
            for N in bottoms:
                found = self.squares(top, f, g, N)
                if found:
                    return rng.choice(list(found))
        return self.sq_id(top) if left is None or left == self.vid(self.hsrc(top)) else None


# frame-checked square algebra

def compose_v(m: DoubleCategory, a: Square, b: Square, path: tuple = ()) -> Square:
    """``a`` above ``b``."""
    if a.bottom != b.top:
        raise FrameMismatch(f"bottom {short(a.bottom)} does not meet top {short(b.top)}", path)
    return m.sq_vcomp(a, b)


def compose_h(m: DoubleCategory, a: Square, b: Square, path: tuple = ()) -> Square:
    """``a`` to the left of ``b``."""
    if a.right != b.left:
        raise FrameMismatch(f"right edge {short(a.right)} does not meet left edge {short(b.left)}", path)
    return m.sq_hcomp(a, b)


def vcompose_all(m: DoubleCategory, *squares: Square) -> Square:
    out = squares[0]
    for i, s in enumerate(squares[1:], 1):
        out = compose_v(m, out, s, (i,))
    return out


def is_globular(m: DoubleCategory, s: Square) -> bool:
    return s.left == m.vid(m.hsrc(s.top)) and s.right == m.vid(m.htgt(s.top))


def check_frame(m: DoubleCategory, s: Square) -> str | None:
    """Frame compatibility of a square's boundary, ``None`` when fine."""
    if m.hsrc(s.top) != m.vsrc(s.left):
        return "S(top) != S(left)"
    if m.htgt(s.top) != m.vsrc(s.right):
        return "T(top) != S(right)"
    if m.hsrc(s.bottom) != m.vtgt(s.left):
        return "S(bottom) != T(left)"
    if m.htgt(s.bottom) != m.vtgt(s.right):
        return "T(bottom) != T(right)"
    return None


# horizontal trees and coherence normalization

@dataclass(frozen=True)
class Leaf:
    cell: Hashable
    src: Hashable
    tgt: Hashable
    unit: bool = False


@dataclass(frozen=True)
class Node:
    left: "HTree"
    right: "HTree"
    src: Hashable
    tgt: Hashable


HTree = Leaf | Node


def leaf(m: DoubleCategory, M) -> Leaf:
    """An opaque leaf; formal units come only from :func:`unit_leaf`."""
    return Leaf(M, m.hsrc(M), m.htgt(M))


def unit_leaf(m: DoubleCategory, A) -> Leaf:
    return Leaf(m.hunit(A), A, A, True)


def node(a: HTree, b: HTree) -> Node:
    if a.tgt != b.src:
        raise FrameMismatch(f"tree endpoints {short(a.tgt)} and {short(b.src)} differ")
    return Node(a, b, a.src, b.tgt)


def htree(m: DoubleCategory, *parts) -> HTree:
    """Left-associated tree from hcells or subtrees."""
    trees = [p if isinstance(p, (Leaf, Node)) else leaf(m, p) for p in parts]
    out = trees[0]
    for t in trees[1:]:
        out = node(out, t)
    return out


def leaves(t: HTree) -> tuple:
    if isinstance(t, Leaf):
        return () if t.unit else (t.cell,)
    return leaves(t.left) + leaves(t.right)


def evaluate(m: DoubleCategory, t: HTree):
    if isinstance(t, Leaf):
        return t.cell
    return m.hcomp(evaluate(m, t.left), evaluate(m, t.right))


def flatten(m: DoubleCategory, t: HTree) -> HTree:
    """Drop units and right-associate; idempotent."""
    return _flat_tree(m, leaves(t), t.src)


def _flat_tree(m, cells: tuple, A) -> HTree:
    if not cells:
        return unit_leaf(m, A)
    out = leaf(m, cells[-1])
    for c in reversed(cells[:-1]):
        out = node(leaf(m, c), out)
    return out


def _flat(m, cells: tuple, A):
    return evaluate(m, _flat_tree(m, cells, A))


def _merge(m: DoubleCategory, L: tuple, R: tuple, A, B) -> Square:
    """Globular iso ``flat(L) ; flat(R) -> flat(L + R)``."""
    if not L:
        return m.src_unitor(_flat(m, R, B))
    if not R:
        return m.tgt_unitor(_flat(m, L, A))
    head, rest = L[0], L[1:]
    if not rest:
        return m.sq_id(m.hcomp(head, _flat(m, R, B)))
    mid = m.htgt(head)
    a = m.assoc(head, _flat(m, rest, mid), _flat(m, R, B))
    return m.sq_vcomp(a, m.sq_hcomp(m.sq_id(head), _merge(m, rest, R, mid, B)))


def normalize(m: DoubleCategory, t: HTree) -> Square:
    """Globular iso from ``evaluate(t)`` to ``evaluate(flatten(t))``."""
    if isinstance(t, Leaf):
        return m.sq_id(t.cell)
    a, b = normalize(m, t.left), normalize(m, t.right)
    return m.sq_vcomp(m.sq_hcomp(a, b), _merge(m, leaves(t.left), leaves(t.right), t.src, t.left.tgt))


def canonical_constraint(m: DoubleCategory, s: HTree, t: HTree) -> Square:
    """The unique structural iso between two bracketings with equal leaves."""
    if leaves(s) != leaves(t) or s.src != t.src or s.tgt != t.tgt:
        raise LeafMismatch(f"{short(leaves(s))} vs {short(leaves(t))}")
    if s == t:
        return m.sq_id(evaluate(m, s))
    cache = m.__dict__.setdefault("_canonical_cache", {})
    if (s, t) not in cache:
        if len(cache) > 20000:
            cache.clear()
        ns, nt = normalize(m, s), normalize(m, t)
        cache[s, t] = m.sq_vcomp(ns, m.sq_inverse(nt))
    return cache[s, t]


# pasting

@dataclass(frozen=True)
class Cell:
    """A square together with the bracketing of its top and bottom."""

    square: Square
    top: HTree
    bottom: HTree


UNIT = "U"


def _as_tree(m, t, M):
    if t is None:
        return leaf(m, M)
    if t == UNIT:
        A = m.hsrc(M)
        if M != m.hunit(A):
            raise FrameMismatch(f"{short(M)} is not a horizontal unit")
        return unit_leaf(m, A)
    return t


def cell(m: DoubleCategory, s: Square, top=None, bottom=None) -> Cell:
    """Wrap a square; ``top``/``bottom`` may be trees or ``UNIT`` for a formal unit."""
    return Cell(s, _as_tree(m, top, s.top), _as_tree(m, bottom, s.bottom))


def _bridge(m: DoubleCategory, lower: HTree, upper: HTree, path) -> Square | None:
    if lower == upper:
        return None
    if leaves(lower) == leaves(upper) and lower.src == upper.src and lower.tgt == upper.tgt:
        return canonical_constraint(m, lower, upper)
    if evaluate(m, lower) == evaluate(m, upper):
        return None
    raise FrameMismatch(f"cannot glue {short(leaves(lower))} onto {short(leaves(upper))}", path)


def paste_v(m: DoubleCategory, *cells: Cell, path: tuple = ()) -> Cell:
    """Stack cells top to bottom, inserting coherence isos where bracketings differ."""
    cur = cells[0]
    for i, nxt in enumerate(cells[1:], 1):
        s = cur.square
        bridge = _bridge(m, cur.bottom, nxt.top, path + (i,))
        if bridge is not None:
            s = m.sq_vcomp(s, bridge)
        elif s.bottom != nxt.square.top:
            raise FrameMismatch("vertical frames do not meet", path + (i,))
        cur = Cell(m.sq_vcomp(s, nxt.square), cur.top, nxt.bottom)
    return cur


def paste_h(m: DoubleCategory, *cells: Cell, path: tuple = ()) -> Cell:
    """Place cells left to right (left-associated)."""
    cur = cells[0]
    for i, nxt in enumerate(cells[1:], 1):
        s = compose_h(m, cur.square, nxt.square, path + (i,))
        cur = Cell(s, node(cur.top, nxt.top), node(cur.bottom, nxt.bottom))
    return cur


def reshape(m: DoubleCategory, c: Cell, top: HTree | None = None, bottom: HTree | None = None) -> Cell:
    """Re-bracket the boundary of ``c`` to the given trees."""
    top = c.top if top is None else top
    bottom = c.bottom if bottom is None else bottom
    s = c.square
    if top != c.top:
        s = m.sq_vcomp(canonical_constraint(m, top, c.top), s)
    if bottom != c.bottom:
        s = m.sq_vcomp(s, canonical_constraint(m, c.bottom, bottom))
    return Cell(s, top, bottom)


def flat_square(m: DoubleCategory, c: Cell) -> Square:
    """The square of ``c`` with both boundaries in flattened normal form."""
    return reshape(m, c, flatten(m, c.top), flatten(m, c.bottom)).square


def inverse_cell(m: DoubleCategory, c: Cell) -> Cell:
    return Cell(m.sq_inverse(c.square), c.bottom, c.top)


# pasting expressions

@dataclass(frozen=True)
class Sq:
    square: Square
    top: Any = None
    bottom: Any = None


@dataclass(frozen=True)
class VComp:
    parts: tuple


@dataclass(frozen=True)
class HComp:
    parts: tuple


@dataclass(frozen=True)
class Constraint:
    src: HTree
    tgt: HTree
    inverse: bool = False


PastingExpr = Sq | VComp | HComp | Constraint


def eval_cell(m: DoubleCategory, e: PastingExpr, path: tuple = ()) -> Cell:
    if isinstance(e, Sq):
        return cell(m, e.square, e.top, e.bottom)
    if isinstance(e, Constraint):
        s, t = (e.tgt, e.src) if e.inverse else (e.src, e.tgt)
        try:
            return Cell(canonical_constraint(m, s, t), s, t)
        except LeafMismatch as exc:
            raise FrameMismatch(str(exc), path) from exc
    kids = [eval_cell(m, p, path + (i,)) for i, p in enumerate(e.parts)]
    if isinstance(e, VComp):
        return paste_v(m, *kids, path=path)
    return paste_h(m, *kids, path=path)


def eval_pasting(m: DoubleCategory, e: PastingExpr) -> Square:
    return eval_cell(m, e).square


# verification of the double-category axioms

CITE_DBL = "pseudo double category: category laws, S/T, naturality, pentagon, triangle, interchange"


def _composable_vmors(m, n: int, rng):
    f = m.random_vmor(rng)
    if f is None:
        return None
    out = [f]
    for _ in range(n - 1):
        g = m.random_vmor(rng, m.vtgt(out[-1]))
        if g is None:
            return None
        out.append(g)
    return tuple(out)


def _composable_hcells(m, n: int, rng):
    M = m.random_hcell(rng)
    if M is None:
        return None
    out = [M]
    for _ in range(n - 1):
        N = m.random_hcell(rng, m.htgt(out[-1]))
        if N is None:
            return None
        out.append(N)
    return tuple(out)


def _chains(m, n: int, step, start) -> Iterator[tuple]:
    def go(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for nxt in step(prefix[-1]):
            yield from go(prefix + [nxt])

    for first in start():
        yield from go([first])


def _vchains(m, n):
    return lambda: _chains(m, n, lambda f: m.vmors_from(m.vtgt(f)), m.all_vmors)


def _hchains(m, n):
    return lambda: _chains(m, n, lambda M: m.hcells_from(m.htgt(M)), m.all_hcells)


def _every(cells, n: int):
    """All ``n``-tuples from ``cells()``, generated lazily so the budget can cut the stream off."""
    def go(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for x in cells():
            yield from go(prefix + [x])

    return lambda: go([])


def _below(m, a: Square) -> Iterator[Square]:
    for f in m.vmors_from(m.vtgt(a.left)):
        for g in m.vmors_from(m.vtgt(a.right)):
            for N in m.hcells(m.vtgt(f), m.vtgt(g)):
                yield from m.squares(a.bottom, f, g, N)


def _beside(m, a: Square) -> Iterator[Square]:
    for N in m.hcells_from(m.htgt(a.top)):
        for g in m.vmors_from(m.htgt(N)):
            for P in m.hcells(m.htgt(a.bottom), m.vtgt(g)):
                yield from m.squares(N, a.right, g, P)


def _hsquare_pairs(m):
    return lambda: ((a, b) for a in m.all_squares() for b in _beside(m, a))


def _schains(m, n: int):
    return lambda: _chains(m, n, lambda a: _below(m, a), m.all_squares)


def _squares_below(m, rng, n):
    a = m.random_square(rng)
    if a is None:
        return None
    out = [a]
    for _ in range(n - 1):
        b = m.random_square(rng, out[-1].bottom)
        if b is None:
            return None
        out.append(b)
    return tuple(out)


def _interchange_instance(m, rng):
    a = m.random_square(rng)
    if a is None:
        return None
    N = m.random_hcell(rng, m.htgt(a.top))
    if N is None:
        return None
    b = m.random_square(rng, N, a.right)
    if b is None:
        return None
    c = m.random_square(rng, a.bottom)
    if c is None:
        return None
    d = m.random_square(rng, b.bottom, c.right)
    if d is None:
        return None
    return a, b, c, d


def _neq(m, x: Square, y: Square, what: str) -> str | None:
    if x.frame != y.frame:
        return f"{what}: frames differ {short(x.frame)} vs {short(y.frame)}"
    if not m.sq_eq(x, y):
        return f"{what}: {short(x.payload)} != {short(y.payload)}"
    return None


def verify_double_category(m: DoubleCategory, budget: SampleBudget | None = None) -> Report:
    """Check every pseudo-double-category axiom within the budget."""
    budget = budget or SampleBudget()
    rep = Report(f"double category axioms: {m.name}")
    ax = lambda name, check, exhaustive=None, sampler=None: run_axiom(
        rep, name, CITE_DBL, check, budget, exhaustive, sampler, group="double category")
    objs = lambda: iter(m.objects())
    vm = lambda: m.all_vmors()
    hc = lambda: m.all_hcells()

    def d0_identity(f):
        A, B = m.vsrc(f), m.vtgt(f)
        if m.vcomp(m.vid(A), f) != f or m.vcomp(f, m.vid(B)) != f:
            return f"identity law fails at {short(f)}"

    def d0_assoc(t):
        f, g, h = t
        if m.vcomp(m.vcomp(f, g), h) != m.vcomp(f, m.vcomp(g, h)):
            return f"associativity fails at {short(t)}"

    def unit_frames(A):
        U = m.hunit(A)
        if m.hsrc(U) != A or m.htgt(U) != A:
            return f"S/T(U_A) != A at {short(A)}"
        if m.sq_id(U) != m.sq_unit(m.vid(A)) and not m.sq_eq(m.sq_id(U), m.sq_unit(m.vid(A))):
            return f"1_(U_A) != U_(1_A) at {short(A)}"

    def hcomp_frames(t):
        M, N = t
        MN = m.hcomp(M, N)
        if m.hsrc(MN) != m.hsrc(M) or m.htgt(MN) != m.htgt(N):
            return f"S/T of composite wrong at {short(t)}"

    def unit_functor(t):
        f, g = t
        lhs = m.sq_unit(m.vcomp(f, g))
        rhs = compose_v(m, m.sq_unit(f), m.sq_unit(g))
        return _neq(m, lhs, rhs, "U_(gf) = U_g o U_f")

    def id_square(M):
        s = m.sq_id(M)
        if not is_globular(m, s) or s.top != M or s.bottom != M:
            return f"1_M has wrong frame at {short(M)}"
        bad = check_frame(m, s)
        if bad:
            return bad

    def hcomp_ids(t):
        M, N = t
        return _neq(m, compose_h(m, m.sq_id(M), m.sq_id(N)), m.sq_id(m.hcomp(M, N)), "1_M (.) 1_N = 1_(M;N)")

    def constraint_frames(t):
        M, N, P = t
        for name, s, top, bot in (
            ("assoc", m.assoc(M, N, P), m.hcomp(m.hcomp(M, N), P), m.hcomp(M, m.hcomp(N, P))),
            ("src_unitor", m.src_unitor(M), m.hcomp(m.hunit(m.hsrc(M)), M), M),
            ("tgt_unitor", m.tgt_unitor(M), m.hcomp(M, m.hunit(m.htgt(M))), M),
        ):
            if s.top != top or s.bottom != bot or not is_globular(m, s):
                return f"{name} has wrong frame at {short(t)}"
            inv = m.sq_inverse(s)
            bad = _neq(m, compose_v(m, s, inv), m.sq_id(top), f"{name} invertible") or _neq(
                m, compose_v(m, inv, s), m.sq_id(bot), f"{name} invertible")
            if bad:
                return bad

    def pentagon(t):
        M, N, P, Q = t
        h = m.hcomp
        lhs = compose_v(m, m.assoc(h(M, N), P, Q), m.assoc(M, N, h(P, Q)))
        rhs = vcompose_all(
            m,
            compose_h(m, m.assoc(M, N, P), m.sq_id(Q)),
            m.assoc(M, h(N, P), Q),
            compose_h(m, m.sq_id(M), m.assoc(N, P, Q)),
        )
        return _neq(m, lhs, rhs, "pentagon")

    def triangle(t):
        M, N = t
        U = m.hunit(m.htgt(M))
        lhs = compose_v(m, m.assoc(M, U, N), compose_h(m, m.sq_id(M), m.src_unitor(N)))
        rhs = compose_h(m, m.tgt_unitor(M), m.sq_id(N))
        return _neq(m, lhs, rhs, "triangle")

    def sq_frames(s):
        return check_frame(m, s)

    def sq_identity(s):
        return _neq(m, compose_v(m, m.sq_id(s.top), s), s, "1 o a = a") or _neq(
            m, compose_v(m, s, m.sq_id(s.bottom)), s, "a o 1 = a")

    def sq_assoc(t):
        a, b, c = t
        lhs = compose_v(m, compose_v(m, a, b), c)
        rhs = compose_v(m, a, compose_v(m, b, c))
        if lhs.left != m.vcomp(a.left, m.vcomp(b.left, c.left)):
            return "left boundary of composite is not the composite vmor"
        return _neq(m, lhs, rhs, "vertical associativity")

    def interchange(t):
        a, b, c, d = t
        lhs = compose_v(m, compose_h(m, a, b), compose_h(m, c, d))
        rhs = compose_h(m, compose_v(m, a, c), compose_v(m, b, d))
        return _neq(m, lhs, rhs, "interchange")

    def assoc_natural(t):
        a, b, c = t
        lhs = compose_v(m, compose_h(m, compose_h(m, a, b), c), m.assoc(a.bottom, b.bottom, c.bottom))
        rhs = compose_v(m, m.assoc(a.top, b.top, c.top), compose_h(m, a, compose_h(m, b, c)))
        return _neq(m, lhs, rhs, "assoc naturality")

    def unitor_natural(a):
        U, V = m.hunit(m.hsrc(a.top)), m.hunit(m.hsrc(a.bottom))
        lhs = compose_v(m, compose_h(m, m.sq_unit(a.left), a), m.src_unitor(a.bottom))
        rhs = compose_v(m, m.src_unitor(a.top), a)
        bad = _neq(m, lhs, rhs, "src_unitor naturality")
        if bad:
            return bad
        lhs = compose_v(m, compose_h(m, a, m.sq_unit(a.right)), m.tgt_unitor(a.bottom))
        rhs = compose_v(m, m.tgt_unitor(a.top), a)
        return _neq(m, lhs, rhs, "tgt_unitor naturality")

    def h_row(rng, n):
        a = m.random_square(rng)
        if a is None:
            return None
        out = [a]
        for _ in range(n - 1):
            N = m.random_hcell(rng, m.htgt(out[-1].top))
            if N is None:
                return None
            b = m.random_square(rng, N, out[-1].right)
            if b is None:
                return None
            out.append(b)
        return tuple(out)

    ax("D0 identity", d0_identity, vm)
    ax("D0 associativity", d0_assoc, _vchains(m, 3), lambda r: _composable_vmors(m, 3, r))
    ax("unit frames and 1_(U_A) = U_(1_A)", unit_frames, objs)
    ax("S/T of horizontal composite", hcomp_frames, _hchains(m, 2), lambda r: _composable_hcells(m, 2, r))
    ax("U is a functor", unit_functor, _vchains(m, 2), lambda r: _composable_vmors(m, 2, r))
    ax("identity squares", id_square, hc)
    ax("square frames", sq_frames, m.all_squares, lambda r: m.random_square(r))
    ax("D1 identity", sq_identity, m.all_squares, lambda r: m.random_square(r))
    ax("D1 associativity", sq_assoc, None, lambda r: _squares_below(m, r, 3))
    ax("(.) preserves identities", hcomp_ids, _hchains(m, 2), lambda r: _composable_hcells(m, 2, r))
    ax("interchange", interchange, None, lambda r: _interchange_instance(m, r))
    ax("constraints globular and invertible", constraint_frames, _hchains(m, 3), lambda r: _composable_hcells(m, 3, r))
    ax("assoc naturality", assoc_natural, None, lambda r: h_row(r, 3))
    ax("unitor naturality", unitor_natural, m.all_squares, lambda r: m.random_square(r))
    ax("pentagon", pentagon, _hchains(m, 4), lambda r: _composable_hcells(m, 4, r))
    ax("triangle", triangle, _hchains(m, 2), lambda r: _composable_hcells(m, 2, r))
    return rep
