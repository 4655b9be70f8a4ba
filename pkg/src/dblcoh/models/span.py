"""Span(FinSet): spans of finite sets, composed by canonical pullback."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable

from ..core import DoubleCategory, NotInvertible, Square
from .sets import FinSet, Fn, all_functions, identity


@dataclass(frozen=True)
class Span:
    """A span ``src <- apex -> tgt`` with legs stored as tables over ``apex``."""

    src: FinSet
    tgt: FinSet
    apex: tuple
    left: tuple
    right: tuple

    def __post_init__(self):
        if not (len(self.apex) == len(self.left) == len(self.right)):
            raise ValueError("leg tables must match the apex")
        if len(set(self.apex)) != len(self.apex):
            raise ValueError("apex elements must be distinct")
        for a, b in zip(self.left, self.right):
            if a not in self.src or b not in self.tgt:
                raise ValueError("span legs leave their sets")

    @cached_property
    def index(self) -> dict:
        return {x: i for i, x in enumerate(self.apex)}

    def l(self, x):
        return self.left[self.index[x]]

    def r(self, x):
        return self.right[self.index[x]]

    def __repr__(self) -> str:
        body = ",".join(f"{x!r}:{a!r}>{b!r}" for x, a, b in zip(self.apex, self.left, self.right))
        return f"Span({self.src!r}=>{self.tgt!r}|{body})"


def span_from(src: FinSet, tgt: FinSet, apex, left: Callable, right: Callable) -> Span:
    apex = tuple(apex)
    return Span(src, tgt, apex, tuple(left(x) for x in apex), tuple(right(x) for x in apex))


def relabel(M: Span, names: dict) -> Span:
    """The same span with apex element ``x`` renamed ``names[x]``."""
    return Span(M.src, M.tgt, tuple(names[x] for x in M.apex), M.left, M.right)


class SpanModel(DoubleCategory):
    """Finite spans over sets ``[0..n)`` with ``n <= max_size``, apexes of size ``<= max_apex``.

    Every operation is total on arbitrary finite sets; the bounds only define
    the enumerated universe used by the checkers.
    """

    name = "Span(FinSet)"

    def __init__(self, max_size: int = 2, max_apex: int = 3):
        self.max_size = max_size
        self.max_apex = max_apex
        self._objects = [FinSet.range(n) for n in range(max_size + 1)]
        self._hcells: dict = {}

    def __repr__(self):
        return f"SpanModel(max_size={self.max_size}, max_apex={self.max_apex})"

    # universe
    def objects(self):
        return self._objects

    def vmors(self, A, B):
        return all_functions(A, B)

    def hcells(self, A, B):
        key = (A, B)
        if key not in self._hcells:
            out = []
            for k in range(self.max_apex + 1):
                apex = tuple(range(k))
                for ls in itertools.product(A.elems, repeat=k):
                    for rs in itertools.product(B.elems, repeat=k):
                        out.append(Span(A, B, apex, ls, rs))
            self._hcells[key] = out
        return self._hcells[key]

    def squares(self, top, left, right, bottom):
        if (left.src, right.src, left.tgt, right.tgt) != (top.src, top.tgt, bottom.src, bottom.tgt):
            return []
        options = []
        for x in top.apex:
            want = (left(top.l(x)), right(top.r(x)))
            cands = [y for y in bottom.apex if (bottom.l(y), bottom.r(y)) == want]
            if not cands:
                return []
            options.append(cands)
        return [Square(top, left, right, bottom, tuple(img)) for img in itertools.product(*options)]

    # frames and D_0
    def vsrc(self, f):
        return f.src

    def vtgt(self, f):
        return f.tgt

    def hsrc(self, M):
        return M.src

    def htgt(self, M):
        return M.tgt

    def vid(self, A):
        return identity(A)

    def vcomp(self, f, g):
        return f.then(g)

    def vinverse(self, f):
        return f.inverse()

    # horizontal structure
    def hunit(self, A):
        return Span(A, A, A.elems, A.elems, A.elems)

    def hcomp(self, M, N):
        apex, ls, rs = [], [], []
        for x, a, b in zip(M.apex, M.left, M.right):
            for y, c, d in zip(N.apex, N.left, N.right):
                if b == c:
                    apex.append((x, y))
                    ls.append(a)
                    rs.append(d)
        return Span(M.src, N.tgt, tuple(apex), tuple(ls), tuple(rs))

    # squares
    def sq_from_map(self, top, left, right, bottom, fn) -> Square:
        """The square whose apex map is ``fn``; raises if it does not commute."""
        img = tuple(fn(x) for x in top.apex)
        for x, y in zip(top.apex, img):
            if y not in bottom.index:
                raise ValueError(f"{y!r} is not in the bottom apex")
            if bottom.l(y) != left(top.l(x)) or bottom.r(y) != right(top.r(x)):
                raise ValueError(f"apex map does not commute with legs at {x!r}")
        return Square(top, left, right, bottom, img)

    def apply(self, s: Square, x):
        return s.payload[s.top.index[x]]

    def sq_id(self, M):
        return Square(M, identity(M.src), identity(M.tgt), M, M.apex)

    def sq_unit(self, f):
        return Square(self.hunit(f.src), f, f, self.hunit(f.tgt), f.table)

    def sq_vcomp(self, a, b):
        img = tuple(b.payload[b.top.index[y]] for y in a.payload)
        return Square(a.top, a.left.then(b.left), a.right.then(b.right), b.bottom, img)

    def sq_hcomp(self, a, b):
        top = self.hcomp(a.top, b.top)
        bottom = self.hcomp(a.bottom, b.bottom)
        img = tuple((self.apply(a, x), self.apply(b, y)) for x, y in top.apex)
        return Square(top, a.left, b.right, bottom, img)

    def sq_inverse(self, a):
        li, ri = a.left.inverse(), a.right.inverse()
        if li is None or ri is None or len(set(a.payload)) != len(a.payload) or len(a.payload) != len(a.bottom.apex):
            raise NotInvertible(f"square is not invertible: {a.payload!r}")
        inv = {y: x for x, y in zip(a.top.apex, a.payload)}
        return Square(a.bottom, li, ri, a.top, tuple(inv[y] for y in a.bottom.apex))

    def is_invertible(self, a) -> bool:
        try:
            self.sq_inverse(a)
        except NotInvertible:
            return False
        return True

    # constraints
    def assoc(self, M, N, P):
        top = self.hcomp(self.hcomp(M, N), P)
        bottom = self.hcomp(M, self.hcomp(N, P))
        img = tuple((x, (y, z)) for (x, y), z in top.apex)
        return Square(top, identity(M.src), identity(P.tgt), bottom, img)

    def src_unitor(self, M):
        top = self.hcomp(self.hunit(M.src), M)
        return Square(top, identity(M.src), identity(M.tgt), M, tuple(x for _, x in top.apex))

    def tgt_unitor(self, M):
        top = self.hcomp(M, self.hunit(M.tgt))
        return Square(top, identity(M.src), identity(M.tgt), M, tuple(x for x, _ in top.apex))

    # sampling
    def random_square(self, rng: random.Random, top=None, left=None, tries: int = 40):
        if top is None:
            top = self.random_hcell(rng, None if left is None else self.vsrc(left))
        for _ in range(tries):
            if left is not None:
                f = left
            else:
                f_tgt = rng.choice([B for B in self._objects if B.elems or not top.src.elems])
                f = rng.choice(all_functions(top.src, f_tgt))
            g_tgt = rng.choice([B for B in self._objects if B.elems or not top.tgt.elems])
            g = rng.choice(all_functions(top.tgt, g_tgt))
            k = rng.randint(1 if top.apex else 0, max(1, self.max_apex))
            phi = {x: rng.randrange(k) for x in top.apex}
            forced: dict = {}
            ok = True
            for x, y in phi.items():
                want = (f(top.l(x)), g(top.r(x)))
                if forced.setdefault(y, want) != want:
                    ok = False
                    break
            if not ok:
                continue
            if (not f.tgt.elems or not g.tgt.elems) and len(forced) < k:
                k = len(forced)
                remap = {y: i for i, y in enumerate(sorted(forced))}
                phi = {x: remap[y] for x, y in phi.items()}
                forced = {remap[y]: v for y, v in forced.items()}
            legs = [forced.get(y) or (rng.choice(f.tgt.elems), rng.choice(g.tgt.elems)) for y in range(k)]
            bottom = Span(f.tgt, g.tgt, tuple(range(k)), tuple(a for a, _ in legs), tuple(b for _, b in legs))
            return Square(top, f, g, bottom, tuple(phi[x] for x in top.apex))
        return None

    # closed-form companions and conjoints
    def companion_cell(self, f):
        return Span(f.src, f.tgt, f.src.elems, f.src.elems, f.table)

    def conjoint_cell(self, f):
        return Span(f.tgt, f.src, f.src.elems, f.table, f.src.elems)

    def companion_squares(self, f) -> tuple[Square, Square]:
        """``(down, up)`` for the graph span of ``f``."""
        M, A, B = self.companion_cell(f), f.src, f.tgt
        down = Square(M, f, identity(B), self.hunit(B), f.table)
        up = Square(self.hunit(A), identity(A), f, M, A.elems)
        return down, up

    def conjoint_squares(self, f) -> tuple[Square, Square]:
        """``(down, up)`` in the frame of this model: ``fcheck => U_B`` over ``(1_B, f)`` and ``U_A => fcheck`` over ``(f, 1_A)``."""
        M, A, B = self.conjoint_cell(f), f.src, f.tgt
        down = Square(M, identity(B), f, self.hunit(B), f.table)
        up = Square(self.hunit(A), f, identity(A), M, A.elems)
        return down, up

    def hcell_from(self, src, tgt, apex, l, r) -> Span:
        return span_from(src, tgt, apex, l, r)

    def relabel_iso(self, M: Span, tag) -> Square:
        """The globular iso ``M => M'`` renaming apex element ``x`` to ``(tag, x)``."""
        names = {x: (tag, x) for x in M.apex}
        return Square(M, identity(M.src), identity(M.tgt), relabel(M, names), tuple(names[x] for x in M.apex))
