"""Rel(FinSet): relations between finite sets; strict and locally posetal."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property, lru_cache

from ..core import DoubleCategory, NotInvertible, Square
from .sets import FinSet, Fn, all_functions, identity


@dataclass(frozen=True)
class Relation:
    src: FinSet
    tgt: FinSet
    pairs: tuple

    @classmethod
    def of(cls, src: FinSet, tgt: FinSet, pairs) -> "Relation":
        keep = set(pairs)
        si, ti = _index(src), _index(tgt)
        for a, b in keep:
            if a not in si or b not in ti:
                raise ValueError(f"pair {(a, b)!r} leaves {src!r} x {tgt!r}")
        return cls(src, tgt, tuple(sorted(keep, key=lambda p: (si[p[0]], ti[p[1]]))))

    @cached_property
    def as_set(self) -> frozenset:
        return frozenset(self.pairs)

    def __contains__(self, p) -> bool:
        return p in self.as_set

    # apex view shared with spans: a relation is a jointly monic span on its pairs
    @property
    def apex(self) -> tuple:
        return self.pairs

    def l(self, p):
        return p[0]

    def r(self, p):
        return p[1]

    def transpose(self) -> "Relation":
        return Relation.of(self.tgt, self.src, [(b, a) for a, b in self.pairs])

    def __repr__(self) -> str:
        return f"Rel({self.src!r}=>{self.tgt!r}|{list(self.pairs)})"


@lru_cache(maxsize=4096)
def _index(A: FinSet) -> dict:
    return {x: i for i, x in enumerate(A.elems)}


@lru_cache(maxsize=65536)
def _compose(M: Relation, N: Relation) -> Relation:
    step: dict = {}
    for b, c in N.pairs:
        step.setdefault(b, []).append(c)
    return Relation.of(M.src, N.tgt, {(a, c) for a, b in M.pairs for c in step.get(b, ())})


def graph(f: Fn) -> Relation:
    return Relation.of(f.src, f.tgt, [(a, f(a)) for a in f.src])


class RelModel(DoubleCategory):
    """Relations between sets ``[0..n)``, ``n <= max_size``; at most one square per frame."""

    name = "Rel(FinSet)"
    locally_posetal = True

    def __init__(self, max_size: int = 3):
        self.max_size = max_size
        self._objects = [FinSet.range(n) for n in range(max_size + 1)]
        self._hcells: dict = {}

    def __repr__(self):
        return f"RelModel(max_size={self.max_size})"

    def objects(self):
        return self._objects

    def vmors(self, A, B):
        return all_functions(A, B)

    def hcells(self, A, B):
        key = (A, B)
        if key not in self._hcells:
            grid = list(itertools.product(A.elems, B.elems))
            self._hcells[key] = [
                Relation(A, B, tuple(p for p, keep in zip(grid, mask) if keep))
                for mask in itertools.product((False, True), repeat=len(grid))
            ]
        return self._hcells[key]

    @staticmethod
    def holds(top, left, right, bottom) -> bool:
        return all((left(a), right(b)) in bottom for a, b in top.pairs)

    def squares(self, top, left, right, bottom):
        if (left.src, right.src, left.tgt, right.tgt) != (top.src, top.tgt, bottom.src, bottom.tgt):
            return []
        return [Square(top, left, right, bottom)] if self.holds(top, left, right, bottom) else []

    def _sq(self, top, left, right, bottom) -> Square:
        if not self.holds(top, left, right, bottom):
            raise ValueError(f"no square {top!r} => {bottom!r} over ({left!r}, {right!r})")
        return Square(top, left, right, bottom)

    def sq_from_map(self, top, left, right, bottom, fn=None) -> Square:
        return self._sq(top, left, right, bottom)

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

    def hunit(self, A):
        return Relation(A, A, tuple((a, a) for a in A.elems))

    def hcomp(self, M, N):
        return _compose(M, N)

    def sq_id(self, M):
        return Square(M, identity(M.src), identity(M.tgt), M)

    def sq_unit(self, f):
        return Square(self.hunit(f.src), f, f, self.hunit(f.tgt))

    def sq_vcomp(self, a, b):
        return Square(a.top, a.left.then(b.left), a.right.then(b.right), b.bottom)

    def sq_hcomp(self, a, b):
        return Square(self.hcomp(a.top, b.top), a.left, b.right, self.hcomp(a.bottom, b.bottom))

    def sq_inverse(self, a):
        li, ri = a.left.inverse(), a.right.inverse()
        if li is None or ri is None or not self.holds(a.bottom, li, ri, a.top):
            raise NotInvertible(f"square {a.top!r} => {a.bottom!r} is not invertible")
        return Square(a.bottom, li, ri, a.top)

    def is_invertible(self, a) -> bool:
        try:
            self.sq_inverse(a)
        except NotInvertible:
            return False
        return True

    def assoc(self, M, N, P):
        return self.sq_id(self.hcomp(self.hcomp(M, N), P))

    def src_unitor(self, M):
        return self.sq_id(M)

    def tgt_unitor(self, M):
        return self.sq_id(M)

    def random_square(self, rng: random.Random, top=None, left=None, tries: int = 40):
        if top is None:
            top = self.random_hcell(rng, None if left is None else self.vsrc(left))
        f = left if left is not None else rng.choice(self.vmors_from(top.src) or [None])
        if f is None:
            return None
        targets = [B for B in self._objects if B.elems or not top.tgt.elems]
        g = rng.choice(all_functions(top.tgt, rng.choice(targets)))
        image = {(f(a), g(b)) for a, b in top.pairs}
        extra = {p for p in itertools.product(f.tgt.elems, g.tgt.elems) if rng.random() < 0.3}
        return Square(top, f, g, Relation.of(f.tgt, g.tgt, image | extra))

    # closed-form companions and conjoints
    def companion_cell(self, f):
        return graph(f)

    def conjoint_cell(self, f):
        return graph(f).transpose()

    def companion_squares(self, f) -> tuple[Square, Square]:
        M, A, B = graph(f), f.src, f.tgt
        return self._sq(M, f, identity(B), self.hunit(B)), self._sq(self.hunit(A), identity(A), f, M)

    def conjoint_squares(self, f) -> tuple[Square, Square]:
        M, A, B = graph(f).transpose(), f.src, f.tgt
        return self._sq(M, identity(B), f, self.hunit(B)), self._sq(self.hunit(A), f, identity(A), M)

    def hcell_from(self, src, tgt, apex, l, r) -> Relation:
        return Relation.of(src, tgt, [(l(x), r(x)) for x in apex])
