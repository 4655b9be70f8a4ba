"""Finite sets and functions between them.

Elements are arbitrary hashables; order is part of the data so that products
and pullbacks have a canonical, reproducible enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterator


@dataclass(frozen=True)
class FinSet:
    elems: tuple

    def __post_init__(self):
        if len(set(self.elems)) != len(self.elems):
            raise ValueError(f"duplicate elements in {self.elems!r}")

    @classmethod
    def range(cls, n: int) -> "FinSet":
        return cls(tuple(range(n)))

    @cached_property
    def index(self) -> dict:
        return {x: i for i, x in enumerate(self.elems)}

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator:
        return iter(self.elems)

    def __contains__(self, x) -> bool:
        return x in self.index

    def __repr__(self) -> str:
        if self.elems == tuple(range(len(self.elems))):
            return f"[{len(self.elems)}]"
        return "{" + ",".join(map(repr, self.elems)) + "}"


def product(A: FinSet, B: FinSet) -> FinSet:
    """Cartesian product as lexicographically ordered pairs."""
    return FinSet(tuple((a, b) for a in A.elems for b in B.elems))


UNIT_ELEMENT = ()
UNIT_SET = FinSet((UNIT_ELEMENT,))


@dataclass(frozen=True)
class Fn:
    src: FinSet
    tgt: FinSet
    table: tuple = field(compare=True)

    def __post_init__(self):
        if len(self.table) != len(self.src):
            raise ValueError("function table has the wrong length")
        for y in self.table:
            if y not in self.tgt:
                raise ValueError(f"{y!r} is not in the target {self.tgt!r}")

    @classmethod
    def from_callable(cls, src: FinSet, tgt: FinSet, fn) -> "Fn":
        return cls(src, tgt, tuple(fn(x) for x in src.elems))

    def __call__(self, x: Hashable):
        return self.table[self.src.index[x]]

    def then(self, g: "Fn") -> "Fn":
        if self.tgt != g.src:
            raise ValueError("functions do not compose")
        return Fn(self.src, g.tgt, tuple(g(y) for y in self.table))

    def inverse(self) -> "Fn | None":
        if len(set(self.table)) != len(self.table) or len(self.table) != len(self.tgt):
            return None
        inv = {y: x for x, y in zip(self.src.elems, self.table)}
        return Fn(self.tgt, self.src, tuple(inv[y] for y in self.tgt.elems))

    @property
    def is_iso(self) -> bool:
        return self.inverse() is not None

    def __repr__(self) -> str:
        return f"Fn({self.src!r}->{self.tgt!r}:{list(self.table)})"


def identity(A: FinSet) -> Fn:
    return Fn(A, A, A.elems)


def all_functions(A: FinSet, B: FinSet) -> list[Fn]:
    return [Fn(A, B, t) for t in itertools.product(B.elems, repeat=len(A))]


def fn_product(f: Fn, g: Fn) -> Fn:
    return Fn(product(f.src, g.src), product(f.tgt, g.tgt), tuple((f(a), g(b)) for a in f.src for b in g.src))
