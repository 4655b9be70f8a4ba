"""Helpers shared by the test modules: models, random companions, fixture paths."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from pathlib import Path

from dblcoh.companions import CompanionPair, companion_defect, transport_companion
from dblcoh.core import Square
from dblcoh.models.rel import RelModel
from dblcoh.models.span import SpanModel, relabel
from dblcoh.monoidal import monoidal_structure

FIXTURES = Path(__file__).parent / "fixtures"


@lru_cache(maxsize=None)
def rel(n: int = 2) -> RelModel:
    return RelModel(n)


@lru_cache(maxsize=None)
def span(n: int = 2, apex: int = 3) -> SpanModel:
    return SpanModel(n, apex)


@lru_cache(maxsize=None)
def cartesian(m):
    return monoidal_structure(m)


def fixture(name: str) -> str:
    return str(FIXTURES / f"{name}.json")


def apex_renaming(m: SpanModel, M, names: dict) -> Square:
    """Globular iso ``M => M'`` sending apex element ``x`` to ``names[x]``."""
    return Square(M, m.vid(M.src), m.vid(M.tgt), relabel(M, names), tuple(names[x] for x in M.apex))


def presentations(m: SpanModel, c: CompanionPair, tags=(None, "p")) -> list[CompanionPair]:
    """``c`` transported along every apex permutation, optionally tagging the new names."""
    M = c.fhat
    out = []
    for perm in itertools.permutations(M.apex):
        for tag in tags:
            names = {x: (y if tag is None else (tag, y)) for x, y in zip(M.apex, perm)}
            out.append(transport_companion(m, c, apex_renaming(m, M, names)))
    return out


def random_presentation(m: SpanModel, c: CompanionPair, rng: random.Random) -> CompanionPair:
    M = c.fhat
    perm = list(M.apex)
    rng.shuffle(perm)
    tag = rng.choice((None, "p", "q"))
    names = {x: (y if tag is None else (tag, y)) for x, y in zip(M.apex, perm)}
    return transport_companion(m, c, apex_renaming(m, M, names))


def all_companions(m, f) -> list[CompanionPair]:
    """Brute force: every enumerated 1-cell with every pair of squares passing the equations."""
    A, B = m.vsrc(f), m.vtgt(f)
    out = []
    for M in m.hcells(A, B):
        for down in m.squares(M, f, m.vid(B), m.hunit(B)):
            for up in m.squares(m.hunit(A), m.vid(A), f, M):
                c = CompanionPair(f, M, down, up)
                if companion_defect(m, c) is None:
                    out.append(c)
    return out


def random_vmor(m, rng: random.Random, src=None):
    """A random vertical 1-morphism out of ``src`` (random when omitted); retries past empty hom-sets."""
    objs = list(m.objects())
    for _ in range(100):
        A = rng.choice(objs) if src is None else src
        B = rng.choice(objs)
        fs = m.vmors(A, B)
        if fs:
            return rng.choice(list(fs))
    raise AssertionError("no vertical 1-morphism found")
