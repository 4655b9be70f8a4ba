"""Companions, conjoints and the canonical comparison isos between them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .core import (
    UNIT,
    Cell,
    DoubleCategory,
    FrameMismatch,
    NotInvertible,
    Square,
    cell,
    compose_v,
    flat_square,
    leaf,
    node,
    paste_h,
    paste_v,
    short,
    unit_leaf,
    vcompose_all,
)
from .models.wrappers import HOpModel, ProductModel, flip
from .report import AxiomResult, Report


class CompanionMismatch(ValueError):
    pass


class NotInverse(ValueError):
    pass


class NotFibrant(ValueError):
    def __init__(self, missing: list):
        self.missing = missing
        super().__init__("no companion/conjoint for: " + "; ".join(short(x, 100) for x in missing))


@dataclass(frozen=True)
class CompanionPair:
    """``fhat: A -|-> B`` with ``down: fhat => U_B`` over ``(f, 1_B)`` and ``up: U_A => fhat`` over ``(1_A, f)``."""

    f: Any
    fhat: Any
    down: Square
    up: Square


@dataclass(frozen=True)
class ConjointPair:
    """A companion of ``f`` in the horizontal opposite; squares are kept in that frame."""

    f: Any
    fcheck: Any
    down: Square
    up: Square

    def companion(self) -> CompanionPair:
        return CompanionPair(self.f, self.fcheck, self.down, self.up)

    @classmethod
    def from_companion(cls, c: CompanionPair) -> "ConjointPair":
        return cls(c.f, c.fhat, c.down, c.up)

    @property
    def counit_square(self) -> Square:
        """``down`` in the frame of D: ``fcheck => U_B`` over ``(1_B, f)``."""
        return flip(self.down)

    @property
    def unit_square(self) -> Square:
        """``up`` in the frame of D: ``U_A => fcheck`` over ``(f, 1_A)``."""
        return flip(self.up)


@dataclass(frozen=True)
class AdjunctionData:
    left: Any
    right: Any
    unit: Square
    counit: Square


def _frames_ok(m: DoubleCategory, c: CompanionPair) -> str | None:
    A, B = m.vsrc(c.f), m.vtgt(c.f)
    if (m.hsrc(c.fhat), m.htgt(c.fhat)) != (A, B):
        return "companion 1-cell has the wrong endpoints"
    if c.down.frame != (c.fhat, c.f, m.vid(B), m.hunit(B)):
        return "down square has the wrong frame"
    if c.up.frame != (m.hunit(A), m.vid(A), c.f, c.fhat):
        return "up square has the wrong frame"
    return None


def _squares_ok(m: DoubleCategory, c: CompanionPair) -> str | None:
    for name, s in (("down", c.down), ("up", c.up)):
        if s not in m.squares(*s.frame):
            return f"{name} square is not a square of the model: {short(s.payload, 80)}"
    return None


def companion_equations(m: DoubleCategory, c: CompanionPair) -> tuple[Square, Square, Square, Square]:
    """Both sides of the two defining equations, unit constraints inserted."""
    first = compose_v(m, c.up, c.down)
    second = flat_square(m, paste_h(m, cell(m, c.up, UNIT), cell(m, c.down, None, UNIT)))
    return first, m.sq_unit(c.f), second, m.sq_id(c.fhat)


def companion_defect(m: DoubleCategory, c: CompanionPair) -> str | None:
    bad = _frames_ok(m, c) or _squares_ok(m, c)
    if bad:
        return bad
    a, b, x, y = companion_equations(m, c)
    if a != b and not m.sq_eq(a, b):
        return f"up then down != U_f for f={short(c.f, 80)}"
    if x != y and not m.sq_eq(x, y):
        return f"up (.) down != 1_fhat for f={short(c.f, 80)}"
    return None


def verify_companion(m: DoubleCategory, c: CompanionPair) -> Report:
    bad = _frames_ok(m, c)
    if bad:
        raise FrameMismatch(bad)
    rep = Report(f"companion of {short(c.f, 80)}")
    cite = "companion equations: vertical and horizontal composite of the defining squares"
    bad = _squares_ok(m, c)
    if bad:
        rep.add(AxiomResult("defining squares exist", cite, 1, False, counterexample=bad))
        return rep
    a, b, x, y = companion_equations(m, c)
    rep.add(AxiomResult("up then down = U_f", cite, 1, m.sq_eq(a, b), counterexample=None if m.sq_eq(a, b) else short((a.payload, b.payload))))
    rep.add(AxiomResult("up (.) down = 1_fhat", cite, 1, m.sq_eq(x, y), counterexample=None if m.sq_eq(x, y) else short((x.payload, y.payload))))
    return rep


def verify_conjoint(m: DoubleCategory, j: ConjointPair) -> Report:
    return verify_companion(HOpModel(m), j.companion())


def conjoint_defect(m: DoubleCategory, j: ConjointPair) -> str | None:
    return companion_defect(HOpModel(m), j.companion())


def theta(m: DoubleCategory, c1: CompanionPair, c2: CompanionPair) -> Square:
    """The globular comparison ``c1.fhat => c2.fhat``: ``c2.up`` beside ``c1.down``."""
    if c1.f != c2.f:
        raise CompanionMismatch(f"{short(c1.f, 80)} vs {short(c2.f, 80)}")
    return flat_square(m, paste_h(m, cell(m, c2.up, UNIT), cell(m, c1.down, None, UNIT)))


def theta_condition(m: DoubleCategory, c1: CompanionPair, c2: CompanionPair, t: Square) -> bool:
    """Does ``t`` sandwiched between ``c1.up`` and ``c2.down`` give ``U_f``?"""
    return m.sq_eq(vcompose_all(m, c1.up, t, c2.down), m.sq_unit(c1.f))


def companion_of_identity(m: DoubleCategory, A) -> CompanionPair:
    U = m.hunit(A)
    return CompanionPair(m.vid(A), U, m.sq_id(U), m.sq_id(U))


def compose_companions(m: DoubleCategory, cf: CompanionPair, cg: CompanionPair) -> CompanionPair:
    """``fhat ; ghat`` as a companion of ``f`` then ``g``."""
    f, g = cf.f, cg.f
    if m.vtgt(f) != m.vsrc(g):
        raise FrameMismatch("vertical 1-morphisms do not compose")
    down = paste_v(
        m,
        paste_h(m, cell(m, cf.down, None, UNIT), cell(m, m.sq_id(cg.fhat))),
        paste_h(m, cell(m, m.sq_unit(g), UNIT, UNIT), cell(m, cg.down, None, UNIT)),
    )
    up = paste_v(
        m,
        paste_h(m, cell(m, cf.up, UNIT), cell(m, m.sq_unit(f), UNIT, UNIT)),
        paste_h(m, cell(m, m.sq_id(cf.fhat)), cell(m, cg.up, UNIT)),
    )
    return CompanionPair(m.vcomp(f, g), m.hcomp(cf.fhat, cg.fhat), flat_square(m, down), flat_square(m, up))


def map_companion(F, c: CompanionPair) -> CompanionPair:
    """Image of a companion under a pseudo double functor ``F``."""
    E = F.codomain
    A, B = F.domain.vsrc(c.f), F.domain.vtgt(c.f)
    down = compose_v(E, F.square(c.down), E.sq_inverse(F.unit(B)))
    up = compose_v(E, F.unit(A), F.square(c.up))
    return CompanionPair(F.vmor(c.f), F.hcell(c.fhat), down, up)


def pair_companions(c1: CompanionPair, c2: CompanionPair) -> CompanionPair:
    """A companion in a product model is a pair of companions."""
    return CompanionPair(
        (c1.f, c2.f), (c1.fhat, c2.fhat), ProductModel.pair(c1.down, c2.down), ProductModel.pair(c1.up, c2.up))


def tensor_companions(T, c1: CompanionPair, c2: CompanionPair) -> CompanionPair:
    """``fhat (x) ghat`` as a companion of ``f (x) g``; ``T`` is a monoidal double category."""
    return map_companion(T.tensor_functor, pair_companions(c1, c2))


def conjoint_of_inverse(m: DoubleCategory, c: CompanionPair, finv) -> ConjointPair:
    """``fhat`` exhibited as a conjoint of ``f^-1``."""
    f = c.f
    A, B = m.vsrc(f), m.vtgt(f)
    if m.vcomp(f, finv) != m.vid(A) or m.vcomp(finv, f) != m.vid(B):
        raise NotInverse(f"{short(finv, 80)} is not inverse to {short(f, 80)}")
    counit = compose_v(m, c.down, m.sq_unit(finv))
    unit = compose_v(m, m.sq_unit(finv), c.up)
    return ConjointPair(finv, c.fhat, flip(counit), flip(unit))


def adjunction(m: DoubleCategory, c: CompanionPair, j: ConjointPair) -> AdjunctionData:
    """Unit ``U_A => fhat ; fcheck`` and counit ``fcheck ; fhat => U_B`` in H(D)."""
    if c.f != j.f:
        raise CompanionMismatch("companion and conjoint lie over different 1-morphisms")
    unit = flat_square(m, paste_h(m, cell(m, c.up, UNIT), cell(m, j.unit_square, UNIT)))
    counit = flat_square(m, paste_h(m, cell(m, j.counit_square, None, UNIT), cell(m, c.down, None, UNIT)))
    return AdjunctionData(c.fhat, j.fcheck, unit, counit)


def _unit_cell(m, adj, A) -> Cell:
    return Cell(adj.unit, unit_leaf(m, A), node(leaf(m, adj.left), leaf(m, adj.right)))


def _counit_cell(m, adj, B) -> Cell:
    return Cell(adj.counit, node(leaf(m, adj.right), leaf(m, adj.left)), unit_leaf(m, B))


def triangle_sides(m: DoubleCategory, adj: AdjunctionData) -> tuple[Square, Square]:
    """The two zig-zag composites; both should be identities."""
    A, B = m.hsrc(adj.left), m.htgt(adj.left)
    L, R = cell(m, m.sq_id(adj.left)), cell(m, m.sq_id(adj.right))
    zig = paste_v(m, paste_h(m, _unit_cell(m, adj, A), L), paste_h(m, L, _counit_cell(m, adj, B)))
    zag = paste_v(m, paste_h(m, R, _unit_cell(m, adj, A)), paste_h(m, _counit_cell(m, adj, B), R))
    return flat_square(m, zig), flat_square(m, zag)


def adjunction_defect(m: DoubleCategory, adj: AdjunctionData, invertible: bool = False) -> str | None:
    zig, zag = triangle_sides(m, adj)
    if not m.sq_eq(zig, m.sq_id(adj.left)):
        return "first triangle identity fails"
    if not m.sq_eq(zag, m.sq_id(adj.right)):
        return "second triangle identity fails"
    if invertible:
        for name, s in (("unit", adj.unit), ("counit", adj.counit)):
            try:
                inv = m.sq_inverse(s)
            except NotInvertible:
                return f"{name} is not invertible"
            if not (m.sq_eq(compose_v(m, s, inv), m.sq_id(s.top)) and m.sq_eq(compose_v(m, inv, s), m.sq_id(s.bottom))):
                return f"{name} inverse is wrong"
    return None


def globular_isos(m: DoubleCategory, M, N) -> list[Square]:
    A, B = m.hsrc(M), m.htgt(M)
    out = []
    for s in m.squares(M, m.vid(A), m.vid(B), N):
        try:
            m.sq_inverse(s)
        except NotInvertible:
            continue
        out.append(s)
    return out


def theta_by_search(m: DoubleCategory, c1: CompanionPair, c2: CompanionPair) -> list[Square]:
    """Every globular iso ``c1.fhat => c2.fhat`` satisfying the theta condition (brute force)."""
    return [t for t in globular_isos(m, c1.fhat, c2.fhat) if theta_condition(m, c1, c2, t)]


def find_companion(m: DoubleCategory, f, limit: int | None = None) -> CompanionPair | None:
    """First companion of ``f`` in the model's enumeration order."""
    A, B = m.vsrc(f), m.vtgt(f)
    for i, M in enumerate(m.hcells(A, B)):
        if limit is not None and i >= limit:
            break
        downs = m.squares(M, f, m.vid(B), m.hunit(B))
        if not downs:
            continue
        for up in m.squares(m.hunit(A), m.vid(A), f, M):
            for down in downs:
                c = CompanionPair(f, M, down, up)
                if companion_defect(m, c) is None:
                    return c
    return None


def find_conjoint(m: DoubleCategory, f, limit: int | None = None) -> ConjointPair | None:
    c = find_companion(HOpModel(m), f, limit)
    return None if c is None else ConjointPair.from_companion(c)


def standard_companion(m: DoubleCategory, f) -> CompanionPair:
    """The model's chosen companion of ``f``: closed form if it has one, else search."""
    if hasattr(m, "companion_squares"):
        down, up = m.companion_squares(f)
        return CompanionPair(f, down.top, down, up)
    c = find_companion(m, f)
    if c is None:
        raise NotFibrant([f])
    return c


def standard_conjoint(m: DoubleCategory, f) -> ConjointPair:
    if hasattr(m, "conjoint_squares"):
        down, up = m.conjoint_squares(f)
        return ConjointPair(f, down.top, flip(down), flip(up))
    j = find_conjoint(m, f)
    if j is None:
        raise NotFibrant([f])
    return j


class MissingCompanion(KeyError):
    pass


def transport_companion(m: DoubleCategory, c: CompanionPair, phi: Square) -> CompanionPair:
    """Move ``c`` along a globular iso ``phi: fhat => M``; the result is a companion with 1-cell ``M``."""
    return CompanionPair(c.f, phi.bottom, compose_v(m, m.sq_inverse(phi), c.down), compose_v(m, c.up, phi))


def transport_conjoint(m: DoubleCategory, j: ConjointPair, phi: Square) -> ConjointPair:
    """``phi: fcheck => M`` globular in the frame of ``m``."""
    return ConjointPair.from_companion(transport_companion(HOpModel(m), j.companion(), flip(phi)))


class Choices:
    """A chosen companion and conjoint for each vertical 1-morphism, memoized.

    ``companion_fn``/``conjoint_fn`` may return ``None`` for a missing entry.
    """

    def __init__(self, m: DoubleCategory, companion_fn, conjoint_fn, name: str = "choices"):
        self.model, self.name = m, name
        self._cfn, self._jfn = companion_fn, conjoint_fn
        self._c: dict = {}
        self._j: dict = {}

    def companion(self, f) -> CompanionPair:
        if f not in self._c:
            c = self._cfn(f)
            if c is None:
                raise MissingCompanion(f"no chosen companion for {short(f, 100)}")
            self._c[f] = c
        return self._c[f]

    def conjoint(self, f) -> ConjointPair:
        if f not in self._j:
            j = self._jfn(f)
            if j is None:
                raise MissingCompanion(f"no chosen conjoint for {short(f, 100)}")
            self._j[f] = j
        return self._j[f]

    def __repr__(self):
        return f"Choices({self.name})"


def standard_choices(m: DoubleCategory) -> Choices:
    return Choices(m, lambda f: standard_companion(m, f), lambda f: standard_conjoint(m, f), "standard")


def relabeled_choices(m: DoubleCategory, tag: str = "r") -> Choices:
    """Standard choices transported along the apex relabelling ``x -> (tag, x)``.

    Needs a model with ``relabel_iso``; gives a second, genuinely different, set of choices.
    """
    def comp(f):
        c = standard_companion(m, f)
        return transport_companion(m, c, m.relabel_iso(c.fhat, tag))

    def conj(f):
        j = standard_conjoint(m, f)
        return transport_conjoint(m, j, m.relabel_iso(j.fcheck, tag))

    return Choices(m, comp, conj, f"relabeled:{tag}")


def rel_companion(m, f) -> CompanionPair:
    """The graph of ``f`` with its two (unique) defining squares."""
    down, up = m.companion_squares(f)
    return CompanionPair(f, down.top, down, up)


def span_companion(m, f) -> CompanionPair:
    """The span ``(A, 1_A, f)``; the down square is ``f`` on apexes, the up square the identity."""
    down, up = m.companion_squares(f)
    return CompanionPair(f, down.top, down, up)
