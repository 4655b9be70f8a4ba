"""Pseudo double functors and vertical transformations between them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .core import (
    DoubleCategory,
    Square,
    _composable_hcells,
    _composable_vmors,
    _hchains,
    _hsquare_pairs,
    _interchange_instance,
    _schains,
    _vchains,
    _neq,
    check_frame,
    compose_h,
    compose_v,
    is_globular,
    short,
    vcompose_all,
)
from .report import Report, SampleBudget, run_axiom

CITE_FUNCTOR = "pseudo double functor: F_0, F_1 with globular constraints F_(.) and F_U, pseudofunctor coherence"
CITE_TRANSFORMATION = "vertical transformation: components alpha_A, alpha_M compatible with F_(.), F_U"


@dataclass(frozen=True)
class DblFunctor:
    """``F: D -> E``; ``comp(M, N): FM ; FN => F(M ; N)`` and ``unit(A): U_FA => F(U_A)``."""

    domain: DoubleCategory
    codomain: DoubleCategory
    obj: Callable
    vmor: Callable
    hcell: Callable
    square: Callable
    comp: Callable
    unit: Callable
    name: str = "F"


def identity_functor(m: DoubleCategory) -> DblFunctor:
    ident = lambda x: x
    return DblFunctor(m, m, ident, ident, ident, ident,
                      lambda M, N: m.sq_id(m.hcomp(M, N)), lambda A: m.sq_id(m.hunit(A)), "Id")


def compose_functors(F: DblFunctor, G: DblFunctor) -> DblFunctor:
    """``F`` then ``G``."""
    E = G.codomain

    def comp(M, N):
        return compose_v(E, G.comp(F.hcell(M), F.hcell(N)), G.square(F.comp(M, N)))

    def unit(A):
        return compose_v(E, G.unit(F.obj(A)), G.square(F.unit(A)))

    return DblFunctor(
        F.domain, E, lambda A: G.obj(F.obj(A)), lambda f: G.vmor(F.vmor(f)), lambda M: G.hcell(F.hcell(M)),
        lambda s: G.square(F.square(s)), comp, unit, f"{F.name};{G.name}")


@dataclass(frozen=True)
class DblTransformation:
    """``alpha: F => G`` with vertical components ``alpha_A: FA -> GA`` and squares ``alpha_M``."""

    source: DblFunctor
    target: DblFunctor
    obj: Callable
    hcell: Callable
    name: str = "alpha"

    def inverse(self, vinverse: Callable[[Any], Any] | None = None) -> "DblTransformation":
        E = self.source.codomain
        vinv = vinverse or E.vinverse
        return DblTransformation(
            self.target, self.source, lambda A: vinv(self.obj(A)), lambda M: _inverse_component(E, self.hcell(M), vinv),
            self.name + "^-1")


def _inverse_component(E: DoubleCategory, s: Square, vinv) -> Square:
    """Invert a square whose vertical edges are isomorphisms (vertical inverse in D1)."""
    inv = E.sq_inverse(s)
    if inv.left != vinv(s.left) or inv.right != vinv(s.right):
        raise ValueError("inverse square has unexpected edges")
    return inv


def verify_functor(F: DblFunctor, budget: SampleBudget | None = None) -> Report:
    budget = budget or SampleBudget()
    D, E = F.domain, F.codomain
    rep = Report(f"pseudo double functor {F.name}")
    def ax(name, check, sampler, every=None):
        return run_axiom(rep, name, CITE_FUNCTOR, check, budget, every, sampler, "functor")

    def frames(s):
        t = F.square(s)
        if (t.top, t.left, t.right, t.bottom) != (F.hcell(s.top), F.vmor(s.left), F.vmor(s.right), F.hcell(s.bottom)):
            return f"F(s) has the wrong frame at {short(s)}"
        if E.hsrc(t.top) != F.obj(D.hsrc(s.top)) or E.vsrc(t.left) != F.obj(D.vsrc(s.left)):
            return "S/T not preserved"
        return check_frame(E, t)

    def d0(t):
        f, g = t
        if F.vmor(D.vcomp(f, g)) != E.vcomp(F.vmor(f), F.vmor(g)):
            return f"F_0 not functorial at {short(t)}"
        if F.vmor(D.vid(D.vsrc(f))) != E.vid(F.obj(D.vsrc(f))):
            return "F_0 does not preserve identities"

    def d1(t):
        a, b = t
        return _neq(E, F.square(compose_v(D, a, b)), compose_v(E, F.square(a), F.square(b)), "F_1 vertical") or _neq(
            E, F.square(D.sq_id(a.top)), E.sq_id(F.hcell(a.top)), "F_1 identities")

    def constraints(t):
        M, N = t
        c, u = F.comp(M, N), F.unit(D.hsrc(M))
        for name, s in (("F_(.)", c), ("F_U", u)):
            if not is_globular(E, s):
                return f"{name} is not globular"
            E.sq_inverse(s)
        if c.top != E.hcomp(F.hcell(M), F.hcell(N)) or c.bottom != F.hcell(D.hcomp(M, N)):
            return "F_(.) has the wrong frame"

    def comp_natural(t):
        a, b = t[:2]
        lhs = compose_v(E, compose_h(E, F.square(a), F.square(b)), F.comp(a.bottom, b.bottom))
        rhs = compose_v(E, F.comp(a.top, b.top), F.square(compose_h(D, a, b)))
        return _neq(E, lhs, rhs, "F_(.) naturality")

    def unit_natural(f):
        f = f[0]
        lhs = compose_v(E, E.sq_unit(F.vmor(f)), F.unit(D.vtgt(f)))
        rhs = compose_v(E, F.unit(D.vsrc(f)), F.square(D.sq_unit(f)))
        return _neq(E, lhs, rhs, "F_U naturality")

    def assoc(t):
        M, N, P = t
        FM, FN, FP = F.hcell(M), F.hcell(N), F.hcell(P)
        lhs = vcompose_all(E, compose_h(E, F.comp(M, N), E.sq_id(FP)), F.comp(D.hcomp(M, N), P), F.square(D.assoc(M, N, P)))
        rhs = vcompose_all(E, E.assoc(FM, FN, FP), compose_h(E, E.sq_id(FM), F.comp(N, P)), F.comp(M, D.hcomp(N, P)))
        return _neq(E, lhs, rhs, "F_(.) associativity")

    def unitors(t):
        M = t[0]
        A, B, FM = D.hsrc(M), D.htgt(M), F.hcell(M)
        lhs = vcompose_all(E, compose_h(E, F.unit(A), E.sq_id(FM)), F.comp(D.hunit(A), M), F.square(D.src_unitor(M)))
        bad = _neq(E, lhs, E.src_unitor(FM), "F_U source unit")
        if bad:
            return bad
        lhs = vcompose_all(E, compose_h(E, E.sq_id(FM), F.unit(B)), F.comp(M, D.hunit(B)), F.square(D.tgt_unitor(M)))
        return _neq(E, lhs, E.tgt_unitor(FM), "F_U target unit")

    def down_pair(r):
        a = D.random_square(r)
        b = None if a is None else D.random_square(r, a.bottom)
        return None if b is None else (a, b)

    ax("frames", frames, lambda r: D.random_square(r), D.all_squares)
    ax("F_0 functor", d0, lambda r: _composable_vmors(D, 2, r), _vchains(D, 2))
    ax("F_1 functor", d1, down_pair, _schains(D, 2))
    ax("constraints globular and invertible", constraints, lambda r: _composable_hcells(D, 2, r),
       _hchains(D, 2))
    ax("F_(.) natural", comp_natural, lambda r: _interchange_instance(D, r), _hsquare_pairs(D))
    ax("F_U natural", unit_natural, lambda r: _composable_vmors(D, 1, r), _vchains(D, 1))
    ax("F_(.) associativity", assoc, lambda r: _composable_hcells(D, 3, r), _hchains(D, 3))
    ax("F_U unitality", unitors, lambda r: _composable_hcells(D, 1, r), _hchains(D, 1))
    return rep


def verify_transformation(alpha: DblTransformation, budget: SampleBudget | None = None) -> Report:
    budget = budget or SampleBudget()
    F, G = alpha.source, alpha.target
    D, E = F.domain, F.codomain
    rep = Report(f"transformation {alpha.name}")
    ax = lambda name, check, sampler: run_axiom(rep, name, CITE_TRANSFORMATION, check, budget, None, sampler, "transformation")

    def vnat(t):
        f = t[0]
        if E.vcomp(F.vmor(f), alpha.obj(D.vtgt(f))) != E.vcomp(alpha.obj(D.vsrc(f)), G.vmor(f)):
            return f"alpha not natural at {short(f)}"

    def frames(t):
        M = t[0]
        s = alpha.hcell(M)
        if s.frame[:4] != (F.hcell(M), alpha.obj(D.hsrc(M)), alpha.obj(D.htgt(M)), G.hcell(M)):
            return f"alpha_M has the wrong frame at {short(M)}"

    def snat(s):
        return _neq(E, compose_v(E, F.square(s), alpha.hcell(s.bottom)), compose_v(E, alpha.hcell(s.top), G.square(s)),
                    "alpha natural in squares")

    def comp(t):
        M, N = t
        lhs = compose_v(E, compose_h(E, alpha.hcell(M), alpha.hcell(N)), G.comp(M, N))
        rhs = compose_v(E, F.comp(M, N), alpha.hcell(D.hcomp(M, N)))
        return _neq(E, lhs, rhs, "alpha respects (.)")

    def unit(t):
        A = D.hsrc(t[0])
        lhs = compose_v(E, E.sq_unit(alpha.obj(A)), G.unit(A))
        rhs = compose_v(E, F.unit(A), alpha.hcell(D.hunit(A)))
        return _neq(E, lhs, rhs, "alpha respects U")

    ax("naturality on vertical 1-morphisms", vnat, lambda r: _composable_vmors(D, 1, r))
    ax("component frames", frames, lambda r: _composable_hcells(D, 1, r))
    ax("naturality on squares", snat, lambda r: D.random_square(r))
    ax("compatibility with (.)", comp, lambda r: _composable_hcells(D, 2, r))
    ax("compatibility with U", unit, lambda r: _composable_hcells(D, 1, r))
    return rep
