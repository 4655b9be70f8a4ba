"""Lifting a fibrant monoidal double category D to a monoidal bicategory on H(D).

A structural 1-cell (associator, unitors, braiding, or one of these tensored
with identities) is the chosen companion of its vertical 1-morphism, tensored
with horizontal units.  Every constraint 2-cell is a theta comparison between
two companions of one vertical 1-morphism.  Axioms are checked by replaying
two face sequences between a pair of paths of structural moves (see
:mod:`dblcoh.words`) and comparing the pasted squares.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .bicat import (
    Bicategory,
    ConjunctionalTransformation,
    Oplax,
    PseudoFunctor,
    compose_oplax,
    h_on_functor,
    id_cell,
    identity_oplax,
    lift_transformation,
    modification_defect,
    verify_choice_comparison,
)
from .companions import (
    Choices,
    CompanionPair,
    MissingCompanion,
    NotFibrant,
    companion_defect,
    companion_of_identity,
    compose_companions,
    conjoint_defect,
    find_companion,
    find_conjoint,
    relabeled_choices,
    standard_choices,
    tensor_companions,
    theta,
)
from .core import (
    Cell,
    DoubleCategory,
    FrameMismatch,
    HTree,
    Square,
    _flat,
    compose_h,
    compose_v,
    flat_square,
    flatten,
    inverse_cell,
    leaf,
    leaves,
    node,
    paste_h,
    paste_v,
    reshape,
    short,
    unit_leaf,
    vcompose_all,
)
from .functor import DblFunctor, DblTransformation
from .models.wrappers import PowerModel
from .monoidal import MonoidalDoubleCategory, verify_braided, verify_monoidal, verify_symmetric
from .report import AxiomResult, Report, SampleBudget, run_axiom
from .words import (
    CONSTRAINT_FACES,
    ONE,
    PATTERNS,
    Face,
    Move,
    path_from,
    pattern_positions,
    replay,
    show,
    subword,
    variables,
)

CITE_FIBRANT = "fibrant: every vertical 1-morphism has a companion and a conjoint"
CITE_CONSTRAINT = "constraint 2-cells are theta comparisons between companions of one vertical iso"
CITE_MODIFICATION = "modification axiom for the lifted constraint 2-cells"
CITE_MONOIDAL = "monoidal bicategory: three equations (the associahedron and two unit equations)"
CITE_BRAIDED = "braided monoidal bicategory: the four 2-cell diagrams (1|3, 3|1, 2|2, 1|1|1)"
CITE_SYLLEPTIC = "sylleptic monoidal bicategory: two axioms relating the syllepsis to the hexagonators"
CITE_SYMMETRIC = "symmetric monoidal bicategory: the one additional axiom"
CITE_CHOICE = "choice independence: two certificates give theta-related lifts"

GROUPS = {
    "monoidal": "three equations",
    "braided": "four 2-cell diagrams",
    "sylleptic": "two axioms",
    "symmetric": "one additional axiom",
}


class MonoidalAxiomFailure(AssertionError):
    pass


class BraidAxiomFailure(MonoidalAxiomFailure):
    pass


class SyllepsisAxiomFailure(BraidAxiomFailure):
    pass


# fibrancy


@dataclass(frozen=True)
class FibrancyCertificate:
    """Chosen companions and conjoints; ``checked`` counts the verified entries."""

    model: DoubleCategory
    choices: Choices
    isofibrant: bool = False
    closed_form: bool = True
    checked: int = 0

    def summary(self) -> dict:
        return {"model": self.model.name, "choices": self.choices.name, "isofibrant": self.isofibrant,
                "closed_form": self.closed_form, "checked": self.checked}


def _is_iso(m: DoubleCategory, f) -> bool:
    try:
        g = m.vinverse(f)
    except Exception:
        return False
    return g is not None and m.vcomp(f, g) == m.vid(m.vsrc(f))


def certify_fibrant(m: DoubleCategory, mode: str = "standard", isofibrant: bool = False,
                    limit: int | None = None) -> FibrancyCertificate:
    """Choose and verify a companion and a conjoint for every vertical 1-morphism.

    Models with closed-form companions (``companion_squares``) are verified on
    their enumerated range and extended lazily; other models are searched
    exhaustively.  ``mode="relabeled"`` transports the closed forms along apex
    relabellings to get a second, different certificate.
    """
    closed = hasattr(m, "companion_squares")
    vmors = [f for f in m.all_vmors() if not isofibrant or _is_iso(m, f)]
    if closed:
        choices = relabeled_choices(m) if mode == "relabeled" else standard_choices(m)
    else:
        if mode != "standard":
            raise ValueError(f"mode {mode!r} needs closed-form companions")
        declared = getattr(m, "declared_companions", {})
        table_c = {f: CompanionPair(f, *declared[f]) if f in declared else find_companion(m, f, limit)
                   for f in vmors}
        table_j = {f: find_conjoint(m, f, limit) for f in vmors}
        missing = [f for f in vmors if table_c[f] is None or table_j[f] is None]
        if missing:
            raise NotFibrant(missing)
        choices = Choices(m, table_c.get, table_j.get, "searched")
    bad = []
    for f in vmors:
        try:
            c, j = choices.companion(f), choices.conjoint(f)
        except (MissingCompanion, NotFibrant):
            bad.append(f)
            continue
        defect = companion_defect(m, c) or conjoint_defect(m, j)
        if defect:
            bad.append(f"{short(f, 60)} ({defect})")
    if bad:
        raise NotFibrant(bad)
    return FibrancyCertificate(m, choices, isofibrant, closed, len(vmors))


# words as functors D^n -> D


def _letters(w) -> tuple:
    out: list = []
    for v in variables(w):
        if v not in out:
            out.append(v)
    return tuple(out)


class WordFunctors:
    """Evaluate tensor words in ``T`` at an assignment of letters."""

    def __init__(self, T: MonoidalDoubleCategory):
        self.T, self.m = T, T.base

    def obj(self, w, env: dict):
        if w == ONE:
            return self.T.unit_obj()
        if isinstance(w, str):
            return env[w]
        return self.T.tensor_obj(self.obj(w[0], env), self.obj(w[1], env))

    def vmor(self, w, env: dict):
        if w == ONE:
            return self.m.vid(self.T.unit_obj())
        if isinstance(w, str):
            return env[w]
        return self.T.tensor_vmor(self.vmor(w[0], env), self.vmor(w[1], env))

    def hcell(self, w, env: dict):
        if w == ONE:
            return self.m.hunit(self.T.unit_obj())
        if isinstance(w, str):
            return env[w]
        return self.T.tensor_hcell(self.hcell(w[0], env), self.hcell(w[1], env))

    def square(self, w, env: dict) -> Square:
        if w == ONE:
            return self.m.sq_id(self.m.hunit(self.T.unit_obj()))
        if isinstance(w, str):
            return env[w]
        return self.T.tensor_sq(self.square(w[0], env), self.square(w[1], env))

    def comp(self, w, envM: dict, envN: dict) -> Square:
        """``F(M) ; F(N) => F(M ; N)``."""
        m = self.m
        if w == ONE:
            return m.src_unitor(m.hunit(self.T.unit_obj()))
        if isinstance(w, str):
            return m.sq_id(m.hcomp(envM[w], envN[w]))
        L, R = w
        x = self.T.interchanger(self.hcell(L, envM), self.hcell(R, envM), self.hcell(L, envN), self.hcell(R, envN))
        return compose_v(m, x, self.T.tensor_sq(self.comp(L, envM, envN), self.comp(R, envM, envN)))

    def unit(self, w, env: dict) -> Square:
        """``U_F(A) => F(U_A)``."""
        m = self.m
        if w == ONE:
            return m.sq_id(m.hunit(self.T.unit_obj()))
        if isinstance(w, str):
            return m.sq_id(m.hunit(env[w]))
        L, R = w
        u = self.T.unit_comparison(self.obj(L, env), self.obj(R, env))
        return compose_v(m, u, self.T.tensor_sq(self.unit(L, env), self.unit(R, env)))

    def functor(self, w, letters: tuple) -> DblFunctor:
        """``w`` as a pseudo double functor ``D^n -> D`` (letters in the given order)."""
        D = PowerModel(self.m, len(letters))
        env = lambda t: dict(zip(letters, t))
        return DblFunctor(
            D, self.m, lambda A: self.obj(w, env(A)), lambda f: self.vmor(w, env(f)), lambda M: self.hcell(w, env(M)),
            lambda s: self.square(w, env(PowerModel.split(s))), lambda M, N: self.comp(w, env(M), env(N)),
            lambda A: self.unit(w, env(A)), show(w))


# the atomic structural transformations


def atomic_vmor(T: MonoidalDoubleCategory, kind: str, args: dict):
    """Vertical component of one move at the objects bound to its pattern letters."""
    m = T.base
    if kind == "a":
        return T.assoc_vmor(args["x"], args["y"], args["z"])
    if kind == "ai":
        return m.vinverse(T.assoc_vmor(args["x"], args["y"], args["z"]))
    if kind == "l":
        return T.lunit_vmor(args["x"])
    if kind == "r":
        return T.runit_vmor(args["x"])
    if kind == "s":
        return T.braid_vmor(args["x"], args["y"])
    raise KeyError(kind)


def atomic_square(T: MonoidalDoubleCategory, kind: str, args: dict) -> Square:
    """Square component of one move at the 1-cells bound to its pattern letters."""
    m = T.base
    if kind == "a":
        return T.assoc_sq(args["x"], args["y"], args["z"])
    if kind == "ai":
        return m.sq_inverse(T.assoc_sq(args["x"], args["y"], args["z"]))
    if kind == "l":
        return T.lunit_sq(args["x"])
    if kind == "r":
        return T.runit_sq(args["x"])
    if kind == "s":
        return T.braid_sq(args["x"], args["y"])
    raise KeyError(kind)


def atomic_transformation(T: MonoidalDoubleCategory, kind: str) -> DblTransformation:
    """The move ``kind`` as a vertical transformation between its pattern functors."""
    W = WordFunctors(T)
    src, tgt = PATTERNS[kind]
    letters = _letters(src)
    env = lambda t: dict(zip(letters, t))
    return DblTransformation(
        W.functor(src, letters), W.functor(tgt, letters),
        lambda A: atomic_vmor(T, kind, env(A)), lambda M: atomic_square(T, kind, env(M)), kind)


# the lift


def _key(env: dict) -> tuple:
    return tuple(sorted(env.items(), key=lambda kv: kv[0]))


def _rel(move: Move, at: tuple) -> Move:
    """``move`` seen inside the subword at ``at``."""
    return Move(move.kind, move.pos[len(at):], subword(move.source, at))


def _ctx(w, pos: tuple) -> list[tuple]:
    """Ancestors of ``pos`` from the innermost out: ``(parent position, side, sibling word)``."""
    out = []
    for d in range(len(pos) - 1, -1, -1):
        parent, side = pos[:d], pos[d]
        out.append((parent, side, subword(w, parent + (1 - side,))))
    return out


class MonoidalLift:
    """Structural 1-cells and constraint 2-cells of H(D), evaluated at letter assignments.

    ``faults`` names deliberately corrupted constraints (``"pi"`` inverts the
    pentagonator); it exists so that the verifier can be shown to detect errors.
    """

    def __init__(self, T: MonoidalDoubleCategory, cert: FibrancyCertificate, faults: tuple = ()):
        self.T, self.m, self.cert = T, T.base, cert
        self.choices = cert.choices
        self.W = WordFunctors(T)
        self.faults = frozenset(faults)
        self._lifts: dict = {}
        self._edges: dict = {}

    # 1-cells

    def lift(self, kind: str) -> ConjunctionalTransformation:
        if kind not in self._lifts:
            self._lifts[kind] = lift_transformation(atomic_transformation(self.T, kind), self.choices)
        return self._lifts[kind]

    def arg_objects(self, move: Move, env: dict) -> dict:
        return {v: self.W.obj(sub, env) for v, sub in move.args.items()}

    def edge(self, move: Move, env: dict) -> CompanionPair:
        """Companion of the move's vertical 1-morphism, tensored with identities into place."""
        k = (move, _key(env))
        if k not in self._edges:
            args = self.arg_objects(move, env)
            c = self.choices.companion(atomic_vmor(self.T, move.kind, args))
            for _, side, sib in _ctx(move.source, move.pos):
                ci = companion_of_identity(self.m, self.W.obj(sib, env))
                c = tensor_companions(self.T, c, ci) if side == 0 else tensor_companions(self.T, ci, c)
            self._edges[k] = c
        return self._edges[k]

    def path_tree(self, path, env: dict, source=None) -> HTree:
        if not path:
            return unit_leaf(self.m, self.W.obj(source, env))
        out = leaf(self.m, self.edge(path[-1], env).fhat)
        for mv in reversed(path[:-1]):
            out = node(leaf(self.m, self.edge(mv, env).fhat), out)
        return out

    def path_companion(self, path, env: dict, source) -> CompanionPair:
        if not path:
            return companion_of_identity(self.m, self.W.obj(source, env))
        c = self.edge(path[-1], env)
        for mv in reversed(path[:-1]):
            c = compose_companions(self.m, self.edge(mv, env), c)
        return c

    def path_vmor(self, path, env: dict, source):
        return self.path_companion(path, env, source).f if path else self.m.vid(self.W.obj(source, env))

    # tensoring a cell with the identity on a sibling object

    def _collapse(self, S, k: int) -> Square:
        """``U ; (U ; ...)`` (k copies, at least one) onto ``U``."""
        m = self.m
        U = m.hunit(S)
        if k <= 1:
            return m.sq_id(U)
        return m.sq_vcomp(m.sq_hcomp(m.sq_id(U), self._collapse(S, k - 1)), m.src_unitor(U))

    def _chain(self, S, k: int) -> Any:
        m = self.m
        U = m.hunit(S)
        out = U
        for _ in range(k - 1):
            out = m.hcomp(U, out)
        return out

    def _whiskered(self, M, S, side: int):
        U = self.m.hunit(S)
        return self.T.tensor_hcell(M, U) if side == 0 else self.T.tensor_hcell(U, M)

    def _xchain(self, ms: tuple, A, S, side: int) -> Square:
        """Flat ``(m1 x U) ; (m2 x U) ; ...`` onto ``(m1 ; m2 ; ...) x (U ; U ; ...)``."""
        m, T = self.m, self.T
        if not ms:
            return T.unit_comparison(A, S) if side == 0 else T.unit_comparison(S, A)
        if len(ms) == 1:
            return m.sq_id(self._whiskered(ms[0], S, side))
        head, rest = ms[0], ms[1:]
        inner = m.sq_hcomp(m.sq_id(self._whiskered(head, S, side)), self._xchain(rest, m.htgt(head), S, side))
        flat_rest = _flat(m, rest, m.hsrc(rest[0]))
        U, Uk = m.hunit(S), self._chain(S, len(rest))
        x = T.interchanger(head, U, flat_rest, Uk) if side == 0 else T.interchanger(U, head, Uk, flat_rest)
        return m.sq_vcomp(inner, x)

    def tensor_identity(self, c: Cell, S, side: int) -> Cell:
        """``c (x) 1_S`` (``side`` 0) or ``1_S (x) c`` (``side`` 1), boundaries kept flat."""
        m, T = self.m, self.T
        top, bot = leaves(c.top), leaves(c.bottom)
        A, B = c.top.src, c.top.tgt
        U = m.hunit(S)
        chain = m.sq_vcomp(self._collapse(S, len(top)), m.sq_inverse(self._collapse(S, len(bot))))
        core = flat_square(m, c)
        mid = T.tensor_sq(core, chain) if side == 0 else T.tensor_sq(chain, core)
        sq = vcompose_all(m, self._xchain(top, A, S, side), mid, m.sq_inverse(self._xchain(bot, A, S, side)))
        AS = T.tensor_obj(A, S) if side == 0 else T.tensor_obj(S, A)
        return Cell(sq, self._flat_tree([self._whiskered(x, S, side) for x in top], AS),
                    self._flat_tree([self._whiskered(x, S, side) for x in bot], AS))

    def _flat_tree(self, cells: list, A) -> HTree:
        if not cells:
            return unit_leaf(self.m, A)
        out = leaf(self.m, cells[-1])
        for x in reversed(cells[:-1]):
            out = node(leaf(self.m, x), out)
        return out

    def in_context(self, c: Cell, w, pos: tuple, env: dict) -> Cell:
        for _, side, sib in _ctx(w, pos):
            c = self.tensor_identity(c, self.W.obj(sib, env), side)
        return c

    # 2-cells between paths

    def constraint_cell(self, face: Face, env: dict) -> Cell:
        """Theta between the two boundary companions, built at the face's node and tensored into place."""
        at, w = face.pos, subword(face.word, face.pos)
        src = tuple(_rel(mv, at) for mv in face.src)
        tgt = tuple(_rel(mv, at) for mv in face.tgt)
        t = theta(self.m, self.path_companion(src, env, w), self.path_companion(tgt, env, w))
        if face.kind == "pi" and "pi" in self.faults:
            t = self.m.sq_inverse(t)
            if t.top != self.path_companion(src, env, w).fhat:
                raise FrameMismatch("inverted pentagonator does not fit its boundary")
        c = Cell(t, self.path_tree(src, env, w), self.path_tree(tgt, env, w))
        return self.in_context(c, face.word, at, env)

    def _unit_collapse(self, pat, objs: dict, args: dict, hot: str) -> Square:
        """``F_pat(args) => `` the same word with every ``hot``-free subword a single unit.

        ``args`` are units except at ``hot``; the comparison is built from the
        inverse unit constraints of the word functors.
        """
        m = self.m
        if pat == hot:
            return m.sq_id(args[hot])
        if hot not in variables(pat):
            return m.sq_inverse(self.W.unit(pat, objs))
        return self.T.tensor_sq(self._unit_collapse(pat[0], objs, args, hot),
                                self._unit_collapse(pat[1], objs, args, hot))

    def nat_cell(self, face: Face, env: dict) -> Cell:
        """The outer move's lifted oplax cell at (inner edge, units), units collapsed on both sides."""
        m = self.m
        at, outer, inner = face.pos, face.tgt[0], face.inner
        w = subword(face.word, at)
        rel_inner = _rel(inner, at)
        pin, pout = PATTERNS[outer.kind]
        vpos = pattern_positions(pin)
        objs, args, hot = {}, {}, None
        for v in _letters(pin):
            objs[v] = self.W.obj(subword(w, vpos[v]), env)
            if rel_inner.pos[: len(vpos[v])] == vpos[v]:
                args[v], hot = self.edge(_rel(rel_inner, vpos[v]), env).fhat, v
            else:
                args[v] = m.hunit(objs[v])
        sq = self.lift(outer.kind).hat_cell(tuple(args[v] for v in _letters(pin)))
        into = m.sq_inverse(self._unit_collapse(pin, objs, args, hot))
        out = self._unit_collapse(pout, objs, args, hot)
        lifted = self.lift(outer.kind)
        ca = lifted.hat_obj(tuple(m.hsrc(args[v]) for v in _letters(pin)))
        cb = lifted.hat_obj(tuple(m.htgt(args[v]) for v in _letters(pin)))
        sq = vcompose_all(m, compose_h(m, into, m.sq_id(cb.fhat)), sq, compose_h(m, m.sq_id(ca.fhat), out))
        src = tuple(_rel(mv, at) for mv in face.src)
        tgt = tuple(_rel(mv, at) for mv in face.tgt)
        top, bottom = self.path_tree(src, env, w), self.path_tree(tgt, env, w)
        if (sq.top, sq.bottom) != (m.hcomp(*leaves(top)), m.hcomp(*leaves(bottom))):
            raise FrameMismatch(f"naturality cell for {face} has an unexpected boundary")
        return self.in_context(Cell(sq, top, bottom), face.word, at, env)

    def _iota(self, N) -> Square:
        """``N ; U => U ; N``."""
        m = self.m
        return m.sq_vcomp(m.tgt_unitor(N), m.sq_inverse(m.src_unitor(N)))

    def _iota_inv(self, N) -> Square:
        m = self.m
        return m.sq_vcomp(m.src_unitor(N), m.sq_inverse(m.tgt_unitor(N)))

    def int_cell(self, face: Face, env: dict) -> Cell:
        """Two moves in disjoint subwords slide past each other."""
        m, T = self.m, self.T
        m1, m2 = face.inner, face.outer
        k = 0
        while m1.pos[k] == m2.pos[k]:
            k += 1
        at = m1.pos[:k]
        w0, w1 = face.word, m1.target
        side1 = m1.pos[k]
        e1 = self.edge(_rel(m1, at + (side1,)), env).fhat
        e2 = self.edge(_rel(m2, at + (1 - side1,)), env).fhat
        if side1 == 0:
            UR, UL2 = m.hunit(m.hsrc(e2)), m.hunit(m.htgt(e1))
            UL, UR2 = m.hunit(m.hsrc(e1)), m.hunit(m.htgt(e2))
            x = T.interchanger(e1, UR, UL2, e2)
            mid = T.tensor_sq(self._iota(e1), self._iota_inv(e2))
            y = m.sq_inverse(T.interchanger(UL, e2, e1, UR2))
        else:
            UL, UR2 = m.hunit(m.hsrc(e2)), m.hunit(m.htgt(e1))
            UR, UL2 = m.hunit(m.hsrc(e1)), m.hunit(m.htgt(e2))
            x = T.interchanger(UL, e1, e2, UR2)
            mid = T.tensor_sq(self._iota_inv(e2), self._iota(e1))
            y = m.sq_inverse(T.interchanger(e2, UR, UL2, e1))
        sq = vcompose_all(m, x, mid, y)
        w = subword(w0, at)
        src = tuple(_rel(mv, at) for mv in face.src)
        tgt = tuple(_rel(mv, at) for mv in face.tgt)
        return self.in_context(Cell(sq, self.path_tree(src, env, w), self.path_tree(tgt, env, w)), w0, at, env)

    def face_cell(self, face: Face, env: dict) -> Cell:
        if face.kind == "nat":
            return self.nat_cell(face, env)
        if face.kind == "int":
            return self.int_cell(face, env)
        return self.constraint_cell(face, env)

    def face_theta(self, face: Face, env: dict) -> Square:
        """The theta comparison the face should equal, computed in full context."""
        return theta(self.m, self.path_companion(face.src, env, face.word),
                     self.path_companion(face.tgt, env, face.word))

    def side(self, P: tuple, steps, env: dict, source) -> Cell:
        """Paste the faces of one filling, starting from the path ``P``."""
        m = self.m
        played, _ = replay(P, steps)
        acc = id_cell(m, self.path_tree(P, env, source))
        for face, i, inv, before in played:
            c = self.face_cell(face, env)
            n = len(face.tgt if inv else face.src)
            if inv:
                c = inverse_cell(m, c)
            pre, post = before[:i], before[i + n:]
            parts = []
            if pre:
                parts.append(id_cell(m, self.path_tree(pre, env)))
            parts.append(c)
            if post:
                parts.append(id_cell(m, self.path_tree(post, env)))
            acc = paste_v(m, acc, paste_h(m, *parts) if len(parts) > 1 else c)
        return acc

    # edges as oplax transformations between word functors

    def edge_cell(self, move: Move, envM: dict) -> Square:
        """``F(M) ; e_B => e_A ; G(M)`` for the move in context, at a tuple of 1-cells."""
        m, T = self.m, self.T
        A = {k: m.hsrc(v) for k, v in envM.items()}
        B = {k: m.htgt(v) for k, v in envM.items()}
        node_move = _rel(move, move.pos)
        letters = _letters(PATTERNS[move.kind][0])
        args = {v: self.W.hcell(sub, envM) for v, sub in node_move.args.items()}
        sq = self.lift(move.kind).hat_cell(tuple(args[v] for v in letters))
        for parent, side, sib in _ctx(move.source, move.pos):
            N = self.W.hcell(sib, envM)
            here = parent + (side,)
            FX, GX = self.W.hcell(subword(move.source, here), envM), self.W.hcell(subword(move.target, here), envM)
            inner = _rel(move, here)
            eA, eB = self.edge(inner, A).fhat, self.edge(inner, B).fhat
            U0, U1 = m.hunit(m.hsrc(N)), m.hunit(m.htgt(N))
            if side == 0:
                x = T.interchanger(FX, N, eB, U1)
                mid = T.tensor_sq(sq, self._iota(N))
                y = m.sq_inverse(T.interchanger(eA, U0, GX, N))
            else:
                x = T.interchanger(N, FX, U1, eB)
                mid = T.tensor_sq(self._iota(N), sq)
                y = m.sq_inverse(T.interchanger(U0, eA, N, GX))
            sq = vcompose_all(m, x, mid, y)
        return sq

    def edge_oplax(self, move: Move, letters: tuple) -> Oplax:
        """The move in context as an oplax transformation between word functors ``D^n -> D``."""
        m = self.m
        D = PowerModel(m, len(letters))
        env = lambda t: dict(zip(letters, t))
        F = self.W.functor(move.source, letters)
        G = self.W.functor(move.target, letters)

        def cell_(M):
            e = env(M)
            eA = self.edge(move, {k: m.hsrc(v) for k, v in e.items()}).fhat
            eB = self.edge(move, {k: m.htgt(v) for k, v in e.items()}).fhat
            sq = self.edge_cell(move, e)
            return Cell(sq, node(leaf(m, F.hcell(M)), leaf(m, eB)), node(leaf(m, eA), leaf(m, G.hcell(M))))

        return Oplax(m, D, F.hcell, G.hcell, lambda A: leaf(m, self.edge(move, env(A)).fhat), cell_, str(move))

    def path_oplax(self, path: tuple, source, letters: tuple) -> Oplax:
        if not path:
            F = self.W.functor(source, letters)
            return identity_oplax(self.m, PowerModel(self.m, len(letters)), F.hcell, F.obj, "1")
        out = self.edge_oplax(path[0], letters)
        for mv in path[1:]:
            out = compose_oplax(out, self.edge_oplax(mv, letters))
        return out


# constraint 2-cells as named data

KINDS = {
    "monoidal": ("pi", "mu", "lam", "rho"),
    "braided": ("pi", "mu", "lam", "rho", "zeta", "xi"),
    "symmetric": ("pi", "mu", "lam", "rho", "zeta", "xi", "nu"),
}
MOVES = {"monoidal": ("a", "l", "r"), "braided": ("a", "l", "r", "s"), "symmetric": ("a", "l", "r", "s")}
LEVELS = ("monoidal", "braided", "symmetric")
_CAPS = {"x": "A", "y": "B", "z": "C", "w": "D"}


def _caps(w):
    if isinstance(w, tuple):
        return tuple(_caps(u) for u in w)
    return _CAPS.get(w, w)


def constraint_face_at_root(kind: str) -> Face:
    from .words import constraint_face

    return constraint_face(kind, _caps(CONSTRAINT_FACES[kind][0]), ())


def _path_str(path) -> str:
    return " ; ".join(f"{mv.kind}@{''.join(map(str, mv.pos)) or '.'}" for mv in path) or "1"


@dataclass
class MonoidalBicategoryData:
    """H(D) with its lifted monoidal (and braided, symmetric) structure.

    Constraint 2-cells are available through :meth:`constraint` at any
    assignment of objects to the letters of their pattern.
    """

    lift: MonoidalLift
    level: str
    bicategory: Bicategory
    tensor: PseudoFunctor
    unit: Any
    associator: ConjunctionalTransformation
    lunitor: ConjunctionalTransformation
    runitor: ConjunctionalTransformation
    braiding: ConjunctionalTransformation | None = None
    symmetric: bool = False

    @property
    def kinds(self) -> tuple:
        return KINDS[self.level]

    def constraint(self, kind: str, *objs) -> Square:
        """``pi``, ``mu``, ``lam``, ``rho``, ``zeta``, ``xi`` or ``nu`` at the given objects, flat boundaries."""
        if kind not in self.kinds:
            raise KeyError(f"{kind} is not part of a {self.level} structure")
        f = constraint_face_at_root(kind)
        letters = _letters(f.word)
        return flat_square(self.lift.m, self.lift.face_cell(f, dict(zip(letters, objs))))

    def boundaries(self) -> dict:
        """Source and target paths of each constraint 2-cell, as text."""
        out = {}
        for kind in self.kinds:
            f = constraint_face_at_root(kind)
            out[kind] = {"at": show(f.word), "source": _path_str(f.src), "target": _path_str(f.tgt)}
        return out


def _require(report: Report, exc: type, what: str):
    if not report.ok:
        bad = report.failures()[0]
        raise exc(f"{what}: {bad.name}: {bad.counterexample}")


def _check_components(L: MonoidalLift, kinds) -> None:
    """Every structural component at the enumerated objects must have chosen companions."""
    m, T = L.m, L.T
    objs = list(m.objects())
    missing = []
    for kind in kinds:
        n = len(_letters(PATTERNS[kind][0]))
        for A in _tuples(objs, n):
            f = atomic_vmor(T, kind, dict(zip(("x", "y", "z")[:n], A)))
            try:
                L.choices.companion(f)
                L.choices.conjoint(f)
            except (MissingCompanion, NotFibrant):
                missing.append(f)
    if missing:
        raise NotFibrant(missing)


def _tuples(objs: list, n: int):
    import itertools

    return itertools.product(objs, repeat=n)


def _lift(T: MonoidalDoubleCategory, cert: FibrancyCertificate, level: str, budget: SampleBudget | None,
          check: bool, faults: tuple) -> MonoidalBicategoryData:
    if check:
        budget = budget or SampleBudget()
        _require(verify_monoidal(T, budget), MonoidalAxiomFailure, "not a monoidal double category")
        if level in ("braided", "symmetric"):
            _require(verify_braided(T, budget), BraidAxiomFailure, "not braided")
        if level == "symmetric":
            _require(verify_symmetric(T, budget), SyllepsisAxiomFailure, "not symmetric")
    L = MonoidalLift(T, cert, faults)
    _check_components(L, MOVES[level])
    braided = level in ("braided", "symmetric")
    return MonoidalBicategoryData(
        L, level, Bicategory(T.base), h_on_functor(T.tensor_functor), T.unit_obj(),
        L.lift("a"), L.lift("l"), L.lift("r"), L.lift("s") if braided else None, level == "symmetric")


def lift_monoidal(T: MonoidalDoubleCategory, cert: FibrancyCertificate, budget: SampleBudget | None = None,
                  check: bool = True, faults: tuple = ()) -> MonoidalBicategoryData:
    """H(D) as a monoidal bicategory; ``check`` first verifies the monoidal axioms of D."""
    return _lift(T, cert, "monoidal", budget, check, faults)


def lift_braided(T: MonoidalDoubleCategory, cert: FibrancyCertificate, budget: SampleBudget | None = None,
                 check: bool = True, faults: tuple = ()) -> MonoidalBicategoryData:
    return _lift(T, cert, "braided", budget, check, faults)


def lift_symmetric(T: MonoidalDoubleCategory, cert: FibrancyCertificate, budget: SampleBudget | None = None,
                   check: bool = True, faults: tuple = ()) -> MonoidalBicategoryData:
    return _lift(T, cert, "symmetric", budget, check, faults)


LIFTS = {"monoidal": lift_monoidal, "braided": lift_braided, "symmetric": lift_symmetric}


# verification

AXIOM_LEVEL = {"monoidal": "monoidal", "braided": "braided", "sylleptic": "symmetric", "symmetric": "symmetric"}
AXIOM_CITE = {"monoidal": CITE_MONOIDAL, "braided": CITE_BRAIDED, "sylleptic": CITE_SYLLEPTIC,
              "symmetric": CITE_SYMMETRIC}


def _axioms_for(level: str) -> list[str]:
    from .axioms import AXIOMS

    wanted = {"monoidal": {"monoidal"}, "braided": {"monoidal", "braided"},
              "symmetric": {"monoidal", "braided", "sylleptic", "symmetric"}}[level]
    return [k for k, t in AXIOMS.items() if t["group"] in wanted]


def _neq_sq(m: DoubleCategory, x: Square, y: Square, what: str) -> str | None:
    if x == y or m.sq_eq(x, y):
        return None
    return f"{what}: {short(x, 200)} != {short(y, 200)}"


def _sub_budget(budget: SampleBudget, default: int) -> SampleBudget:
    return SampleBudget(budget.limit, budget.seed, budget.samples if budget.samples is not None else default)


def _frame_holds(m: DoubleCategory, top, bottom) -> bool:
    A, B = m.hsrc(top), m.htgt(top)
    return bool(m.squares(top, m.vid(A), m.vid(B), bottom))


def verify_monoidal_bicategory(d: MonoidalBicategoryData, budget: SampleBudget | None = None,
                               mode: str = "brute", mod_samples: int = 100, posetal: bool = True) -> Report:
    """Constraint cells are theta, modification axioms, and every axiom template of ``d.level``.

    ``mode="brute"`` pastes both fillings of each template and compares the
    squares; ``mode="theta"`` instead checks that both paths lie over the same
    vertical 1-morphism and that every face used is the theta between its
    boundary companions (so both composites are that theta as well).

    On a locally posetal model (``posetal`` left on) parallel squares are
    equal, so each check reduces to the existence of the square with the
    required boundary.
    """
    from .axioms import AXIOMS

    if mode not in ("brute", "theta"):
        raise ValueError(f"unknown check mode {mode!r}")
    budget = budget or SampleBudget()
    L, m = d.lift, d.lift.m
    objs = list(m.objects())
    rep = Report(f"{d.level} monoidal bicategory lifted from {d.lift.T.name if hasattr(d.lift.T, 'name') else m.name}")
    mbudget = _sub_budget(budget, mod_samples)
    flat_only = posetal and getattr(m, "locally_posetal", False)
    if flat_only:
        rep.title += " (locally posetal: parallel squares coincide)"

    def env_sampler(letters):
        return lambda r: dict(zip(letters, (r.choice(objs) for _ in letters)))

    def env_all(letters):
        return lambda: (dict(zip(letters, t)) for t in _tuples(objs, len(letters)))

    for kind in d.kinds:
        f = constraint_face_at_root(kind)
        letters = _letters(f.word)

        def is_theta(env, f=f):
            if L.path_vmor(f.src, env, f.word) != L.path_vmor(f.tgt, env, f.word):
                return f"{f} boundaries lie over different vertical 1-morphisms at {short(env)}"
            if flat_only:
                top, bot = L.path_companion(f.src, env, f.word).fhat, L.path_companion(f.tgt, env, f.word).fhat
                return None if _frame_holds(m, top, bot) else f"no square {kind} at {short(env)}"
            return _neq_sq(m, flat_square(m, L.face_cell(f, env)), L.face_theta(f, env), f"{kind} is not theta")

        run_axiom(rep, f"{kind} is a theta comparison", CITE_CONSTRAINT, is_theta, budget,
                  env_all(letters), env_sampler(letters), "constraint cells")

    for kind in d.kinds:
        f = constraint_face_at_root(kind)
        letters = _letters(f.word)
        src, tgt = L.path_oplax(f.src, f.word, letters), L.path_oplax(f.tgt, f.word, letters)
        mu = lambda A, f=f, letters=letters: L.face_cell(f, dict(zip(letters, A)))
        D = PowerModel(m, len(letters))

        def mod(M, src=src, tgt=tgt, mu=mu, f=f, letters=letters):
            if flat_only:
                for X in (D.hsrc(M), D.htgt(M)):
                    env = dict(zip(letters, X))
                    top, bot = L.path_companion(f.src, env, f.word).fhat, L.path_companion(f.tgt, env, f.word).fhat
                    if not _frame_holds(m, top, bot):
                        return f"no component square for {f.kind} at {short(X)}"
                return None
            return modification_defect(src, tgt, mu, M)

        run_axiom(rep, f"{kind} modification axiom", CITE_MODIFICATION, mod, mbudget, None,
                  lambda r, D=D: D.random_hcell(r), "modification axioms")

    for name in _axioms_for(d.level):
        t = AXIOMS[name]
        P, Q = path_from(t["source"], t["P"]), path_from(t["source"], t["Q"])
        letters = _letters(t["source"])
        if flat_only:
            def check(env, t=t, P=P, Q=Q, name=name):
                cp, cq = L.path_companion(P, env, t["source"]), L.path_companion(Q, env, t["source"])
                if cp.f != cq.f:
                    return f"{name}: paths lie over different vertical 1-morphisms at {short(env)}"
                return None if _frame_holds(m, cp.fhat, cq.fhat) else f"{name}: no square between the paths"
        elif mode == "brute":
            def check(env, t=t, P=P, name=name):
                x = flat_square(m, L.side(P, t["left"], env, t["source"]))
                y = flat_square(m, L.side(P, t["right"], env, t["source"]))
                return _neq_sq(m, x, y, f"{name} fails at {short(env)}")
        else:
            def check(env, t=t, P=P, Q=Q, name=name):
                if L.path_vmor(P, env, t["source"]) != L.path_vmor(Q, env, t["source"]):
                    return f"{name}: paths lie over different vertical 1-morphisms at {short(env)}"
                for side in ("left", "right"):
                    for face, _, _, _ in replay(P, t[side])[0]:
                        bad = _neq_sq(m, flat_square(m, L.face_cell(face, env)), L.face_theta(face, env),
                                      f"{name}: face {face} is not theta at {short(env)}")
                        if bad:
                            return bad
                return None

        group = GROUPS[t["group"]]
        run_axiom(rep, name, f"{AXIOM_CITE[t['group']]}; {t['about']}", check, budget,
                  env_all(letters), env_sampler(letters), group)
    return rep


def verify_choice_independence(T: MonoidalDoubleCategory, cert1: FibrancyCertificate, cert2: FibrancyCertificate,
                               level: str = "symmetric", budget: SampleBudget | None = None) -> Report:
    """Lifts built from two certificates are related by theta comparisons.

    For each structural transformation the theta components form an invertible
    modification between the two lifts; for each constraint 2-cell, conjugating
    by the thetas of its boundaries turns one lift's cell into the other's.
    """
    budget = budget or SampleBudget()
    L1, L2 = MonoidalLift(T, cert1), MonoidalLift(T, cert2)
    m = T.base
    objs = list(m.objects())
    rep = Report("choice independence")
    for kind in MOVES[level]:
        sub = verify_choice_comparison(atomic_transformation(T, kind), cert1.choices, cert2.choices, budget)
        for r in sub.results:
            r.name = f"{kind}: {r.name}"
            r.citation = CITE_CHOICE
            rep.add(r)
    for kind in KINDS[level]:
        f = constraint_face_at_root(kind)
        letters = _letters(f.word)

        def conj(env, f=f):
            tP = theta(m, L1.path_companion(f.src, env, f.word), L2.path_companion(f.src, env, f.word))
            tQ = theta(m, L1.path_companion(f.tgt, env, f.word), L2.path_companion(f.tgt, env, f.word))
            x = m.sq_vcomp(tP, flat_square(m, L2.face_cell(f, env)))
            y = m.sq_vcomp(flat_square(m, L1.face_cell(f, env)), tQ)
            return _neq_sq(m, x, y, f"{f.kind} not theta-related at {short(env)}")

        run_axiom(rep, f"{kind} theta-related across certificates", CITE_CHOICE, conj, budget,
                  lambda letters=letters: (dict(zip(letters, t)) for t in _tuples(objs, len(letters))),
                  lambda r, letters=letters: dict(zip(letters, (r.choice(objs) for _ in letters))), "choices")
    return rep
