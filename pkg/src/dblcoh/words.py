"""Bracketed tensor words, structural moves between them, and the faces those moves bound.

A word is a variable name (``str``), the unit ``I`` or a pair ``(left, right)``.
A move rewrites the subword at a position (a tuple of 0/1 steps) by one of the
structural patterns below.  Faces are the 2-cells of the free structure: the
constraint 2-cells (pentagonator, unit cells, hexagonators, syllepsis), the
naturality squares of one move against another inside its arguments, and the
interchange squares of moves at disjoint positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

ONE = "I"

# pattern variables are single lowercase letters; the unit is ONE
PATTERNS = {
    "a": ((("x", "y"), "z"), ("x", ("y", "z"))),
    "ai": (("x", ("y", "z")), (("x", "y"), "z")),
    "l": ((ONE, "x"), "x"),
    "r": (("x", ONE), "x"),
    "s": (("x", "y"), ("y", "x")),
}
INVERSE = {"a": "ai", "ai": "a"}


def subword(w, pos: tuple):
    for d in pos:
        if not isinstance(w, tuple):
            raise ValueError(f"no subword at {pos}")
        w = w[d]
    return w


def replace(w, pos: tuple, new):
    if not pos:
        return new
    parts = list(w)
    parts[pos[0]] = replace(w[pos[0]], pos[1:], new)
    return tuple(parts)


def match(pattern, w, env: dict) -> bool:
    if pattern == ONE:
        return w == ONE
    if isinstance(pattern, str):
        if pattern in env:
            return env[pattern] == w
        env[pattern] = w
        return True
    return isinstance(w, tuple) and match(pattern[0], w[0], env) and match(pattern[1], w[1], env)


def instantiate(pattern, env: dict):
    if pattern == ONE:
        return ONE
    if isinstance(pattern, str):
        return env[pattern]
    return (instantiate(pattern[0], env), instantiate(pattern[1], env))


def pattern_positions(pattern, prefix: tuple = ()) -> dict:
    """Pattern variable to its position inside the pattern."""
    if pattern == ONE:
        return {}
    if isinstance(pattern, str):
        return {pattern: prefix}
    out = pattern_positions(pattern[0], prefix + (0,))
    out.update(pattern_positions(pattern[1], prefix + (1,)))
    return out


def variables(w) -> tuple:
    if w == ONE:
        return ()
    if isinstance(w, str):
        return (w,)
    return variables(w[0]) + variables(w[1])


def show(w) -> str:
    if isinstance(w, str):
        return w
    return f"({show(w[0])}{show(w[1])})"


@dataclass(frozen=True)
class Move:
    """One structural move applied to ``source`` at ``pos``."""

    kind: str
    pos: tuple
    source: object

    @property
    def args(self) -> dict:
        env: dict = {}
        if not match(PATTERNS[self.kind][0], subword(self.source, self.pos), env):
            raise ValueError(f"{self.kind} does not apply to {show(subword(self.source, self.pos))}")
        return env

    @property
    def target(self):
        return replace(self.source, self.pos, instantiate(PATTERNS[self.kind][1], self.args))

    def __str__(self):
        return f"{self.kind}@{''.join(map(str, self.pos)) or '.'}:{show(self.source)}"


def moves_from(w, kinds) -> list[Move]:
    out = []

    def go(sub, pos):
        for k in kinds:
            if match(PATTERNS[k][0], sub, {}):
                out.append(Move(k, pos, w))
        if isinstance(sub, tuple):
            go(sub[0], pos + (0,))
            go(sub[1], pos + (1,))

    go(w, ())
    return out


def move(kind: str, pos: tuple, source) -> Move:
    m = Move(kind, tuple(pos), source)
    m.args  # validate
    return m


def path_from(source, steps) -> tuple[Move, ...]:
    """Build a path from ``(kind, pos)`` steps."""
    out, w = [], source
    for kind, pos in steps:
        m = move(kind, pos, w)
        out.append(m)
        w = m.target
    return tuple(out)


def path_target(source, path) -> object:
    return path[-1].target if path else source


@dataclass(frozen=True)
class Face:
    """A 2-cell from path ``src`` to path ``tgt`` (same endpoints).

    ``kind`` is ``pi``, ``mu``, ``lam``, ``rho``, ``zeta``, ``xi``, ``nu``, ``cancel``
    (at node ``pos``), ``nat`` (``inner`` moved across ``outer``) or ``int``.
    """

    kind: str
    pos: tuple
    word: object
    src: tuple
    tgt: tuple
    outer: Move | None = None
    inner: Move | None = None

    def __str__(self):
        kind = f"cancel-{self.src[0].kind}" if self.kind == "cancel" else self.kind
        out = f"{kind}@{_p(self.pos)}:{show(self.word)}"
        if self.inner is not None:
            out += f"/{self.inner.kind}@{_p(self.inner.pos)}"
        if self.kind == "int":
            out += f"|{self.outer.kind}@{_p(self.outer.pos)}"
        return out


def _p(pos: tuple) -> str:
    return "".join(map(str, pos)) or "."


# constraint faces: pattern at the node, source steps, target steps (positions relative to the node)
CONSTRAINT_FACES = {
    "pi": ((((("x", "y"), "z"), "w")),
           [("a", (0,)), ("a", ()), ("a", (1,))], [("a", ()), ("a", ())]),
    "mu": ((("x", ONE), "y"), [("a", ()), ("l", (1,))], [("r", (0,))]),
    "lam": (((ONE, "x"), "y"), [("a", ()), ("l", ())], [("l", (0,))]),
    "rho": ((("x", "y"), ONE), [("a", ()), ("r", (1,))], [("r", ())]),
    "zeta": ((("x", "y"), "z"), [("s", (0,)), ("a", ()), ("s", (1,))], [("a", ()), ("s", ()), ("a", ())]),
    "xi": (("x", ("y", "z")), [("s", (1,)), ("ai", ()), ("s", (0,))], [("ai", ()), ("s", ()), ("ai", ())]),
    "nu": (("x", "y"), [("s", ()), ("s", ())], []),
    "pii": (("x", ("y", ("z", "w"))),
            [("ai", (1,)), ("ai", ()), ("ai", (0,))], [("ai", ()), ("ai", ())]),
}


def _shift(steps, pos):
    return [(k, pos + p) for k, p in steps]


def constraint_face(kind: str, w, pos: tuple) -> Face | None:
    pattern, src, tgt = CONSTRAINT_FACES[kind]
    try:
        if not match(pattern, subword(w, pos), {}):
            return None
        return Face(kind, pos, w, path_from(w, _shift(src, pos)), path_from(w, _shift(tgt, pos)))
    except ValueError:
        return None


def cancel_face(w, pos: tuple, kind: str) -> Face | None:
    """``m ; m^-1 => empty`` for an invertible structural move."""
    if kind not in INVERSE or not match(PATTERNS[kind][0], subword(w, pos), {}):
        return None
    return Face("cancel", pos, w, path_from(w, [(kind, pos), (INVERSE[kind], pos)]), ())


def _relocate(outer: Move, inner_pos: tuple) -> tuple | None:
    """Where a position inside an argument of ``outer`` lands after ``outer``."""
    p = outer.pos
    if inner_pos[: len(p)] != p:
        return None
    rel = inner_pos[len(p):]
    src_pat, tgt_pat = PATTERNS[outer.kind]
    before, after = pattern_positions(src_pat), pattern_positions(tgt_pat)
    for var, vp in before.items():
        if rel[: len(vp)] == vp:
            return p + after[var] + rel[len(vp):]
    return None


def nat_face(inner: Move, outer_kind: str, outer_pos: tuple) -> Face | None:
    """``inner`` (strictly inside an argument) then ``outer`` => ``outer`` then ``inner``."""
    w = inner.source
    try:
        first = move(outer_kind, outer_pos, w)
    except ValueError:
        return None
    new_pos = _relocate(first, inner.pos)
    if new_pos is None:
        return None
    after_inner = inner.target
    try:
        src = (inner, move(outer_kind, outer_pos, after_inner))
        tgt = (first, move(inner.kind, new_pos, first.target))
    except ValueError:
        return None
    return Face("nat", outer_pos, w, src, tgt, outer=src[1], inner=inner)


def _disjoint(p: tuple, q: tuple) -> bool:
    n = min(len(p), len(q))
    return p[:n] != q[:n]


def int_face(m1: Move, m2_kind: str, m2_pos: tuple) -> Face | None:
    """``m1 ; m2 => m2 ; m1`` for moves at disjoint positions."""
    if not _disjoint(m1.pos, m2_pos):
        return None
    w = m1.source
    try:
        src = (m1, move(m2_kind, m2_pos, m1.target))
        first = move(m2_kind, m2_pos, w)
        tgt = (first, move(m1.kind, m1.pos, first.target))
    except ValueError:
        return None
    return Face("int", (), w, src, tgt, outer=src[1], inner=m1)


def _nodes(w) -> list[tuple]:
    nodes = [()]
    k = 0
    while k < len(nodes):
        p = nodes[k]
        k += 1
        if isinstance(subword(w, p), tuple):
            nodes += [p + (0,), p + (1,)]
    return nodes


def candidate_faces(path: tuple, i: int, kinds, move_kinds) -> list[Face]:
    """Faces whose source or target could start at ``path[i]``."""
    first = path[i]
    w = first.source
    out: list[Face] = []
    for p in _nodes(w):
        for kind in CONSTRAINT_FACES:
            if kind in kinds:
                out.append(constraint_face(kind, w, p))
        if "cancel" in kinds:
            for mk in move_kinds:
                out.append(cancel_face(w, p, mk))
    if i + 1 < len(path):
        second = path[i + 1]
        if "nat" in kinds:
            out.append(nat_face(first, second.kind, second.pos))
            for m in moves_from(w, [second.kind]):
                out.append(nat_face(m, first.kind, first.pos))
        if "int" in kinds:
            out.append(int_face(first, second.kind, second.pos))
    return [f for f in out if f is not None]


def rewrites(path: tuple, kinds, move_kinds, insert: bool = False):
    """Every single-face rewrite of ``path``: ``(face, index, inverse, new_path)``."""
    out = []
    for i in range(len(path)):
        for f in candidate_faces(path, i, kinds, move_kinds):
            if path[i: i + len(f.src)] == f.src:
                out.append((f, i, False, path[:i] + f.tgt + path[i + len(f.src):]))
            if f.tgt and path[i: i + len(f.tgt)] == f.tgt:
                out.append((f, i, True, path[:i] + f.src + path[i + len(f.tgt):]))
    if insert and path:
        # inverse of a face with empty target: splice its source in anywhere
        for i in range(len(path) + 1):
            w = path[i].source if i < len(path) else path[-1].target
            for f in _empty_target_faces(w, kinds, move_kinds):
                out.append((f, i, True, path[:i] + f.src + path[i:]))
    return out


def _empty_target_faces(w, kinds, move_kinds) -> list[Face]:
    out = []
    for p in _nodes(w):
        if "cancel" in kinds:
            out += [cancel_face(w, p, mk) for mk in move_kinds]
        if "nu" in kinds:
            out.append(constraint_face("nu", w, p))
    return [f for f in out if f is not None]


def paths_between(source, target, move_kinds, max_len: int) -> list[tuple]:
    out = []

    def go(w, p):
        if w == target:
            out.append(tuple(p))
        if len(p) >= max_len:
            return
        for m in moves_from(w, move_kinds):
            go(m.target, p + [m])

    go(source, [])
    return out


def find_fillings(P: tuple, Q: tuple, kinds, move_kinds, max_steps: int = 10, insert: bool = False) -> dict:
    """Face sequences rewriting ``P`` into ``Q``, one per set of faces used (each face at most once)."""
    found: dict = {}
    seen: set = set()

    def go(p, used, seq):
        if p == Q:
            found.setdefault(frozenset(used), tuple(seq))
            return
        if len(seq) >= max_steps or (p, used) in seen:
            return
        seen.add((p, used))
        for f, i, inv, new in rewrites(p, kinds, move_kinds, insert):
            if str(f) not in used:
                go(new, used | {str(f)}, seq + [(str(f), inv, i)])

    go(P, frozenset(), [])
    return found


def replay(P: tuple, steps) -> tuple[list[tuple[Face, int, bool, tuple]], tuple]:
    """Apply ``(face name, inverse, index)`` steps to ``P``; each entry is ``(face, index, inverse, path before)``."""
    return _replay(tuple(P), tuple(tuple(s) for s in steps))


@lru_cache(maxsize=256)
def _replay(P: tuple, steps: tuple):
    out, path = [], P
    for name, inv, i in steps:
        hits = [(f, j, v, new) for f, j, v, new in rewrites(path, ALL_FACES, ALL_MOVES, insert=True)
                if str(f) == name and v == inv and j == i]
        if not hits:
            raise ValueError(f"face {name} does not apply at {i}")
        f, j, v, new = hits[0]
        out.append((f, j, v, path))
        path = new
    return out, path


ALL_FACES = ("pi", "pii", "mu", "lam", "rho", "zeta", "xi", "nu", "cancel", "nat", "int")
ALL_MOVES = ("a", "ai", "l", "r", "s")
