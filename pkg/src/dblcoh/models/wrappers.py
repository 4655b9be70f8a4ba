"""Derived models: horizontal opposite, binary and n-fold products, the terminal model."""

from __future__ import annotations

import itertools

from ..core import DoubleCategory, Square


def flip(s: Square) -> Square:
    return Square(s.top, s.right, s.left, s.bottom, s.payload)


class HOpModel(DoubleCategory):
    """``D^{h.op}``: horizontal 1-cells reversed, vertical 1-morphisms kept.

    A 1-cell ``M: B -|-> A`` of the base is a 1-cell ``A -|-> B`` here; a square
    is stored with its left and right edges exchanged.
    """

    def __init__(self, base: DoubleCategory):
        self.base = base
        self.name = f"{base.name}^hop"

    def __getattr__(self, item):
        # model-specific extras (e.g. tensor helpers) are not reinterpreted
        raise AttributeError(item)

    def objects(self):
        return self.base.objects()

    def vmors(self, A, B):
        return self.base.vmors(A, B)

    def hcells(self, A, B):
        return self.base.hcells(B, A)

    def squares(self, top, left, right, bottom):
        return [flip(s) for s in self.base.squares(top, right, left, bottom)]

    def vsrc(self, f):
        return self.base.vsrc(f)

    def vtgt(self, f):
        return self.base.vtgt(f)

    def hsrc(self, M):
        return self.base.htgt(M)

    def htgt(self, M):
        return self.base.hsrc(M)

    def vid(self, A):
        return self.base.vid(A)

    def vcomp(self, f, g):
        return self.base.vcomp(f, g)

    def vinverse(self, f):
        return self.base.vinverse(f)

    def hunit(self, A):
        return self.base.hunit(A)

    def hcomp(self, M, N):
        return self.base.hcomp(N, M)

    def sq_id(self, M):
        return flip(self.base.sq_id(M))

    def sq_unit(self, f):
        return flip(self.base.sq_unit(f))

    def sq_vcomp(self, a, b):
        return flip(self.base.sq_vcomp(flip(a), flip(b)))

    def sq_hcomp(self, a, b):
        return flip(self.base.sq_hcomp(flip(b), flip(a)))

    def sq_inverse(self, a):
        return flip(self.base.sq_inverse(flip(a)))

    def sq_eq(self, a, b):
        return self.base.sq_eq(flip(a), flip(b))

    def sq_from_map(self, top, left, right, bottom, fn=None):
        return flip(self.base.sq_from_map(top, right, left, bottom, fn))

    def assoc(self, M, N, P):
        return flip(self.base.sq_inverse(self.base.assoc(P, N, M)))

    def src_unitor(self, M):
        return flip(self.base.tgt_unitor(M))

    def tgt_unitor(self, M):
        return flip(self.base.src_unitor(M))

    def random_square(self, rng, top=None, left=None, tries: int = 40):
        if left is None:
            s = self.base.random_square(rng, top)
            return None if s is None else flip(s)
        return DoubleCategory.random_square(self, rng, top, left, tries)


def hop_square(s: Square) -> Square:
    """Translate a square of ``D^{h.op}`` back to ``D`` (and vice versa)."""
    return flip(s)


class ProductModel(DoubleCategory):
    """``D1 x D2`` with componentwise cells; squares carry the pair of components."""

    def __init__(self, first: DoubleCategory, second: DoubleCategory):
        self.first, self.second = first, second
        self.name = f"({first.name} x {second.name})"

    @staticmethod
    def pair(s1: Square, s2: Square) -> Square:
        return Square((s1.top, s2.top), (s1.left, s2.left), (s1.right, s2.right), (s1.bottom, s2.bottom), (s1, s2))

    @staticmethod
    def split(s: Square) -> tuple[Square, Square]:
        return s.payload

    def _both(self, name, *args):
        a = getattr(self.first, name)(*(x[0] for x in args))
        b = getattr(self.second, name)(*(x[1] for x in args))
        return a, b

    def objects(self):
        return list(itertools.product(self.first.objects(), self.second.objects()))

    def vmors(self, A, B):
        return list(itertools.product(self.first.vmors(A[0], B[0]), self.second.vmors(A[1], B[1])))

    def hcells(self, A, B):
        return list(itertools.product(self.first.hcells(A[0], B[0]), self.second.hcells(A[1], B[1])))

    def squares(self, top, left, right, bottom):
        s1 = self.first.squares(top[0], left[0], right[0], bottom[0])
        s2 = self.second.squares(top[1], left[1], right[1], bottom[1])
        return [self.pair(a, b) for a in s1 for b in s2]

    def vsrc(self, f):
        return self._both("vsrc", f)

    def vtgt(self, f):
        return self._both("vtgt", f)

    def hsrc(self, M):
        return self._both("hsrc", M)

    def htgt(self, M):
        return self._both("htgt", M)

    def vid(self, A):
        return self._both("vid", A)

    def vcomp(self, f, g):
        return self._both("vcomp", f, g)

    def vinverse(self, f):
        a, b = self._both("vinverse", f)
        return None if a is None or b is None else (a, b)

    def hunit(self, A):
        return self._both("hunit", A)

    def hcomp(self, M, N):
        return self._both("hcomp", M, N)

    def _sq(self, name, *args):
        return self.pair(*self._both(name, *args))

    def sq_id(self, M):
        return self._sq("sq_id", M)

    def sq_unit(self, f):
        return self._sq("sq_unit", f)

    def sq_vcomp(self, a, b):
        return self._sq("sq_vcomp", a.payload, b.payload)

    def sq_hcomp(self, a, b):
        return self._sq("sq_hcomp", a.payload, b.payload)

    def sq_inverse(self, a):
        return self._sq("sq_inverse", a.payload)

    def sq_eq(self, a, b):
        return self.first.sq_eq(a.payload[0], b.payload[0]) and self.second.sq_eq(a.payload[1], b.payload[1])

    def assoc(self, M, N, P):
        return self._sq("assoc", M, N, P)

    def src_unitor(self, M):
        return self._sq("src_unitor", M)

    def tgt_unitor(self, M):
        return self._sq("tgt_unitor", M)

    def random_square(self, rng, top=None, left=None, tries: int = 40):
        top = top if top is not None else (None, None)
        left = left if left is not None else (None, None)
        a = self.first.random_square(rng, top[0], left[0])
        b = self.second.random_square(rng, top[1], left[1])
        return None if a is None or b is None else self.pair(a, b)

    def random_hcell(self, rng, src=None):
        src = src if src is not None else (None, None)
        a, b = self.first.random_hcell(rng, src[0]), self.second.random_hcell(rng, src[1])
        return None if a is None or b is None else (a, b)

    def random_vmor(self, rng, src=None):
        src = src if src is not None else (None, None)
        a, b = self.first.random_vmor(rng, src[0]), self.second.random_vmor(rng, src[1])
        return None if a is None or b is None else (a, b)


class PowerModel(DoubleCategory):
    """``D^n``: every cell is an n-tuple; a square's payload is the tuple of component squares."""

    def __init__(self, base: DoubleCategory, n: int):
        self.base, self.n = base, n
        self.name = f"{base.name}^{n}"

    @staticmethod
    def tuple_square(squares) -> Square:
        squares = tuple(squares)
        return Square(*(tuple(getattr(s, k) for s in squares) for k in ("top", "left", "right", "bottom")), squares)

    @staticmethod
    def split(s: Square) -> tuple:
        return s.payload

    def _each(self, name, *args):
        f = getattr(self.base, name)
        return tuple(f(*(x[i] for x in args)) for i in range(self.n))

    def _sq(self, name, *args):
        return self.tuple_square(self._each(name, *args))

    def objects(self):
        return list(itertools.product(self.base.objects(), repeat=self.n))

    def vmors(self, A, B):
        return list(itertools.product(*(self.base.vmors(a, b) for a, b in zip(A, B))))

    def hcells(self, A, B):
        return list(itertools.product(*(self.base.hcells(a, b) for a, b in zip(A, B))))

    def squares(self, top, left, right, bottom):
        parts = [self.base.squares(*x) for x in zip(top, left, right, bottom)]
        return [self.tuple_square(c) for c in itertools.product(*parts)]

    def vsrc(self, f):
        return self._each("vsrc", f)

    def vtgt(self, f):
        return self._each("vtgt", f)

    def hsrc(self, M):
        return self._each("hsrc", M)

    def htgt(self, M):
        return self._each("htgt", M)

    def vid(self, A):
        return self._each("vid", A)

    def vcomp(self, f, g):
        return self._each("vcomp", f, g)

    def vinverse(self, f):
        out = self._each("vinverse", f)
        return None if any(x is None for x in out) else out

    def hunit(self, A):
        return self._each("hunit", A)

    def hcomp(self, M, N):
        return self._each("hcomp", M, N)

    def sq_id(self, M):
        return self._sq("sq_id", M)

    def sq_unit(self, f):
        return self._sq("sq_unit", f)

    def sq_vcomp(self, a, b):
        return self._sq("sq_vcomp", a.payload, b.payload)

    def sq_hcomp(self, a, b):
        return self._sq("sq_hcomp", a.payload, b.payload)

    def sq_inverse(self, a):
        return self._sq("sq_inverse", a.payload)

    def sq_eq(self, a, b):
        return all(self.base.sq_eq(x, y) for x, y in zip(a.payload, b.payload))

    def assoc(self, M, N, P):
        return self._sq("assoc", M, N, P)

    def src_unitor(self, M):
        return self._sq("src_unitor", M)

    def tgt_unitor(self, M):
        return self._sq("tgt_unitor", M)

    def random_object(self, rng):
        return tuple(self.base.random_object(rng) for _ in range(self.n))

    def random_square(self, rng, top=None, left=None, tries: int = 40):
        top = top if top is not None else (None,) * self.n
        left = left if left is not None else (None,) * self.n
        out = [self.base.random_square(rng, t, l) for t, l in zip(top, left)]
        return None if any(s is None for s in out) else self.tuple_square(out)

    def random_hcell(self, rng, src=None):
        src = src if src is not None else (None,) * self.n
        out = tuple(self.base.random_hcell(rng, a) for a in src)
        return None if any(x is None for x in out) else out

    def random_vmor(self, rng, src=None):
        src = src if src is not None else (None,) * self.n
        out = tuple(self.base.random_vmor(rng, a) for a in src)
        return None if any(x is None for x in out) else out


class TerminalModel(DoubleCategory):
    """The one-object double category with only identities."""

    name = "terminal"
    OBJ, VMOR, HCELL = "*", "1*", "U*"

    def __init__(self):
        self._sq_unit = Square(self.HCELL, self.VMOR, self.VMOR, self.HCELL, None)

    def objects(self):
        return [self.OBJ]

    def vmors(self, A, B):
        return [self.VMOR]

    def hcells(self, A, B):
        return [self.HCELL]

    def squares(self, top, left, right, bottom):
        return [self._sq_unit]

    def vsrc(self, f):
        return self.OBJ

    vtgt = hsrc = htgt = vsrc

    def vid(self, A):
        return self.VMOR

    def vcomp(self, f, g):
        return self.VMOR

    def vinverse(self, f):
        return self.VMOR

    def hunit(self, A):
        return self.HCELL

    def hcomp(self, M, N):
        return self.HCELL

    def sq_id(self, M):
        return self._sq_unit

    def sq_unit(self, f):
        return self._sq_unit

    def sq_vcomp(self, a, b):
        return self._sq_unit

    sq_hcomp = sq_vcomp

    def sq_inverse(self, a):
        return self._sq_unit

    def assoc(self, M, N, P):
        return self._sq_unit

    def src_unitor(self, M):
        return self._sq_unit

    tgt_unitor = src_unitor
