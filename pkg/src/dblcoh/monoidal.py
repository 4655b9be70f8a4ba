"""Monoidal, braided and symmetric double categories, and their unpacked axioms."""

from __future__ import annotations

from .core import (
    DoubleCategory,
    Square,
    _composable_hcells,
    _composable_vmors,
    _every,
    _hchains,
    _schains,
    _squares_below,
    _vchains,
    _neq,
    compose_h,
    compose_v,
    is_globular,
    short,
    vcompose_all,
)
from .functor import DblFunctor, DblTransformation, compose_functors, verify_functor
from .models.sets import UNIT_SET, FinSet, Fn, fn_product, product
from .models.wrappers import ProductModel
from .report import Report, SampleBudget, run_axiom

CITE_MON = "monoidal double category: D0/D1 monoidal, U_I unit, S/T strict, x/u coherence, constraints are transformations"
CITE_BRAID = "braided monoidal double category: D0/D1 braided, S/T strict braided, braiding a transformation"
CITE_SYM = "symmetric monoidal double category: braiding self-inverse on D0 and D1"


def product_model(m1: DoubleCategory, m2: DoubleCategory) -> ProductModel:
    return ProductModel(m1, m2)


class MonoidalDoubleCategory:
    """Tensor data on a base model.

    Subclasses supply the tensor on every cell kind, the unit object, the
    interchanger ``x(M1, N1, M2, N2): (M1 (x) N1) ; (M2 (x) N2) => (M1 ; M2) (x) (N1 ; N2)``,
    the unit comparison ``u(A, B): U_(A (x) B) => U_A (x) U_B`` and the vertical and
    square components of the associator, unitors and (optionally) braiding.
    """

    base: DoubleCategory
    braided = False
    symmetric = False

    def tensor_obj(self, A, B): raise NotImplementedError
    def tensor_vmor(self, f, g): raise NotImplementedError
    def tensor_hcell(self, M, N): raise NotImplementedError
    def tensor_sq(self, s: Square, t: Square) -> Square: raise NotImplementedError
    def unit_obj(self): raise NotImplementedError
    def interchanger(self, M1, N1, M2, N2) -> Square: raise NotImplementedError
    def unit_comparison(self, A, B) -> Square: raise NotImplementedError
    def assoc_vmor(self, A, B, C): raise NotImplementedError
    def assoc_sq(self, M, N, P) -> Square: raise NotImplementedError
    def lunit_vmor(self, A): raise NotImplementedError
    def lunit_sq(self, M) -> Square: raise NotImplementedError
    def runit_vmor(self, A): raise NotImplementedError
    def runit_sq(self, M) -> Square: raise NotImplementedError
    def braid_vmor(self, A, B): raise NotImplementedError
    def braid_sq(self, M, N) -> Square: raise NotImplementedError

    @property
    def tensor_functor(self) -> DblFunctor:
        m = self.base
        return DblFunctor(
            ProductModel(m, m), m,
            lambda A: self.tensor_obj(*A), lambda f: self.tensor_vmor(*f), lambda M: self.tensor_hcell(*M),
            lambda s: self.tensor_sq(*ProductModel.split(s)),
            lambda M, N: self.interchanger(M[0], M[1], N[0], N[1]),
            lambda A: self.unit_comparison(*A), "(x)")

    def tensor_left(self, X) -> DblFunctor:
        """``- (x) X`` as a double functor ``D -> D``."""
        m, U = self.base, self.base.hunit(X)
        ux = m.sq_id(U)

        def comp(M, N):
            # (M (x) U_X) ; (N (x) U_X) => (M ; N) (x) (U_X ; U_X) => (M ; N) (x) U_X
            return compose_v(m, self.interchanger(M, U, N, U), self.tensor_sq(m.sq_id(m.hcomp(M, N)), m.src_unitor(U)))

        return DblFunctor(
            m, m, lambda A: self.tensor_obj(A, X), lambda f: self.tensor_vmor(f, m.vid(X)),
            lambda M: self.tensor_hcell(M, U), lambda s: self.tensor_sq(s, ux), comp,
            lambda A: self.unit_comparison(A, X), f"- (x) {short(X, 20)}")


class CartesianMonoidal(MonoidalDoubleCategory):
    """Cartesian product on Rel or Span: lexicographic pairs, singleton unit, swap braiding."""

    braided = True
    symmetric = True

    def __init__(self, base: DoubleCategory):
        self.base = base
        self.name = f"{base.name} with cartesian product"

    def _sq(self, top, left, right, bottom, fn) -> Square:
        return self.base.sq_from_map(top, left, right, bottom, fn)

    def _app(self, s: Square, x):
        return self.base.apply(s, x)

    def tensor_obj(self, A: FinSet, B: FinSet) -> FinSet:
        return product(A, B)

    def tensor_vmor(self, f: Fn, g: Fn) -> Fn:
        return fn_product(f, g)

    def tensor_hcell(self, M, N):
        m = self.base
        return m.hcell_from(product(M.src, N.src), product(M.tgt, N.tgt), product(FinSet(M.apex), FinSet(N.apex)).elems,
                            lambda x: (M.l(x[0]), N.l(x[1])), lambda x: (M.r(x[0]), N.r(x[1])))

    def tensor_sq(self, s, t):
        return self._sq(self.tensor_hcell(s.top, t.top), fn_product(s.left, t.left), fn_product(s.right, t.right),
                        self.tensor_hcell(s.bottom, t.bottom), lambda x: (self._app(s, x[0]), self._app(t, x[1])))

    def unit_obj(self) -> FinSet:
        return UNIT_SET

    def _glob(self, top, bottom, fn) -> Square:
        m = self.base
        return self._sq(top, m.vid(m.hsrc(top)), m.vid(m.htgt(top)), bottom, fn)

    def interchanger(self, M1, N1, M2, N2):
        m = self.base
        top = m.hcomp(self.tensor_hcell(M1, N1), self.tensor_hcell(M2, N2))
        bottom = self.tensor_hcell(m.hcomp(M1, M2), m.hcomp(N1, N2))
        return self._glob(top, bottom, lambda x: ((x[0][0], x[1][0]), (x[0][1], x[1][1])))

    def unit_comparison(self, A, B):
        m = self.base
        return self._glob(m.hunit(product(A, B)), self.tensor_hcell(m.hunit(A), m.hunit(B)), lambda x: x)

    def assoc_vmor(self, A, B, C):
        return Fn.from_callable(product(product(A, B), C), product(A, product(B, C)), lambda x: (x[0][0], (x[0][1], x[1])))

    def assoc_sq(self, M, N, P):
        top = self.tensor_hcell(self.tensor_hcell(M, N), P)
        bottom = self.tensor_hcell(M, self.tensor_hcell(N, P))
        return self._sq(top, self.assoc_vmor(M.src, N.src, P.src), self.assoc_vmor(M.tgt, N.tgt, P.tgt), bottom,
                        lambda x: (x[0][0], (x[0][1], x[1])))

    def lunit_vmor(self, A):
        return Fn.from_callable(product(UNIT_SET, A), A, lambda x: x[1])

    def lunit_sq(self, M):
        top = self.tensor_hcell(self.base.hunit(UNIT_SET), M)
        return self._sq(top, self.lunit_vmor(M.src), self.lunit_vmor(M.tgt), M, lambda x: x[1])

    def runit_vmor(self, A):
        return Fn.from_callable(product(A, UNIT_SET), A, lambda x: x[0])

    def runit_sq(self, M):
        top = self.tensor_hcell(M, self.base.hunit(UNIT_SET))
        return self._sq(top, self.runit_vmor(M.src), self.runit_vmor(M.tgt), M, lambda x: x[0])

    def braid_vmor(self, A, B):
        return Fn.from_callable(product(A, B), product(B, A), lambda x: (x[1], x[0]))

    def braid_sq(self, M, N):
        return self._sq(self.tensor_hcell(M, N), self.braid_vmor(M.src, N.src), self.braid_vmor(M.tgt, N.tgt),
                        self.tensor_hcell(N, M), lambda x: (x[1], x[0]))


def swap_functor(m: DoubleCategory) -> DblFunctor:
    """``(A, B) -> (B, A)`` on ``D x D``."""
    P = ProductModel(m, m)
    sw = lambda x: (x[1], x[0])
    return DblFunctor(P, P, sw, sw, sw, lambda s: ProductModel.pair(*reversed(ProductModel.split(s))),
                      lambda M, N: P.sq_id(sw(P.hcomp(M, N))), lambda A: P.sq_id(P.hunit(sw(A))), "swap")


def braid_transformation(T: MonoidalDoubleCategory) -> DblTransformation:
    """The braiding as a transformation ``(x) => swap ; (x)``."""
    tgt = compose_functors(swap_functor(T.base), T.tensor_functor)
    return DblTransformation(T.tensor_functor, tgt, lambda A: T.braid_vmor(*A), lambda M: T.braid_sq(*M), "s")


def monoidal_structure(m: DoubleCategory) -> CartesianMonoidal:
    """The cartesian symmetric monoidal structure on a built-in model."""
    if not hasattr(m, "hcell_from"):
        raise TypeError(f"no built-in monoidal structure on {m!r}")
    return CartesianMonoidal(m)


# sampling

def _objs(T, r, n):
    return tuple(T.base.random_object(r) for _ in range(n))


def _hcells(T, r, n):
    return tuple(T.base.random_hcell(r) for _ in range(n))


def _squares(T, r, n):
    out = tuple(T.base.random_square(r) for _ in range(n))
    return None if any(s is None for s in out) else out


def _vmors(T, r, n):
    out = tuple(T.base.random_vmor(r) for _ in range(n))
    return None if any(f is None for f in out) else out


def _hpairs(T, r, k):
    out = tuple(_composable_hcells(T.base, 2, r) for _ in range(k))
    return None if any(p is None for p in out) else out


def _pairs(draw):
    out = (draw(), draw())
    return None if None in out else out


def _vinv(m, f):
    g = m.vinverse(f)
    if g is None:
        raise ValueError(f"{short(f)} is not invertible")
    return g


def verify_monoidal(T: MonoidalDoubleCategory, budget: SampleBudget | None = None) -> Report:
    """Monoidal structure on D0 and D1, strict S/T, and the pseudofunctor axioms of the tensor."""
    budget = budget or SampleBudget()
    m = T.base
    rep = Report(f"monoidal double category: {getattr(T, 'name', T)}")

    def ax(group, name, check, sampler, every=None):
        return run_axiom(rep, name, CITE_MON, check, budget, every, sampler, group)

    t, tv, th, ts = T.tensor_obj, T.tensor_vmor, T.tensor_hcell, T.tensor_sq
    I = T.unit_obj()
    UI = m.hunit(I)
    a, l, r = T.assoc_vmor, T.lunit_vmor, T.runit_vmor
    sid = m.sq_id

    # D0 monoidal
    def d0_pentagon(x):
        A, B, C, D = x
        lhs = m.vcomp(a(t(A, B), C, D), a(A, B, t(C, D)))
        rhs = m.vcomp(m.vcomp(tv(a(A, B, C), m.vid(D)), a(A, t(B, C), D)), tv(m.vid(A), a(B, C, D)))
        return None if lhs == rhs else f"D0 pentagon fails at {short(x)}"

    def d0_triangle(x):
        A, B = x
        lhs = m.vcomp(a(A, I, B), tv(m.vid(A), l(B)))
        return None if lhs == tv(r(A), m.vid(B)) else f"D0 triangle fails at {short(x)}"

    def d0_natural(x):
        f, g, h = x
        lhs = m.vcomp(tv(tv(f, g), h), a(m.vtgt(f), m.vtgt(g), m.vtgt(h)))
        rhs = m.vcomp(a(m.vsrc(f), m.vsrc(g), m.vsrc(h)), tv(f, tv(g, h)))
        if lhs != rhs:
            return f"associator not natural at {short(x)}"
        if m.vcomp(tv(m.vid(I), f), l(m.vtgt(f))) != m.vcomp(l(m.vsrc(f)), f):
            return "left unitor not natural"
        if m.vcomp(tv(f, m.vid(I)), r(m.vtgt(f))) != m.vcomp(r(m.vsrc(f)), f):
            return "right unitor not natural"

    def d0_functor(x):
        (f, f2), (g, g2) = x
        if tv(m.vcomp(f, f2), m.vcomp(g, g2)) != m.vcomp(tv(f, g), tv(f2, g2)):
            return "(x) not functorial on D0"
        if tv(m.vid(m.vsrc(f)), m.vid(m.vsrc(g))) != m.vid(t(m.vsrc(f), m.vsrc(g))):
            return "(x) does not preserve identities on D0"

    # D1 monoidal
    def d1_pentagon(x):
        M, N, P, Q = x
        lhs = compose_v(m, T.assoc_sq(th(M, N), P, Q), T.assoc_sq(M, N, th(P, Q)))
        rhs = vcompose_all(m, ts(T.assoc_sq(M, N, P), sid(Q)), T.assoc_sq(M, th(N, P), Q), ts(sid(M), T.assoc_sq(N, P, Q)))
        return _neq(m, lhs, rhs, "D1 pentagon")

    def d1_triangle(x):
        M, N = x
        lhs = compose_v(m, T.assoc_sq(M, UI, N), ts(sid(M), T.lunit_sq(N)))
        return _neq(m, lhs, ts(T.runit_sq(M), sid(N)), "D1 triangle")

    def d1_natural(x):
        s1, s2, s3 = x
        lhs = compose_v(m, ts(ts(s1, s2), s3), T.assoc_sq(s1.bottom, s2.bottom, s3.bottom))
        rhs = compose_v(m, T.assoc_sq(s1.top, s2.top, s3.top), ts(s1, ts(s2, s3)))
        bad = _neq(m, lhs, rhs, "associator natural in squares")
        if bad:
            return bad
        uI = m.sq_unit(m.vid(I))
        bad = _neq(m, compose_v(m, ts(uI, s1), T.lunit_sq(s1.bottom)), compose_v(m, T.lunit_sq(s1.top), s1),
                   "left unitor natural in squares")
        return bad or _neq(m, compose_v(m, ts(s1, uI), T.runit_sq(s1.bottom)), compose_v(m, T.runit_sq(s1.top), s1),
                           "right unitor natural in squares")

    def d1_functor(x):
        (s1, b1), (s2, b2) = x
        bad = _neq(m, ts(compose_v(m, s1, b1), compose_v(m, s2, b2)), compose_v(m, ts(s1, s2), ts(b1, b2)),
                   "(x) preserves vertical composition")
        return bad or _neq(m, ts(sid(s1.top), sid(s2.top)), sid(th(s1.top, s2.top)), "(x) preserves identities")

    # unit object, strict S and T
    def unit_cell(x):
        M = x[0]
        lu, ru = T.lunit_sq(M), T.runit_sq(M)
        if lu.top != th(UI, M) or ru.top != th(M, UI) or lu.bottom != M or ru.bottom != M:
            return f"U_I is not the tensor unit of D1 at {short(M)}"
        m.sq_inverse(lu)
        m.sq_inverse(ru)

    def strict_st(x):
        M, N, P = x
        S, Tt = m.hsrc, m.htgt
        if S(th(M, N)) != t(S(M), S(N)) or Tt(th(M, N)) != t(Tt(M), Tt(N)):
            return f"S/T not strict monoidal at {short((M, N))}"
        s = T.assoc_sq(M, N, P)
        if s.left != a(S(M), S(N), S(P)) or s.right != a(Tt(M), Tt(N), Tt(P)):
            return "S/T do not preserve the associator"
        if T.lunit_sq(M).left != l(S(M)) or T.runit_sq(M).right != r(Tt(M)):
            return "S/T do not preserve the unitors"

    # associator a transformation
    def assoc_transf(x):
        (M1, M2), (N1, N2), (P1, P2) = x
        h, X = m.hcomp, T.interchanger
        top = compose_h(m, T.assoc_sq(M1, N1, P1), T.assoc_sq(M2, N2, P2))
        lhs = vcompose_all(m, top, X(M1, th(N1, P1), M2, th(N2, P2)), ts(sid(h(M1, M2)), X(N1, P1, N2, P2)))
        rhs = vcompose_all(m, X(th(M1, N1), P1, th(M2, N2), P2), ts(X(M1, N1, M2, N2), sid(h(P1, P2))),
                           T.assoc_sq(h(M1, M2), h(N1, N2), h(P1, P2)))
        return _neq(m, lhs, rhs, "associator respects x")

    def assoc_unit(x):
        A, B, C = x
        u = T.unit_comparison
        lhs = vcompose_all(m, m.sq_unit(a(A, B, C)), u(A, t(B, C)), ts(sid(m.hunit(A)), u(B, C)))
        rhs = vcompose_all(m, u(t(A, B), C), ts(u(A, B), sid(m.hunit(C))), T.assoc_sq(m.hunit(A), m.hunit(B), m.hunit(C)))
        return _neq(m, lhs, rhs, "associator respects u")

    # unitors transformations
    def unit_transf(x):
        (M, N), = x
        h, X = m.hcomp, T.interchanger
        MN = h(M, N)
        rhs = compose_h(m, T.runit_sq(M), T.runit_sq(N))
        lhs = vcompose_all(m, X(M, UI, N, UI), ts(sid(MN), m.src_unitor(UI)), T.runit_sq(MN))
        bad = _neq(m, lhs, rhs, "right unitor respects x")
        if bad:
            return bad
        rhs = compose_h(m, T.lunit_sq(M), T.lunit_sq(N))
        lhs = vcompose_all(m, X(UI, M, UI, N), ts(m.src_unitor(UI), sid(MN)), T.lunit_sq(MN))
        return _neq(m, lhs, rhs, "left unitor respects x")

    def unit_unit(x):
        A = x[0]
        u = T.unit_comparison
        bad = _neq(m, compose_v(m, u(A, I), T.runit_sq(m.hunit(A))), m.sq_unit(r(A)), "right unitor respects u")
        return bad or _neq(m, compose_v(m, u(I, A), T.lunit_sq(m.hunit(A))), m.sq_unit(l(A)), "left unitor respects u")

    ax("D0 and D1 monoidal", "D0 pentagon", d0_pentagon, lambda g: _objs(T, g, 4), _every(m.objects, 4))
    ax("D0 and D1 monoidal", "D0 triangle", d0_triangle, lambda g: _objs(T, g, 2), _every(m.objects, 2))
    ax("D0 and D1 monoidal", "D0 constraint naturality", d0_natural, lambda g: _vmors(T, g, 3), _every(m.all_vmors, 3))
    ax("D0 and D1 monoidal", "D0 tensor functorial", d0_functor, lambda g: _pairs(lambda: _composable_vmors(m, 2, g)),
       _every(_vchains(m, 2), 2))
    ax("D0 and D1 monoidal", "D1 pentagon", d1_pentagon, lambda g: _hcells(T, g, 4), _every(m.all_hcells, 4))
    ax("D0 and D1 monoidal", "D1 triangle", d1_triangle, lambda g: _hcells(T, g, 2), _every(m.all_hcells, 2))
    ax("D0 and D1 monoidal", "D1 constraint naturality", d1_natural, lambda g: _squares(T, g, 3),
       _every(m.all_squares, 3))
    ax("D0 and D1 monoidal", "D1 tensor functorial", d1_functor, lambda g: _pairs(lambda: _squares_below(m, g, 2)),
       _every(_schains(m, 2), 2))
    ax("unit object", "U_I is the unit of D1", unit_cell, lambda g: _hcells(T, g, 1), _every(m.all_hcells, 1))
    ax("S and T strict", "S and T strict monoidal", strict_st, lambda g: _hcells(T, g, 3), _every(m.all_hcells, 3))
    F = verify_functor(T.tensor_functor, budget)
    for res in F.results:
        res.group, res.citation = "tensor pseudofunctor", CITE_MON
        res.name = "tensor " + res.name
    rep.extend(F)
    ax("associator transformation", "associator respects interchanger", assoc_transf, lambda g: _hpairs(T, g, 3),
       _every(_hchains(m, 2), 3))
    ax("associator transformation", "associator respects unit comparison", assoc_unit, lambda g: _objs(T, g, 3),
       _every(m.objects, 3))
    ax("unitor transformations", "unitors respect interchanger", unit_transf, lambda g: _hpairs(T, g, 1),
       _every(_hchains(m, 2), 1))
    ax("unitor transformations", "unitors respect unit comparison", unit_unit, lambda g: _objs(T, g, 1),
       _every(m.objects, 1))
    return rep


def verify_braided(T: MonoidalDoubleCategory, budget: SampleBudget | None = None) -> Report:
    """Braiding on D0 and D1, strict S/T, and compatibility with x and u."""
    budget = budget or SampleBudget()
    m = T.base
    rep = Report(f"braided monoidal double category: {getattr(T, 'name', T)}")

    def ax(group, name, check, sampler, every=None):
        return run_axiom(rep, name, CITE_BRAID, check, budget, every, sampler, group)

    t, tv, th, ts = T.tensor_obj, T.tensor_vmor, T.tensor_hcell, T.tensor_sq
    a, b = T.assoc_vmor, T.braid_vmor
    sid = m.sq_id
    ainv = lambda A, B, C: _vinv(m, a(A, B, C))

    def d0_hexagons(x):
        A, B, C = x
        v, i = m.vcomp, m.vid
        lhs = v(v(a(A, B, C), b(A, t(B, C))), a(B, C, A))
        rhs = v(v(tv(b(A, B), i(C)), a(B, A, C)), tv(i(B), b(A, C)))
        if lhs != rhs:
            return f"D0 first hexagon fails at {short(x)}"
        lhs = v(v(ainv(A, B, C), b(t(A, B), C)), ainv(C, A, B))
        rhs = v(v(tv(i(A), b(B, C)), ainv(A, C, B)), tv(b(A, C), i(B)))
        if lhs != rhs:
            return f"D0 second hexagon fails at {short(x)}"

    def d0_natural(x):
        f, g = x
        if m.vcomp(tv(f, g), b(m.vtgt(f), m.vtgt(g))) != m.vcomp(b(m.vsrc(f), m.vsrc(g)), tv(g, f)):
            return f"D0 braiding not natural at {short(x)}"

    def d1_hexagons(x):
        M, N, P = x
        A, S = T.assoc_sq, T.braid_sq
        Ai = lambda *z: m.sq_inverse(A(*z))
        lhs = vcompose_all(m, A(M, N, P), S(M, th(N, P)), A(N, P, M))
        rhs = vcompose_all(m, ts(S(M, N), sid(P)), A(N, M, P), ts(sid(N), S(M, P)))
        bad = _neq(m, lhs, rhs, "D1 first hexagon")
        if bad:
            return bad
        lhs = vcompose_all(m, Ai(M, N, P), S(th(M, N), P), Ai(P, M, N))
        rhs = vcompose_all(m, ts(sid(M), S(N, P)), Ai(M, P, N), ts(S(M, P), sid(N)))
        return _neq(m, lhs, rhs, "D1 second hexagon")

    def d1_natural(x):
        s1, s2 = x
        lhs = compose_v(m, ts(s1, s2), T.braid_sq(s1.bottom, s2.bottom))
        rhs = compose_v(m, T.braid_sq(s1.top, s2.top), ts(s2, s1))
        return _neq(m, lhs, rhs, "D1 braiding natural in squares")

    def strict(x):
        M, N = x
        s = T.braid_sq(M, N)
        if s.left != b(m.hsrc(M), m.hsrc(N)) or s.right != b(m.htgt(M), m.htgt(N)):
            return f"S/T do not preserve the braiding at {short(x)}"

    def braid_x(x):
        (M1, M2), (N1, N2) = x
        X, S = T.interchanger, T.braid_sq
        lhs = compose_v(m, X(M1, N1, M2, N2), S(m.hcomp(M1, M2), m.hcomp(N1, N2)))
        rhs = compose_v(m, compose_h(m, S(M1, N1), S(M2, N2)), X(N1, M1, N2, M2))
        return _neq(m, lhs, rhs, "braiding respects x")

    def braid_u(x):
        A, B = x
        u = T.unit_comparison
        lhs = compose_v(m, m.sq_unit(b(A, B)), u(B, A))
        rhs = compose_v(m, u(A, B), T.braid_sq(m.hunit(A), m.hunit(B)))
        return _neq(m, lhs, rhs, "braiding respects u")

    ax("D0 and D1 braided", "D0 hexagons", d0_hexagons, lambda g: _objs(T, g, 3), _every(m.objects, 3))
    ax("D0 and D1 braided", "D0 braiding natural", d0_natural, lambda g: _vmors(T, g, 2), _every(m.all_vmors, 2))
    ax("D0 and D1 braided", "D1 hexagons", d1_hexagons, lambda g: _hcells(T, g, 3), _every(m.all_hcells, 3))
    ax("D0 and D1 braided", "D1 braiding natural", d1_natural, lambda g: _squares(T, g, 2), _every(m.all_squares, 2))
    ax("S and T braided", "S and T strict braided", strict, lambda g: _hcells(T, g, 2), _every(m.all_hcells, 2))
    ax("braiding transformation", "braiding respects interchanger", braid_x, lambda g: _hpairs(T, g, 2),
       _every(_hchains(m, 2), 2))
    ax("braiding transformation", "braiding respects unit comparison", braid_u, lambda g: _objs(T, g, 2),
       _every(m.objects, 2))
    return rep


def verify_symmetric(T: MonoidalDoubleCategory, budget: SampleBudget | None = None) -> Report:
    """The braiding squares to the identity on objects and on 1-cells."""
    budget = budget or SampleBudget()
    m = T.base
    rep = Report(f"symmetric monoidal double category: {getattr(T, 'name', T)}")

    def d0(x):
        A, B = x
        if m.vcomp(T.braid_vmor(A, B), T.braid_vmor(B, A)) != m.vid(T.tensor_obj(A, B)):
            return f"braiding not involutive on D0 at {short(x)}"

    def d1(x):
        M, N = x
        twice = compose_v(m, T.braid_sq(M, N), T.braid_sq(N, M))
        return _neq(m, twice, m.sq_id(T.tensor_hcell(M, N)), "braiding involutive on D1")

    run_axiom(rep, "D0 symmetry", CITE_SYM, d0, budget, _every(m.objects, 2), lambda g: _objs(T, g, 2), "symmetry")
    run_axiom(rep, "D1 symmetry", CITE_SYM, d1, budget, _every(m.all_hcells, 2), lambda g: _hcells(T, g, 2), "symmetry")
    return rep
