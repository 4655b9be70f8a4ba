"""The horizontal bicategory H(D) and the lift of vertical transformations to it.

A vertical transformation ``alpha`` whose components have chosen companions and
conjoints becomes an oplax transformation ``alpha_hat`` (1-cells the companions),
a lax one ``alpha_check`` (the conjoints), and the two are conjoint to each other.
Every 2-cell below is a :class:`~dblcoh.core.Cell`, so boundary bracketings are
explicit and coherence isos are inserted by the pasting functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .companions import (
    Choices,
    CompanionPair,
    ConjointPair,
    adjunction,
    adjunction_defect,
    companion_defect,
    companion_of_identity,
    compose_companions,
    conjoint_defect,
    map_companion,
    theta,
)
from .core import (
    UNIT,
    Cell,
    DoubleCategory,
    HTree,
    NotInvertible,
    Square,
    _composable_hcells,
    _neq,
    cell,
    compose_h,
    compose_v,
    evaluate,
    flat_square,
    is_globular,
    leaf,
    node,
    paste_h,
    paste_v,
    reshape,
    short,
    unit_leaf,
)
from .functor import DblFunctor, DblTransformation, verify_functor
from .models.wrappers import HOpModel, flip
from .report import Report, SampleBudget, run_axiom

CITE_BICAT = "horizontal bicategory: objects, horizontal 1-cells, globular squares"
CITE_LIFT = "oplax/lax transformation axioms and conjunction squares of a lifted transformation"
CITE_MOD = "modification axiom between oplax transformations"
CITE_LOCAL = "lifting transformations is pseudofunctorial: composition constraint is theta, coherent"
CITE_GODEMENT = "compatibility of the lift with whiskering: chi and iota constraints"


# the bicategory

class Bicategory:
    """H(D): 1-cells are horizontal 1-cells, 2-cells the globular squares."""

    def __init__(self, m: DoubleCategory):
        self.model = m
        self.name = f"H({m.name})"

    def objects(self):
        return self.model.objects()

    def hom(self, A, B):
        return self.model.hcells(A, B)

    def two_cells(self, M, N) -> list[Square]:
        m = self.model
        return list(m.squares(M, m.vid(m.hsrc(M)), m.vid(m.htgt(M)), N))

    def compose(self, M, N):
        return self.model.hcomp(M, N)

    def unit(self, A):
        return self.model.hunit(A)

    def vcomp2(self, s: Square, t: Square) -> Square:
        return compose_v(self.model, s, t)

    def hcomp2(self, s: Square, t: Square) -> Square:
        return compose_h(self.model, s, t)

    def assoc(self, M, N, P) -> Square:
        return self.model.assoc(M, N, P)

    def lunitor(self, M) -> Square:
        return self.model.src_unitor(M)

    def runitor(self, M) -> Square:
        return self.model.tgt_unitor(M)

    def random_two_cell(self, rng, M=None) -> Square | None:
        m = self.model
        M = M if M is not None else m.random_hcell(rng)
        if M is None:
            return None
        A, B = m.hsrc(M), m.htgt(M)
        targets = list(m.hcells(A, B))
        rng.shuffle(targets)
        for N in targets[:8]:
            options = self.two_cells(M, N)
            if options:
                return rng.choice(options)
        return None


def horizontal_bicategory(m: DoubleCategory) -> Bicategory:
    return Bicategory(m)


def verify_bicategory(H: Bicategory, budget: SampleBudget | None = None) -> Report:
    """Globular cells are closed under both compositions; constraints are globular and coherent."""
    budget = budget or SampleBudget()
    m = H.model
    rep = Report(f"bicategory {H.name}")
    ax = lambda name, check, sampler: run_axiom(rep, name, CITE_BICAT, check, budget, None, sampler, "bicategory")

    def closed(t):
        a = H.random_two_cell(t[0], t[1][0])
        b = H.random_two_cell(t[0], t[1][1])
        if a is None or b is None:
            return None
        if not is_globular(m, compose_h(m, a, b)):
            return "horizontal composite of globular cells is not globular"
        c = H.random_two_cell(t[0], a.bottom)
        if c is not None and not is_globular(m, compose_v(m, a, c)):
            return "vertical composite of globular cells is not globular"

    def constraints(t):
        M, N, P = t
        for s in (H.assoc(M, N, P), H.lunitor(M), H.runitor(M)):
            if not is_globular(m, s):
                return "constraint is not globular"
            m.sq_inverse(s)

    def pentagon(t):
        M, N, P, Q = t
        lhs = compose_v(m, H.assoc(m.hcomp(M, N), P, Q), H.assoc(M, N, m.hcomp(P, Q)))
        rhs = compose_v(m, compose_v(m, compose_h(m, H.assoc(M, N, P), m.sq_id(Q)), H.assoc(M, m.hcomp(N, P), Q)),
                        compose_h(m, m.sq_id(M), H.assoc(N, P, Q)))
        return _neq(m, lhs, rhs, "pentagon")

    def triangle(t):
        M, N = t
        U = m.hunit(m.htgt(M))
        lhs = compose_v(m, H.assoc(M, U, N), compose_h(m, m.sq_id(M), H.lunitor(N)))
        return _neq(m, lhs, compose_h(m, H.runitor(M), m.sq_id(N)), "triangle")

    def pairs(r):
        t = _composable_hcells(m, 2, r)
        return None if t is None else (r, t)

    ax("globular cells closed under composition", closed, pairs)
    ax("constraints globular and invertible", constraints, lambda r: _composable_hcells(m, 3, r))
    ax("pentagon", pentagon, lambda r: _composable_hcells(m, 4, r))
    ax("triangle", triangle, lambda r: _composable_hcells(m, 2, r))
    return rep


@dataclass(frozen=True)
class PseudoFunctor:
    """``H(F)``: a pseudo double functor restricted to globular data."""

    functor: DblFunctor

    def obj(self, A):
        return self.functor.obj(A)

    def hom(self, M):
        return self.functor.hcell(M)

    def two_cell(self, s: Square) -> Square:
        return self.functor.square(s)

    def comp(self, M, N) -> Square:
        return self.functor.comp(M, N)

    def unit(self, A) -> Square:
        return self.functor.unit(A)


def h_on_functor(F: DblFunctor) -> PseudoFunctor:
    return PseudoFunctor(F)


def verify_pseudofunctor(P: PseudoFunctor, budget: SampleBudget | None = None) -> Report:
    """Pseudofunctor coherence is the functor coherence of F; also F preserves globularity."""
    budget = budget or SampleBudget()
    F = P.functor
    rep = Report(f"pseudofunctor H({F.name})")
    Hd = Bicategory(F.domain)

    def glob(r):
        return Hd.random_two_cell(r)

    def check(s):
        if not is_globular(F.codomain, P.two_cell(s)):
            return f"image of a globular cell is not globular at {short(s)}"

    run_axiom(rep, "globular cells to globular cells", CITE_BICAT, check, budget, None, glob, "pseudofunctor")
    for r in verify_functor(F, budget).results:
        r.group = "pseudofunctor"
        rep.add(r)
    return rep


# oplax transformations in H(E)

def id_cell(m: DoubleCategory, t: HTree) -> Cell:
    return Cell(m.sq_id(evaluate(m, t)), t, t)


@dataclass(frozen=True)
class Oplax:
    """An oplax transformation ``F => G`` between functors into H(E).

    ``comp(A)`` is the component 1-cell (a tree, so composites stay bracketed) and
    ``cell(M)`` a cell ``FM ; comp(B) => comp(A) ; GM`` with those exact bracketings.
    """

    model: DoubleCategory
    domain: DoubleCategory
    src_hcell: Callable
    tgt_hcell: Callable
    comp: Callable
    cell: Callable
    name: str = "sigma"


def _oplax_cell(E, s: Square, FM, GM, cA: HTree, cB: HTree) -> Cell:
    return Cell(s, node(leaf(E, FM), cB), node(cA, leaf(E, GM)))


def compose_oplax(s: Oplax, t: Oplax) -> Oplax:
    """``s`` then ``t``: components ``s_A ; t_A``."""
    E, D = s.model, s.domain

    def comp(A):
        return node(s.comp(A), t.comp(A))

    def cell_(M):
        A, B = D.hsrc(M), D.htgt(M)
        first = paste_h(E, s.cell(M), id_cell(E, t.comp(B)))
        second = paste_h(E, id_cell(E, s.comp(A)), t.cell(M))
        out = paste_v(E, first, second)
        return reshape(E, out, node(leaf(E, s.src_hcell(M)), comp(B)), node(comp(A), leaf(E, t.tgt_hcell(M))))

    return Oplax(E, D, s.src_hcell, t.tgt_hcell, comp, cell_, f"{s.name};{t.name}")


def identity_oplax(E: DoubleCategory, D: DoubleCategory, hcell: Callable, obj: Callable, name: str = "1") -> Oplax:
    """Components ``U_FA``; the cell is ``FM ; U => FM => U ; FM``."""

    def cell_(M):
        FM = hcell(M)
        top = node(leaf(E, FM), unit_leaf(E, obj(D.htgt(M))))
        bottom = node(unit_leaf(E, obj(D.hsrc(M))), leaf(E, FM))
        return reshape(E, id_cell(E, leaf(E, FM)), top, bottom)

    return Oplax(E, D, hcell, hcell, lambda A: unit_leaf(E, obj(A)), cell_, name)


def modification_defect(s: Oplax, t: Oplax, mu: Callable[[Any], Cell], M) -> str | None:
    """``(1_FM . mu_B) ; t_M = s_M ; (mu_A . 1_GM)`` as flattened squares."""
    E, D = s.model, s.domain
    A, B = D.hsrc(M), D.htgt(M)
    FM, GM = leaf(E, s.src_hcell(M)), leaf(E, s.tgt_hcell(M))
    lhs = paste_v(E, paste_h(E, id_cell(E, FM), mu(B)), t.cell(M))
    rhs = paste_v(E, s.cell(M), paste_h(E, mu(A), id_cell(E, GM)))
    x, y = flat_square(E, lhs), flat_square(E, rhs)
    if x != y and not E.sq_eq(x, y):
        return f"modification axiom fails at {short(M, 120)}"
    return None


# lifting a vertical transformation

@dataclass
class ConjunctionalTransformation:
    """The pair ``alpha_hat`` (oplax, companions) and ``alpha_check`` (lax, conjoints)."""

    alpha: DblTransformation
    choices: Choices
    _hat: dict = field(default_factory=dict, repr=False)
    _check: dict = field(default_factory=dict, repr=False)

    @property
    def model(self) -> DoubleCategory:
        return self.alpha.source.codomain

    @property
    def domain(self) -> DoubleCategory:
        return self.alpha.source.domain

    def hat_obj(self, A) -> CompanionPair:
        return self.choices.companion(self.alpha.obj(A))

    def check_obj(self, A) -> ConjointPair:
        return self.choices.conjoint(self.alpha.obj(A))

    def hat_cell(self, M) -> Square:
        """``FM ; alpha_hat_B => alpha_hat_A ; GM``: up of A, then alpha_M, then down of B."""
        if M not in self._hat:
            E, D = self.model, self.domain
            ca, cb = self.hat_obj(D.hsrc(M)), self.hat_obj(D.htgt(M))
            row = paste_h(E, cell(E, ca.up, UNIT), cell(E, self.alpha.hcell(M)), cell(E, cb.down, None, UNIT))
            self._hat[M] = flat_square(E, row)
        return self._hat[M]

    def check_cell(self, M) -> Square:
        """``alpha_check_A ; FM => GM ; alpha_check_B``: counit of A, alpha_M, unit of B."""
        if M not in self._check:
            E, D = self.model, self.domain
            ja, jb = self.check_obj(D.hsrc(M)), self.check_obj(D.htgt(M))
            row = paste_h(E, cell(E, ja.counit_square, None, UNIT), cell(E, self.alpha.hcell(M)), cell(E, jb.unit_square, UNIT))
            self._check[M] = flat_square(E, row)
        return self._check[M]

    def adjunction(self, A):
        return adjunction(self.model, self.hat_obj(A), self.check_obj(A))

    @property
    def hat(self) -> Oplax:
        E, D = self.model, self.domain
        F, G = self.alpha.source, self.alpha.target

        def cell_(M):
            s = self.hat_cell(M)
            return _oplax_cell(E, s, F.hcell(M), G.hcell(M), self.hat_comp(D.hsrc(M)), self.hat_comp(D.htgt(M)))

        return Oplax(E, D, F.hcell, G.hcell, self.hat_comp, cell_, self.alpha.name + "^")

    def hat_comp(self, A) -> HTree:
        return leaf(self.model, self.hat_obj(A).fhat)

    def check_comp(self, A) -> HTree:
        return leaf(self.model, self.check_obj(A).fcheck)


def lift_transformation(alpha: DblTransformation, choices: Choices) -> ConjunctionalTransformation:
    return ConjunctionalTransformation(alpha, choices)


def _glob_sampler(D: DoubleCategory):
    H = Bicategory(D)
    return lambda r: H.random_two_cell(r)


def verify_lift(L: ConjunctionalTransformation, budget: SampleBudget | None = None, pseudo: bool | None = None) -> Report:
    """Oplax and lax axioms, the conjunction squares, and invertibility when alpha is invertible."""
    budget = budget or SampleBudget()
    E, D = L.model, L.domain
    F, G = L.alpha.source, L.alpha.target
    rep = Report(f"lift of {L.alpha.name}")
    ax = lambda name, check, sampler: run_axiom(rep, name, CITE_LIFT, check, budget, None, sampler, "lift")
    one_hcell = lambda r: _composable_hcells(D, 1, r)

    def chosen(t):
        A = D.hsrc(t[0])
        return companion_defect(E, L.hat_obj(A)) or conjoint_defect(E, L.check_obj(A))

    def adjoint(t):
        return adjunction_defect(E, L.adjunction(D.hsrc(t[0])))

    def hat_natural(x):
        # (F(x) . 1) ; alpha_hat_N = alpha_hat_M ; (1 . G(x))
        bB, bA = L.hat_obj(D.htgt(x.top)).fhat, L.hat_obj(D.hsrc(x.top)).fhat
        lhs = compose_v(E, compose_h(E, F.square(x), E.sq_id(bB)), L.hat_cell(x.bottom))
        rhs = compose_v(E, L.hat_cell(x.top), compose_h(E, E.sq_id(bA), G.square(x)))
        return _neq(E, lhs, rhs, "oplax naturality")

    def check_natural(x):
        bB, bA = L.check_obj(D.htgt(x.top)).fcheck, L.check_obj(D.hsrc(x.top)).fcheck
        lhs = compose_v(E, compose_h(E, E.sq_id(bA), F.square(x)), L.check_cell(x.bottom))
        rhs = compose_v(E, L.check_cell(x.top), compose_h(E, G.square(x), E.sq_id(bB)))
        return _neq(E, lhs, rhs, "lax naturality")

    def hat_unit(t):
        A = D.hsrc(t[0])
        a = leaf(E, L.hat_obj(A).fhat)
        FU, GU = F.hcell(D.hunit(A)), G.hcell(D.hunit(A))
        lhs = paste_v(
            E,
            paste_h(E, cell(E, F.unit(A), UNIT), id_cell(E, a)),
            _oplax_cell(E, L.hat_cell(D.hunit(A)), FU, GU, a, a),
            paste_h(E, id_cell(E, a), cell(E, E.sq_inverse(G.unit(A)), None, UNIT)),
        )
        rhs = reshape(E, id_cell(E, a), node(unit_leaf(E, F.obj(A)), a), node(a, unit_leaf(E, G.obj(A))))
        return _neq(E, flat_square(E, lhs), flat_square(E, rhs), "oplax unit axiom")

    def hat_comp(t):
        M, N = t
        A, B, C = D.hsrc(M), D.htgt(M), D.htgt(N)
        a, b, c = (leaf(E, L.hat_obj(X).fhat) for X in (A, B, C))
        FM, FN, GM, GN = (leaf(E, x) for x in (F.hcell(M), F.hcell(N), G.hcell(M), G.hcell(N)))
        MN = D.hcomp(M, N)
        lhs = paste_v(
            E,
            paste_h(E, id_cell(E, FM), _oplax_cell(E, L.hat_cell(N), F.hcell(N), G.hcell(N), b, c)),
            paste_h(E, _oplax_cell(E, L.hat_cell(M), F.hcell(M), G.hcell(M), a, b), id_cell(E, GN)),
            paste_h(E, id_cell(E, a), cell(E, G.comp(M, N), node(GM, GN))),
        )
        rhs = paste_v(
            E,
            paste_h(E, cell(E, F.comp(M, N), node(FM, FN)), id_cell(E, c)),
            _oplax_cell(E, L.hat_cell(MN), F.hcell(MN), G.hcell(MN), a, c),
        )
        return _neq(E, flat_square(E, lhs), flat_square(E, rhs), "oplax composition axiom")

    def conj(t):
        M = t[0]
        A, B = D.hsrc(M), D.htgt(M)
        ca, cb = L.hat_obj(A), L.hat_obj(B)
        ja, jb = L.check_obj(A), L.check_obj(B)
        adjA, adjB = L.adjunction(A), L.adjunction(B)
        a, b, ac, bc = leaf(E, ca.fhat), leaf(E, cb.fhat), leaf(E, ja.fcheck), leaf(E, jb.fcheck)
        FM, GM = leaf(E, F.hcell(M)), leaf(E, G.hcell(M))
        eta = lambda adj, X: Cell(adj.unit, unit_leaf(E, X), node(leaf(E, adj.left), leaf(E, adj.right)))
        eps = lambda adj, X: Cell(adj.counit, node(leaf(E, adj.right), leaf(E, adj.left)), unit_leaf(E, X))
        hatM = _oplax_cell(E, L.hat_cell(M), F.hcell(M), G.hcell(M), a, b)
        checkM = Cell(L.check_cell(M), node(ac, FM), node(GM, bc))
        # FM => FM ; b ; bc => a ; GM ; bc, against FM => a ; ac ; FM => a ; GM ; bc
        p1 = paste_v(E, paste_h(E, id_cell(E, FM), eta(adjB, F.obj(B))), paste_h(E, hatM, id_cell(E, bc)))
        p2 = paste_v(E, paste_h(E, eta(adjA, F.obj(A)), id_cell(E, FM)), paste_h(E, id_cell(E, a), checkM))
        bad = _neq(E, flat_square(E, p1), flat_square(E, p2), "first conjunction square")
        if bad:
            return bad
        # ac ; FM ; b => ac ; a ; GM => GM, against => GM ; bc ; b => GM
        q1 = paste_v(E, paste_h(E, id_cell(E, ac), hatM), paste_h(E, eps(adjA, G.obj(A)), id_cell(E, GM)))
        q2 = paste_v(E, paste_h(E, checkM, id_cell(E, b)), paste_h(E, id_cell(E, GM), eps(adjB, G.obj(B))))
        return _neq(E, flat_square(E, q1), flat_square(E, q2), "second conjunction square")

    def invertible(t):
        s = L.hat_cell(t[0])
        try:
            inv = E.sq_inverse(s)
        except NotInvertible:
            return f"alpha_hat_M is not invertible at {short(t[0], 120)}"
        return _neq(E, compose_v(E, s, inv), E.sq_id(s.top), "alpha_hat_M inverse")

    ax("chosen companions and conjoints", chosen, one_hcell)
    ax("unit and counit form an adjunction", adjoint, one_hcell)
    ax("oplax naturality in 2-cells", hat_natural, _glob_sampler(D))
    ax("lax naturality in 2-cells", check_natural, _glob_sampler(D))
    ax("oplax unit axiom", hat_unit, one_hcell)
    ax("oplax composition axiom", hat_comp, lambda r: _composable_hcells(D, 2, r))
    ax("conjunction squares", conj, one_hcell)
    if pseudo is None:
        pseudo = True
        try:
            L.alpha.inverse()
        except Exception:
            pseudo = False
    if pseudo:
        ax("pseudonatural: alpha_hat_M invertible", invertible, one_hcell)
    return rep


# composing transformations, and the pseudofunctoriality of the lift

def compose_transformations(alpha: DblTransformation, beta: DblTransformation) -> DblTransformation:
    """Vertical composite ``alpha`` then ``beta``."""
    E = alpha.source.codomain
    return DblTransformation(
        alpha.source, beta.target, lambda A: E.vcomp(alpha.obj(A), beta.obj(A)),
        lambda M: compose_v(E, alpha.hcell(M), beta.hcell(M)), f"{alpha.name};{beta.name}")


def identity_transformation(F: DblFunctor) -> DblTransformation:
    E = F.codomain
    return DblTransformation(F, F, lambda A: E.vid(F.obj(A)), lambda M: E.sq_id(F.hcell(M)), "1")


class LocalFunctor:
    """Transformations to oplax transformations; constraints are thetas."""

    def __init__(self, choices: Choices):
        self.choices = choices
        self.model = choices.model

    def lift(self, alpha: DblTransformation) -> ConjunctionalTransformation:
        return lift_transformation(alpha, self.choices)

    def comp_constraint(self, f, g) -> Square:
        """``(f ; g)^ => fhat ; ghat``."""
        ch, m = self.choices, self.model
        return theta(m, ch.companion(m.vcomp(f, g)), compose_companions(m, ch.companion(f), ch.companion(g)))

    def unit_constraint(self, A) -> Square:
        """``(1_A)^ => U_A``."""
        m = self.model
        return theta(m, self.choices.companion(m.vid(A)), companion_of_identity(m, A))

    def comp_cell(self, alpha, beta, A) -> Cell:
        E = self.model
        f, g = alpha.obj(A), beta.obj(A)
        ch = self.choices
        return Cell(self.comp_constraint(f, g), leaf(E, ch.companion(E.vcomp(f, g)).fhat),
                    node(leaf(E, ch.companion(f).fhat), leaf(E, ch.companion(g).fhat)))


def functor_on_transformations(choices: Choices) -> LocalFunctor:
    return LocalFunctor(choices)


def verify_local_functor(P: LocalFunctor, alpha: DblTransformation, beta: DblTransformation,
                         gamma: DblTransformation | None = None, budget: SampleBudget | None = None) -> Report:
    """Constraint is a modification; associativity and unit coherence on components."""
    budget = budget or SampleBudget()
    E, D = P.model, alpha.source.domain
    ch = P.choices
    rep = Report("lift on transformations")
    ax = lambda name, check, sampler: run_axiom(rep, name, CITE_LOCAL, check, budget, None, sampler, "local functor")
    one = lambda r: _composable_hcells(D, 1, r)
    composite = P.lift(compose_transformations(alpha, beta)).hat
    pair = compose_oplax(P.lift(alpha).hat, P.lift(beta).hat)

    def modification(t):
        return modification_defect(composite, pair, lambda A: P.comp_cell(alpha, beta, A), t[0])

    def unit_coh(t):
        A = D.hsrc(t[0])
        f = alpha.obj(A)
        B = E.vtgt(f)
        # (f ; 1)^ => fhat ; (1)^ => fhat ; U => fhat equals the identity of fhat
        c = leaf(E, ch.companion(f).fhat)
        one_hat = leaf(E, ch.companion(E.vid(B)).fhat)
        p = paste_v(E, Cell(P.comp_constraint(f, E.vid(B)), c, node(c, one_hat)),
                    paste_h(E, id_cell(E, c), Cell(P.unit_constraint(B), one_hat, unit_leaf(E, B))))
        return _neq(E, flat_square(E, p), E.sq_id(ch.companion(f).fhat), "unit coherence")

    def assoc_coh(t):
        A = D.hsrc(t[0])
        f, g, h = alpha.obj(A), beta.obj(A), gamma.obj(A)
        hat = lambda x: leaf(E, ch.companion(x).fhat)
        fg, gh, fgh = E.vcomp(f, g), E.vcomp(g, h), E.vcomp(E.vcomp(f, g), h)
        p1 = paste_v(E, Cell(P.comp_constraint(fg, h), hat(fgh), node(hat(fg), hat(h))),
                     paste_h(E, Cell(P.comp_constraint(f, g), hat(fg), node(hat(f), hat(g))), id_cell(E, hat(h))))
        p2 = paste_v(E, Cell(P.comp_constraint(f, gh), hat(fgh), node(hat(f), hat(gh))),
                     paste_h(E, id_cell(E, hat(f)), Cell(P.comp_constraint(g, h), hat(gh), node(hat(g), hat(h)))))
        return _neq(E, flat_square(E, p1), flat_square(E, p2), "associativity coherence")

    ax("composition constraint is a modification", modification, one)
    ax("unit coherence", unit_coh, one)
    if gamma is not None:
        ax("associativity coherence", assoc_coh, one)
    return rep


# modifications and mates

def _eta(E, adj, X) -> Cell:
    return Cell(adj.unit, unit_leaf(E, X), node(leaf(E, adj.left), leaf(E, adj.right)))


def _eps(E, adj, X) -> Cell:
    return Cell(adj.counit, node(leaf(E, adj.right), leaf(E, adj.left)), unit_leaf(E, X))


def mate(src: ConjunctionalTransformation, dst: ConjunctionalTransformation, mu: Callable[[Any], Square]):
    """``mu: src^ -> dst^`` gives ``dst_check -> src_check`` via the two adjunctions."""
    E = src.model

    def component(A) -> Square:
        a, a2 = leaf(E, src.hat_obj(A).fhat), leaf(E, dst.hat_obj(A).fhat)
        b, b2 = leaf(E, src.check_obj(A).fcheck), leaf(E, dst.check_obj(A).fcheck)
        FA, GA = src.alpha.source.obj(A), src.alpha.target.obj(A)
        p = paste_v(
            E,
            paste_h(E, id_cell(E, b2), _eta(E, src.adjunction(A), FA)),
            paste_h(E, id_cell(E, b2), Cell(mu(A), a, a2), id_cell(E, b)),
            paste_h(E, _eps(E, dst.adjunction(A), GA), id_cell(E, b)),
        )
        return flat_square(E, p)

    return component


def unmate(src: ConjunctionalTransformation, dst: ConjunctionalTransformation, nu: Callable[[Any], Square]):
    """Inverse of :func:`mate`: ``nu: dst_check -> src_check`` gives ``src^ -> dst^``."""
    E = src.model

    def component(A) -> Square:
        a, a2 = leaf(E, src.hat_obj(A).fhat), leaf(E, dst.hat_obj(A).fhat)
        b, b2 = leaf(E, src.check_obj(A).fcheck), leaf(E, dst.check_obj(A).fcheck)
        FA, GA = src.alpha.source.obj(A), src.alpha.target.obj(A)
        p = paste_v(
            E,
            paste_h(E, _eta(E, dst.adjunction(A), FA), id_cell(E, a)),
            paste_h(E, id_cell(E, a2), Cell(nu(A), b2, b), id_cell(E, a)),
            paste_h(E, id_cell(E, a2), _eps(E, src.adjunction(A), GA)),
        )
        return flat_square(E, p)

    return component


def conjoint_theta(m: DoubleCategory, j1: ConjointPair, j2: ConjointPair) -> Square:
    """The comparison ``j1.fcheck => j2.fcheck`` in the frame of ``m``."""
    return flip(theta(HOpModel(m), j1.companion(), j2.companion()))


# independence of choices

def choice_comparison(alpha: DblTransformation, ch1: Choices, ch2: Choices):
    """The invertible modification ``alpha^ -> alpha^'`` with theta components."""
    L1, L2 = lift_transformation(alpha, ch1), lift_transformation(alpha, ch2)
    E = L1.model

    def component(A) -> Square:
        f = alpha.obj(A)
        return theta(E, ch1.companion(f), ch2.companion(f))

    return L1, L2, component


def verify_choice_comparison(alpha: DblTransformation, ch1: Choices, ch2: Choices,
                             budget: SampleBudget | None = None) -> Report:
    budget = budget or SampleBudget()
    L1, L2, comp = choice_comparison(alpha, ch1, ch2)
    E, D = L1.model, L1.domain
    rep = Report(f"choice independence for {alpha.name}")
    ax = lambda name, check, sampler: run_axiom(rep, name, CITE_MOD, check, budget, None, sampler, "choices")
    one = lambda r: _composable_hcells(D, 1, r)

    def mod(t):
        mu = lambda A: Cell(comp(A), L1.hat_comp(A), L2.hat_comp(A))
        return modification_defect(L1.hat, L2.hat, mu, t[0])

    def invertible(t):
        A = D.hsrc(t[0])
        s = comp(A)
        back = theta(E, ch2.companion(alpha.obj(A)), ch1.companion(alpha.obj(A)))
        return _neq(E, compose_v(E, s, back), E.sq_id(s.top), "theta components invertible")

    def mates(t):
        A = D.hsrc(t[0])
        m = mate(L1, L2, comp)(A)
        expected = conjoint_theta(E, L2.check_obj(A), L1.check_obj(A))
        bad = _neq(E, m, expected, "mate of theta is the conjoint theta")
        if bad:
            return bad
        return _neq(E, unmate(L1, L2, mate(L1, L2, comp))(A), comp(A), "double mate")

    ax("theta components form a modification", mod, one)
    ax("theta components invertible", invertible, one)
    ax("mate determined by theta", mates, one)
    return rep


# whiskering: chi and iota

def godement(alpha: DblTransformation, beta: DblTransformation) -> DblTransformation:
    """``beta * alpha: HF => KG`` for ``alpha: F => G`` and ``beta: H => K``, components ``H(alpha_A) ; beta_GA``."""
    F, G, H, K = alpha.source, alpha.target, beta.source, beta.target
    E = H.codomain
    src = DblFunctor(F.domain, E, lambda A: H.obj(F.obj(A)), lambda f: H.vmor(F.vmor(f)), lambda M: H.hcell(F.hcell(M)),
                     lambda s: H.square(F.square(s)),
                     lambda M, N: compose_v(E, H.comp(F.hcell(M), F.hcell(N)), H.square(F.comp(M, N))),
                     lambda A: compose_v(E, H.unit(F.obj(A)), H.square(F.unit(A))), f"{F.name};{H.name}")
    tgt = DblFunctor(G.domain, E, lambda A: K.obj(G.obj(A)), lambda f: K.vmor(G.vmor(f)), lambda M: K.hcell(G.hcell(M)),
                     lambda s: K.square(G.square(s)),
                     lambda M, N: compose_v(E, K.comp(G.hcell(M), G.hcell(N)), K.square(G.comp(M, N))),
                     lambda A: compose_v(E, K.unit(G.obj(A)), K.square(G.unit(A))), f"{G.name};{K.name}")
    return DblTransformation(
        src, tgt, lambda A: E.vcomp(H.vmor(alpha.obj(A)), beta.obj(G.obj(A))),
        lambda M: compose_v(E, H.square(alpha.hcell(M)), beta.hcell(G.hcell(M))), f"{beta.name}*{alpha.name}")


def whiskered_oplax(La: ConjunctionalTransformation, Lb: ConjunctionalTransformation) -> Oplax:
    """``beta^ * H(alpha^)``: components ``H(alpha^_A) ; beta^_GA``."""
    alpha, beta = La.alpha, Lb.alpha
    F, G, H, K = alpha.source, alpha.target, beta.source, beta.target
    E, D, Dp = Lb.model, La.domain, La.model

    def comp(A):
        return node(leaf(E, H.hcell(La.hat_obj(A).fhat)), Lb.hat_comp(G.obj(A)))

    def cell_(M):
        A, B = D.hsrc(M), D.htgt(M)
        a, b = La.hat_obj(A).fhat, La.hat_obj(B).fhat
        FM, GM = F.hcell(M), G.hcell(M)
        Ha, Hb, HFM, HGM = (leaf(E, H.hcell(x)) for x in (a, b, FM, GM))
        bA, bB = Lb.hat_comp(G.obj(A)), Lb.hat_comp(G.obj(B))
        # H(FM) ; H(b) => H(FM ; b) => H(a ; GM) => H(a) ; H(GM), then beta^ at GM
        p = paste_v(
            E,
            paste_h(E, Cell(H.comp(FM, b), node(HFM, Hb), leaf(E, H.hcell(Dp.hcomp(FM, b)))), id_cell(E, bB)),
            paste_h(E, cell(E, H.square(La.hat_cell(M))), id_cell(E, bB)),
            paste_h(E, Cell(E.sq_inverse(H.comp(a, GM)), leaf(E, H.hcell(Dp.hcomp(a, GM))), node(Ha, HGM)), id_cell(E, bB)),
            paste_h(E, id_cell(E, Ha), Cell(Lb.hat_cell(GM), node(HGM, bB), node(bA, leaf(E, K.hcell(GM))))),
        )
        return reshape(E, p, node(HFM, comp(B)), node(comp(A), leaf(E, K.hcell(GM))))

    return Oplax(E, D, lambda M: H.hcell(F.hcell(M)), lambda M: K.hcell(G.hcell(M)), comp, cell_,
                 f"{beta.name}^*{alpha.name}^")


def chi(La: ConjunctionalTransformation, Lb: ConjunctionalTransformation, A) -> Cell:
    """``H(alpha^_A) ; beta^_GA => (beta * alpha)^_A``, a theta."""
    H, G = Lb.alpha.source, La.alpha.target
    E = Lb.model
    first = compose_companions(E, map_companion(H, La.hat_obj(A)), Lb.hat_obj(G.obj(A)))
    target = Lb.choices.companion(first.f)
    return Cell(theta(E, first, target), node(leaf(E, H.hcell(La.hat_obj(A).fhat)), Lb.hat_comp(G.obj(A))),
                leaf(E, target.fhat))


def iota(choices: Choices, X) -> Cell:
    """``(1_X)^ => U_X``."""
    m = choices.model
    return Cell(LocalFunctor(choices).unit_constraint(X), leaf(m, choices.companion(m.vid(X)).fhat), unit_leaf(m, X))


def verify_chi(La: ConjunctionalTransformation, Lb: ConjunctionalTransformation,
               budget: SampleBudget | None = None) -> Report:
    """chi is a modification into the lift of the whiskered transformation; iota is a theta."""
    budget = budget or SampleBudget()
    E, D = Lb.model, La.domain
    gam = godement(La.alpha, Lb.alpha)
    Lg = lift_transformation(gam, Lb.choices)
    W = whiskered_oplax(La, Lb)
    rep = Report(f"chi for {gam.name}")
    ax = lambda name, check, sampler: run_axiom(rep, name, CITE_GODEMENT, check, budget, None, sampler, "chi")
    one = lambda r: _composable_hcells(D, 1, r)

    def mod(t):
        return modification_defect(W, Lg.hat, lambda A: chi(La, Lb, A), t[0])

    def iota_theta(t):
        X = Lb.alpha.source.obj(La.alpha.target.obj(D.hsrc(t[0])))
        c = Lb.choices.companion(E.vid(X))
        i = iota(Lb.choices, X).square
        return None if E.sq_eq(compose_v(E, compose_v(E, c.up, i), E.sq_id(E.hunit(X))), E.sq_unit(c.f)) else "iota is not a theta"

    ax("chi is a modification", mod, one)
    ax("iota satisfies the theta condition", iota_theta, one)
    return rep


def oplax_cell_is_theta(L: ConjunctionalTransformation, c: CompanionPair) -> tuple[Square, Square]:
    """At a companion ``fhat``, ``alpha^_fhat`` and the theta between the two composite companions."""
    F, G = L.alpha.source, L.alpha.target
    E, D = L.model, L.domain
    A, B = D.vsrc(c.f), D.vtgt(c.f)
    lhs = compose_companions(E, map_companion(F, c), L.hat_obj(B))
    rhs = compose_companions(E, L.hat_obj(A), map_companion(G, c))
    return L.hat_cell(c.fhat), theta(E, lhs, rhs)
