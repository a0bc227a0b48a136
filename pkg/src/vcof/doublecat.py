"""Cells between functors and cofunctors, compatible squares and lenses.

A cell has four boundaries

        A --F--> C
        |        |
      Phi       Psi
        v        v
        B --G--> D

and one component per object a of A, a map I -> sum over x in
Psi^-1{G Phi a} of C(Fa, x). The corners are not required to agree on
objects; only the fibre over G Phi a is used.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping

from .bases.fam import FamBase
from .bases.tropical import INF, TropicalBase
from .cofun import (
    CofunctorTransformation, EnrichedCofunctor, check_cofunctor, compose_cofunctors, identity_cofunctor, spread_then_gather,
)
from .encat import (
    EnrichedFunctor, FunctorTransformation, _check_boundary_categories, _expect, _get, _use_fast, check_functor,
    cograph_map, compose_functors, identity_functor,
)
from .errors import BaseMismatchError, BoundaryError, LawError, StructuralError
from .report import DiagramResult, Report, collect, compare, existence
from .vbase import copair, coproduct, distribute_right, distribute_sums, sum_map


def _check_frame(top, bottom, left, right):
    _check_boundary_categories(top.source, top.target, bottom.source, bottom.target)
    if top.source != left.source:
        raise BoundaryError("top functor and left cofunctor start at different categories")
    if top.target != right.source:
        raise BoundaryError("top functor does not land where the right cofunctor starts")
    if left.target != bottom.source:
        raise BoundaryError("left cofunctor does not land where the bottom functor starts")
    if bottom.target != right.target:
        raise BoundaryError("bottom functor and right cofunctor end at different categories")


@dataclass(frozen=True)
class Cell:
    top: EnrichedFunctor
    bottom: EnrichedFunctor
    left: EnrichedCofunctor
    right: EnrichedCofunctor
    components: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", dict(self.components))

    @classmethod
    def thin(cls, top, bottom, left, right, name=""):
        base = top.source.base
        self = cls(top, bottom, left, right, {}, name)
        comps = {a: base.arrow(base.unit(), self.component_sum(a).total) for a in left.source.objects}
        return cls(top, bottom, left, right, comps, name)

    def component_sum(self, a):
        """sum over x in Psi^-1{G Phi a} of C(Fa, x)."""
        F, G, Phi, Psi = self.top, self.bottom, self.left, self.right
        return Psi.source.hom_sum(F(a), Psi.fibre(G(Phi(a))))

    def validate(self):
        _check_frame(self.top, self.bottom, self.left, self.right)
        base = self.top.source.base
        for a in self.top.source.objects:
            c = _get(self.components, a, "component")
            base.check_morphism(c)
            _expect(c, base.unit(), self.component_sum(a).total, f"component at {a}")
        return self


@dataclass(frozen=True)
class CompatibleSquare:
    top: EnrichedFunctor
    bottom: EnrichedFunctor
    left: EnrichedCofunctor
    right: EnrichedCofunctor
    name: str = field(default="", compare=False)

    def validate(self):
        _check_frame(self.top, self.bottom, self.left, self.right)
        return self


@dataclass(frozen=True)
class EnrichedLens:
    f: EnrichedFunctor
    phi: EnrichedCofunctor
    name: str = field(default="", compare=False)

    @property
    def source(self):
        return self.f.source

    @property
    def target(self):
        return self.f.target

    def validate(self):
        f, phi = self.f, self.phi
        if f.source != phi.source or f.target != phi.target:
            raise BoundaryError("lens functor and cofunctor have different boundaries")
        f.validate()
        phi.validate()
        for a in f.source.objects:
            if f(a) != phi(a):
                raise StructuralError(f"functor and cofunctor disagree on object {a}: {f(a)} vs {phi(a)}")
        return self


# -- cells -------------------------------------------------------------------

def _cell_diagrams(t: Cell):
    F, G, Phi, Psi = t.top, t.bottom, t.left, t.right
    A, B, C, D = F.source, G.source, F.target, G.target
    base, I = A.base, A.base.unit()
    tau = t.components
    for a, b in product(A.objects, B.objects):
        pa, gb = Phi(a), G(b)
        xs, ys, zs = Psi.fibre(G(pa)), Phi.fibre(b), Psi.fibre(gb)
        hd = D.hom[G(pa), gb]
        left = base.compose(
            base.tensor_mor(tau[a], G.homap[pa, b]),
            spread_then_gather(C, F(a), t.component_sum(a), hd,
                               {x: Psi.lift[x, gb] for x in xs}, {x: Psi.fibre_sum(x, gb) for x in xs}, zs),
        )
        right = base.compose(
            base.tensor_mor(Phi.lift[a, b], base.identity(I)),
            spread_then_gather(C, F(a), Phi.fibre_sum(a, b), I,
                               {y: tau[y] for y in ys}, {y: t.component_sum(y) for y in ys}, zs,
                               firsts={y: F.homap[a, y] for y in ys}, mids={y: F(y) for y in ys}),
        )
        yield compare(base, "naturality", (a, b), left, right)


def _cell_fast(t: Cell):
    F, G, Phi, Psi = t.top, t.bottom, t.left, t.right
    A, B, C = F.source, G.source, F.target
    tau = t.components
    for a, b in product(A.objects, B.objects):
        pa, gb = Phi(a), G(b)
        xs, ys, zs = Psi.fibre(G(pa)), Phi.fibre(b), Psi.fibre(gb)
        arrows = [tau[a], G.homap[pa, b], Phi.lift[a, b]]
        arrows += [Psi.lift[x, gb] for x in xs] + [C.mu[F(a), x, z] for x in xs for z in zs]
        arrows += [F.homap[a, y] for y in ys] + [tau[y] for y in ys]
        arrows += [C.mu[F(a), F(y), z] for y in ys for z in zs]
        yield existence("naturality", (a, b), arrows, A.base)


def check_cell(t: Cell, *, fast=None, fail_fast=False) -> Report:
    """One naturality diagram per (a, b) in obj(A) x obj(B)."""
    t.validate()
    for side in (t.top, t.bottom, t.left, t.right):
        side.validate()
    base = t.top.source.base
    quick = _use_fast(base, fast)
    diagrams = _cell_fast(t) if quick else _cell_diagrams(t)
    return collect(f"cell {t.name}".strip(), base, diagrams, fail_fast=fail_fast, fast_path=quick)


def hcompose_cells(t: Cell, s: Cell) -> Cell:
    """t : (F, G, Phi, Psi) beside s : (H, K, Psi, Upsilon), giving (FH, GK, Phi, Upsilon)."""
    if t.right != s.left:
        raise BoundaryError("cells do not share a vertical boundary")
    F, G, Phi = t.top, t.bottom, t.left
    H, K, Ups = s.top, s.bottom, s.right
    E = H.target
    base, I = E.base, E.base.unit()
    comps = {}
    for a in F.source.objects:
        src = t.component_sum(a)
        xs = src.labels
        ys = Ups.fibre(K(G(Phi(a))))
        rest = spread_then_gather(
            E, H(F(a)), src, I, {x: s.components[x] for x in xs}, {x: s.component_sum(x) for x in xs}, ys,
            firsts={x: H.homap[F(a), x] for x in xs}, mids={x: H(x) for x in xs},
        )
        # the unitor X -> X (x) I is an identity on the nose in every base here
        comps[a] = base.compose(t.components[a], rest)
    return Cell(compose_functors(F, H), compose_functors(G, K), Phi, Ups, comps)


def vcompose_cells(t: Cell, s: Cell) -> Cell:
    """t : (F, G, Phi, Psi) above s : (G, H, Upsilon, Omega), giving (F, H, Phi;Upsilon, Psi;Omega)."""
    if t.bottom != s.top:
        raise BoundaryError("cells do not share a horizontal boundary")
    F, Phi, Psi = t.top, t.left, t.right
    H, Ups, Omega = s.bottom, s.left, s.right
    C = F.target
    base, I = C.base, C.base.unit()
    down = compose_cofunctors(Psi, Omega)
    comps = {}
    for a in F.source.objects:
        fa, pa = F(a), Phi(a)
        src = t.component_sum(a)
        xs = src.labels
        sig = s.component_sum(pa)
        # sum_x C(Fa, x) (x) I  ->  sum_x C(Fa, x) (x) sum_y D(G Phi a, y)  ->  sum_(y,x)
        spread = coproduct(base, xs, [base.tensor(h, I) for h in src.summands])
        outer1, flat1, iso1 = distribute_sums(base, xs, {x: C.hom[fa, x] for x in xs}, {x: sig for x in xs})
        step1 = sum_map(spread, outer1, {
            x: base.tensor_mor(base.identity(C.hom[fa, x]), s.components[pa]) for x in xs
        })
        # lift along Psi at each (y, x), then flatten to labels (w, (y, x))
        pairs = flat1.labels
        inners = {(y, x): Psi.fibre_sum(x, y) for y, x in pairs}
        outer2, flat2, iso2 = distribute_sums(base, pairs, {(y, x): C.hom[fa, x] for y, x in pairs}, inners)
        step2 = sum_map(flat1, outer2, {
            (y, x): base.tensor_mor(base.identity(C.hom[fa, x]), Psi.lift[x, y]) for y, x in pairs
        })
        target = C.hom_sum(fa, down.fibre(H(Ups(pa))))
        legs = [base.compose(C.mu[fa, x, w], target.injection(w)) for w, (y, x) in flat2.labels]
        gather = copair(flat2, legs, target.total)
        comps[a] = base.compose(t.components[a], distribute_right(src, I), step1, iso1, step2, iso2, gather)
    return Cell(F, H, compose_cofunctors(Phi, Ups), down, comps)


def cell_from_functor_transformation(t: FunctorTransformation) -> Cell:
    """F => G : A -> B as a cell with identity cofunctors down both sides.

    Each fibre of an identity cofunctor is a single object and a one-summand
    sum is its summand, so the components carry over unchanged."""
    A, B = t.f.source, t.f.target
    return Cell(t.f, t.g, identity_cofunctor(A), identity_cofunctor(B), t.components, name=t.name)


def cell_from_cofunctor_transformation(t: CofunctorTransformation) -> Cell:
    """Phi => Psi : A -/-> B as a cell with identity functors along top and bottom."""
    A, B = t.phi.source, t.phi.target
    return Cell(identity_functor(A), identity_functor(B), t.phi, t.psi, t.components, name=t.name)


# -- compatible squares ------------------------------------------------------

def _square_objects(s: CompatibleSquare):
    F, G, Phi, Psi = s.top, s.bottom, s.left, s.right
    return {a: G(Phi(a)) == Psi(F(a)) for a in F.source.objects}


def _square_results(s: CompatibleSquare, quick: bool):
    F, G, Phi, Psi = s.top, s.bottom, s.left, s.right
    A, B = F.source, G.source
    base = A.base
    agree = _square_objects(s)
    for a in A.objects:
        note = "" if agree[a] else f"G(Phi a) = {G(Phi(a))!r} but Psi(F a) = {Psi(F(a))!r}"
        yield DiagramResult("objects", (a,), agree[a], note=note)
    for a, b in product(A.objects, B.objects):
        xs = Phi.fibre(b)
        bad = [x for x in (a, *xs) if not agree[x]]
        if bad:
            yield DiagramResult("square", (a, b), False,
                                note=f"not well-typed: objects {bad} break G(Phi) = Psi(F)")
            continue
        gb = G(b)
        if quick:
            arrows = [Phi.lift[a, b], G.homap[Phi(a), b], Psi.lift[F(a), gb]]
            arrows += [F.homap[a, x] for x in xs]
            yield existence("square", (a, b), arrows, base)
            continue
        dst = Psi.fibre_sum(F(a), gb)
        spread = copair(Phi.fibre_sum(a, b), [base.compose(F.homap[a, x], dst.injection(F(x))) for x in xs],
                        dst.total)
        left = base.compose(Phi.lift[a, b], spread)
        right = base.compose(G.homap[Phi(a), b], Psi.lift[F(a), gb])
        yield compare(base, "square", (a, b), left, right)


def check_compatible_square(s: CompatibleSquare, *, fast=None, fail_fast=False) -> Report:
    """Object equation G(Phi a) = Psi(F a) per a, then the lifting square per (a, b)."""
    s.validate()
    for side in (s.top, s.bottom, s.left, s.right):
        side.validate()
    base = s.top.source.base
    quick = _use_fast(base, fast)
    return collect(f"square {s.name}".strip(), base, _square_results(s, quick),
                   fail_fast=fail_fast, fast_path=quick)


def embed_square(s: CompatibleSquare) -> Cell:
    """The cell with components eta_{Fa} followed by the injection at Fa."""
    report = check_compatible_square(s)
    if not report.ok:
        raise LawError("only compatible squares embed as cells", report)
    F, Psi = s.top, s.right
    C = F.target
    base = C.base
    comps = {}
    for a in F.source.objects:
        fa = F(a)
        comps[a] = base.compose(C.eta[fa], Psi.fibre_sum(fa, Psi(fa)).injection(fa))
    return Cell(s.top, s.bottom, s.left, s.right, comps, name=s.name)


def hpaste_squares(s: CompatibleSquare, r: CompatibleSquare) -> CompatibleSquare:
    if s.right != r.left:
        raise BoundaryError("squares do not share a vertical boundary")
    return CompatibleSquare(compose_functors(s.top, r.top), compose_functors(s.bottom, r.bottom), s.left, r.right)


def vpaste_squares(s: CompatibleSquare, r: CompatibleSquare) -> CompatibleSquare:
    if s.bottom != r.top:
        raise BoundaryError("squares do not share a horizontal boundary")
    return CompatibleSquare(s.top, r.bottom, compose_cofunctors(s.left, r.left),
                            compose_cofunctors(s.right, r.right))


def identity_square_h(phi: EnrichedCofunctor) -> CompatibleSquare:
    """Identity functors along top and bottom, phi on both sides."""
    return CompatibleSquare(identity_functor(phi.source), identity_functor(phi.target), phi, phi)


def identity_square_v(f: EnrichedFunctor) -> CompatibleSquare:
    """f along top and bottom, identity cofunctors on both sides."""
    return CompatibleSquare(f, f, identity_cofunctor(f.source), identity_cofunctor(f.target))


def identity_cell_h(phi: EnrichedCofunctor) -> Cell:
    return embed_square(identity_square_h(phi))


def identity_cell_v(f: EnrichedFunctor) -> Cell:
    return embed_square(identity_square_v(f))


# -- lenses ------------------------------------------------------------------

def _lens_results(l: EnrichedLens, quick: bool):
    f, phi = l.f, l.phi
    A, B = f.source, f.target
    base = A.base
    for a, b in product(A.objects, B.objects):
        if quick:
            arrows = [phi.lift[a, b]] + [f.homap[a, x] for x in phi.fibre(b)]
            yield existence("retraction", (a, b), arrows, base)
            continue
        back = base.compose(phi.lift[a, b], cograph_map(f, a, b))
        yield compare(base, "retraction", (a, b), back, base.identity(B.hom[f(a), b]))


def check_lens(l: EnrichedLens, *, fast=None, fail_fast=False, boundaries=False) -> Report:
    """Lifting then pushing forward is the identity on B(Fa, b), for every (a, b).

    With ``boundaries=True`` the functor and cofunctor laws are included.
    """
    l.validate()
    base = l.source.base
    quick = _use_fast(base, fast)
    report = collect(f"lens {l.name}".strip(), base, _lens_results(l, quick), fail_fast=fail_fast, fast_path=quick)
    if boundaries:
        for sub, kind in ((check_functor(l.f, fast=fast), "functor"), (check_cofunctor(l.phi, fast=fast), "cofunctor")):
            sub.results = [DiagramResult(f"{kind} {r.diagram}", r.indices, r.ok, r.left, r.right, r.note)
                           for r in sub.results]
            report.extend(sub)
    return report


def identity_lens(c) -> EnrichedLens:
    return EnrichedLens(identity_functor(c), identity_cofunctor(c), name=f"1_{c.name}")


def lens_to_square(l: EnrichedLens) -> CompatibleSquare:
    """F along the top, Phi down the left, identities on B elsewhere."""
    B = l.target
    return CompatibleSquare(l.f, identity_functor(B), l.phi, identity_cofunctor(B), name=l.name)


def compose_lenses(l1: EnrichedLens, l2: EnrichedLens) -> EnrichedLens:
    if l1.target != l2.source:
        raise BoundaryError("lenses are not composable: middle categories differ")
    return EnrichedLens(compose_functors(l1.f, l2.f), compose_cofunctors(l1.phi, l2.phi),
                        name=f"{l1.name};{l2.name}")


# -- base-specific predicates ------------------------------------------------

def check_wset_strengthening(l: EnrichedLens) -> Report:
    """Every lift keeps its label exactly, not merely below it."""
    base = l.source.base
    if not isinstance(base, FamBase):
        raise BaseMismatchError(f"weight strengthening needs a Fam base, got {base!r}")
    l.validate()
    A, B = l.source, l.target
    results = []
    for a, b in product(A.objects, B.objects):
        m = l.phi.lift[a, b]
        for j, t in enumerate(m.table):
            src, dst = m.dom.labels[j], m.cod.labels[t]
            note = "" if src == dst else f"weight {src} lifts to {dst}"
            results.append(DiagramResult("weight", (a, b, j), src == dst, note=note))
    return collect(f"weights {l.name}".strip(), base, results)


def check_submetry(phi: EnrichedCofunctor) -> Report:
    """For every (a, b) some x over b has d(a, x) <= d(phi a, b).

    An empty fibre counts as attained only when d(phi a, b) is infinite."""
    A, B = phi.source, phi.target
    base = A.base
    if not isinstance(base, TropicalBase):
        raise BaseMismatchError(f"submetry is a tropical predicate, got {base!r}")
    results = []
    for a, b in product(A.objects, B.objects):
        bound = B.hom[phi(a), b]
        xs = phi.fibre(b)
        # an empty fibre at infinite distance: the infimum inf is attained vacuously
        hit = any(bound >= A.hom[a, x] for x in xs) or (not xs and bound == INF)
        note = "" if hit else f"no point over {b} within {bound} of {a}"
        results.append(DiagramResult("attained", (a, b), hit, note=note))
    return collect(f"submetry {phi.name}".strip(), base, results)
