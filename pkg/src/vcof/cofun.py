"""Enriched cofunctors and their natural transformations.

A cofunctor A -/-> B has an object map and, for each a in A and b in B, a
lifting map B(Phi a, b) -> sum over x in Phi^-1{b} of A(a, x). All sums are
canonical coproducts, so composition of cofunctors is strictly associative
as data.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Mapping

from .encat import EnrichedCategory, _check_boundary_categories, _expect, _get, _use_fast, fibre
from .errors import BoundaryError, StructuralError
from .report import Report, collect, compare, existence
from .vbase import Coproduct, copair, coproduct, distribute_right, distribute_sums, flatten, sum_map


@dataclass(frozen=True)
class EnrichedCofunctor:
    source: EnrichedCategory
    target: EnrichedCategory
    objmap: Mapping
    lift: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objmap", dict(self.objmap))
        object.__setattr__(self, "lift", dict(self.lift))

    @classmethod
    def thin(cls, source, target, objmap, name=""):
        base = source.base
        self = cls(source, target, objmap, {}, name)
        lift = {
            (a, b): base.arrow(target.hom[objmap[a], b], self.fibre_sum(a, b).total)
            for a, b in product(source.objects, target.objects)
        }
        return cls(source, target, objmap, lift, name)

    def __call__(self, a):
        return self.objmap[a]

    @cached_property
    def _fibres(self):
        return {b: fibre(self.objmap, self.source.objects, b) for b in self.target.objects}

    def fibre(self, b) -> tuple:
        return self._fibres[b]

    def fibre_sum(self, a, b) -> Coproduct:
        """Codomain of the lifting map at (a, b)."""
        return self.source.hom_sum(a, self.fibre(b))

    def validate(self):
        A, B = self.source, self.target
        if A.base != B.base:
            raise BoundaryError("cofunctor between categories over different bases")
        for a in A.objects:
            if _get(self.objmap, a, "object image") not in B.objects:
                raise StructuralError(f"object {a} maps outside the target")
        for a, b in product(A.objects, B.objects):
            m = _get(self.lift, (a, b), "lifting map")
            A.base.check_morphism(m)
            _expect(m, B.hom[self(a), b], self.fibre_sum(a, b).total, f"lifting map at {(a, b)}")
        return self

    def __repr__(self):
        return f"EnrichedCofunctor({self.name or '?'}: {self.source.name} -/-> {self.target.name})"


@dataclass(frozen=True)
class CofunctorTransformation:
    phi: EnrichedCofunctor
    psi: EnrichedCofunctor
    components: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", dict(self.components))

    @classmethod
    def thin(cls, phi, psi, name=""):
        base = phi.source.base
        comps = {a: base.arrow(base.unit(), psi.fibre_sum(a, phi(a)).total) for a in phi.source.objects}
        return cls(phi, psi, comps, name)

    def component_sum(self, a) -> Coproduct:
        return self.psi.fibre_sum(a, self.phi(a))

    def validate(self):
        phi, psi = self.phi, self.psi
        if phi.source != psi.source or phi.target != psi.target:
            raise BoundaryError("transformation between cofunctors with different boundaries")
        base = phi.source.base
        for a in phi.source.objects:
            c = _get(self.components, a, "component")
            base.check_morphism(c)
            _expect(c, base.unit(), self.component_sum(a).total, f"component at {a}")
        return self


def identity_cofunctor(c: EnrichedCategory) -> EnrichedCofunctor:
    base = c.base
    lift = {(a, b): base.identity(c.hom[a, b]) for a, b in product(c.objects, repeat=2)}
    return EnrichedCofunctor(c, c, {x: x for x in c.objects}, lift, name=f"1_{c.name}")


def identity_cofunctor_transformation(phi: EnrichedCofunctor) -> CofunctorTransformation:
    A = phi.source
    comps = {a: A.base.compose(A.eta[a], phi.fibre_sum(a, phi(a)).injection(a)) for a in A.objects}
    return CofunctorTransformation(phi, phi, comps)


# -- shared path pieces ------------------------------------------------------

def _gather(C: EnrichedCategory, flat: Coproduct, target: Coproduct, mu_at):
    """sum over (z, x) of C(c, m_x) x C(m_x, z)  ->  sum over z of C(c, z), by [mu]."""
    base = C.base
    legs = [base.compose(mu_at(x, z), target.injection(z)) for z, x in flat.labels]
    return copair(flat, legs, target.total)


def spread_then_gather(C, c, cop, right_obj, legs, inners, zs, firsts=None, mids=None):
    """The recurring tail of every composite diagram:

        (sum_x S_x) x R  ->  sum_x S_x x R  ->  sum_x C(c, m_x) x (sum_z C(m_x, z))
                         ->  sum_(z,x) C(c, m_x) x C(m_x, z)  ->  sum_z C(c, z)

    with ``firsts[x] : S_x -> C(c, m_x)`` (default identity, m_x = x) and
    ``legs[x] : R -> inners[x].total``.
    """
    base = C.base
    xs = cop.labels
    if mids is None:
        mids = {x: x for x in xs}
    if firsts is None:
        firsts = {x: base.identity(C.hom[c, x]) for x in xs}
    spread = coproduct(base, xs, [base.tensor(s, right_obj) for s in cop.summands])
    outer, flat, iso = distribute_sums(base, xs, {x: C.hom[c, mids[x]] for x in xs}, inners)
    step = sum_map(spread, outer, {x: base.tensor_mor(firsts[x], legs[x]) for x in xs})
    gather = _gather(C, flat, C.hom_sum(c, zs), lambda x, z: C.mu[c, mids[x], z])
    return base.compose(distribute_right(cop, right_obj), step, iso, gather)


# -- checkers ----------------------------------------------------------------

def _cofunctor_diagrams(p):
    A, B = p.source, p.target
    base = A.base
    for a in A.objects:
        pa = p(a)
        left = base.compose(B.eta[pa], p.lift[a, pa])
        right = base.compose(A.eta[a], p.fibre_sum(a, pa).injection(a))
        yield compare(base, "identity", (a,), left, right)
    for a, b, b2 in product(A.objects, B.objects, B.objects):
        pa = p(a)
        left = base.compose(B.mu[pa, b, b2], p.lift[a, b2])
        hbb = B.hom[b, b2]
        xs = p.fibre(b)
        first = base.tensor_mor(p.lift[a, b], base.identity(hbb))
        rest = spread_then_gather(
            A, a, p.fibre_sum(a, b), hbb,
            {x: p.lift[x, b2] for x in xs}, {x: p.fibre_sum(x, b2) for x in xs}, p.fibre(b2),
        )
        yield compare(base, "composition", (a, b, b2), left, base.compose(first, rest))


def _cofunctor_fast(p):
    A, B = p.source, p.target
    base = A.base
    for a in A.objects:
        yield existence("identity", (a,), [B.eta[p(a)], p.lift[a, p(a)], A.eta[a]], base)
    for a, b, b2 in product(A.objects, B.objects, B.objects):
        xs, ys = p.fibre(b), p.fibre(b2)
        arrows = [B.mu[p(a), b, b2], p.lift[a, b2], p.lift[a, b]]
        arrows += [p.lift[x, b2] for x in xs]
        arrows += [A.mu[a, x, y] for x in xs for y in ys]
        yield existence("composition", (a, b, b2), arrows, base)


def check_cofunctor(p: EnrichedCofunctor, *, fast=None, fail_fast=False) -> Report:
    """Identity square per object and the composite diagram per (a, b, b')."""
    _check_boundary_categories(p.source, p.target)
    p.validate()
    quick = _use_fast(p.source.base, fast)
    diagrams = _cofunctor_fast(p) if quick else _cofunctor_diagrams(p)
    return collect(f"cofunctor {p.name}".strip(), p.source.base, diagrams, fail_fast=fail_fast, fast_path=quick)


def _cotransformation_diagrams(t):
    phi, psi, tau = t.phi, t.psi, t.components
    A, B = phi.source, phi.target
    base, I = A.base, A.base.unit()
    for a, b in product(A.objects, B.objects):
        hb = B.hom[phi(a), b]
        xs, ys, zs = psi.fibre(phi(a)), phi.fibre(b), psi.fibre(b)
        left = base.compose(
            base.tensor_mor(tau[a], base.identity(hb)),
            spread_then_gather(A, a, t.component_sum(a), hb,
                                {x: psi.lift[x, b] for x in xs}, {x: psi.fibre_sum(x, b) for x in xs}, zs),
        )
        right = base.compose(
            base.tensor_mor(phi.lift[a, b], base.identity(I)),
            spread_then_gather(A, a, phi.fibre_sum(a, b), I,
                                {y: tau[y] for y in ys}, {y: psi.fibre_sum(y, b) for y in ys}, zs),
        )
        yield compare(base, "naturality", (a, b), left, right)


def _cotransformation_fast(t):
    phi, psi, tau = t.phi, t.psi, t.components
    A, B = phi.source, phi.target
    for a, b in product(A.objects, B.objects):
        xs, ys, zs = psi.fibre(phi(a)), phi.fibre(b), psi.fibre(b)
        arrows = [tau[a], phi.lift[a, b]]
        arrows += [psi.lift[x, b] for x in xs] + [A.mu[a, x, z] for x in xs for z in zs]
        arrows += [tau[y] for y in ys] + [A.mu[a, y, z] for y in ys for z in zs]
        yield existence("naturality", (a, b), arrows, A.base)


def check_cofunctor_transformation(t: CofunctorTransformation, *, fast=None, fail_fast=False) -> Report:
    t.validate()
    t.phi.validate()
    t.psi.validate()
    quick = _use_fast(t.phi.source.base, fast)
    diagrams = _cotransformation_fast(t) if quick else _cotransformation_diagrams(t)
    return collect(f"transformation {t.name}".strip(), t.phi.source.base, diagrams,
                   fail_fast=fail_fast, fast_path=quick)


# -- composites --------------------------------------------------------------

def _pushforward(lower: EnrichedCofunctor, d, src: Coproduct):
    """sum_x A(Ud, x) -> sum_x sum_{y in U^-1 x} D(d, y) -> sum_z D(d, z)
    for ``lower = U : D -/-> A`` and ``src`` a sum of homs out of U(d)."""
    base = lower.source.base
    xs = src.labels
    inners = {x: lower.fibre_sum(d, x) for x in xs}
    outer = coproduct(base, xs, [inners[x].total for x in xs])
    step = sum_map(src, outer, {x: lower.lift[d, x] for x in xs})
    flat, iso = flatten(outer, inners)
    return base.compose(step, iso), flat


def compose_cofunctors(p: EnrichedCofunctor, q: EnrichedCofunctor) -> EnrichedCofunctor:
    """p : A -/-> B followed by q : B -/-> C."""
    if p.target != q.source:
        raise BoundaryError(f"cannot compose {p!r} with {q!r}: target and source differ")
    A, C = p.source, q.target
    base = A.base
    objmap = {a: q(p(a)) for a in A.objects}
    lift = {}
    for a, c in product(A.objects, C.objects):
        push, _ = _pushforward(p, a, q.fibre_sum(p(a), c))
        lift[a, c] = base.compose(q.lift[p(a), c], push)
    return EnrichedCofunctor(A, C, objmap, lift, name=f"{p.name};{q.name}")


def whisker_left(u: EnrichedCofunctor, t: CofunctorTransformation) -> CofunctorTransformation:
    """U : D -/-> A before t : Phi => Psi : A -/-> B."""
    if u.target != t.phi.source:
        raise BoundaryError("whiskering cofunctor does not land in the transformation's source")
    base = u.source.base
    comps = {}
    for d in u.source.objects:
        push, _ = _pushforward(u, d, t.component_sum(u(d)))
        comps[d] = base.compose(t.components[u(d)], push)
    return CofunctorTransformation(compose_cofunctors(u, t.phi), compose_cofunctors(u, t.psi), comps)


def whisker_right(t: CofunctorTransformation, o: EnrichedCofunctor) -> CofunctorTransformation:
    """t : Phi => Psi : A -/-> B before O : B -/-> C."""
    if t.phi.target != o.source:
        raise BoundaryError("whiskering cofunctor does not start at the transformation's target")
    A = t.phi.source
    base = A.base
    comps = {}
    for a in A.objects:
        src = t.component_sum(a)
        ys = tuple(sorted(x for x in A.objects if o(t.psi(x)) == o(t.phi(a))))
        dst = A.hom_sum(a, ys)
        comps[a] = base.compose(t.components[a], copair(src, [dst.injection(x) for x in src.labels], dst.total))
    return CofunctorTransformation(compose_cofunctors(t.phi, o), compose_cofunctors(t.psi, o), comps)


def vcompose_cofunctor_transformations(t: CofunctorTransformation, s: CofunctorTransformation) -> CofunctorTransformation:
    """t : Phi => Psi then s : Psi => Upsilon."""
    if t.psi != s.phi:
        raise BoundaryError("middle cofunctors differ")
    phi, ups = t.phi, s.psi
    A = phi.source
    base, I = A.base, A.base.unit()
    comps = {}
    for a in A.objects:
        src = t.component_sum(a)
        xs = src.labels
        rest = spread_then_gather(A, a, src, I, {x: s.components[x] for x in xs},
                                   {x: ups.fibre_sum(x, phi(a)) for x in xs}, ups.fibre(phi(a)))
        comps[a] = base.compose(t.components[a], rest)
    return CofunctorTransformation(phi, ups, comps)
