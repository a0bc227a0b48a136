"""Enriched categories, functors and natural transformations of functors.

Constructors take raw data and never validate laws; ``check_*`` functions
report, diagram by diagram, whether the data satisfies them. Structural
problems (a missing map, a wrong domain) raise ``StructuralError`` instead.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Mapping

from .errors import BoundaryError, StructuralError
from .report import Report, collect, compare, existence
from .vbase import Coproduct, MonoidalBase, copair, coproduct


def fibre(objmap: Mapping, objects, b) -> tuple:
    """The preimage of ``b``, in canonical order."""
    return tuple(sorted(x for x in objects if objmap[x] == b))


def _expect(m, dom, cod, what):
    if m.dom != dom or m.cod != cod:
        raise StructuralError(f"{what}: expected {dom!r} -> {cod!r}, got {m.dom!r} -> {m.cod!r}")


def _get(table, key, what):
    try:
        return table[key]
    except KeyError:
        raise StructuralError(f"missing {what} at {key!r}") from None


def _use_fast(base, fast):
    return base.thin if fast is None else (fast and base.thin)


@dataclass(frozen=True)
class EnrichedCategory:
    base: MonoidalBase
    objects: tuple
    hom: Mapping
    eta: Mapping
    mu: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        for f in ("hom", "eta", "mu"):
            object.__setattr__(self, f, dict(getattr(self, f)))

    @classmethod
    def thin(cls, base, objects, hom, name=""):
        """A category over a thin base: identities and composition are the
        (possibly missing) arrows implied by the hom-objects."""
        objects = tuple(objects)
        hom = dict(hom)
        I = base.unit()
        eta = {x: base.arrow(I, hom[x, x]) for x in objects}
        mu = {
            (x, y, z): base.arrow(base.tensor(hom[x, y], hom[y, z]), hom[x, z])
            for x, y, z in product(objects, repeat=3)
        }
        return cls(base, objects, hom, eta, mu, name)

    @cached_property
    def _sums(self):
        return {}

    def hom_sum(self, a, xs) -> Coproduct:
        """The coproduct of hom(a, x) over ``xs``."""
        key = (a, tuple(xs))
        cache = self._sums
        if key not in cache:
            cache[key] = coproduct(self.base, xs, [self.hom[a, x] for x in xs])
        return cache[key]

    def validate(self):
        base, I = self.base, self.base.unit()
        if len(set(self.objects)) != len(self.objects):
            raise StructuralError("duplicate object names")
        for x, y in product(self.objects, repeat=2):
            base.check_object(_get(self.hom, (x, y), "hom-object"))
        for x in self.objects:
            e = _get(self.eta, x, "identity element")
            base.check_morphism(e)
            _expect(e, I, self.hom[x, x], f"identity element at {x}")
        for x, y, z in product(self.objects, repeat=3):
            m = _get(self.mu, (x, y, z), "composition map")
            base.check_morphism(m)
            _expect(m, base.tensor(self.hom[x, y], self.hom[y, z]), self.hom[x, z],
                    f"composition at {(x, y, z)}")
        return self

    def __repr__(self):
        return f"EnrichedCategory({self.name or '?'}, objects={list(self.objects)}, base={self.base!r})"


@dataclass(frozen=True)
class EnrichedFunctor:
    source: EnrichedCategory
    target: EnrichedCategory
    objmap: Mapping
    homap: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objmap", dict(self.objmap))
        object.__setattr__(self, "homap", dict(self.homap))

    @classmethod
    def thin(cls, source, target, objmap, name=""):
        base = source.base
        hm = {
            (a, b): base.arrow(source.hom[a, b], target.hom[objmap[a], objmap[b]])
            for a, b in product(source.objects, repeat=2)
        }
        return cls(source, target, objmap, hm, name)

    def __call__(self, a):
        return self.objmap[a]

    def validate(self):
        A, B = self.source, self.target
        if A.base != B.base:
            raise BoundaryError("functor between categories over different bases")
        for a in A.objects:
            if _get(self.objmap, a, "object image") not in B.objects:
                raise StructuralError(f"object {a} maps outside the target")
        for a, b in product(A.objects, repeat=2):
            m = _get(self.homap, (a, b), "hom map")
            A.base.check_morphism(m)
            _expect(m, A.hom[a, b], B.hom[self(a), self(b)], f"hom map at {(a, b)}")
        return self

    def fibre(self, b):
        return fibre(self.objmap, self.source.objects, b)

    def __repr__(self):
        return f"EnrichedFunctor({self.name or '?'}: {self.source.name} -> {self.target.name})"


@dataclass(frozen=True)
class FunctorTransformation:
    f: EnrichedFunctor
    g: EnrichedFunctor
    components: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", dict(self.components))

    @classmethod
    def thin(cls, f, g, name=""):
        base, B = f.source.base, f.target
        comps = {a: base.arrow(base.unit(), B.hom[f(a), g(a)]) for a in f.source.objects}
        return cls(f, g, comps, name)

    def validate(self):
        f, g = self.f, self.g
        if f.source != g.source or f.target != g.target:
            raise BoundaryError("transformation between functors with different boundaries")
        base, B = f.source.base, f.target
        for a in f.source.objects:
            c = _get(self.components, a, "component")
            base.check_morphism(c)
            _expect(c, base.unit(), B.hom[f(a), g(a)], f"component at {a}")
        return self


def identity_functor(c: EnrichedCategory) -> EnrichedFunctor:
    base = c.base
    return EnrichedFunctor(
        c, c, {x: x for x in c.objects},
        {(x, y): base.identity(c.hom[x, y]) for x, y in product(c.objects, repeat=2)},
        name=f"1_{c.name}",
    )


def identity_transformation(f: EnrichedFunctor) -> FunctorTransformation:
    return FunctorTransformation(f, f, {a: f.target.eta[f(a)] for a in f.source.objects})


# -- checkers ----------------------------------------------------------------

def _category_diagrams(c):
    base, objs = c.base, c.objects
    hom, eta, mu = c.hom, c.eta, c.mu
    for x, y in product(objs, repeat=2):
        ident = base.identity(hom[x, y])
        left = base.compose(base.tensor_mor(eta[x], ident), mu[x, x, y])
        yield compare(base, "left unit", (x, y), left, ident)
        right = base.compose(base.tensor_mor(ident, eta[y]), mu[x, y, y])
        yield compare(base, "right unit", (x, y), right, ident)
    for w, x, y, z in product(objs, repeat=4):
        left = base.compose(base.tensor_mor(mu[w, x, y], base.identity(hom[y, z])), mu[w, y, z])
        right = base.compose(base.tensor_mor(base.identity(hom[w, x]), mu[x, y, z]), mu[w, x, z])
        yield compare(base, "associativity", (w, x, y, z), left, right)


def _category_fast(c):
    base, objs, eta, mu = c.base, c.objects, c.eta, c.mu
    for x, y in product(objs, repeat=2):
        yield existence("left unit", (x, y), [eta[x], mu[x, x, y]], base)
        yield existence("right unit", (x, y), [eta[y], mu[x, y, y]], base)
    for w, x, y, z in product(objs, repeat=4):
        yield existence("associativity", (w, x, y, z),
                        [mu[w, x, y], mu[w, y, z], mu[x, y, z], mu[w, x, z]], base)


def check_category(c: EnrichedCategory, *, fast=None, fail_fast=False) -> Report:
    """Unit and associativity diagrams for every pair and quadruple of objects.

    Over a thin base the default is the existence-only fast path; pass
    ``fast=False`` to compose both paths regardless.
    """
    c.validate()
    quick = _use_fast(c.base, fast)
    diagrams = _category_fast(c) if quick else _category_diagrams(c)
    return collect(f"category {c.name}".strip(), c.base, diagrams, fail_fast=fail_fast, fast_path=quick)


def _check_boundary_categories(*cats):
    bases = {c.base for c in cats}
    if len(bases) != 1:
        raise BoundaryError("structures over different bases")


def _functor_diagrams(f):
    A, B = f.source, f.target
    base, F, Fh = A.base, f.objmap, f.homap
    for a in A.objects:
        yield compare(base, "identity", (a,), base.compose(A.eta[a], Fh[a, a]), B.eta[F[a]])
    for a, a1, a2 in product(A.objects, repeat=3):
        left = base.compose(A.mu[a, a1, a2], Fh[a, a2])
        right = base.compose(base.tensor_mor(Fh[a, a1], Fh[a1, a2]), B.mu[F[a], F[a1], F[a2]])
        yield compare(base, "composition", (a, a1, a2), left, right)


def _functor_fast(f):
    A, B = f.source, f.target
    base, F, Fh = A.base, f.objmap, f.homap
    for a in A.objects:
        yield existence("identity", (a,), [A.eta[a], Fh[a, a], B.eta[F[a]]], base)
    for a, a1, a2 in product(A.objects, repeat=3):
        yield existence("composition", (a, a1, a2),
                        [A.mu[a, a1, a2], Fh[a, a2], Fh[a, a1], Fh[a1, a2], B.mu[F[a], F[a1], F[a2]]], base)


def check_functor(f: EnrichedFunctor, *, fast=None, fail_fast=False) -> Report:
    _check_boundary_categories(f.source, f.target)
    f.validate()
    quick = _use_fast(f.source.base, fast)
    diagrams = _functor_fast(f) if quick else _functor_diagrams(f)
    return collect(f"functor {f.name}".strip(), f.source.base, diagrams, fail_fast=fail_fast, fast_path=quick)


def _transformation_diagrams(t):
    f, g = t.f, t.g
    A, B = f.source, f.target
    base, tau = A.base, t.components
    for a, a1 in product(A.objects, repeat=2):
        left = base.compose(base.tensor_mor(tau[a], g.homap[a, a1]), B.mu[f(a), g(a), g(a1)])
        right = base.compose(base.tensor_mor(f.homap[a, a1], tau[a1]), B.mu[f(a), f(a1), g(a1)])
        yield compare(base, "naturality", (a, a1), left, right)


def _transformation_fast(t):
    f, g = t.f, t.g
    A, B = f.source, f.target
    tau = t.components
    for a, a1 in product(A.objects, repeat=2):
        yield existence("naturality", (a, a1),
                        [tau[a], g.homap[a, a1], B.mu[f(a), g(a), g(a1)],
                         f.homap[a, a1], tau[a1], B.mu[f(a), f(a1), g(a1)]], A.base)


def check_functor_transformation(t: FunctorTransformation, *, fast=None, fail_fast=False) -> Report:
    t.validate()
    t.f.validate()
    t.g.validate()
    quick = _use_fast(t.f.source.base, fast)
    diagrams = _transformation_fast(t) if quick else _transformation_diagrams(t)
    return collect(f"transformation {t.name}".strip(), t.f.source.base, diagrams,
                   fail_fast=fail_fast, fast_path=quick)


# -- composites --------------------------------------------------------------

def compose_functors(f: EnrichedFunctor, g: EnrichedFunctor) -> EnrichedFunctor:
    """f followed by g."""
    if f.target != g.source:
        raise BoundaryError(f"cannot compose {f!r} with {g!r}: target and source differ")
    base, A = f.source.base, f.source
    objmap = {a: g(f(a)) for a in A.objects}
    homap = {
        (a, b): base.compose(f.homap[a, b], g.homap[f(a), f(b)])
        for a, b in product(A.objects, repeat=2)
    }
    return EnrichedFunctor(A, g.target, objmap, homap, name=f"{f.name};{g.name}")


def cograph_map(f: EnrichedFunctor, a, b):
    """[F_{a,x}] : sum over x in F^-1{b} of A(a, x)  ->  B(Fa, b)."""
    A = f.source
    xs = f.fibre(b)
    cop = A.hom_sum(a, xs)
    return copair(cop, [f.homap[a, x] for x in xs], f.target.hom[f(a), b])


def vcompose_functor_transformations(t: FunctorTransformation, s: FunctorTransformation) -> FunctorTransformation:
    """t : F => G then s : G => H, giving F => H."""
    if t.g != s.f:
        raise BoundaryError("middle functors differ")
    base, B = t.f.source.base, t.f.target
    f, g, h = t.f, t.g, s.g
    comps = {
        a: base.compose(base.tensor_mor(t.components[a], s.components[a]), B.mu[f(a), g(a), h(a)])
        for a in f.source.objects
    }
    return FunctorTransformation(f, h, comps)


def hcompose_functor_transformations(t: FunctorTransformation, s: FunctorTransformation) -> FunctorTransformation:
    """t : F => G : A -> B beside s : H => K : B -> C, giving HF => KG."""
    if t.f.target != s.f.source:
        raise BoundaryError("transformations are not horizontally composable")
    base, C = t.f.source.base, s.f.target
    f, g, h, k = t.f, t.g, s.f, s.g
    comps = {}
    for a in f.source.objects:
        first = base.compose(t.components[a], h.homap[f(a), g(a)])
        comps[a] = base.compose(base.tensor_mor(first, s.components[g(a)]), C.mu[h(f(a)), h(g(a)), k(g(a))])
    return FunctorTransformation(compose_functors(f, h), compose_functors(g, k), comps)
