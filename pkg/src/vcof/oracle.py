"""Ordinary finite categories, cofunctors and delta lenses, checked directly.

Nothing here goes through the enriched machinery except ``to_enriched`` and
``from_enriched``; the checks are literal table lookups, so they serve as
ground truth for the generic checkers over FinSet.

Arrows are named by strings that are unique across the whole category.
Composition is diagrammatic: ``comp[u, v]`` is u followed by v.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Mapping

from .bases.fam import FamBase, make_wset
from .bases.finset import FinSetBase, make_finset
from .bases.tropical import INF, TropicalBase, make_tropical, value
from .cofun import EnrichedCofunctor
from .doublecat import EnrichedLens
from .encat import EnrichedCategory, EnrichedFunctor
from .errors import BaseMismatchError, EnumerationBoundError, StructuralError

DEFAULT_BOUND = 10**7


def enumeration_bound(bound=None) -> int:
    """Explicit bound, else $VCOF_MAX_ENUM, else 10^7."""
    if bound is not None:
        return int(bound)
    env = os.environ.get("VCOF_MAX_ENUM")
    return int(env) if env else DEFAULT_BOUND


@dataclass(frozen=True)
class OrdinaryCategory:
    objects: tuple
    homs: Mapping
    identity: Mapping
    comp: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "homs", {k: tuple(v) for k, v in self.homs.items()})
        object.__setattr__(self, "identity", dict(self.identity))
        object.__setattr__(self, "comp", dict(self.comp))
        ends = {}
        for x, y in product(self.objects, repeat=2):
            for u in self.homs.get((x, y), ()):
                if u in ends:
                    raise StructuralError(f"arrow name {u!r} used twice")
                ends[u] = (x, y)
        object.__setattr__(self, "_ends", ends)

    @classmethod
    def generate(cls, objects, arrows: Mapping, comp: Mapping = (), name=""):
        """Build from non-identity arrows ``{name: (dom, cod)}`` and their
        composites ``{(u, v): w}``; identities ``1_x`` are added."""
        objects = tuple(objects)
        homs = {(x, y): [] for x, y in product(objects, repeat=2)}
        ident = {x: f"1_{x}" for x in objects}
        for x in objects:
            homs[x, x].append(ident[x])
        for u, (x, y) in arrows.items():
            homs[x, y].append(u)
        table = dict(comp)
        for u, (x, y) in list(arrows.items()) + [(ident[x], (x, x)) for x in objects]:
            table[ident[x], u] = u
            table[u, ident[y]] = u
        return cls(objects, homs, ident, table, name)

    def hom(self, x, y) -> tuple:
        return self.homs.get((x, y), ())

    def dom(self, u):
        return self._ends[u][0]

    def cod(self, u):
        return self._ends[u][1]

    @property
    def arrows(self) -> tuple:
        return tuple(self._ends)

    def __repr__(self):
        return f"OrdinaryCategory({self.name or '?'}, {len(self.objects)} objects, {len(self._ends)} arrows)"


@dataclass(frozen=True)
class OrdinaryFunctor:
    source: OrdinaryCategory
    target: OrdinaryCategory
    objmap: Mapping
    arrowmap: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objmap", dict(self.objmap))
        object.__setattr__(self, "arrowmap", dict(self.arrowmap))


@dataclass(frozen=True)
class OrdinaryCofunctor:
    """``lift[a, u]`` for u : Phi a -> b is an arrow out of a over b."""

    source: OrdinaryCategory
    target: OrdinaryCategory
    objmap: Mapping
    lift: Mapping
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "objmap", dict(self.objmap))
        object.__setattr__(self, "lift", dict(self.lift))


@dataclass(frozen=True)
class OrdinaryLens:
    functor: OrdinaryFunctor
    cofunctor: OrdinaryCofunctor
    name: str = field(default="", compare=False)


# -- standard small categories -----------------------------------------------

def terminal_category() -> OrdinaryCategory:
    return OrdinaryCategory.generate(["*"], {}, name="1")


def walking_arrow() -> OrdinaryCategory:
    return OrdinaryCategory.generate(["0", "1"], {"u": ("0", "1")}, name="2")


def commutative_square() -> OrdinaryCategory:
    """a -f-> b -h-> d and a -g-> c -k-> d with f;h = g;k = s."""
    arrows = {"f": ("a", "b"), "g": ("a", "c"), "h": ("b", "d"), "k": ("c", "d"), "s": ("a", "d")}
    return OrdinaryCategory.generate("abcd", arrows, {("f", "h"): "s", ("g", "k"): "s"}, name="square")


def discrete_category(objects) -> OrdinaryCategory:
    return OrdinaryCategory.generate(objects, {}, name="discrete")


def identity_ordinary_functor(c: OrdinaryCategory) -> OrdinaryFunctor:
    return OrdinaryFunctor(c, c, {x: x for x in c.objects}, {u: u for u in c.arrows})


def identity_ordinary_cofunctor(c: OrdinaryCategory) -> OrdinaryCofunctor:
    return OrdinaryCofunctor(c, c, {x: x for x in c.objects},
                             {(c.dom(u), u): u for u in c.arrows})


# -- direct checks -----------------------------------------------------------

def _lookup(table, key, what):
    try:
        return table[key]
    except KeyError:
        raise StructuralError(f"dangling {what} at {key!r}") from None


def direct_check_category(c: OrdinaryCategory) -> bool:
    for x in c.objects:
        if c.identity.get(x) not in c.hom(x, x):
            raise StructuralError(f"identity at {x!r} is not an endo-arrow")
    for u, v in product(c.arrows, repeat=2):
        if c.cod(u) != c.dom(v):
            continue
        w = _lookup(c.comp, (u, v), "composite")
        if w not in c.hom(c.dom(u), c.cod(v)):
            return False
    for u in c.arrows:
        x, y = c.dom(u), c.cod(u)
        if c.comp[c.identity[x], u] != u or c.comp[u, c.identity[y]] != u:
            return False
    for u, v, w in product(c.arrows, repeat=3):
        if c.cod(u) == c.dom(v) and c.cod(v) == c.dom(w):
            if c.comp[c.comp[u, v], w] != c.comp[u, c.comp[v, w]]:
                return False
    return True


def _functor_typed(f: OrdinaryFunctor):
    A, B = f.source, f.target
    for a in A.objects:
        if _lookup(f.objmap, a, "object image") not in B.objects:
            raise StructuralError(f"object {a!r} maps outside the target")
    for u in A.arrows:
        v = _lookup(f.arrowmap, u, "arrow image")
        if v not in B.hom(f.objmap[A.dom(u)], f.objmap[A.cod(u)]):
            raise StructuralError(f"arrow {u!r} maps to {v!r}, which has the wrong ends")


def direct_check_functor(f: OrdinaryFunctor) -> bool:
    _functor_typed(f)
    A, B, F = f.source, f.target, f.arrowmap
    if any(F[A.identity[a]] != B.identity[f.objmap[a]] for a in A.objects):
        return False
    return all(
        F[A.comp[u, v]] == B.comp[F[u], F[v]]
        for u, v in product(A.arrows, repeat=2) if A.cod(u) == A.dom(v)
    )


def _cofunctor_typed(p: OrdinaryCofunctor):
    A, B = p.source, p.target
    for a in A.objects:
        if _lookup(p.objmap, a, "object image") not in B.objects:
            raise StructuralError(f"object {a!r} maps outside the target")
    for a in A.objects:
        for b in B.objects:
            for u in B.hom(p.objmap[a], b):
                w = _lookup(p.lift, (a, u), "lift")
                if w not in A._ends or A.dom(w) != a or p.objmap[A.cod(w)] != b:
                    raise StructuralError(f"lift of {u!r} at {a!r} is {w!r}, which is not over {b!r}")


def direct_check_cofunctor(p: OrdinaryCofunctor) -> bool:
    """Identities lift to identities; the lift of u;v is the lift of u
    followed by the lift of v at the codomain of the first lift."""
    _cofunctor_typed(p)
    A, B, L = p.source, p.target, p.lift
    for a in A.objects:
        if L[a, B.identity[p.objmap[a]]] != A.identity[a]:
            return False
    for a in A.objects:
        for u in B.arrows:
            if B.dom(u) != p.objmap[a]:
                continue
            first = L[a, u]
            for v in B.arrows:
                if B.dom(v) == B.cod(u) and L[a, B.comp[u, v]] != A.comp[first, L[A.cod(first), v]]:
                    return False
    return True


def direct_check_lens(l: OrdinaryLens) -> bool:
    f, p = l.functor, l.cofunctor
    if f.objmap != p.objmap:
        raise StructuralError("functor and cofunctor disagree on objects")
    if not (direct_check_functor(f) and direct_check_cofunctor(p)):
        return False
    return all(f.arrowmap[w] == u for (a, u), w in p.lift.items())


def compose_ordinary_cofunctors(p: OrdinaryCofunctor, q: OrdinaryCofunctor) -> OrdinaryCofunctor:
    """Lift along q first, then along p."""
    A = p.source
    objmap = {a: q.objmap[p.objmap[a]] for a in A.objects}
    lift = {}
    for (b, u), w in q.lift.items():
        for a in A.objects:
            if p.objmap[a] == b:
                lift[a, u] = p.lift[a, w]
    return OrdinaryCofunctor(A, q.target, objmap, lift)


# -- enumeration -------------------------------------------------------------

def _objmaps(A, B):
    for images in product(B.objects, repeat=len(A.objects)):
        yield dict(zip(A.objects, images))


def _lift_slots(A, B, objmap):
    """(key, choices) for every entry of a lift table with this object map."""
    slots = []
    for a in A.objects:
        for b in B.objects:
            over = [w for x in A.objects if objmap[x] == b for w in A.hom(a, x)]
            for u in B.hom(objmap[a], b):
                slots.append(((a, u), over))
    return slots


def _arrow_slots(A, B, objmap):
    return [(u, list(B.hom(objmap[A.dom(u)], objmap[A.cod(u)]))) for u in A.arrows]


def _space(slots) -> int:
    return math.prod(len(c) for _, c in slots)


def _tables(slots) -> Iterator[dict]:
    keys = [k for k, _ in slots]
    for choice in product(*(c for _, c in slots)):
        yield dict(zip(keys, choice))


def _guard(size, bound):
    bound = enumeration_bound(bound)
    if size > bound:
        raise EnumerationBoundError(size, bound)


def cofunctor_space(A, B) -> int:
    return sum(_space(_lift_slots(A, B, m)) for m in _objmaps(A, B))


def functor_space(A, B) -> int:
    return sum(_space(_arrow_slots(A, B, m)) for m in _objmaps(A, B))


def lens_space(A, B) -> int:
    return sum(_space(_lift_slots(A, B, m)) * _space(_arrow_slots(A, B, m)) for m in _objmaps(A, B))


def candidate_cofunctors(A, B, bound=None) -> Iterator[OrdinaryCofunctor]:
    """Every well-typed object map and lift table, lawful or not."""
    _guard(cofunctor_space(A, B), bound)
    for m in _objmaps(A, B):
        for lift in _tables(_lift_slots(A, B, m)):
            yield OrdinaryCofunctor(A, B, m, lift)


def candidate_functors(A, B, bound=None, objmap=None) -> Iterator[OrdinaryFunctor]:
    maps = [objmap] if objmap is not None else None
    if maps is None:
        _guard(functor_space(A, B), bound)
        maps = _objmaps(A, B)
    for m in maps:
        for arrows in _tables(_arrow_slots(A, B, m)):
            yield OrdinaryFunctor(A, B, m, arrows)


def candidate_lenses(A, B, bound=None) -> Iterator[OrdinaryLens]:
    """Every pair of a candidate functor and candidate cofunctor with one object map."""
    _guard(lens_space(A, B), bound)
    for m in _objmaps(A, B):
        lifts = list(_tables(_lift_slots(A, B, m)))
        for f in candidate_functors(A, B, objmap=m):
            for lift in lifts:
                yield OrdinaryLens(f, OrdinaryCofunctor(A, B, m, lift))


def enumerate_functors(A, B, bound=None) -> list:
    return [f for f in candidate_functors(A, B, bound) if direct_check_functor(f)]


def enumerate_cofunctors(A, B, bound=None) -> list:
    return [p for p in candidate_cofunctors(A, B, bound) if direct_check_cofunctor(p)]


def enumerate_lenses(A, B, bound=None) -> list:
    _guard(lens_space(A, B), bound)
    out = []
    for m in _objmaps(A, B):
        cofs = [p for p in (OrdinaryCofunctor(A, B, m, t) for t in _tables(_lift_slots(A, B, m)))
                if direct_check_cofunctor(p)]
        if not cofs:
            continue
        for f in candidate_functors(A, B, objmap=m):
            if not direct_check_functor(f):
                continue
            out += [OrdinaryLens(f, p) for p in cofs if direct_check_lens(OrdinaryLens(f, p))]
    return out


# -- translation to and from FinSet-enriched structures ----------------------

_FINSET = make_finset()


def _position(table, w):
    return table.index(w)


def category_to_enriched(c: OrdinaryCategory, base=None) -> EnrichedCategory:
    base = base or _FINSET
    objs = c.objects
    hom = {(x, y): base.obj(len(c.hom(x, y)), c.hom(x, y)) for x, y in product(objs, repeat=2)}
    one = base.unit()
    eta = {x: base.mor(one, hom[x, x], [_position(c.hom(x, x), c.identity[x])]) for x in objs}
    mu = {}
    for x, y, z in product(objs, repeat=3):
        hxz = c.hom(x, z)
        table = [_position(hxz, _lookup(c.comp, (u, v), "composite"))
                 for u in c.hom(x, y) for v in c.hom(y, z)]
        mu[x, y, z] = base.mor(base.tensor(hom[x, y], hom[y, z]), hom[x, z], table)
    return EnrichedCategory(base, objs, hom, eta, mu, name=c.name)


def functor_to_enriched(f: OrdinaryFunctor, source=None, target=None) -> EnrichedFunctor:
    A, B = f.source, f.target
    EA = source or category_to_enriched(A)
    EB = target or category_to_enriched(B)
    base, F = EA.base, f.objmap
    homap = {
        (x, y): base.mor(EA.hom[x, y], EB.hom[F[x], F[y]],
                         [_position(B.hom(F[x], F[y]), f.arrowmap[u]) for u in A.hom(x, y)])
        for x, y in product(A.objects, repeat=2)
    }
    return EnrichedFunctor(EA, EB, F, homap, name=f.name)


def cofunctor_to_enriched(p: OrdinaryCofunctor, source=None, target=None) -> EnrichedCofunctor:
    A, B = p.source, p.target
    EA = source or category_to_enriched(A)
    EB = target or category_to_enriched(B)
    base = EA.base
    shell = EnrichedCofunctor(EA, EB, p.objmap, {})
    lift = {}
    for a, b in product(A.objects, B.objects):
        cop = shell.fibre_sum(a, b)
        flat = [w for x in cop.labels for w in A.hom(a, x)]
        table = [_position(flat, _lookup(p.lift, (a, u), "lift")) for u in B.hom(p.objmap[a], b)]
        lift[a, b] = base.mor(EB.hom[p.objmap[a], b], cop.total, table)
    return EnrichedCofunctor(EA, EB, p.objmap, lift, name=p.name)


def lens_to_enriched(l: OrdinaryLens, source=None, target=None) -> EnrichedLens:
    EA = source or category_to_enriched(l.functor.source)
    EB = target or category_to_enriched(l.functor.target)
    return EnrichedLens(functor_to_enriched(l.functor, EA, EB), cofunctor_to_enriched(l.cofunctor, EA, EB),
                        name=l.name)


def to_enriched(x, source=None, target=None):
    if isinstance(x, OrdinaryCategory):
        return category_to_enriched(x)
    if isinstance(x, OrdinaryFunctor):
        return functor_to_enriched(x, source, target)
    if isinstance(x, OrdinaryCofunctor):
        return cofunctor_to_enriched(x, source, target)
    if isinstance(x, OrdinaryLens):
        return lens_to_enriched(x, source, target)
    raise TypeError(f"no enriched counterpart for {type(x).__name__}")


def _arrow_names(c: EnrichedCategory, x, y):
    h = c.hom[x, y]
    return tuple(h.names) if h.names is not None else tuple(f"{x}->{y}#{i}" for i in range(h.size))


def _require_finset(c):
    if not isinstance(c.base, FinSetBase):
        raise BaseMismatchError(f"only FinSet-enriched structures are ordinary, got {c.base!r}")


def category_from_enriched(c: EnrichedCategory) -> OrdinaryCategory:
    _require_finset(c)
    objs = c.objects
    homs = {(x, y): _arrow_names(c, x, y) for x, y in product(objs, repeat=2)}
    ident = {x: homs[x, x][c.eta[x].table[0]] for x in objs}
    comp = {}
    for x, y, z in product(objs, repeat=3):
        n = len(homs[y, z])
        table = c.mu[x, y, z].table
        for i, u in enumerate(homs[x, y]):
            for j, v in enumerate(homs[y, z]):
                comp[u, v] = homs[x, z][table[i * n + j]]
    return OrdinaryCategory(objs, homs, ident, comp, name=c.name)


def from_enriched(x):
    if isinstance(x, EnrichedCategory):
        return category_from_enriched(x)
    if isinstance(x, EnrichedFunctor):
        A, B = category_from_enriched(x.source), category_from_enriched(x.target)
        arrows = {}
        for (a, a1), m in x.homap.items():
            names = B.hom(x(a), x(a1))
            for u, t in zip(A.hom(a, a1), m.table):
                arrows[u] = names[t]
        return OrdinaryFunctor(A, B, x.objmap, arrows, name=x.name)
    if isinstance(x, EnrichedCofunctor):
        A, B = category_from_enriched(x.source), category_from_enriched(x.target)
        lift = {}
        for (a, b), m in x.lift.items():
            flat = [w for y in x.fibre(b) for w in A.hom(a, y)]
            for u, t in zip(B.hom(x(a), b), m.table):
                lift[a, u] = flat[t]
        return OrdinaryCofunctor(A, B, x.objmap, lift, name=x.name)
    if isinstance(x, EnrichedLens):
        return OrdinaryLens(from_enriched(x.f), from_enriched(x.phi), name=x.name)
    raise TypeError(f"no ordinary counterpart for {type(x).__name__}")


# -- weighted and metric instances -------------------------------------------

def weighted_category(c: OrdinaryCategory, weights: Mapping, base: FamBase | None = None) -> EnrichedCategory:
    """Hom families list the weights of the arrows in hom order."""
    base = base or make_wset()
    objs = c.objects
    hom = {(x, y): base.obj([weights[u] for u in c.hom(x, y)]) for x, y in product(objs, repeat=2)}
    one = base.unit()
    eta = {x: base.from_table(one, hom[x, x], [_position(c.hom(x, x), c.identity[x])]) for x in objs}
    mu = {}
    for x, y, z in product(objs, repeat=3):
        hxz = c.hom(x, z)
        table = [_position(hxz, c.comp[u, v]) for u in c.hom(x, y) for v in c.hom(y, z)]
        mu[x, y, z] = base.from_table(base.tensor(hom[x, y], hom[y, z]), hom[x, z], table)
    return EnrichedCategory(base, objs, hom, eta, mu, name=c.name)


def weighted_lens(l: OrdinaryLens, source: EnrichedCategory, target: EnrichedCategory) -> EnrichedLens:
    """Reuse the index tables of the FinSet translation over weighted homs."""
    base = source.base
    plain = lens_to_enriched(l)
    f, p = plain.f, plain.phi
    homap = {k: base.from_table(source.hom[k], target.hom[f(k[0]), f(k[1])], m.table) for k, m in f.homap.items()}
    shell = EnrichedCofunctor(source, target, p.objmap, {})
    lift = {
        (a, b): base.from_table(target.hom[p(a), b], shell.fibre_sum(a, b).total, m.table)
        for (a, b), m in p.lift.items()
    }
    return EnrichedLens(EnrichedFunctor(source, target, f.objmap, homap),
                        EnrichedCofunctor(source, target, p.objmap, lift), name=l.name)


def metric_category(points, dist: Mapping, base: TropicalBase | None = None, name="") -> EnrichedCategory:
    """A Lawvere metric space from a distance table; missing pairs are inf."""
    base = base or make_tropical()
    points = tuple(points)
    hom = {(x, y): value(dist.get((x, y), 0 if x == y else INF)) for x, y in product(points, repeat=2)}
    return EnrichedCategory.thin(base, points, hom, name=name)


def direct_check_metric(points, d: Mapping) -> bool:
    """d(x, x) = 0 and the triangle inequality."""
    if any(d[x, x] != 0 for x in points):
        return False
    return all(d[x, y] + d[y, z] >= d[x, z] for x, y, z in product(points, repeat=3))


def direct_check_tropical_cofunctor(pa, da: Mapping, pb, db: Mapping, objmap: Mapping) -> bool:
    """d_B(Phi a, b) >= min over the fibre of d_A(a, x), for metric spaces A and B."""
    if not (direct_check_metric(pa, da) and direct_check_metric(pb, db)):
        return False
    for a, b in product(pa, pb):
        near = min((da[a, x] for x in pa if objmap[x] == b), default=INF)
        if not db[objmap[a], b] >= near:
            return False
    return True


def direct_check_submetry(pa, da: Mapping, pb, db: Mapping, objmap: Mapping) -> bool:
    for a, b in product(pa, pb):
        fibre = [x for x in pa if objmap[x] == b]
        if not fibre:
            if db[objmap[a], b] != INF:
                return False
        elif not any(db[objmap[a], b] >= da[a, x] for x in fibre):
            return False
    return True


def direct_check_square(f: OrdinaryFunctor, g: OrdinaryFunctor, p: OrdinaryCofunctor, q: OrdinaryCofunctor) -> bool:
    """G(Phi a) = Psi(F a) on objects, and F of the p-lift of u is the q-lift of G u."""
    if any(g.objmap[p.objmap[a]] != q.objmap[f.objmap[a]] for a in p.source.objects):
        return False
    return all(f.arrowmap[w] == q.lift[f.objmap[a], g.arrowmap[u]] for (a, u), w in p.lift.items())
