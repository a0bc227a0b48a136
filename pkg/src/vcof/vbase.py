"""Distributive monoidal bases and the finite coproduct calculus.

Every axiom diagram in the library is compiled against this interface. A
base supplies objects, morphisms, a strict tensor, finite coproducts and
the two distributivity isomorphisms; everything else here (copairing of
families, sums of morphisms, flattening of nested sums) is derived
generically from those primitives.

Coproducts are always built in canonical order: summands are sorted by
their index labels, so two sums over the same labelled summands are equal
as data.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Any, Callable, Hashable, Mapping, Sequence

from .errors import BaseMismatchError, StructuralError


class MonoidalBase(ABC):
    """A distributive monoidal category with exact, decidable equality.

    Morphism payloads must expose ``dom`` and ``cod``. Tensor products are
    strict: associators and unitors are identities on the encodings.
    """

    name = "abstract"
    #: thin bases have at most one morphism between two objects
    thin = False

    # -- membership -----------------------------------------------------
    @abstractmethod
    def is_object(self, x: Any) -> bool: ...

    @abstractmethod
    def is_morphism(self, f: Any) -> bool: ...

    def check_object(self, *xs):
        for x in xs:
            if not self.is_object(x):
                raise BaseMismatchError(f"{x!r} is not an object of {self}")

    def check_morphism(self, *fs):
        for f in fs:
            if not self.is_morphism(f):
                raise BaseMismatchError(f"{f!r} is not a morphism of {self}")

    # -- category structure ---------------------------------------------
    @abstractmethod
    def unit(self): ...

    @abstractmethod
    def initial(self): ...

    @abstractmethod
    def identity(self, a): ...

    @abstractmethod
    def _compose(self, f, g): ...

    def compose(self, *fs):
        """Diagrammatic composite: ``compose(f, g)`` is f followed by g."""
        if not fs:
            raise ValueError("compose needs at least one morphism")
        self.check_morphism(*fs)
        for f, g in zip(fs, fs[1:]):
            if f.cod != g.dom:
                raise StructuralError(f"cannot compose: codomain {f.cod!r} != domain {g.dom!r}")
        return reduce(self._compose, fs)

    @abstractmethod
    def tensor(self, a, b): ...

    @abstractmethod
    def _tensor_mor(self, f, g): ...

    def tensor_mor(self, f, g):
        self.check_morphism(f, g)
        return self._tensor_mor(f, g)

    def exists(self, f) -> bool:
        """Whether a (possibly claimed) morphism actually exists in the base."""
        return True

    def mor_eq(self, f, g) -> bool:
        return f == g

    def commutes(self, f, g) -> bool:
        return self.exists(f) and self.exists(g) and self.mor_eq(f, g)

    # -- coproduct primitives -------------------------------------------
    @abstractmethod
    def _sum(self, summands: Sequence) -> Any: ...

    @abstractmethod
    def _injections(self, summands: Sequence, total) -> list: ...

    @abstractmethod
    def _copair(self, cop: "Coproduct", legs: Sequence, cod) -> Any: ...

    @abstractmethod
    def _distribute_right(self, cop: "Coproduct", b, target: "Coproduct") -> Any: ...

    @abstractmethod
    def _distribute_left(self, b, cop: "Coproduct", target: "Coproduct") -> Any: ...

    # -- serialization --------------------------------------------------
    def dump_object(self, a) -> Any:
        raise NotImplementedError

    def load_object(self, data) -> Any:
        raise NotImplementedError

    def dump_morphism(self, f) -> Any:
        raise NotImplementedError

    def load_morphism(self, data, dom, cod) -> Any:
        raise NotImplementedError

    def describe(self) -> dict:
        return {"name": self.name}


class IndexedBase(MonoidalBase):
    """Bases whose objects carry a finite index set (elements, basis vectors,
    family members) with offset coproducts and lex-ordered tensors.

    Distributors are index permutations; subclasses only say how to turn an
    index function into a morphism.
    """

    @abstractmethod
    def size(self, a) -> int: ...

    @abstractmethod
    def from_table(self, dom, cod, table: Sequence[int]): ...

    def _injections(self, summands, total):
        out, off = [], 0
        for s in summands:
            n = self.size(s)
            out.append(self.from_table(s, total, range(off, off + n)))
            off += n
        return out

    def _distribute_right(self, cop, b, target):
        # (sum_i A_i) x B -> sum_i (A_i x B)
        nb = self.size(b)
        table = []
        for s, toff in zip(cop.summands, _offsets(self, target.summands)):
            for a in range(self.size(s)):
                table.extend(toff + a * nb + j for j in range(nb))
        return self.from_table(self.tensor(cop.total, b), target.total, table)

    def _distribute_left(self, b, cop, target):
        # B x (sum_i A_i) -> sum_i (B x A_i)
        nb = self.size(b)
        sizes = [self.size(s) for s in cop.summands]
        toffs = _offsets(self, target.summands)
        table = []
        for j in range(nb):
            for n, toff in zip(sizes, toffs):
                table.extend(toff + j * n + a for a in range(n))
        return self.from_table(self.tensor(b, cop.total), target.total, table)


def _offsets(base, summands):
    out, off = [], 0
    for s in summands:
        out.append(off)
        off += base.size(s)
    return out


@dataclass(frozen=True)
class Coproduct:
    """A finite coproduct in canonical (label-sorted) order."""

    labels: tuple
    summands: tuple
    total: Any
    injections: tuple
    base: MonoidalBase = field(compare=False, repr=False)

    def __len__(self):
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise StructuralError(f"label {label!r} is not a summand of this coproduct") from None

    def injection(self, label):
        return self.injections[self.index(label)]

    def summand(self, label):
        return self.summands[self.index(label)]


def coproduct(base: MonoidalBase, labels: Sequence[Hashable], summands: Sequence) -> Coproduct:
    """The canonical coproduct of ``summands`` indexed by ``labels``.

    Summands are reordered so that labels ascend. The empty coproduct is
    the initial object of the base.
    """
    labels, summands = list(labels), list(summands)
    if len(labels) != len(summands):
        raise StructuralError(f"{len(labels)} labels for {len(summands)} summands")
    if len(set(labels)) != len(labels):
        raise StructuralError(f"duplicate coproduct labels in {labels!r}")
    base.check_object(*summands)
    order = sorted(range(len(labels)), key=labels.__getitem__)
    labels = tuple(labels[i] for i in order)
    summands = tuple(summands[i] for i in order)
    try:
        return _canonical(base, labels, summands)
    except TypeError:  # unhashable payloads
        return _canonical.__wrapped__(base, labels, summands)


@lru_cache(maxsize=1 << 16)
def _canonical(base, labels, summands):
    total = base._sum(summands)
    return Coproduct(labels, summands, total, tuple(base._injections(summands, total)), base)


def copair(cop: Coproduct, legs: Sequence | Mapping, cod=None):
    """The unique map out of ``cop`` restricting to ``legs[i]`` on summand i.

    ``legs`` is either aligned with ``cop.labels`` or a mapping keyed by
    label. ``cod`` is required when the coproduct is empty.
    """
    base = cop.base
    if isinstance(legs, Mapping):
        if set(legs) != set(cop.labels):
            raise StructuralError("copairing legs do not match coproduct labels")
        legs = [legs[l] for l in cop.labels]
    legs = list(legs)
    if len(legs) != len(cop):
        raise StructuralError(f"{len(legs)} legs for a coproduct of {len(cop)} summands")
    base.check_morphism(*legs)
    if cod is None:
        if not legs:
            raise StructuralError("codomain required to copair an empty family")
        cod = legs[0].cod
    for s, leg in zip(cop.summands, legs):
        if leg.dom != s:
            raise StructuralError(f"leg domain {leg.dom!r} != summand {s!r}")
        if leg.cod != cod:
            raise StructuralError(f"leg codomain {leg.cod!r} != {cod!r}")
    return base._copair(cop, legs, cod)


def distribute_right(cop: Coproduct, b):
    """The isomorphism (sum_i A_i) x B -> sum_i (A_i x B)."""
    base = cop.base
    base.check_object(b)
    target = coproduct(base, cop.labels, [base.tensor(s, b) for s in cop.summands])
    return base._distribute_right(cop, b, target)


def distribute_left(b, cop: Coproduct):
    """The isomorphism B x (sum_i A_i) -> sum_i (B x A_i)."""
    base = cop.base
    base.check_object(b)
    target = coproduct(base, cop.labels, [base.tensor(b, s) for s in cop.summands])
    return base._distribute_left(b, cop, target)


def undistribute_right(cop: Coproduct, b):
    """The canonical comparison sum_i (A_i x B) -> (sum_i A_i) x B, i.e. [inj_i x 1]."""
    base = cop.base
    target = coproduct(base, cop.labels, [base.tensor(s, b) for s in cop.summands])
    legs = [base.tensor_mor(inj, base.identity(b)) for inj in cop.injections]
    return copair(target, legs, base.tensor(cop.total, b))


def undistribute_left(b, cop: Coproduct):
    base = cop.base
    target = coproduct(base, cop.labels, [base.tensor(b, s) for s in cop.summands])
    legs = [base.tensor_mor(base.identity(b), inj) for inj in cop.injections]
    return copair(target, legs, base.tensor(b, cop.total))


def flatten(outer: Coproduct, inners: Sequence[Coproduct] | Mapping, key: Callable | None = None):
    """Flatten a sum of sums into one canonical sum.

    ``inners[x]`` is the coproduct whose total is the summand of ``outer``
    at label x. The flat coproduct is indexed by ``key(x, y)`` (default:
    the inner label y) and these flat labels must be distinct. Returns the
    flat coproduct and the reindexing isomorphism from ``outer.total``.
    """
    base = outer.base
    if isinstance(inners, Mapping):
        inners = [inners[x] for x in outer.labels]
    inners = list(inners)
    if len(inners) != len(outer):
        raise StructuralError("one inner coproduct is needed per outer summand")
    if key is None:
        key = lambda x, y: y
    labels, summands = [], []
    for x, s, inner in zip(outer.labels, outer.summands, inners):
        if inner.total != s:
            raise StructuralError(f"inner total {inner.total!r} != outer summand {s!r} at {x!r}")
        for y, t in zip(inner.labels, inner.summands):
            labels.append(key(x, y))
            summands.append(t)
    flat = coproduct(base, labels, summands)
    legs = [
        copair(inner, [flat.injection(key(x, y)) for y in inner.labels], flat.total)
        for x, inner in zip(outer.labels, inners)
    ]
    return flat, copair(outer, legs, flat.total)


def sum_map(src: Coproduct, dst: Coproduct, legs: Mapping, route: Callable | Mapping | None = None):
    """The map sum_x A_x -> sum_y B_y sending summand x along ``legs[x]``
    into summand ``route(x)`` (default: the same label)."""
    base = src.base
    if route is None:
        route = lambda x: x
    elif isinstance(route, Mapping):
        route = route.__getitem__
    out = [base.compose(legs[x], dst.injection(route(x))) for x in src.labels]
    return copair(src, out, dst.total)


def distribute_sums(base: MonoidalBase, labels: Sequence, lefts: Mapping, inners: Mapping):
    """sum_x L_x x (sum_z Q_xz)  ->  sum_(z, x) L_x x Q_xz.

    This is the distributor followed by the exchange of summation order
    that appears in every composite diagram. Returns the source coproduct,
    the flat target coproduct (labels are ``(z, x)`` pairs, so grouping is
    by z) and the isomorphism between their totals.
    """
    outer = coproduct(base, labels, [base.tensor(lefts[x], inners[x].total) for x in labels])
    spread = {
        x: coproduct(base, inners[x].labels, [base.tensor(lefts[x], q) for q in inners[x].summands])
        for x in labels
    }
    middle = coproduct(base, labels, [spread[x].total for x in labels])
    step = sum_map(outer, middle, {x: distribute_left(lefts[x], inners[x]) for x in labels})
    flat, iso = flatten(middle, spread, key=lambda x, z: (z, x))
    return outer, flat, base.compose(step, iso)
