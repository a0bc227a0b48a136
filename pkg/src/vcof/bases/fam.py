"""Fam(W): finite families of elements of a thin monoidal poset W.

An object is an ordered list of labels. A morphism is an index function
f with label(j) >= label(f(j)) for every source index j; the witnesses are
unique because W is thin, so a morphism is its index table plus whether
the inequalities hold. Tensor is the index product with labelwise W-tensor
and coproduct is concatenation, so the index calculus is the one of
finite sets.

Weighted sets are Fam over the tropical poset.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import StructuralError
from ..vbase import IndexedBase
from .tropical import TropicalPoset


@dataclass(frozen=True)
class Family:
    labels: tuple

    def __repr__(self):
        return f"Family({list(self.labels)})"


@dataclass(frozen=True)
class FamMap:
    dom: Family
    cod: Family
    table: tuple
    exists: bool

    def __post_init__(self):
        if len(self.table) != len(self.dom.labels):
            raise StructuralError("index table does not match family length")
        if any(not 0 <= t < len(self.cod.labels) for t in self.table):
            raise StructuralError(f"index table {self.table} leaves the target family")


@dataclass(frozen=True)
class FamBase(IndexedBase):
    w: object = TropicalPoset()
    name = "fam"

    def is_object(self, x):
        return isinstance(x, Family) and all(self.w.is_element(l) for l in x.labels)

    def is_morphism(self, f):
        return isinstance(f, FamMap)

    def obj(self, labels):
        return Family(tuple(self.w.normalize(l) for l in labels))

    def mor(self, dom, cod, table):
        return self.from_table(dom, cod, table)

    def size(self, a):
        return len(a.labels)

    def witnessed(self, dom, cod, table):
        return all(self.w.geq(dom.labels[j], cod.labels[t]) for j, t in enumerate(table))

    def from_table(self, dom, cod, table):
        table = tuple(table)
        return FamMap(dom, cod, table, self.witnessed(dom, cod, table))

    def exists(self, f):
        return f.exists

    def unit(self):
        return Family((self.w.unit,))

    def initial(self):
        return Family(())

    def identity(self, a):
        return FamMap(a, a, tuple(range(len(a.labels))), True)

    def _compose(self, f, g):
        t = g.table
        return FamMap(f.dom, g.cod, tuple(t[i] for i in f.table), f.exists and g.exists)

    def tensor(self, a, b):
        return Family(tuple(self.w.tensor(x, y) for x in a.labels for y in b.labels))

    def _tensor_mor(self, f, g):
        m = len(g.cod.labels)
        return FamMap(
            self.tensor(f.dom, g.dom),
            self.tensor(f.cod, g.cod),
            tuple(i * m + j for i in f.table for j in g.table),
            f.exists and g.exists,
        )

    def _sum(self, summands):
        return Family(tuple(l for s in summands for l in s.labels))

    def _copair(self, cop, legs, cod):
        return FamMap(
            cop.total, cod, tuple(t for leg in legs for t in leg.table), all(leg.exists for leg in legs)
        )

    def describe(self):
        return {"name": "wset"} if type(self.w) is TropicalPoset else {"name": "fam", "poset": repr(self.w)}

    def dump_object(self, a):
        return [self.w.dump(l) for l in a.labels]

    def load_object(self, data):
        if not isinstance(data, list):
            raise StructuralError(f"fam object must be a list of labels, got {data!r}")
        try:
            return self.obj(data)
        except ValueError as e:
            raise StructuralError(str(e)) from None

    def dump_morphism(self, f):
        return {"map": list(f.table)}

    def load_morphism(self, data, dom, cod):
        if isinstance(data, list):
            data = {"map": data}
        if not isinstance(data, dict) or not isinstance(data.get("map"), list):
            raise StructuralError(f'fam morphism must be {{"map": [...]}}, got {data!r}')
        return self.from_table(dom, cod, data["map"])

    def __repr__(self):
        return f"FamBase({self.w!r})"


def make_fam(w) -> FamBase:
    return FamBase(w)


def make_wset() -> FamBase:
    return FamBase(TropicalPoset())
