"""Finite sets and total functions, with the cartesian tensor."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..errors import StructuralError
from ..vbase import IndexedBase


@dataclass(frozen=True)
class FinSet:
    """The set {0, ..., size-1}. ``names`` is display-only and ignored by equality."""

    size: int
    names: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("negative set size")
        if self.names is not None and len(self.names) != self.size:
            raise ValueError("names do not match size")

    def __repr__(self):
        return f"FinSet({self.size})"


@dataclass(frozen=True)
class Function:
    dom: FinSet
    cod: FinSet
    table: tuple

    def __post_init__(self):
        if len(self.table) != self.dom.size:
            raise StructuralError(f"function table of length {len(self.table)} on a set of size {self.dom.size}")
        if any(not 0 <= t < self.cod.size for t in self.table):
            raise StructuralError(f"function table {self.table} leaves codomain of size {self.cod.size}")

    def __call__(self, i):
        return self.table[i]


@dataclass(frozen=True)
class FinSetBase(IndexedBase):
    name = "finset"

    def is_object(self, x):
        return isinstance(x, FinSet)

    def is_morphism(self, f):
        return isinstance(f, Function)

    def obj(self, size, names=None):
        return FinSet(size, None if names is None else tuple(names))

    def mor(self, dom, cod, table):
        return Function(dom, cod, tuple(table))

    def size(self, a):
        return a.size

    def from_table(self, dom, cod, table):
        return Function(dom, cod, tuple(table))

    def unit(self):
        return FinSet(1)

    def initial(self):
        return FinSet(0)

    def identity(self, a):
        return Function(a, a, tuple(range(a.size)))

    def _compose(self, f, g):
        t = g.table
        return Function(f.dom, g.cod, tuple(t[i] for i in f.table))

    def tensor(self, a, b):
        return FinSet(a.size * b.size)

    def _tensor_mor(self, f, g):
        m = g.cod.size
        return Function(
            self.tensor(f.dom, g.dom),
            self.tensor(f.cod, g.cod),
            tuple(i * m + j for i in f.table for j in g.table),
        )

    def _sum(self, summands):
        return FinSet(sum(s.size for s in summands))

    def _copair(self, cop, legs, cod):
        return Function(cop.total, cod, tuple(t for leg in legs for t in leg.table))

    def dump_object(self, a):
        return a.size

    def load_object(self, data):
        if isinstance(data, list):
            return FinSet(len(data), tuple(str(d) for d in data))
        if not isinstance(data, int) or isinstance(data, bool) or data < 0:
            raise StructuralError(f"finset object must be a size or a list of element names, got {data!r}")
        return FinSet(data)

    def dump_morphism(self, f):
        return list(f.table)

    def load_morphism(self, data, dom, cod):
        if not isinstance(data, list) or not all(isinstance(t, int) and not isinstance(t, bool) for t in data):
            raise StructuralError(f"finset morphism must be an integer array, got {data!r}")
        return Function(dom, cod, tuple(data))

    def __repr__(self):
        return "FinSetBase()"


def make_finset() -> FinSetBase:
    return FinSetBase()
