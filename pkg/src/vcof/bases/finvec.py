"""Finite-dimensional vector spaces over an exact field.

Morphisms act on row vectors: a map V -> W is a dim(V) x dim(W) matrix and
``compose(f, g)`` is the matrix product ``f @ g``. With this convention the
Kronecker product is the tensor of morphisms under the same lex index
encoding as finite sets, and copairing stacks blocks vertically.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import StructuralError
from ..vbase import IndexedBase


@dataclass(frozen=True)
class RationalField:
    name = "rational"

    def normalize(self, x):
        return Fraction(x)

    def parse(self, data):
        if isinstance(data, bool):
            raise StructuralError(f"bad matrix entry {data!r}")
        if isinstance(data, (int, str)):
            try:
                return Fraction(data)
            except ValueError:
                pass
        raise StructuralError(f"bad matrix entry {data!r}")

    def dump(self, x):
        return str(x) if x.denominator != 1 else x.numerator

    def describe(self):
        return {"field": "rational"}


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"GF(p) needs a prime p, got {self.p!r}")

    @property
    def name(self):
        return f"GF({self.p})"

    def normalize(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def parse(self, data):
        if isinstance(data, bool):
            raise StructuralError(f"bad matrix entry {data!r}")
        if isinstance(data, int):
            return data % self.p
        if isinstance(data, str):
            try:
                return self.normalize(Fraction(data))
            except (ValueError, ZeroDivisionError):
                pass
        raise StructuralError(f"bad matrix entry {data!r}")

    def dump(self, x):
        return x

    def describe(self):
        return {"field": "gf", "prime": self.p}


@dataclass(frozen=True)
class VecSpace:
    dim: int
    field: object

    def __repr__(self):
        return f"VecSpace({self.dim})"


@dataclass(frozen=True)
class Matrix:
    dom: VecSpace
    cod: VecSpace
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != self.dom.dim or any(len(r) != self.cod.dim for r in self.rows):
            raise StructuralError(f"matrix shape does not match {self.dom.dim}x{self.cod.dim}")

    def array(self):
        return _array(self.rows, self.dom.dim, self.cod.dim)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.dom.dim}x{self.cod.dim}: [{body}])"


def _array(rows, m, n):
    a = np.empty((m, n), dtype=object)
    for i, r in enumerate(rows):
        a[i, :] = r
    return a


@dataclass(frozen=True)
class FinVecBase(IndexedBase):
    field: object = RationalField()
    name = "finvec"

    def is_object(self, x):
        return isinstance(x, VecSpace) and x.field == self.field

    def is_morphism(self, f):
        return isinstance(f, Matrix) and f.dom.field == self.field

    def obj(self, dim):
        return VecSpace(dim, self.field)

    def mor(self, dom, cod, rows):
        norm = self.field.normalize
        return Matrix(dom, cod, tuple(tuple(norm(x) for x in r) for r in rows))

    def _from_array(self, dom, cod, a):
        norm = self.field.normalize
        return Matrix(dom, cod, tuple(tuple(norm(x) for x in a[i, :]) for i in range(a.shape[0])))

    def size(self, a):
        return a.dim

    def from_table(self, dom, cod, table):
        zero, one = self.field.normalize(0), self.field.normalize(1)
        rows = []
        for t in table:
            r = [zero] * cod.dim
            r[t] = one
            rows.append(tuple(r))
        return Matrix(dom, cod, tuple(rows))

    def unit(self):
        return VecSpace(1, self.field)

    def initial(self):
        return VecSpace(0, self.field)

    def identity(self, a):
        return self.from_table(a, a, range(a.dim))

    def _zeros(self, dom, cod):
        zero = self.field.normalize(0)
        return Matrix(dom, cod, tuple((zero,) * cod.dim for _ in range(dom.dim)))

    def _compose(self, f, g):
        if 0 in (f.dom.dim, f.cod.dim, g.cod.dim):
            return self._zeros(f.dom, g.cod)
        return self._from_array(f.dom, g.cod, f.array().dot(g.array()))

    def tensor(self, a, b):
        return VecSpace(a.dim * b.dim, self.field)

    def _tensor_mor(self, f, g):
        dom, cod = self.tensor(f.dom, g.dom), self.tensor(f.cod, g.cod)
        if 0 in (dom.dim, cod.dim):
            return self._zeros(dom, cod)
        return self._from_array(dom, cod, np.kron(f.array(), g.array()))

    def _sum(self, summands):
        return VecSpace(sum(s.dim for s in summands), self.field)

    def _copair(self, cop, legs, cod):
        return Matrix(cop.total, cod, tuple(r for leg in legs for r in leg.rows))

    def describe(self):
        return {"name": "finvec", **self.field.describe()}

    def dump_object(self, a):
        return a.dim

    def load_object(self, data):
        if not isinstance(data, int) or isinstance(data, bool) or data < 0:
            raise StructuralError(f"finvec object must be a dimension, got {data!r}")
        return VecSpace(data, self.field)

    def dump_morphism(self, f):
        return [[self.field.dump(x) for x in r] for r in f.rows]

    def load_morphism(self, data, dom, cod):
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise StructuralError(f"finvec morphism must be a list of rows, got {data!r}")
        return Matrix(dom, cod, tuple(tuple(self.field.parse(x) for x in r) for r in data))

    def __repr__(self):
        return f"FinVecBase({self.field.name})"


def make_finvec(field="rational") -> FinVecBase:
    """``field`` is ``"rational"``, a prime p for GF(p), or a field object."""
    if field == "rational":
        field = RationalField()
    elif isinstance(field, int) and not isinstance(field, bool):
        field = PrimeField(field)
    elif not hasattr(field, "normalize"):
        raise ValueError(f"unknown field {field!r}")
    return FinVecBase(field)
