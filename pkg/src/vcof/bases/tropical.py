"""Extended non-negative rationals ([0, inf], >=, +, 0) as a thin base.

Categories enriched here are Lawvere metric spaces. The only morphism x -> y
is the witness of x >= y. Structure maps are stored as *claimed* arrows
that remember whether they exist, so a checker can report which inequality
fails instead of refusing to build the data.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from ..errors import StructuralError
from ..vbase import MonoidalBase
from .poset import ThinMonoidalPoset

INF = math.inf


def value(x):
    """Normalize to a Fraction or ``INF``. Accepts ints, Fractions, "p/q",
    decimal strings and "inf"."""
    if isinstance(x, bool):
        raise ValueError(f"not a tropical value: {x!r}")
    if isinstance(x, float):
        if x == INF:
            return INF
        raise ValueError(f"floats other than inf are not exact: {x!r}")
    if isinstance(x, str):
        s = x.strip().lower()
        if s in ("inf", "infinity", "+inf"):
            return INF
        try:
            x = Fraction(s)
        except ValueError:
            raise ValueError(f"not a tropical value: {x!r}") from None
    if isinstance(x, Rational):
        x = Fraction(x)
        if x < 0:
            raise ValueError(f"tropical values are non-negative, got {x}")
        return x
    raise ValueError(f"not a tropical value: {x!r}")


def dump_value(x):
    return "inf" if x == INF else str(x)


@dataclass(frozen=True)
class TropicalPoset(ThinMonoidalPoset):
    """The thin monoidal poset ([0, inf], >=, +, 0) on exact values."""

    def is_element(self, x):
        return x == INF or (isinstance(x, Fraction) and x >= 0)

    def normalize(self, x):
        return value(x)

    def geq(self, x, y):
        return x >= y

    def tensor(self, x, y):
        if x == INF or y == INF:
            return INF
        return x + y

    @property
    def unit(self):
        return Fraction(0)

    def dump(self, x):
        return dump_value(x)

    def __repr__(self):
        return "TropicalPoset()"


@dataclass(frozen=True)
class Arrow:
    """A claimed arrow dom -> cod; ``exists`` is false when dom >= cod fails
    or when any arrow it was composed from did not exist."""

    dom: object
    cod: object
    exists: bool

    def __repr__(self):
        mark = ">=" if self.exists else "!>="
        return f"[{dump_value(self.dom)} {mark} {dump_value(self.cod)}]"


@dataclass(frozen=True)
class TropicalBase(MonoidalBase):
    name = "tropical"
    thin = True

    def is_object(self, x):
        return x == INF or (isinstance(x, Fraction) and x >= 0)

    def is_morphism(self, f):
        return isinstance(f, Arrow)

    def obj(self, x):
        return value(x)

    def arrow(self, dom, cod):
        """The unique arrow dom -> cod, marked missing if dom < cod."""
        self.check_object(dom, cod)
        return Arrow(dom, cod, dom >= cod)

    def exists(self, f):
        return f.exists

    def unit(self):
        return Fraction(0)

    def initial(self):
        return INF

    def identity(self, a):
        return Arrow(a, a, True)

    def _compose(self, f, g):
        return Arrow(f.dom, g.cod, f.exists and g.exists)

    def tensor(self, a, b):
        if a == INF or b == INF:
            return INF
        return a + b

    def _tensor_mor(self, f, g):
        return Arrow(self.tensor(f.dom, g.dom), self.tensor(f.cod, g.cod), f.exists and g.exists)

    def _sum(self, summands):
        return min(summands, default=INF)

    def _injections(self, summands, total):
        return [Arrow(s, total, True) for s in summands]

    def _copair(self, cop, legs, cod):
        return Arrow(cop.total, cod, all(leg.exists for leg in legs) and cop.total >= cod)

    def _distribute_right(self, cop, b, target):
        return Arrow(self.tensor(cop.total, b), target.total, True)

    def _distribute_left(self, b, cop, target):
        return Arrow(self.tensor(b, cop.total), target.total, True)

    def dump_object(self, a):
        return dump_value(a)

    def load_object(self, data):
        try:
            return value(data)
        except ValueError as e:
            raise StructuralError(str(e)) from None

    def dump_morphism(self, f):
        return {"from": dump_value(f.dom), "to": dump_value(f.cod), "exists": f.exists}

    def load_morphism(self, data, dom, cod):
        # arrows are implied by their endpoints
        return self.arrow(dom, cod)

    def __repr__(self):
        return "TropicalBase()"


def make_tropical() -> TropicalBase:
    return TropicalBase()
