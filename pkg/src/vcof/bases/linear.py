"""Base change along the free vector space functor FinSet -> FinVec.

It is strong monoidal and preserves coproducts, so it carries categories,
functors and cofunctors to their linear counterparts: every function table
becomes its 0/1 matrix. Only this direction is provided; forgetting from
vector spaces to sets does not preserve coproducts and so does not carry
cofunctors.
"""
from __future__ import annotations

from ..cofun import EnrichedCofunctor, check_cofunctor
from ..encat import EnrichedCategory, EnrichedFunctor, check_category, check_functor
from ..errors import BaseMismatchError, LawError
from .finset import FinSetBase
from .finvec import FinVecBase, make_finvec


def _linear(base: FinVecBase, f):
    return base.from_table(base.obj(f.dom.size), base.obj(f.cod.size), f.table)


def _category(c: EnrichedCategory, base: FinVecBase) -> EnrichedCategory:
    hom = {k: base.obj(h.size) for k, h in c.hom.items()}
    eta = {k: _linear(base, m) for k, m in c.eta.items()}
    mu = {k: _linear(base, m) for k, m in c.mu.items()}
    return EnrichedCategory(base, c.objects, hom, eta, mu, name=c.name)


def free_linearization(x, field="rational", *, source=None, target=None):
    """Linearize a FinSet-enriched category, functor or cofunctor.

    Functors and cofunctors may be given already-linearized boundary
    categories through ``source`` and ``target``.
    """
    base = field if isinstance(field, FinVecBase) else make_finvec(field)
    if isinstance(x, EnrichedCategory):
        if not isinstance(x.base, FinSetBase):
            raise BaseMismatchError("free linearization starts from FinSet-enriched data")
        report = check_category(x)
        if not report.ok:
            raise LawError("input fails its FinSet law check", report)
        return _category(x, base)
    if isinstance(x, (EnrichedFunctor, EnrichedCofunctor)):
        if not isinstance(x.source.base, FinSetBase):
            raise BaseMismatchError("free linearization starts from FinSet-enriched data")
        report = check_functor(x) if isinstance(x, EnrichedFunctor) else check_cofunctor(x)
        if not report.ok:
            raise LawError("input fails its FinSet law check", report)
        A = source or free_linearization(x.source, base)
        B = target or free_linearization(x.target, base)
        if isinstance(x, EnrichedFunctor):
            return EnrichedFunctor(A, B, x.objmap, {k: _linear(base, m) for k, m in x.homap.items()}, name=x.name)
        return EnrichedCofunctor(A, B, x.objmap, {k: _linear(base, m) for k, m in x.lift.items()}, name=x.name)
    raise TypeError(f"cannot linearize {type(x).__name__}")
