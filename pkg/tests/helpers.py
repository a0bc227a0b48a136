"""Shared small instances: the three ordinary test categories, their FinSet
translations and everything the oracle enumerates between them. Results
are cached for the whole session."""
import random
from collections import defaultdict
from functools import cache
from itertools import product

from hypothesis import assume
from hypothesis import strategies as st

from vcof import CompatibleSquare, EnrichedCategory, hcompose_cells, make_finset, vcompose_cells
from vcof.oracle import (
    OrdinaryFunctor, candidate_cofunctors, candidate_functors, commutative_square, direct_check_square,
    enumerate_cofunctors, enumerate_functors, enumerate_lenses, from_enriched, terminal_category, to_enriched,
    walking_arrow,
)

NAMES = ("one", "two", "square")
# criterion number -> PASS/FAIL line, filled by the acceptance suite
ACCEPTANCE = {}
_MAKERS = {"one": terminal_category, "two": walking_arrow, "square": commutative_square}


@cache
def ordinary(name):
    return _MAKERS[name]()


@cache
def enriched(name):
    return to_enriched(ordinary(name))


@cache
def functors(a, b):
    return tuple(enumerate_functors(ordinary(a), ordinary(b)))


@cache
def cofunctors(a, b):
    return tuple(enumerate_cofunctors(ordinary(a), ordinary(b)))


@cache
def lenses(a, b):
    return tuple(enumerate_lenses(ordinary(a), ordinary(b)))


@cache
def e_functors(a, b):
    return tuple(to_enriched(f, enriched(a), enriched(b)) for f in functors(a, b))


@cache
def e_cofunctors(a, b):
    return tuple(to_enriched(p, enriched(a), enriched(b)) for p in cofunctors(a, b))


@cache
def e_lenses(a, b):
    return tuple(to_enriched(l, enriched(a), enriched(b)) for l in lenses(a, b))


@cache
def cofunctor_candidates(a, b):
    return tuple(candidate_cofunctors(ordinary(a), ordinary(b)))


@cache
def functor_candidates(a, b):
    return tuple(candidate_functors(ordinary(a), ordinary(b)))


def pairs(names=NAMES):
    return list(product(names, repeat=2))


def lift_key(p):
    """Hashable fingerprint of an ordinary cofunctor."""
    return tuple(sorted(p.objmap.items())), tuple(sorted(p.lift.items()))


def functor_key(f):
    return tuple(sorted(f.objmap.items())), tuple(sorted(f.arrowmap.items()))


# -- transformation candidates -------------------------------------------------

def functor_choices(f, g):
    """Every assignment a -> arrow F a -> G a, as a dict of arrow names."""
    objs, B = f.source.objects, f.target
    for picks in product(*[B.hom(f.objmap[a], g.objmap[a]) for a in objs]):
        yield dict(zip(objs, picks))


def functor_natural(f, g, choice):
    A, B = f.source, f.target
    return all(B.comp[f.arrowmap[w], choice[A.cod(w)]] == B.comp[choice[A.dom(w)], g.arrowmap[w]]
               for w in A.arrows)


def functor_transformation(F, G, choice):
    """The enriched transformation whose component at a names the arrow choice[a]."""
    from vcof import FunctorTransformation
    base, B = F.source.base, F.target
    comps = {a: base.mor(base.unit(), B.hom[F(a), G(a)], [B.hom[F(a), G(a)].names.index(w)])
             for a, w in choice.items()}
    return FunctorTransformation(F, G, comps)


def cofunctor_choices(p, q):
    """Every assignment a -> arrow a -> x with q(x) = p(a)."""
    A = p.source
    objs = A.objects
    outs = [[w for x in objs if q.objmap[x] == p.objmap[a] for w in A.hom(a, x)] for a in objs]
    for picks in product(*outs):
        yield dict(zip(objs, picks))


def cofunctor_natural(p, q, choice):
    """tau_a then the q-lift of u equals the p-lift of u then tau at its codomain."""
    A, B = p.source, p.target
    for a in A.objects:
        for u in B.arrows:
            if B.dom(u) != p.objmap[a]:
                continue
            t = choice[a]
            w = p.lift[a, u]
            if A.comp[t, q.lift[A.cod(t), u]] != A.comp[w, choice[A.cod(w)]]:
                return False
    return True


def _flat_names(A, a, cop):
    return [w for x in cop.labels for w in A.hom[a, x].names]


def cofunctor_transformation(phi, psi, choice):
    from vcof import CofunctorTransformation
    A = phi.source
    base = A.base
    comps = {}
    for a, w in choice.items():
        cop = psi.fibre_sum(a, phi(a))
        comps[a] = base.mor(base.unit(), cop.total, [_flat_names(A, a, cop).index(w)])
    return CofunctorTransformation(phi, psi, comps)


def cofunctor_components(t):
    """Arrow names picked by the components of a FinSet cofunctor transformation."""
    A = t.phi.source
    return {a: _flat_names(A, a, t.component_sum(a))[m.table[0]] for a, m in t.components.items()}


@cache
def functor_transformation_candidates(a, b):
    out = []
    for f, g in product(functors(a, b), repeat=2):
        F, G = to_enriched(f, enriched(a), enriched(b)), to_enriched(g, enriched(a), enriched(b))
        out += [(f, g, c, functor_transformation(F, G, c)) for c in functor_choices(f, g)]
    return tuple(out)


@cache
def cofunctor_transformation_candidates(a, b):
    out = []
    for p, q in product(cofunctors(a, b), repeat=2):
        P, Q = to_enriched(p, enriched(a), enriched(b)), to_enriched(q, enriched(a), enriched(b))
        out += [(p, q, c, cofunctor_transformation(P, Q, c)) for c in cofunctor_choices(p, q)]
    return tuple(out)


def sample(seq, k, seed=0):
    """All of ``seq`` when it is short, else a reproducible sample of k items."""
    seq = list(seq)
    return seq if len(seq) <= k else random.Random(seed).sample(seq, k)


@cache
def valid_cofunctor_transformations(a, b):
    from vcof import check_cofunctor_transformation
    return tuple(x for x in cofunctor_transformation_candidates(a, b) if check_cofunctor_transformation(x[3]).ok)


# -- cells ---------------------------------------------------------------------

def cell_choices(f, g, p, q):
    """Every assignment a -> arrow F a -> x with Psi(x) = G(Phi a)."""
    A, C = f.source, f.target
    outs = [[w for x in C.objects if q.objmap[x] == g.objmap[p.objmap[a]] for w in C.hom(f.objmap[a], x)]
            for a in A.objects]
    for picks in product(*outs):
        yield dict(zip(A.objects, picks))


def cell_natural(f, g, p, q, choice):
    """tau_a then the Psi-lift of G u equals F of the Phi-lift of u then tau at its codomain."""
    A, C = p.source, f.target
    for (a, u), w in p.lift.items():
        t = choice[a]
        if C.comp[t, q.lift[C.cod(t), g.arrowmap[u]]] != C.comp[f.arrowmap[w], choice[A.cod(w)]]:
            return False
    return True


def cell(F, G, P, Q, choice):
    from vcof import Cell
    C = F.target
    base = C.base
    shell = Cell(F, G, P, Q, {})
    comps = {}
    for a, w in choice.items():
        cop = shell.component_sum(a)
        comps[a] = base.mor(base.unit(), cop.total, [_flat_names(C, F(a), cop).index(w)])
    return Cell(F, G, P, Q, comps)


def cell_components(t):
    C = t.top.target
    return {a: _flat_names(C, t.top(a), t.component_sum(a))[m.table[0]] for a, m in t.components.items()}


@cache
def cell_candidates(a, b, c, d):
    """(f, g, p, q, choice, cell) for every frame A -> C over B -> D and every choice."""
    out = []
    frames = product(range(len(functors(a, c))), range(len(functors(b, d))),
                     range(len(cofunctors(a, b))), range(len(cofunctors(c, d))))
    for i, j, k, m in frames:
        f, g, p, q = functors(a, c)[i], functors(b, d)[j], cofunctors(a, b)[k], cofunctors(c, d)[m]
        F, G, P, Q = e_functors(a, c)[i], e_functors(b, d)[j], e_cofunctors(a, b)[k], e_cofunctors(c, d)[m]
        out += [(f, g, p, q, ch, cell(F, G, P, Q, ch)) for ch in cell_choices(f, g, p, q)]
    return tuple(out)


# -- compatible squares and grids -----------------------------------------------

SMALL = ("one", "two")


def frames(a, b, c, d):
    for i, j, k, m in product(*(range(len(x)) for x in (
            functors(a, c), functors(b, d), cofunctors(a, b), cofunctors(c, d)))):
        ords = functors(a, c)[i], functors(b, d)[j], cofunctors(a, b)[k], cofunctors(c, d)[m]
        enr = e_functors(a, c)[i], e_functors(b, d)[j], e_cofunctors(a, b)[k], e_cofunctors(c, d)[m]
        yield ords, CompatibleSquare(*enr)


@cache
def compatible(*corners):
    return tuple(s for ords, s in frames(*corners) if direct_check_square(*ords))


def small_squares():
    return [s for corners in product(SMALL, repeat=4) for s in compatible(*corners)]


def grids(cells, key):
    """Every 2x2 arrangement (t, s over t2, s2) with matching inner boundaries."""
    by_left, by_top = defaultdict(list), defaultdict(list)
    for c in cells:
        by_left[key(c.left)].append(c)
        by_top[key(c.top)].append(c)
    for t in cells:
        for s in by_left[key(t.right)]:
            for t2 in by_top[key(t.bottom)]:
                for s2 in by_top[key(s.bottom)]:
                    if key(s2.left) == key(t2.right):
                        yield t, s, t2, s2


def interchange(t, s, t2, s2):
    across = hcompose_cells(vcompose_cells(t, t2), vcompose_cells(s, s2))
    down = vcompose_cells(hcompose_cells(t, s), hcompose_cells(t2, s2))
    return across == down


def cell_key(x):
    """Hashable stand-in for a FinSet functor or cofunctor between named categories."""
    y = from_enriched(x)
    table = y.arrowmap if isinstance(y, OrdinaryFunctor) else y.lift
    return type(y).__name__, y.source.name, y.target.name, repr(sorted(y.objmap.items())), repr(sorted(table.items()))


# -- random FinSet categories --------------------------------------------------

_FS = make_finset()


@st.composite
def finset_category_data(draw, max_objects=3):
    """Arbitrary, mostly unlawful, FinSet category data with homs of size at most 2."""
    objs = ["x", "y", "z"][: draw(st.integers(1, max_objects))]
    size = {(x, y): draw(st.integers(1 if x == y else 0, 2)) for x, y in product(objs, repeat=2)}
    hom = {k: _FS.obj(n) for k, n in size.items()}
    eta = {x: _FS.mor(_FS.unit(), hom[x, x], [draw(st.integers(0, size[x, x] - 1))]) for x in objs}
    mu = {}
    for x, y, z in product(objs, repeat=3):
        n = size[x, y] * size[y, z]
        assume(size[x, z] > 0 or n == 0)
        table = draw(st.lists(st.integers(0, max(size[x, z] - 1, 0)), min_size=n, max_size=n))
        mu[x, y, z] = _FS.mor(_FS.tensor(hom[x, y], hom[y, z]), hom[x, z], table)
    return EnrichedCategory(_FS, objs, hom, eta, mu)
