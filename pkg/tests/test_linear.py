from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given

from vcof import (
    BaseMismatchError, EnrichedCategory, LawError, check_category, check_cofunctor, check_functor,
    free_linearization, identity_cofunctor, make_finset, make_finvec,
)
from vcof.oracle import OrdinaryCategory, discrete_category, metric_category, to_enriched
import helpers as H

FS = make_finset()
FIELDS = ["rational", 2, 3]


def test_terminal_category():
    L = free_linearization(H.enriched("one"))
    assert L.hom["*", "*"].dim == 1
    assert L.eta["*"].rows == ((1,),)
    assert L.mu["*", "*", "*"].rows == ((1,),)
    assert check_category(L).ok


def test_walking_arrow():
    E = H.enriched("two")
    L = free_linearization(E)
    assert {k: h.dim for k, h in L.hom.items()} == {("0", "0"): 1, ("0", "1"): 1, ("1", "0"): 0, ("1", "1"): 1}
    for k, m in E.mu.items():
        rows = L.mu[k].rows
        assert len(rows) == m.dom.size
        # one 1 per row, in the column the function picks
        assert all(r == tuple(int(j == t) for j in range(m.cod.size)) for r, t in zip(rows, m.table))
    assert check_category(L).ok


def test_identity_cofunctor_on_two():
    E = H.enriched("two")
    L = free_linearization(E)
    phi = free_linearization(identity_cofunctor(E), source=L, target=L)
    for (a, b), m in phi.lift.items():
        n = m.dom.dim
        assert m.dom.dim == m.cod.dim
        assert m.rows == tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    assert check_cofunctor(phi).ok


@pytest.mark.parametrize("field", FIELDS, ids=str)
@pytest.mark.parametrize("a, b", H.pairs())
def test_every_enumerated_structure_stays_lawful(field, a, b):
    A, B = free_linearization(H.enriched(a), field), free_linearization(H.enriched(b), field)
    assert check_category(A).ok and check_category(B).ok
    for F in H.e_functors(a, b):
        assert check_functor(free_linearization(F, field, source=A, target=B)).ok
    for P in H.e_cofunctors(a, b):
        lin = free_linearization(P, field, source=A, target=B)
        assert check_cofunctor(lin).ok
        assert {k: m.table for k, m in P.lift.items()} == {
            k: tuple(r.index(1) for r in m.rows) for k, m in lin.lift.items()}


def _one_object(eta, table, size):
    h = FS.obj(size)
    return EnrichedCategory(FS, ["*"], {("*", "*"): h}, {"*": FS.mor(FS.unit(), h, [eta])},
                            {("*", "*", "*"): FS.mor(FS.tensor(h, h), h, table)})


def test_one_object_categories_exhaustively():
    lawful = 0
    for size in (1, 2):
        for eta, table in product(range(size), product(range(size), repeat=size * size)):
            c = _one_object(eta, table, size)
            if check_category(c).ok:
                lawful += 1
                for field in FIELDS:
                    assert check_category(free_linearization(c, field)).ok
            else:
                with pytest.raises(LawError):
                    free_linearization(c)
    # the trivial monoid, then Z/2 and ({0, 1}, min) with either element as the unit
    assert lawful == 5


def _two_object_categories():
    yield H.ordinary("two")
    yield discrete_category(["0", "1"])
    yield OrdinaryCategory.generate(["0", "1"], {"u": ("0", "1"), "v": ("0", "1")})
    yield OrdinaryCategory.generate(["0", "1"], {"u": ("0", "1"), "w": ("1", "0")}, {
        ("u", "w"): "1_0", ("w", "u"): "1_1"})
    yield OrdinaryCategory.generate(["0", "1"], {"e": ("0", "0"), "u": ("0", "1")}, {
        ("e", "e"): "e", ("e", "u"): "u"})


def test_small_two_object_categories():
    for c in _two_object_categories():
        E = to_enriched(c)
        assert check_category(E).ok
        for field in FIELDS:
            assert check_category(free_linearization(E, field)).ok


@given(H.finset_category_data(max_objects=2))
def test_linearization_preserves_and_reflects_the_laws(c):
    if check_category(c).ok:
        assert check_category(free_linearization(c)).ok
    else:
        with pytest.raises(LawError):
            free_linearization(c)


def test_scaled_composition_breaks_the_laws():
    L = free_linearization(H.enriched("two"))
    Q = L.base
    mu = dict(L.mu)
    m = mu["0", "0", "1"]
    mu["0", "0", "1"] = Q.mor(m.dom, m.cod, [[2 * x for x in r] for r in m.rows])
    r = check_category(EnrichedCategory(Q, L.objects, L.hom, L.eta, mu))
    assert not r.ok
    assert "left unit" in {x.diagram for x in r.failures}


def test_half_composition_over_gf3():
    # 1/2 is 2 in GF(3), which breaks the unit laws
    L = free_linearization(H.enriched("one"), 3)
    F3 = L.base
    mu = {k: F3.mor(m.dom, m.cod, [[Fraction(1, 2)]]) for k, m in L.mu.items()}
    assert mu["*", "*", "*"].rows == ((2,),)
    assert not check_category(EnrichedCategory(F3, L.objects, L.hom, L.eta, mu)).ok


def test_errors():
    with pytest.raises(BaseMismatchError):
        free_linearization(metric_category("p", {}))
    with pytest.raises(TypeError):
        free_linearization("two")
    assert free_linearization(H.enriched("two"), make_finvec(5)).base == make_finvec(5)
