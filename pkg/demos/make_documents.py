"""
Regenerate the JSON documents shipped under demos/documents
===========================================================

Run from the repository root::

    python demos/make_documents.py

The FinSet documents are translated from the ordinary categories in
``vcof.oracle``; the metric and weighted ones are written out by hand.
"""
import json
from dataclasses import replace
from pathlib import Path

from vcof import io
from vcof.bases import make_wset
from vcof.bases.linear import free_linearization
from vcof.cofun import EnrichedCofunctor, identity_cofunctor
from vcof.doublecat import EnrichedLens, embed_square, identity_lens, lens_to_square
from vcof.oracle import (
    OrdinaryCategory, OrdinaryCofunctor, OrdinaryFunctor, OrdinaryLens, commutative_square,
    terminal_category, to_enriched, walking_arrow, weighted_category,
)

HERE = Path(__file__).parent / "documents"
BAD = HERE / "counterexamples"


def write(path, data):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(io.dumps(data))
    print("wrote", path.relative_to(HERE.parent))


def named(x, name):
    # names never affect equality, only the written documents
    return replace(x, name=name)


# %% Finite sets: the three test categories
one, two, square = terminal_category(), walking_arrow(), commutative_square()
E1, E2, ES = (to_enriched(c) for c in (one, two, square))
E1, E2, ES = named(E1, "one"), named(E2, "two"), named(ES, "square")
write(HERE / "categories.json", io.bundle(E1, E2, ES))

# %% A split opfibration square -> two: a, b over 0 and c, d over 1,
# with u lifted to g at a and to h at b.
F = OrdinaryFunctor(square, two, dict(a="0", b="0", c="1", d="1"),
                    {"1_a": "1_0", "1_b": "1_0", "1_c": "1_1", "1_d": "1_1",
                     "f": "1_0", "g": "u", "h": "u", "k": "1_1", "s": "u"})
P = OrdinaryCofunctor(square, two, F.objmap,
                      {("a", "1_0"): "1_a", ("a", "u"): "g", ("b", "1_0"): "1_b", ("b", "u"): "h",
                       ("c", "1_1"): "1_c", ("d", "1_1"): "1_d"})
collapse = to_enriched(OrdinaryLens(F, P, name="collapse"), ES, E2)
collapse = EnrichedLens(named(collapse.f, "collapse_f"), named(collapse.phi, "collapse_phi"), name="collapse")
id_two = named(identity_lens(E2), "id_two")
id_two = EnrichedLens(named(id_two.f, "id_two_f"), named(id_two.phi, "id_two_phi"), name="id_two")
write(HERE / "lenses.json", io.bundle(collapse, id_two, names=["collapse", "id_two"]))

# %% The lens as a compatible square, and that square as a cell.
sq = lens_to_square(collapse)
write(HERE / "cells.json", io.bundle(sq, embed_square(sq), names=["collapse_square", "collapse_cell"]))

# %% Free linearization of the walking arrow, over Q and over GF(2).
two_q = named(free_linearization(E2, "rational"), "two_q")
two_gf2 = named(free_linearization(E2, 2), "two_gf2")
id_two_q = named(free_linearization(identity_cofunctor(E2), "rational", source=two_q, target=two_q), "id_two_q")
write(HERE / "linear.json", io.bundle(two_q, two_gf2, id_two_q))

# %% Metric spaces: four points over two, with d(Fa, b) the least distance
# from a to the fibre over b.
d = {("p", "q"): 1, ("r", "s"): 1, ("p", "r"): 2, ("p", "s"): 3, ("q", "r"): 3, ("q", "s"): 2}
points = ["p", "q", "r", "s"]


def metric_doc(name, points, dist):
    hom = {x: {y: "0" if x == y else str(dist.get((x, y), dist.get((y, x), "inf"))) for y in points}
           for x in points}
    return {"kind": "category", "name": name, "base": {"name": "tropical"}, "objects": points, "hom": hom}


fibres = {"p": "x", "q": "x", "r": "y", "s": "y"}
metric_lens = [
    metric_doc("four", points, d),
    metric_doc("pair", ["x", "y"], {("x", "y"): 2}),
    {"kind": "functor", "name": "proj", "source": "four", "target": "pair", "objects": fibres},
    {"kind": "cofunctor", "name": "proj_lift", "source": "four", "target": "pair", "objects": fibres},
    {"kind": "lens", "name": "proj_lens", "functor": "proj", "cofunctor": "proj_lift"},
]
write(HERE / "metric.json", {"version": 1, "documents": metric_lens})

# %% Weighted sets: the walking arrow with |u| = 1, and a cofunctor that
# lifts an arrow of weight 2 to one of weight 1.
wset = make_wset()
light = named(weighted_category(two, {"1_0": 0, "1_1": 0, "u": 1}, wset), "light")
heavy = named(weighted_category(two, {"1_0": 0, "1_1": 0, "u": 2}, wset), "heavy")
lighten = EnrichedCofunctor(
    light, heavy, {"0": "0", "1": "1"},
    {k: wset.from_table(heavy.hom[k], light.hom[k], range(len(light.hom[k].labels))) for k in light.hom},
    name="lighten",
)
id_light = identity_lens(light)
id_light = EnrichedLens(named(id_light.f, "id_light_f"), named(id_light.phi, "id_light_phi"), name="id_light")
write(HERE / "weighted.json", io.bundle(light, heavy, lighten, id_light))

# %% Counterexamples, each failing in one named diagram.
expected = {}

parallel = OrdinaryCategory.generate(["0", "1"], {"u": ("0", "1"), "v": ("0", "1")}, name="parallel")
EP = to_enriched(parallel)
swap = OrdinaryCofunctor(parallel, parallel, {"0": "0", "1": "1"},
                         {("0", "1_0"): "1_0", ("0", "u"): "v", ("0", "v"): "u", ("1", "1_1"): "1_1"})
ident = OrdinaryFunctor(parallel, parallel, {"0": "0", "1": "1"}, {u: u for u in parallel.arrows})
bad = to_enriched(OrdinaryLens(ident, swap), EP, EP)
bad = EnrichedLens(named(bad.f, "identity"), named(bad.phi, "swap"), name="swapped")
write(BAD / "swapped_lift.json", io.bundle(bad, names=["swapped"]))
expected["swapped_lift.json"] = {"target": "swapped", "exit": 1, "diagram": "retraction", "indices": ["0", "1"]}

stuck = OrdinaryCofunctor(square, two, F.objmap, dict(P.lift) | {("c", "1_1"): "k"})
stuck = named(to_enriched(stuck, ES, E2), "stuck")
write(BAD / "identity_not_lifted.json", io.bundle(stuck))
expected["identity_not_lifted.json"] = {"target": "stuck", "exit": 1, "diagram": "identity", "indices": ["c"]}

selfish = metric_doc("selfish", ["p", "q"], {("p", "q"): 1})
selfish["hom"]["p"]["p"] = "1/2"
write(BAD / "self_distance.json", selfish | {"version": 1})
expected["self_distance.json"] = {"target": "selfish", "exit": 1, "diagram": "left unit", "indices": ["p", "p"]}

bumped = json.loads(json.dumps(metric_lens))
bumped[0]["hom"]["p"]["r"] = bumped[0]["hom"]["r"]["p"] = "9/4"
write(BAD / "bumped_distance.json", {"version": 1, "documents": bumped})
expected["bumped_distance.json"] = {"target": "proj_lens", "exit": 1, "diagram": "retraction", "indices": ["p", "y"]}

write(BAD / "unknown_base.json", {"version": 1, "kind": "category", "name": "mystery", "base": {"name": "quantale"},
                                  "objects": ["*"], "hom": {"*": {"*": 1}}})
expected["unknown_base.json"] = {"target": "mystery", "exit": 2}

write(BAD / "expected.json", expected)
