"""
Cofunctors between finite metric spaces
=======================================

Run from the repository root::

    python demos/metric_tour.py

Over the tropical base a category is a Lawvere metric space and a cofunctor
is an object map that never promises a shorter trip than the space above
can deliver. Checks only ask whether arrows exist, so they are cheap.
"""
from fractions import Fraction
from itertools import product

from vcof import (
    INF, EnrichedCofunctor, EnrichedFunctor, EnrichedLens, check_cofunctor, check_functor, check_lens,
    check_submetry,
)
from vcof.oracle import metric_category


def symmetric(d):
    return {**d, **{(y, x): v for (x, y), v in d.items()}}


# Four points in two pairs, projected onto two points at distance 2.
four = metric_category("pqrs", symmetric({("p", "q"): 1, ("r", "s"): 1, ("p", "r"): 2,
                                          ("p", "s"): 3, ("q", "r"): 3, ("q", "s"): 2}), name="four")
pair = metric_category("xy", symmetric({("x", "y"): 2}), name="pair")
over = {"p": "x", "q": "x", "r": "y", "s": "y"}

proj = EnrichedFunctor.thin(four, pair, over, name="proj")
lift = EnrichedCofunctor.thin(four, pair, over, name="lift")
print(check_functor(proj).text())
print(check_cofunctor(lift).text())
print(check_lens(EnrichedLens(proj, lift, name="proj_lens")).text())

# Every point sits within distance 2 of the other fibre, and the bound is
# reached: a valid cofunctor here is a submetry.
for a, b in product("pqrs", "xy"):
    nearest = min(four.hom[a, x] for x in "pqrs" if over[x] == b)
    print(f"d({over[a]}, {b}) = {pair.hom[over[a], b]}, nearest point of the fibre from {a}: {nearest}")
print(check_submetry(lift).text())

# Pushing p and r apart leaves p further than 2 from the fibre over y.
far = metric_category("pqrs", {**{k: four.hom[k] for k in product("pqrs", repeat=2)},
                               ("p", "r"): Fraction(9, 4), ("r", "p"): Fraction(9, 4)}, name="far")
print(check_cofunctor(EnrichedCofunctor.thin(far, pair, over, name="far_lift")).text())

# Nothing lies over z, and z is infinitely far away, so no lift is needed.
pz = metric_category("xz", {("x", "z"): INF, ("z", "x"): INF}, name="apart")
alone = EnrichedCofunctor.thin(metric_category("p", {}), pz, {"p": "x"}, name="alone")
print(check_cofunctor(alone).text())
print(check_submetry(alone).text())
