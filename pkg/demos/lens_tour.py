"""
Delta lenses as cofunctors over finite sets
===========================================

Run from the repository root::

    python demos/lens_tour.py

Builds the lens that collapses the commutative square onto the walking
arrow, checks it, turns it into a compatible square and a cell, and then
breaks it on purpose to show what a failure report looks like.
"""
from vcof import (
    EnrichedCofunctor, EnrichedLens, check_cell, check_cofunctor, check_compatible_square, check_lens, compose_lenses,
    embed_square, identity_lens, lens_to_square,
)
from vcof.oracle import (
    OrdinaryCategory, commutative_square, enumerate_lenses, lens_space, to_enriched, walking_arrow,
)

square, two = commutative_square(), walking_arrow()
S, T = to_enriched(square), to_enriched(two)

# Nine lenses square -> two survive out of all typed candidates.
found = enumerate_lenses(square, two)
print(f"{len(found)} lenses square -> two among {lens_space(square, two)} candidates")

# Pick the one sending a, b to 0 and c, d to 1.
collapse = next(l for l in found if l.functor.objmap == {"a": "0", "b": "0", "c": "1", "d": "1"})
L = to_enriched(collapse, S, T)
print(check_lens(L, boundaries=True).text())

# A lens is the same thing as a compatible square with identity sides,
# and a compatible square embeds as a cell whose components are identities.
sq = lens_to_square(L)
print(check_compatible_square(sq).text())
cell = embed_square(sq)
print(check_cell(cell).text())

# Lenses compose; the identity lens is a unit on either side.
both = compose_lenses(L, identity_lens(T))
assert both == L == compose_lenses(identity_lens(S), L)

# Swapping the two arrows out of a parallel pair keeps a lawful cofunctor
# but breaks the retraction: the lift of u no longer lies over u.
parallel = OrdinaryCategory.generate(["0", "1"], {"u": ("0", "1"), "v": ("0", "1")}, name="parallel")
P = to_enriched(parallel)
ident = identity_lens(P)
lift = dict(ident.phi.lift)
u_to_v = P.base.mor(lift["0", "1"].dom, lift["0", "1"].cod, [1, 0])
swapped = EnrichedLens(ident.f, EnrichedCofunctor(P, P, ident.phi.objmap, lift | {("0", "1"): u_to_v}))
print(check_cofunctor(swapped.phi).text())
print(check_lens(swapped).text())
