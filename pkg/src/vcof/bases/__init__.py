from .fam import FamBase, FamMap, Family, make_fam, make_wset
from .finset import FinSet, FinSetBase, Function, make_finset
from .finvec import FinVecBase, Matrix, PrimeField, RationalField, VecSpace, make_finvec
from .poset import ThinMonoidalPoset
from .tropical import INF, Arrow, TropicalBase, TropicalPoset, make_tropical, value

__all__ = [
    "FamBase", "FamMap", "Family", "make_fam", "make_wset",
    "FinSet", "FinSetBase", "Function", "make_finset",
    "FinVecBase", "Matrix", "PrimeField", "RationalField", "VecSpace", "make_finvec",
    "ThinMonoidalPoset",
    "INF", "Arrow", "TropicalBase", "TropicalPoset", "make_tropical", "value",
]
