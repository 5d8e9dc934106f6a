"""Immanant functions of the Weyl groups W(A_n).

Generalises the C- and S-orbit functions (permanent and determinant of the
exponential matrix) to every irreducible character of S_{n+1}.
"""
from .an_geometry import Point, WeightCoords, fundamental_domain
from .characters import CharacterTable, character_table
from .immanant_fn import ExpTermSum, ImmanantSpec, evaluate, evaluate_many
from .orthogonality import exact_inner_product, numeric_inner_product, theorem_rhs
from .sym_core import Permutation

__version__ = "0.1.0"
