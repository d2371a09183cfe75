"""Change of monomial order for zero-dimensional ideals over prime fields.

The reduced DRL Gröbner basis is turned into a basis of a module over
``K[y]``; the Hermite normal form of that basis then gives the reduced LEX
basis directly. A sparse FGLM baseline and plain Buchberger are included for
comparison.
"""

from .field import FieldElement, PrimeField
from .groebner import GroebnerBasis, buchberger, check_stability, is_shape_position, staircase
from .lexgb import LexOutput, ShapeLexBasis, detect_shape, kernel_shortcut, read_off_lex
from .modbasis import ModuleBasis, basis_from_border, basis_from_stable_gb
from .mvpoly import DRL, LEX, MonomialOrder, MvPoly
from .pipeline import random_system, solve
from .polymat import PolyMatrix, determinant, hermite_normal_form, left_kernel_basis
from .upoly import UPoly

__all__ = [
    "DRL", "LEX", "FieldElement", "GroebnerBasis", "LexOutput", "ModuleBasis", "MonomialOrder",
    "MvPoly", "PolyMatrix", "PrimeField", "ShapeLexBasis", "UPoly", "basis_from_border",
    "basis_from_stable_gb", "buchberger", "check_stability", "detect_shape", "determinant",
    "hermite_normal_form", "is_shape_position", "kernel_shortcut", "left_kernel_basis",
    "random_system", "read_off_lex", "solve", "staircase",
]
