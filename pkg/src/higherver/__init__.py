"""Exact combinatorics of the higher Verlinde categories Ver_{p^n}(G)."""

__version__ = "0.1.0"

from .charring import (  # noqa: E402
    Basis,
    BasisDecomp,
    LaurentPoly,
    decompose,
    ext_power_char,
    frobenius_twist,
    simple_char,
    sym_power_char,
    tilting_char,
    weyl_char,
)
from .cyclo import CyclotomicIndex, vanishes_at_root  # noqa: E402
from .sl2tilt import IdealLevel, TiltingSum, hom_dim, ideal_level, socle_unit_test, tensor_decompose  # noqa: E402
from .versl2 import (  # noqa: E402
    FusionTable,
    VerClass,
    VerCtx,
    cartan_matrix,
    frobenius_embed,
    fusion,
    image_comp_factors,
    in_Ibar_given_Tbar,
    projective_of,
    simple_dim,
)
