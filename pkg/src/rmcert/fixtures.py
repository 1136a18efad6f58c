"""Transcribed constants.  Every number here is exact; consumers never see floats."""
from __future__ import annotations

from fractions import Fraction as Fr

# Cartan part of the shift-by-one r-matrix on sl_5, rows = first tensor leg, h_i basis.
R0_SL5 = (
    (Fr(2, 5), Fr(3, 5), Fr(3, 5), Fr(2, 5)),
    (Fr(0), Fr(3, 5), Fr(4, 5), Fr(3, 5)),
    (Fr(-1, 5), Fr(0), Fr(3, 5), Fr(3, 5)),
    (Fr(-1, 5), Fr(-1, 5), Fr(0), Fr(2, 5)),
)

# Four-dimensional analogue used for the affine Cartan twist (finite h_1..h_3 part).
R0HAT_SL4 = (
    (Fr(3, 8), Fr(1, 2), Fr(3, 8)),
    (Fr(0), Fr(1, 2), Fr(1, 2)),
    (Fr(-1, 8), Fr(0), Fr(3, 8)),
)

# p element of the restricted seaweed in sl_5, h_i coordinates.
P5 = (Fr(3, 5), Fr(1, 5), Fr(-1, 5), Fr(-3, 5))

# image of p5 in the affine algebra, h-hat coordinates (the printed 2/4 read as 1/2)
IOTA_P5 = (Fr(3, 4), Fr(1, 2), Fr(1, 4))

# Ad-conjugating matrix defining the Lagrangian subalgebra of sl_4 + sl_4.
T_MATRIX = (
    (0, 1, 0, 0),
    (1, 0, 1, 0),
    (0, 0, 1, 0),
    (0, 1, 0, 1),
)

# (id (x) alpha_1) applied to R0_SL5, as displayed
CONTRACTION_ALPHA1 = (Fr(1, 5), Fr(-3, 5), Fr(-2, 5), Fr(-1, 5))

# two displayed identities for the affine images of Cartan contractions
AFFINE_IMAGE_ALPHA1 = (Fr(1, 4), Fr(-1, 2), Fr(-1, 4))
AFFINE_IMAGE_ALPHA4_RHS = (Fr(-1, 4), Fr(-1, 2), Fr(-3, 4))
ALPHA4_LHS_PRINTED = (Fr(-1, 5), Fr(-2, 5), Fr(-2, 3), Fr(1, 5))
ALPHA4_LHS_CORRECTED = (Fr(-1, 5), Fr(-2, 5), Fr(-3, 5), Fr(1, 5))

# printed sl_4 quasi-trigonometric display, split into its pieces
# quadratic wedge block: (e23 + e34) (x) e21 + e24 (x) e31 + e34 (x) e32
FIXTURE_WEDGE = (
    ((2, 3), (2, 1)),
    ((3, 4), (2, 1)),
    ((2, 4), (3, 1)),
    ((3, 4), (3, 2)),
)
# (z - t) block: e21 (x) e41 + e41 (x) e21 + e31 (x) e31
FIXTURE_ZT_BLOCK = (
    ((2, 1), (4, 1)),
    ((4, 1), (2, 1)),
    ((3, 1), (3, 1)),
)
# z a (x) b - t b (x) a pairs as printed: z e31 (x) e42 - t e42 (x) e31, z e41 (x) e32 - t e32 (x) e41
FIXTURE_ZT_PAIRS = (
    ((3, 1), (4, 2)),
    ((4, 1), (3, 2)),
)

FIXTURES = {
    "r0_5": {
        "anchor": "Cartan part of the shift-by-one r-matrix on sl_5",
        "kind": "cartan-tensor",
        "value": R0_SL5,
    },
    "r0hat_4": {
        "anchor": "affine Cartan twist exponent on sl_4 hat",
        "kind": "cartan-tensor",
        "value": R0HAT_SL4,
    },
    "p5": {
        "anchor": "p element adjoined in the restricted seaweed of sl_5",
        "kind": "cartan-vector",
        "value": P5,
    },
    "iota_p5": {
        "anchor": "image of p5 under the seaweed embedding",
        "kind": "cartan-vector",
        "value": IOTA_P5,
    },
    "T": {
        "anchor": "conjugating matrix of the Lagrangian subalgebra W",
        "kind": "matrix",
        "value": T_MATRIX,
    },
    "x_candidates": {
        "anchor": "printed sl_4 quasi-trigonometric r-matrix, pieces entering the bracket readings",
        "kind": "tensor-pieces",
        "value": {
            "wedge": FIXTURE_WEDGE,
            "z_minus_t": FIXTURE_ZT_BLOCK,
            "z_t_pairs": FIXTURE_ZT_PAIRS,
        },
    },
}
