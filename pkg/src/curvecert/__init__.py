"""curvecert: exact-arithmetic certificates for a genus-2 family and friends.

Everything is computed with exact integers and rationals; the library never
touches floating point.  See README.md for the CLI and the acceptance suite.
"""

from .polyring import (
    BigRat,
    DomainError,
    Poly,
    QQ,
    RingMismatchError,
    UnsupportedCharacteristicError,
    ZZ,
    ZZ_T,
    as_rational,
    discriminant,
    irreducible_mod_p,
    irreducible_over_Q_certificate,
    is_square_over_closure,
    is_squarefree,
    poly_from_text,
    poly_gcd,
    rational_roots,
    resultant,
    square_part,
    squarefree_decomposition,
)
from .finitefield import (
    FqCtx,
    FqElem,
    field_ring,
    fq_enumerate,
    fq_make,
    poly_over,
    quadratic_character,
    sqrt_in_fq,
)

__version__ = "0.1.0"
