"""Frobenius quartics of abelian surfaces and the absolute-simplicity criterion.

Characteristic polynomials are reconstructed from point counts over F_q and
F_{q^2}; Newton's identities recover higher counts.  Simplicity is certified
through three exact computations: irreducibility of the quartic over Q, a
unique rational root of its resolvent cubic (one quadratic subfield), and the
element q/alpha^2 of the quartic field not being a root of unity.  The final
inference from these antecedents to simplicity is classical field theory, not
re-derived here; the certificate records exactly the three computed facts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .polyring import (
    DomainError,
    Poly,
    QQ,
    ZZ,
    _monic_int_quartic_quadratic_split,
    as_rational,
    rational_roots,
)


class InconsistentCountsError(ValueError):
    """Point counts incompatible with any integer quartic."""


class ReducibleInputError(ValueError):
    """Operation requires an irreducible quartic."""


@dataclass(frozen=True)
class WeilPoly:
    """Monic quartic x^4 + c1 x^3 + c2 x^2 + c3 x + c4 attached to q."""

    q: int
    c1: int
    c2: int
    c3: int
    c4: int

    def coeffs_ascending(self) -> tuple[int, int, int, int, int]:
        return (self.c4, self.c3, self.c2, self.c1, 1)

    def as_poly(self) -> Poly:
        return Poly(list(self.coeffs_ascending()), ZZ)

    def to_text(self) -> str:
        return f"{self.q};{self.c1},{self.c2},{self.c3},{self.c4}"

    @classmethod
    def from_text(cls, text: str) -> "WeilPoly":
        qs, cs = text.split(";")
        c1, c2, c3, c4 = (int(tok) for tok in cs.split(","))
        return cls(int(qs), c1, c2, c3, c4)


def charpoly_from_counts(q: int, n1: int, n2: int) -> WeilPoly:
    """Quartic from N1 = #C(F_q) and N2 = #C(F_{q^2}).

    s1 = q+1-N1, s2 = q^2+1-N2; then c1 = -s1, c2 = (s1^2-s2)/2, c3 = q c1,
    c4 = q^2.  An odd s1^2 - s2 cannot come from integer coefficients.
    """
    if n1 < 0 or n2 < 0:
        raise DomainError("point counts must be nonnegative")
    s1 = q + 1 - n1
    s2 = q * q + 1 - n2
    if (s1 * s1 - s2) % 2:
        raise InconsistentCountsError(f"s1^2 - s2 = {s1 * s1 - s2} is odd")
    c1 = -s1
    c2 = (s1 * s1 - s2) // 2
    return WeilPoly(q, c1, c2, q * c1, q * q)


def _power_sums(w: WeilPoly, n: int) -> list[int]:
    """p_1..p_n for the roots of w, via Newton's identities (n <= 8)."""
    if n > 8:
        raise DomainError("power sums capped at n = 8")
    e = [1, -w.c1, w.c2, -w.c3, w.c4]  # elementary symmetric with signs
    p: list[int] = []
    for k in range(1, n + 1):
        if k <= 4:
            acc = (-1) ** (k - 1) * k * e[k]
            for i in range(1, k):
                acc += (-1) ** (i - 1) * e[i] * p[k - i - 1]
        else:
            acc = 0
            for i in range(1, 5):
                acc += (-1) ** (i - 1) * e[i] * p[k - i - 1]
        p.append(acc)
    return p


def recover_counts(w: WeilPoly, n: int) -> int:
    """N_n = q^n + 1 - p_n from Newton's identities."""
    if n < 1:
        raise DomainError("n must be positive")
    return w.q ** n + 1 - _power_sums(w, n)[n - 1]


@dataclass
class WeilCheck:
    ok: bool
    reasons: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def verify_weil_conditions(w: WeilPoly) -> WeilCheck:
    """Functional equation plus real roots of the real Weil polynomial in
    [-2 sqrt(q), 2 sqrt(q)], all checked through integer squares."""
    reasons = []
    q = w.q
    if w.c3 != q * w.c1:
        reasons.append(f"c3 = {w.c3} differs from q*c1 = {q * w.c1}")
    if w.c4 != q * q:
        reasons.append(f"c4 = {w.c4} differs from q^2 = {q * q}")
    b = w.c2 - 2 * q
    disc = w.c1 * w.c1 - 4 * b
    if disc < 0:
        reasons.append("real Weil polynomial has complex roots")
    else:
        # both roots of x^2 + c1 x + b inside [-2 sqrt q, 2 sqrt q]:
        # value at the endpoints >= 0 and the vertex inside the interval
        s = 4 * q + b
        if s < 0 or s * s < 4 * w.c1 * w.c1 * q:
            reasons.append("a root of the real Weil polynomial exceeds 2*sqrt(q)")
        if w.c1 * w.c1 > 16 * q:
            reasons.append("vertex of the real Weil polynomial outside the interval")
    return WeilCheck(not reasons, reasons)


def real_weil_poly(w: WeilPoly) -> Poly:
    """x^2 + c1 x + (c2 - 2q): the minimal polynomial of alpha + q/alpha when
    irreducible (a rational root means that element is rational)."""
    if w.c3 != w.q * w.c1 or w.c4 != w.q * w.q:
        raise DomainError("functional equation fails")
    return Poly([w.c2 - 2 * w.q, w.c1, 1], ZZ)


def quartic_irreducible_over_Q(w: WeilPoly):
    """Exact irreducibility decision for the monic integer quartic.

    Returns (True, None) or (False, factor) where factor is a monic Poly
    over QQ dividing the quartic (linear or quadratic).
    """
    roots = rational_roots(w.as_poly())
    if roots:
        return False, Poly([-roots[0], Fraction(1)], QQ)
    split = _monic_int_quartic_quadratic_split([w.c4, w.c3, w.c2, w.c1])
    if split is not None:
        (u, v), _ = split
        return False, Poly([Fraction(v), Fraction(u), Fraction(1)], QQ)
    return True, None


@dataclass
class ResolventData:
    cubic: Poly
    roots: list[Fraction]
    quadratic_subfield_count: int


def resolvent_cubic(w: WeilPoly) -> ResolventData:
    """Resolvent cubic of the quartic, with the quadratic-subfield count.

    For x^4 + a x^3 + b x^2 + c x + d the cubic is
    y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4 b d + c^2); its number of rational
    roots classifies the Galois group: one root means exactly one quadratic
    subfield (D4 or C4), three means three (V4), none means none (S4 or A4).
    """
    ok, factor = quartic_irreducible_over_Q(w)
    if not ok:
        raise ReducibleInputError(f"quartic is reducible (factor {factor.to_text()})")
    a, b, c, d = w.c1, w.c2, w.c3, w.c4
    cubic = Poly([-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1], ZZ)
    roots = rational_roots(cubic)
    distinct = sorted(set(roots))
    return ResolventData(cubic, distinct, len(distinct))


# ---------------------------------------------------------------------------
# number field elements Q[x]/(P)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NumberField:
    """Q[x]/(P) for monic irreducible P of degree <= 4 (not re-verified here)."""

    modulus: Poly  # over QQ, monic

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def element(self, coords) -> "NumberFieldElem":
        cs = [Fraction(c) for c in coords]
        if len(cs) > self.degree:
            raise DomainError("coordinate vector longer than the field degree")
        cs += [Fraction(0)] * (self.degree - len(cs))
        return NumberFieldElem(self, tuple(cs))

    def generator(self) -> "NumberFieldElem":
        return self.element([0, 1])

    def from_rational(self, r) -> "NumberFieldElem":
        return self.element([Fraction(r)])


def number_field_of(w: WeilPoly) -> NumberField:
    return NumberField(as_rational(w.as_poly()))


@dataclass(frozen=True)
class NumberFieldElem:
    """Element in the power basis 1, alpha, ..., alpha^(m-1)."""

    fld: NumberField
    coords: tuple[Fraction, ...]

    def _poly(self) -> Poly:
        return Poly(list(self.coords), QQ)

    def _wrap(self, p: Poly) -> "NumberFieldElem":
        r = p % self.fld.modulus
        cs = list(r.coeffs) + [Fraction(0)] * (self.fld.degree - len(r.coeffs))
        return NumberFieldElem(self.fld, tuple(cs[: self.fld.degree]))

    def __add__(self, other):
        return self._wrap(self._poly() + other._poly())

    def __sub__(self, other):
        return self._wrap(self._poly() - other._poly())

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.fld.from_rational(other)
        return self._wrap(self._poly() * other._poly())

    __rmul__ = __mul__

    def __pow__(self, n: int):
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = self.fld.from_rational(1)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def inverse(self) -> "NumberFieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in QQ[x] against the irreducible modulus
        r0, s0 = self.fld.modulus, Poly.zero(QQ)
        r1, s1 = self._poly(), Poly.one(QQ)
        while not r1.is_zero:
            quo, rem = r0.divmod(r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - quo * s1
        inv_c = r0.lc  # r0 is a nonzero constant
        return self._wrap(s0 * Poly.constant(Fraction(1) / Fraction(inv_c), QQ))


def minimal_polynomial(e: NumberFieldElem) -> Poly:
    """Least-degree monic annihilator of e, from the first linear dependency
    among the power vectors 1, e, e^2, ... over Q (degree divides the field
    degree)."""
    m = e.fld.degree
    powers = [e.fld.from_rational(1)]
    for _ in range(m):
        powers.append(powers[-1] * e)
    rows: list[list[Fraction]] = []  # reduced echelon rows with bookkeeping
    combos: list[list[Fraction]] = []
    for d, pw in enumerate(powers):
        vec = list(pw.coords)
        combo = [Fraction(0)] * (m + 1)
        combo[d] = Fraction(1)
        for row, rcombo in zip(rows, combos):
            pivot = next(i for i, c in enumerate(row) if c != 0)
            if vec[pivot] != 0:
                factor = vec[pivot] / row[pivot]
                vec = [a - factor * b for a, b in zip(vec, row)]
                combo = [a - factor * b for a, b in zip(combo, rcombo)]
        if all(c == 0 for c in vec):
            coeffs = combo[: d + 1]
            lead = coeffs[d]
            return Poly([c / lead for c in coeffs], QQ)
        rows.append(vec)
        combos.append(combo)
    raise AssertionError("no dependency among field-degree-many powers")  # unreachable


_CYCLOTOMIC = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    5: (1, 1, 1, 1, 1),
    6: (1, -1, 1),
    8: (1, 0, 0, 0, 1),
    10: (1, -1, 1, -1, 1),
    12: (1, 0, -1, 0, 1),
}


def root_of_unity_order(e: NumberFieldElem) -> int | None:
    """n if the minimal polynomial of e is the n-th cyclotomic with phi(n) <= 4
    (the only orders possible in a field of degree <= 4), else None."""
    mp = minimal_polynomial(e)
    coeffs = tuple(mp.coeffs)
    for n, cyc in _CYCLOTOMIC.items():
        if coeffs == tuple(Fraction(c) for c in cyc):
            return n
    return None


def is_root_of_unity(e: NumberFieldElem) -> bool:
    return root_of_unity_order(e) is not None


# ---------------------------------------------------------------------------
# absolute simplicity
# ---------------------------------------------------------------------------


@dataclass
class SimplicityCertificate:
    simple_certified: bool
    reason: str
    splitting_found: bool = False  # positive evidence the quartic splits
    resolvent: ResolventData | None = None
    gamma_min_poly: Poly | None = None

    def __bool__(self):
        return self.simple_certified


def absolutely_simple(w: WeilPoly) -> SimplicityCertificate:
    """Certify absolute simplicity of the surface with Frobenius quartic w.

    Steps: (i) w irreducible over Q; (ii) the resolvent cubic has exactly one
    rational root (a unique quadratic subfield); (iii) gamma = q * alpha^-2
    is not a root of unity.  A False result is a non-certification, not a
    splitting proof, except when explicit reducibility was found.
    """
    check = verify_weil_conditions(w)
    if not check:
        raise DomainError("not a Weil quartic: " + "; ".join(check.reasons))
    ok, factor = quartic_irreducible_over_Q(w)
    if not ok:
        kind = "square factor" if factor.degree == 2 and _is_square_of(w, factor) else "factor"
        return SimplicityCertificate(
            False,
            f"reducible over Q ({kind} {factor.to_text()})",
            splitting_found=True,
        )
    res = resolvent_cubic(w)
    if res.quadratic_subfield_count != 1:
        return SimplicityCertificate(
            False,
            f"{res.quadratic_subfield_count} quadratic subfields, need exactly 1",
            resolvent=res,
        )
    fld = number_field_of(w)
    alpha = fld.generator()
    gamma = (alpha ** -2) * w.q
    mp = minimal_polynomial(gamma)
    order = root_of_unity_order(gamma)
    if order is not None:
        return SimplicityCertificate(
            False,
            f"q/alpha^2 is a root of unity of order {order}",
            resolvent=res,
            gamma_min_poly=mp,
        )
    return SimplicityCertificate(
        True,
        "irreducible quartic, unique quadratic subfield, q/alpha^2 of infinite order",
        resolvent=res,
        gamma_min_poly=mp,
    )


def _is_square_of(w: WeilPoly, factor: Poly) -> bool:
    return (factor * factor) == as_rational(w.as_poly())


# ---------------------------------------------------------------------------
# Hasse interval
# ---------------------------------------------------------------------------


def hasse_interval(q: int, g: int) -> tuple[int, int]:
    """Exact integer bracket [max(0, q+1-floor(2g sqrt q)), q+1+floor(2g sqrt q)]
    for point counts of a smooth genus-g curve (counts are nonnegative, so the
    lower end is clamped at 0)."""
    if g not in (0, 1, 2):
        raise DomainError("genus must be 0, 1 or 2")
    w = isqrt(4 * g * g * q)
    return (max(0, q + 1 - w), q + 1 + w)


def smooth_genus1_has_point(q: int) -> bool:
    """(sqrt q - 1)^2 > 0, i.e. the Hasse bound forces a point; true for q >= 2."""
    return (q - 1) ** 2 > 0 and q >= 2
