"""Dense exact univariate polynomial arithmetic over ZZ, QQ, F_q and ZZ[t].

Coefficients live in small ring-descriptor objects (ZZ, QQ, ZZ_T here, finite
fields in :mod:`curvecert.finitefield`).  Polynomials are immutable coefficient
tuples, constant term first, with no trailing zeros; the zero polynomial is the
empty tuple.  All arithmetic is exact: integers are Python ints, rationals are
``fractions.Fraction``, nothing ever rounds.

Besides ring arithmetic this module provides resultants and discriminants
(fraction-free Bareiss elimination, plus evaluation/interpolation for ZZ[t]
coefficients), squarefreeness, squarefree decomposition over odd finite
fields, irreducibility testing mod p, and single-prime irreducibility
certificates over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .primes import primes_below

BigRat = Fraction  # the universal exact scalar: lowest terms, positive denominator


class RingMismatchError(ValueError):
    """Operands live over different coefficient rings."""


class DomainError(ValueError):
    """Input outside an operation's stated domain."""


class UnsupportedCharacteristicError(ValueError):
    """Operation requires an odd (or positive) characteristic it did not get."""


# ---------------------------------------------------------------------------
# coefficient rings
#
# A ring descriptor carries: name, is_field, char (0 or p), size (q or None),
# zero, one, coerce(x) and exact_div(a, b).  exact_div must be exact division
# in the ring and raise DomainError otherwise; Bareiss elimination relies on it.
# ---------------------------------------------------------------------------


class _IntRing:
    name = "ZZ"
    is_field = False
    char = 0
    size = None
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, int):
            return x
        raise RingMismatchError(f"cannot coerce {x!r} into ZZ")

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise DomainError(f"{a} not divisible by {b} in ZZ")
        return q

    def __repr__(self):
        return self.name


class _RatRing:
    name = "QQ"
    is_field = True
    char = 0
    size = None
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise RingMismatchError(f"cannot coerce {x!r} into QQ")

    def exact_div(self, a, b):
        return Fraction(a) / b

    def __repr__(self):
        return self.name


ZZ = _IntRing()
QQ = _RatRing()


class Poly:
    """Dense univariate polynomial over a declared coefficient ring."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, coeffs, ring):
        cs = [ring.coerce(c) for c in coeffs]
        while cs and cs[-1] == ring.zero:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring):
        return cls((), ring)

    @classmethod
    def one(cls, ring):
        return cls((ring.one,), ring)

    @classmethod
    def x(cls, ring):
        return cls((ring.zero, ring.one), ring)

    @classmethod
    def constant(cls, c, ring):
        return cls((c,), ring)

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise DomainError("leading coefficient of the zero polynomial")
        return self.coeffs[-1]

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(type(self.ring)), getattr(self.ring, "name", ""), self.coeffs))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other) -> "Poly":
        if isinstance(other, Poly) and other.ring == self.ring:
            return other
        if isinstance(other, Poly):
            raise RingMismatchError(f"rings differ: {self.ring!r} vs {other.ring!r}")
        return Poly.constant(self.ring.coerce(other), self.ring)

    def __add__(self, other):
        other = self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            [self.coeff(i) + other.coeff(i) for i in range(n)], self.ring
        )

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.ring)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.ring)
        zero = self.ring.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.ring)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative polynomial power")
        result = Poly.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "Poly":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return Poly((self.ring.zero,) * k + self.coeffs, self.ring)

    def evaluate(self, point):
        """Horner evaluation; the point is coerced into the coefficient ring."""
        point = self.ring.coerce(point)
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def derivative(self) -> "Poly":
        # i * c relies on the coefficient type reducing integer multiples
        # itself (finite-field elements do so mod p).
        if self.degree < 1:
            return Poly.zero(self.ring)
        return Poly(
            [c * i for i, c in enumerate(self.coeffs) if i >= 1],
            self.ring,
        )

    def map_coeffs(self, fn, ring) -> "Poly":
        return Poly([fn(c) for c in self.coeffs], ring)

    # -- field-only helpers ---------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        if self.lc == self.ring.one:
            return self
        if not self.ring.is_field:
            raise DomainError("monic() needs a field coefficient ring")
        inv = self.ring.exact_div(self.ring.one, self.lc)
        return Poly([c * inv for c in self.coeffs], self.ring)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Quotient and remainder; coefficient ring must be a field."""
        other = self._check(other)
        if other.is_zero:
            raise DomainError("polynomial division by zero")
        if not self.ring.is_field:
            raise DomainError("divmod needs a field coefficient ring")
        ring = self.ring
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(ring), self
        quot = [ring.zero] * (dq + 1)
        inv_lc = ring.exact_div(ring.one, other.lc)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lc
            if c == ring.zero:
                continue
            quot[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return Poly(quot, ring), Poly(rem, ring)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    # -- text format -----------------------------------------------------------

    def to_text(self) -> str:
        """Ascending comma-separated coefficients, e.g. "7,0,0,0,0,1,1"."""
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"Poly([{self.to_text()}], {self.ring!r})"


def poly_from_text(text: str, ring) -> Poly:
    """Parse the ascending comma-separated coefficient format."""
    text = text.strip()
    if not text:
        return Poly.zero(ring)
    coeffs = []
    for tok in text.split(","):
        tok = tok.strip()
        coeffs.append(Fraction(tok) if "/" in tok else int(tok))
    return Poly(coeffs, ring)


# ---------------------------------------------------------------------------
# ZZ[t]: integer polynomials as a coefficient ring (for bivariate ZZ[t][x])
# ---------------------------------------------------------------------------


class _IntPolyRing:
    name = "ZZ[t]"
    is_field = False
    char = 0
    size = None

    def __init__(self):
        self.zero = Poly.zero(ZZ)
        self.one = Poly.one(ZZ)

    def coerce(self, x):
        if isinstance(x, Poly) and x.ring is ZZ:
            return x
        if isinstance(x, int):
            return Poly.constant(x, ZZ)
        raise RingMismatchError(f"cannot coerce {x!r} into ZZ[t]")

    def exact_div(self, a: Poly, b: Poly) -> Poly:
        """Exact division in ZZ[t]; every intermediate quotient stays integral."""
        if b.is_zero:
            raise DomainError("division by the zero polynomial")
        rem = list(a.coeffs)
        dq = len(rem) - len(b.coeffs)
        if a.is_zero:
            return a
        if dq < 0:
            raise DomainError("inexact division in ZZ[t]")
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c, r = divmod(rem[k + b.degree], b.lc)
            if r:
                raise DomainError("inexact division in ZZ[t]")
            quot[k] = c
            if c:
                for j, bc in enumerate(b.coeffs):
                    rem[k + j] = rem[k + j] - c * bc
        if any(rem):
            raise DomainError("inexact division in ZZ[t]")
        return Poly(quot, ZZ)

    def __repr__(self):
        return self.name


ZZ_T = _IntPolyRing()


def as_rational(f: Poly) -> Poly:
    """Re-read an integer polynomial over QQ."""
    if f.ring is QQ:
        return f
    if f.ring is not ZZ:
        raise RingMismatchError("as_rational expects a ZZ polynomial")
    return f.map_coeffs(Fraction, QQ)


# ---------------------------------------------------------------------------
# gcd machinery
# ---------------------------------------------------------------------------


def _int_content(coeffs) -> int:
    from math import gcd as igcd

    g = 0
    for c in coeffs:
        g = igcd(g, abs(c))
    return g or 1


def _int_primitive(coeffs: list[int]) -> list[int]:
    g = _int_content(coeffs)
    if coeffs and coeffs[-1] < 0:
        g = -g
    return [c // g for c in coeffs]


def _int_prem(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder of lc(g)**(deg f - deg g + 1) * f by g, over ZZ."""
    f = list(f)
    lg = g[-1]
    while len(f) >= len(g) and any(f):
        if f[-1] == 0:
            f.pop()
            continue
        top = f[-1]
        shift = len(f) - len(g)
        f = [c * lg for c in f]
        for j, b in enumerate(g):
            f[shift + j] -= top * b
        while f and f[-1] == 0:
            f.pop()
    return f


def _int_prs_gcd(f: list[int], g: list[int]) -> list[int]:
    """Primitive polynomial remainder sequence gcd over ZZ (primitive output)."""
    a, b = _int_primitive(list(f)), _int_primitive(list(g))
    if len(a) < len(b):
        a, b = b, a
    while any(b):
        r = _int_prem(a, b)
        a, b = b, _int_primitive(r) if any(r) else []
    return _int_primitive(a)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Greatest common divisor.

    Over a finite field the result is monic; over QQ it is monic and computed
    via a primitive remainder sequence on cleared denominators (no rational
    coefficient blowup); over ZZ it is the primitive gcd with positive lc.
    """
    if f.ring != g.ring:
        raise RingMismatchError("gcd over mixed rings")
    ring = f.ring
    if f.is_zero:
        return g.monic() if ring.is_field and not g.is_zero else g
    if g.is_zero:
        return f.monic() if ring.is_field else f
    if ring is ZZ:
        return Poly(_int_prs_gcd(list(f.coeffs), list(g.coeffs)), ZZ)
    if ring is QQ:
        fi = _clear_denominators(f)
        gi = _clear_denominators(g)
        h = _int_prs_gcd(fi, gi)
        return as_rational(Poly(h, ZZ)).monic()
    # finite field: plain Euclid
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def _clear_denominators(f: Poly) -> list[int]:
    from math import lcm

    m = 1
    for c in f.coeffs:
        m = lcm(m, Fraction(c).denominator)
    return [int(c * m) for c in f.coeffs]


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------


def _sylvester(f: Poly, g: Poly):
    """Sylvester matrix of f, g as a list of rows (size (m+n) x (m+n))."""
    m, n = f.degree, g.degree
    size = m + n
    zero = f.ring.zero
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def _bareiss_det(rows, ring):
    """Fraction-free determinant; exact over any integral domain."""
    n = len(rows)
    if n == 0:
        return ring.one
    m = [row[:] for row in rows]
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if m[k][k] == ring.zero:
            for i in range(k + 1, n):
                if m[i][k] != ring.zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ring.zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = ring.exact_div(pivot * m[i][j] - m[i][k] * m[k][j], prev)
            m[i][k] = ring.zero
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant(f: Poly, g: Poly):
    """Sylvester-matrix resultant Res(f, g); zero iff f, g share a factor of
    positive degree."""
    if not isinstance(f, Poly) or not isinstance(g, Poly) or f.ring != g.ring:
        raise RingMismatchError("resultant over mixed rings")
    if f.is_zero and g.is_zero:
        raise DomainError("resultant of two zero polynomials")
    ring = f.ring
    if f.is_zero or g.is_zero:
        return ring.zero
    if f.degree == 0 and g.degree == 0:
        return ring.one
    if f.degree == 0:
        return f.lc ** g.degree
    if g.degree == 0:
        return g.lc ** f.degree
    return _bareiss_det(_sylvester(f, g), ring)


def _disc_sign(d: int) -> int:
    return -1 if (d * (d - 1) // 2) % 2 else 1


def discriminant(f: Poly):
    """disc(f) = (-1)**(d(d-1)/2) * Res(f, f') / lc(f).

    Over ZZ[t] coefficients this is computed by evaluation at integer nodes
    followed by exact interpolation (the node count covers the Sylvester
    degree bound, never fewer than 67), then cross-checked against direct
    fraction-free elimination on the bivariate Sylvester matrix.
    """
    d = f.degree
    if d < 2:
        raise DomainError("discriminant needs degree >= 2")
    if f.ring is ZZ_T:
        return _discriminant_bivariate(f)
    res = resultant(f, f.derivative())
    val = res if _disc_sign(d) == 1 else -res
    return f.ring.exact_div(val, f.lc)


def _interpolate_integer(points: list[tuple[int, int]]) -> Poly:
    """Exact Newton divided-difference interpolation; result must be in ZZ[t]."""
    xs = [Fraction(x) for x, _ in points]
    table = [Fraction(y) for _, y in points]
    n = len(points)
    coeffs_newton = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(n - level)
        ]
        coeffs_newton.append(table[0])
    # expand the Newton form ascending in t
    poly = Poly.zero(QQ)
    basis = Poly.one(QQ)
    for i, c in enumerate(coeffs_newton):
        poly = poly + basis * c
        basis = basis * Poly([-xs[i], Fraction(1)], QQ)
    ints = []
    for c in poly.coeffs:
        if c.denominator != 1:
            raise DomainError("interpolation produced a non-integer coefficient")
        ints.append(c.numerator)
    return Poly(ints, ZZ)


def _discriminant_bivariate(f: Poly) -> Poly:
    d = f.degree
    df = f.derivative()
    lc_t: Poly = f.lc
    bound = df.degree * max(c.degree for c in f.coeffs) + d * max(
        c.degree for c in df.coeffs
    )
    needed = max(bound + 1, 67)
    points = []
    tau = 0
    while len(points) < needed:
        if lc_t.evaluate(tau) != 0 and df.lc.evaluate(tau) != 0:
            f_tau = Poly([c.evaluate(tau) for c in f.coeffs], ZZ)
            res_tau = resultant(f_tau, f_tau.derivative())
            points.append((tau, res_tau))
        tau += 1
    res_t = _interpolate_integer(points)
    sign = _disc_sign(d)
    disc = ZZ_T.exact_div(res_t if sign == 1 else -res_t, lc_t)
    # cross-check: fraction-free Sylvester elimination directly over ZZ[t]
    res_direct = resultant(f, df)
    disc_direct = ZZ_T.exact_div(
        res_direct if sign == 1 else -res_direct, lc_t
    )
    if disc != disc_direct:
        raise AssertionError("interpolated discriminant disagrees with elimination")
    return disc


# ---------------------------------------------------------------------------
# squarefreeness and squarefree decomposition
# ---------------------------------------------------------------------------


def is_squarefree(f: Poly) -> bool:
    """True iff gcd(f, f') is constant.

    In characteristic p a vanishing derivative means f is a p-th power
    pattern; that returns False.
    """
    if f.is_zero:
        raise DomainError("squarefreeness of the zero polynomial")
    df = f.derivative()
    if df.is_zero:
        return f.ring.char == 0  # char 0: f is a nonzero constant
    return poly_gcd(f, df).degree == 0


def _pth_root(f: Poly) -> Poly:
    """p-th root of f = g(x**p) over F_q (q = p**k, Frobenius is invertible)."""
    ring = f.ring
    p = ring.char
    root_exp = ring.size // p  # a ** (q/p) is the p-th root of a
    coeffs = []
    for i in range(0, f.degree + 1, p):
        c = f.coeff(i)
        coeffs.append(c ** root_exp if root_exp > 1 else c)
    return Poly(coeffs, ring)


def squarefree_decomposition(f: Poly):
    """Return (c, [(g, m), ...]) with f = c * prod(g**m), each g monic
    squarefree, pairwise coprime, sorted by (degree, coefficients)."""
    ring = f.ring
    if not (ring.is_field and ring.char > 0):
        raise DomainError("squarefree decomposition needs a finite field")
    if f.is_zero:
        raise DomainError("zero polynomial")
    c = f.lc
    factors: dict[Poly, int] = {}

    def accumulate(g: Poly, mult: int):
        if g.degree < 1:
            return
        dg = g.derivative()
        if dg.is_zero:
            accumulate(_pth_root(g), mult * ring.char)
            return
        a = poly_gcd(g, dg)
        w = g.divmod(a)[0]
        i = 1
        while w.degree > 0:
            y = poly_gcd(w, a)
            z = w.divmod(y)[0]
            if z.degree > 0:
                factors[z] = factors.get(z, 0) + mult * i
            i += 1
            w = y
            a = a.divmod(y)[0]
        if a.degree > 0:
            accumulate(_pth_root(a), mult * ring.char)

    accumulate(f.monic(), 1)
    ordered = sorted(
        factors.items(),
        key=lambda kv: (kv[0].degree, tuple(str(c) for c in kv[0].coeffs)),
    )
    return c, ordered


def square_part(f: Poly):
    """Write f = c * j**2 * h over F_q (q odd) with j, h monic, h squarefree.

    Returns (j, h, c)."""
    ring = f.ring
    if not (ring.is_field and ring.char > 0):
        raise DomainError("square_part needs a finite field")
    if ring.char == 2:
        raise UnsupportedCharacteristicError("square_part needs odd q")
    c, factors = squarefree_decomposition(f)
    j = Poly.one(ring)
    h = Poly.one(ring)
    for g, m in factors:
        if m // 2:
            j = j * g ** (m // 2)
        if m % 2:
            h = h * g
    return j, h, c


def is_square_over_closure(f: Poly) -> bool:
    """True iff every irreducible factor of f has even multiplicity, i.e.
    f is a square over the algebraic closure (scalars are always squares there)."""
    _, h, _ = square_part(f)
    return h.degree == 0


# ---------------------------------------------------------------------------
# irreducibility mod p (fast int-list arithmetic) and over Q
# ---------------------------------------------------------------------------


def _ip_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _ip_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ip_rem(out, mod, p)


def _ip_rem(a: list[int], mod: list[int], p: int) -> list[int]:
    a = list(a)
    dm = len(mod) - 1
    inv = pow(mod[-1], -1, p)
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k] * inv % p
        if c:
            off = k - dm
            for j, mj in enumerate(mod):
                a[off + j] = (a[off + j] - c * mj) % p
    del a[dm:]
    return _ip_trim(a)


def _ip_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _ip_trim(list(a)), _ip_trim(list(b))
    while b:
        a = _ip_rem(a, b, p)
        a, b = b, a
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _ip_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    while e:
        if e & 1:
            result = _ip_mulmod(result, base, mod, p)
        base = _ip_mulmod(base, base, mod, p)
        e >>= 1
    return result


def irreducible_intlist_mod_p(f: list[int], p: int) -> bool:
    """Distinct-degree irreducibility test for f over F_p (int coefficient list).

    Walks h = x**(p**d) mod f for d = 1..deg/2 by iterated Frobenius
    (modular exponentiation by repeated squaring); a nonconstant
    gcd(f, h - x) exposes a factor of degree <= d.  Surviving the walk,
    f has no factor of degree <= deg/2 and is irreducible.
    """
    f = [c % p for c in f]
    _ip_trim(f)
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    h = [0, 1]
    for _d in range(1, n // 2 + 1):
        h = _ip_powmod(h, p, f, p)
        diff = list(h) + [0] * (2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _ip_gcd(f, _ip_trim(diff), p)
        if len(g) - 1 > 0:
            return False
    return True


def irreducible_mod_p(f: Poly) -> bool:
    """Irreducibility of f over a prime field F_p."""
    ring = f.ring
    if not (ring.is_field and ring.char > 0 and ring.size == ring.char):
        raise DomainError("irreducible_mod_p needs a prime-field polynomial")
    if f.is_zero:
        raise DomainError("zero polynomial")
    lift = getattr(ring, "lift", None)
    coeffs = [lift(c) if lift else int(c) for c in f.coeffs]
    return irreducible_intlist_mod_p(coeffs, ring.char)


@dataclass
class QIrreducibilityCertificate:
    """Outcome of the single-prime irreducibility certificate over Q.

    status is one of "irreducible" (witness_prime set), "reducible"
    (factor set, as a Poly over QQ), or "inconclusive" (no witness below
    the scan bound; reducibility is NOT inferred).
    """

    status: str
    witness_prime: int | None = None
    factor: Poly | None = None
    bound: int = 1000


def _monic_int_quartic_quadratic_split(c: list[int]):
    """Split a monic integer quartic into two monic integer quadratics, if possible.

    c is [c0, c1, c2, c3] for x^4 + c3 x^3 + c2 x^2 + c1 x + c0.
    Returns ((u, v), (w, z)) with x^2+ux+v and x^2+wx+z, or None.
    """
    from math import isqrt

    c0, c1, c2, c3 = c
    if c0 == 0:
        return None  # root 0; the rational-root check catches this first
    divs = []
    for v in range(1, abs(c0) + 1):
        if abs(c0) % v == 0:
            divs.extend([v, -v])
    for v in divs:
        z = c0 // v
        # u + w = c3, u*w = c2 - v - z, u*z + v*w = c1
        s2 = c3 * c3 - 4 * (c2 - v - z)
        if s2 < 0:
            continue
        s = isqrt(s2)
        if s * s != s2:
            continue
        for sg in ((s,) if s == 0 else (s, -s)):
            if (c3 + sg) % 2:
                continue
            u = (c3 + sg) // 2
            w = c3 - u
            if u * z + v * w == c1:
                return ((u, v), (w, z))
    return None


def rational_roots(f: Poly) -> list[Fraction]:
    """All rational roots with multiplicity (ascending), by divisor enumeration
    over numerator/denominator candidates after clearing denominators."""
    if f.is_zero:
        return []
    fr = as_rational(f) if f.ring is ZZ else f
    if fr.ring is not QQ:
        raise RingMismatchError("rational_roots expects a QQ (or ZZ) polynomial")
    ints = _int_primitive(_clear_denominators(fr))
    # strip powers of x
    k = 0
    while ints[k] == 0:
        k += 1
    roots = [Fraction(0)] * k
    g = Poly(ints[k:], ZZ)
    if g.degree >= 1:
        c0, cl = abs(g.coeffs[0]), abs(g.lc)
        num_divs = [d for d in range(1, c0 + 1) if c0 % d == 0]
        den_divs = [d for d in range(1, cl + 1) if cl % d == 0]
        gq = as_rational(g)
        for r in num_divs:
            for s in den_divs:
                from math import gcd as igcd

                if igcd(r, s) != 1:
                    continue
                for cand in (Fraction(r, s), Fraction(-r, s)):
                    while gq.evaluate(cand) == 0:
                        roots.append(cand)
                        gq = gq.divmod(Poly([-cand, Fraction(1)], QQ))[0]
    return sorted(roots)


def irreducible_over_Q_certificate(f: Poly, bound: int = 1000) -> QIrreducibilityCertificate:
    """Single-prime irreducibility certificate for an integer polynomial.

    Pre-checks rational roots (cheap cases only) and, for quartics,
    monic-quadratic factorizations after monicizing.  Then scans primes
    p < bound with p not dividing lc(f) for the least p with f mod p
    irreducible.  Absence of a witness yields "inconclusive", never a
    reducibility claim.
    """
    if f.ring is QQ:
        f = Poly(_clear_denominators(f), ZZ)
    if f.ring is not ZZ:
        raise RingMismatchError("certificate expects an integer polynomial")
    if f.is_zero:
        raise DomainError("zero polynomial")
    coeffs = _int_primitive(list(f.coeffs))
    f = Poly(coeffs, ZZ)
    n = f.degree
    if n < 1:
        raise DomainError("certificate needs positive degree")
    if n == 1:
        return QIrreducibilityCertificate("irreducible", witness_prime=None, bound=bound)
    # rational-root pre-check, only when the divisor enumeration is cheap
    if abs(f.coeffs[0]) <= 10 ** 6 or f.coeffs[0] == 0:
        rr = rational_roots(f)
        if rr:
            r = rr[0]
            return QIrreducibilityCertificate(
                "reducible",
                factor=Poly([-r, Fraction(1)], QQ),
                bound=bound,
            )
    if n == 4:
        # monicize y = lc*x: g(y) = lc^3 f(y / lc), monic with the same splitting
        L = f.lc
        g = [f.coeffs[0] * L ** 3, f.coeffs[1] * L ** 2, f.coeffs[2] * L, f.coeffs[3]]
        split = _monic_int_quartic_quadratic_split(g)
        if split is not None:
            (u, v), _ = split
            # x^2 + u y + v with y = lc*x pulls back to lc^2 x^2 + u lc x + v
            factor = Poly([Fraction(v), Fraction(u * L), Fraction(L * L)], QQ).monic()
            return QIrreducibilityCertificate("reducible", factor=factor, bound=bound)
    for p in primes_below(bound):
        if f.lc % p == 0:
            continue
        if irreducible_intlist_mod_p([c % p for c in f.coeffs], p):
            return QIrreducibilityCertificate("irreducible", witness_prime=p, bound=bound)
    return QIrreducibilityCertificate("inconclusive", bound=bound)
