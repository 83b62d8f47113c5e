"""Arithmetic in F_p and F_{p^k}: contexts, elements, quadratic characters.

Extension fields use the lexicographically least monic irreducible modulus
(constant coefficient varying fastest), verified irreducible at construction.
Elements are canonical residue tuples of length k; everything is immutable
and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .polyring import (
    DomainError,
    Poly,
    RingMismatchError,
    UnsupportedCharacteristicError,
    irreducible_intlist_mod_p,
)
from .primes import is_prime


@dataclass(frozen=True)
class FqCtx:
    """A finite field F_q with q = p**k, as prime + modulus polynomial."""

    p: int
    k: int
    modulus: tuple[int, ...]  # monic, ascending, length k+1 (k=1: x itself)
    q: int

    def label(self) -> str:
        return f"F{self.q}"

    def zero(self) -> "FqElem":
        return FqElem(self, (0,) * self.k)

    def one(self) -> "FqElem":
        return self.from_int(1)

    def gen(self) -> "FqElem":
        """The residue class of x (for k = 1 this is 0)."""
        res = [0] * self.k
        if self.k > 1:
            res[1] = 1
        return FqElem(self, tuple(res))

    def from_int(self, n: int) -> "FqElem":
        res = [0] * self.k
        res[0] = n % self.p
        return FqElem(self, tuple(res))

    def element(self, coeffs) -> "FqElem":
        res = [c % self.p for c in coeffs]
        if len(res) > self.k:
            raise DomainError("residue longer than extension degree")
        res += [0] * (self.k - len(res))
        return FqElem(self, tuple(res))


def fq_make(p: int, k: int) -> FqCtx:
    """Build F_{p^k} deterministically.

    The modulus is the lexicographically least monic irreducible of degree k
    over F_p, constant coefficient varying fastest; for k = 1 it is x itself
    and arithmetic is plain mod p.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if k < 1:
        raise DomainError("extension degree must be >= 1")
    if k == 1:
        return FqCtx(p, 1, (0, 1), p)
    for m in range(p ** k):
        digits = []
        n = m
        for _ in range(k):
            digits.append(n % p)
            n //= p
        cand = digits + [1]
        if irreducible_intlist_mod_p(cand, p):
            return FqCtx(p, k, tuple(cand), p ** k)
    raise AssertionError("no irreducible modulus found")  # unreachable


class FqElem:
    """An element of F_q as its reduced residue polynomial."""

    __slots__ = ("ctx", "residue")

    def __init__(self, ctx: FqCtx, residue: tuple[int, ...]):
        self.ctx = ctx
        self.residue = residue

    def _coerce(self, other) -> "FqElem":
        if isinstance(other, FqElem):
            if other.ctx != self.ctx:
                raise RingMismatchError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.ctx.from_int(other)
        raise RingMismatchError(f"cannot coerce {other!r} into {self.ctx.label()}")

    def __add__(self, other):
        other = self._coerce(other)
        p = self.ctx.p
        return FqElem(
            self.ctx, tuple((a + b) % p for a, b in zip(self.residue, other.residue))
        )

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FqElem(self.ctx, tuple((-a) % p for a in self.residue))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        ctx = self.ctx
        p = ctx.p
        if ctx.k == 1:
            return FqElem(ctx, ((self.residue[0] * other.residue[0]) % p,))
        prod = [0] * (2 * ctx.k - 1)
        for i, a in enumerate(self.residue):
            if a:
                for j, b in enumerate(other.residue):
                    prod[i + j] = (prod[i + j] + a * b) % p
        # reduce by the monic modulus
        for idx in range(len(prod) - 1, ctx.k - 1, -1):
            c = prod[idx]
            if c:
                off = idx - ctx.k
                for j in range(ctx.k):
                    prod[off + j] = (prod[off + j] - c * ctx.modulus[j]) % p
            prod[idx] = 0
        return FqElem(ctx, tuple(prod[: ctx.k]))

    __rmul__ = __mul__

    def inverse(self) -> "FqElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        ctx = self.ctx
        p = ctx.p
        if ctx.k == 1:
            return FqElem(ctx, (pow(self.residue[0], -1, p),))
        # extended Euclid on residue and modulus over F_p
        r0, r1 = list(ctx.modulus), list(self.residue)
        s0, s1 = [0], [1]
        while any(r1):
            q, r = _fp_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _fp_sub(s0, _fp_mul(q, s1, p), p)
        inv_c = pow(r0[0], -1, p)  # r0 is a nonzero constant (modulus irreducible)
        out = [(c * inv_c) % p for c in s0]
        out += [0] * (ctx.k - len(out))
        return FqElem(ctx, tuple(out[: ctx.k]))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        result = self.ctx.one()
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.from_int(other)
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.ctx == other.ctx and self.residue == other.residue

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.k, self.residue))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.residue)

    def lift(self) -> int:
        """Integer representative in [0, p); prime fields only."""
        if self.ctx.k != 1:
            raise DomainError("lift() needs a prime-field element")
        return self.residue[0]

    def __str__(self):
        return ",".join(str(c) for c in self.residue)

    def __repr__(self):
        return f"{self.ctx.label()}({self})"


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_trim(out)


def _fp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _fp_trim(out)


def _fp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = _fp_trim(list(a))
    b = _fp_trim(list(b))
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = c
        for j, bc in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bc) % p
        _fp_trim(a)
        if not a:
            break
    return _fp_trim(q), a


class FqRing:
    """Coefficient-ring adapter so Poly can run over an FqCtx."""

    is_field = True

    def __init__(self, ctx: FqCtx):
        self.ctx = ctx
        self.name = ctx.label()
        self.char = ctx.p
        self.size = ctx.q
        self.zero = ctx.zero()
        self.one = ctx.one()

    def coerce(self, x):
        if isinstance(x, FqElem):
            if x.ctx != self.ctx:
                raise RingMismatchError("element of a different field")
            return x
        if isinstance(x, int):
            return self.ctx.from_int(x)
        raise RingMismatchError(f"cannot coerce {x!r} into {self.name}")

    def exact_div(self, a, b):
        return a / b

    def lift(self, e: FqElem) -> int:
        return e.lift()

    def __eq__(self, other):
        return isinstance(other, FqRing) and other.ctx == self.ctx

    def __hash__(self):
        return hash(("FqRing", self.ctx.p, self.ctx.k))

    def __repr__(self):
        return self.name


@lru_cache(maxsize=None)
def _ring_cached(ctx: FqCtx) -> FqRing:
    return FqRing(ctx)


def field_ring(ctx: FqCtx) -> FqRing:
    return _ring_cached(ctx)


def fq_enumerate(ctx: FqCtx) -> list[FqElem]:
    """All q elements, deterministic order (lex on residue, constant fastest)."""
    out = []
    for m in range(ctx.q):
        digits = []
        n = m
        for _ in range(ctx.k):
            digits.append(n % ctx.p)
            n //= ctx.p
        out.append(FqElem(ctx, tuple(digits)))
    return out


def quadratic_character(a: FqElem) -> int:
    """0 for a = 0, +1 for nonzero squares, -1 otherwise (odd q only)."""
    q = a.ctx.q
    if q % 2 == 0:
        raise UnsupportedCharacteristicError("quadratic character needs odd q")
    if a.is_zero():
        return 0
    return 1 if a ** ((q - 1) // 2) == a.ctx.one() else -1


def sqrt_in_fq(a: FqElem) -> FqElem | None:
    """Canonical square root: the first b in enumeration order with b*b = a."""
    for b in fq_enumerate(a.ctx):
        if b * b == a:
            return b
    return None


def poly_over(ctx: FqCtx, coeffs) -> Poly:
    """Convenience: a Poly over F_q from ints/elements."""
    return Poly(coeffs, field_ring(ctx))
