"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as its residue modulo the N-th cyclotomic polynomial,
i.e. a vector of phi(N) rational coefficients in the power basis
1, z, ..., z^(phi(N)-1) with z = zeta_N.  Coefficients are ``gmpy2.mpq``.

Conductor 1 is the rational field (modulus X - 1, constant residues).
Conductor 2 also has degree 1; there zeta_2 is the constant -1.
"""

from __future__ import annotations

import functools
import math
import re
from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

from .errors import DivisionByZero, IncompatibleConductor

__all__ = [
    "CycloField",
    "Scalar",
    "cyclotomic_polynomial",
    "field",
    "invert",
    "order_of_unity",
    "parse_scalar",
    "promote",
    "root_of_unity",
    "primitive_root",
    "natural_field",
]

_ZERO = mpq(0)
_ONE = mpq(1)


def _poly_divmod_int(num, den):
    """Exact division of integer polynomials (low-to-high coefficient lists)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(q) - 1, -1, -1):
        c, r = divmod(num[k + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    return q, num[: len(den) - 1]


@functools.cache
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, cyclotomic_polynomial(d))
            if any(rem):
                raise ArithmeticError("cyclotomic recursion failed")
    return tuple(poly)


class CycloField:
    """The field Q(zeta_N); instances are interned per conductor."""

    _cache: dict[int, "CycloField"] = {}

    def __new__(cls, conductor: int):
        conductor = int(conductor)
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        inst = cls._cache.get(conductor)
        if inst is None:
            inst = super().__new__(cls)
            inst._setup(conductor)
            cls._cache[conductor] = inst
        return inst

    def _setup(self, n):
        self.conductor = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1
        d = self.degree
        # X^k mod Phi_N for k in [d, 2d-2], as integer vectors; used by mul.
        self._fold = []
        cur = [0] * d
        if d:
            cur = [-c for c in self.modulus[:d]]  # X^d
        for _ in range(max(d - 1, 0)):
            self._fold.append(tuple(cur))
            # multiply by X and reduce
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] -= top * self.modulus[i]
        self._zero = Scalar._make(self, (_ZERO,) * d)
        self._one = Scalar._make(self, (_ONE,) + (_ZERO,) * (d - 1))

    def __repr__(self):
        return f"CycloField({self.conductor})"

    def __reduce__(self):
        return (CycloField, (self.conductor,))

    @property
    def zero(self) -> "Scalar":
        return self._zero

    @property
    def one(self) -> "Scalar":
        return self._one

    def __call__(self, value) -> "Scalar":
        """Coerce an int, Fraction, mpq, Scalar or scalar string into this field."""
        if isinstance(value, Scalar):
            if value.field is not self:
                raise IncompatibleConductor(
                    f"scalar lives in Q(zeta_{value.field.conductor}), expected Q(zeta_{self.conductor})")
            return value
        if isinstance(value, str):
            return parse_scalar(value, self)
        if isinstance(value, (int, Rational)) or type(value).__name__ == "mpq":
            q = mpq(value.numerator, value.denominator) if isinstance(value, Fraction) else mpq(value)
            return Scalar._make(self, (q,) + (_ZERO,) * (self.degree - 1))
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def from_coeffs(self, coeffs) -> "Scalar":
        """Build an element from power-basis coefficients of any length; reduces mod Phi_N."""
        return Scalar._make(self, self._reduce([_to_mpq(c) for c in coeffs]))

    def zeta(self, k: int = 1) -> "Scalar":
        return root_of_unity(self, k)

    def _reduce(self, coeffs):
        d = self.degree
        if len(coeffs) <= d:
            return tuple(coeffs) + (_ZERO,) * (d - len(coeffs))
        out = list(coeffs[:d])
        # generic long division by the monic modulus
        high = list(coeffs)
        for k in range(len(high) - 1, d - 1, -1):
            c = high[k]
            if c:
                for i in range(d):
                    m = self.modulus[i]
                    if m:
                        high[k - d + i] -= c * m
        out = high[:d]
        return tuple(out)


def field(conductor: int) -> CycloField:
    return CycloField(conductor)


def _to_mpq(c):
    if isinstance(c, Fraction):
        return mpq(c.numerator, c.denominator)
    return mpq(c)


class Scalar:
    """Immutable element of a cyclotomic field."""

    __slots__ = ("field", "coeffs")

    @classmethod
    def _make(cls, fld, coeffs):
        s = object.__new__(cls)
        s.field = fld
        s.coeffs = coeffs
        return s

    def __init__(self, fld: CycloField, coeffs):
        red = fld.from_coeffs(coeffs)
        self.field = fld
        self.coeffs = red.coeffs

    # coercion helper
    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise IncompatibleConductor(
                    f"Q(zeta_{self.field.conductor}) vs Q(zeta_{other.field.conductor})")
            return other
        try:
            return self.field(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Scalar._make(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Scalar._make(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Scalar._make(self.field, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        fld = self.field
        d = fld.degree
        if d == 1:
            return Scalar._make(fld, (a[0] * b[0],))
        prod = [_ZERO] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        low = prod[:d]
        for k, fold in enumerate(fld._fold):
            c = prod[d + k]
            if c:
                for i, f in enumerate(fold):
                    if f:
                        low[i] += c * f
        return Scalar._make(fld, tuple(low))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * invert(o)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * invert(self)

    def __pow__(self, n: int):
        n = int(n)
        if n < 0:
            return invert(self) ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise IncompatibleConductor(
                    f"cannot compare Q(zeta_{self.field.conductor}) with Q(zeta_{other.field.conductor});"
                    " promote first")
            return self.coeffs == other.coeffs
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field.conductor, self.coeffs))

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r}, N={self.field.conductor})"

    def __reduce__(self):
        return (parse_scalar, (format_scalar(self), self.field))


# --------------------------------------------------------------------------
# operations


def root_of_unity(fld: CycloField, k: int) -> Scalar:
    """zeta_N ** k as a residue of X^(k mod N)."""
    n = fld.conductor
    e = k % n
    coeffs = [_ZERO] * e + [_ONE]
    return Scalar._make(fld, fld._reduce(coeffs))


def primitive_root(fld: CycloField, e: int) -> Scalar:
    """A primitive e-th root of unity in fld (e must divide lcm(2, N))."""
    n = fld.conductor
    if n % e == 0:
        return root_of_unity(fld, n // e)
    if e % 2 == 0 and (e // 2) % 2 == 1 and n % (e // 2) == 0:
        return -root_of_unity(fld, n // (e // 2))
    raise IncompatibleConductor(f"Q(zeta_{n}) has no primitive {e}-th root of unity")


def natural_field(e: int) -> CycloField:
    """Smallest standard field holding the e-th roots of unity (Q for e <= 2)."""
    return field(1 if e <= 2 else e)


def _poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [_ZERO] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv_lead
        q[k] = c
        if c:
            for j, d in enumerate(b):
                a[k + j] -= c * d
    return _poly_trim(q), _poly_trim(a[: len(b) - 1])


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [_ZERO] * (n - len(a))
    b = list(b) + [_ZERO] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def invert(s: Scalar) -> Scalar:
    """Multiplicative inverse via the extended Euclidean algorithm with Phi_N."""
    if not s:
        raise DivisionByZero("inverse of zero")
    fld = s.field
    if fld.degree == 1:
        return Scalar._make(fld, (1 / s.coeffs[0],))
    # invariant: r_i = s_i * a  (mod Phi)
    r0 = _poly_trim([mpq(c) for c in fld.modulus])
    r1 = _poly_trim(list(s.coeffs))
    s0, s1 = [], [_ONE]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    c = r1[0]
    inv = [x / c for x in s1]
    return Scalar._make(fld, fld._reduce(inv))


def order_of_unity(s: Scalar) -> int | None:
    """Least n >= 1 with s**n == 1, or None if s is not a root of unity.

    Every root of unity in Q(zeta_N) has order dividing lcm(2, N), which
    bounds the search.
    """
    if not s:
        return None
    fld = s.field
    bound = math.lcm(2, fld.conductor)
    one = fld.one
    p = s
    for n in range(1, bound + 1):
        if p == one:
            return n if bound % n == 0 else None
        p = p * s
    return None


def promote(s: Scalar, target: CycloField) -> Scalar:
    """Image of s under the embedding zeta_N -> zeta_M^(M/N), for N | M."""
    src = s.field
    if src is target:
        return s
    n, m = src.conductor, target.conductor
    if m % n:
        raise IncompatibleConductor(f"conductor {n} does not divide {m}")
    if src.degree == 1 and n <= 2:
        return target(s.coeffs[0])
    step = m // n
    out = target.zero
    for k, c in enumerate(s.coeffs):
        if c:
            out = out + root_of_unity(target, k * step) * target(c)
    return out


# --------------------------------------------------------------------------
# text form:  "a0 + a1*z + a2*z^2" with exact rationals p/q and z = zeta_N

_TERM = re.compile(
    r"([+-])?"
    r"(?:(\d+(?:/\d+)?)(?:\*(?=z))?)?"
    r"(z(?:\^(\d+))?)?"
)


def parse_scalar(text: str, fld: CycloField) -> Scalar:
    src = "".join(str(text).split())
    if not src:
        raise ValueError("empty scalar")
    coeffs: dict[int, mpq] = {}
    pos = 0
    first = True
    while pos < len(src):
        m = _TERM.match(src, pos)
        if not m or m.end() == pos or (not first and m.group(1) is None):
            raise ValueError(f"cannot parse scalar {text!r} at offset {pos}")
        sign, num, zpart, exp = m.groups()
        if num is None and zpart is None:
            raise ValueError(f"cannot parse scalar {text!r} at offset {pos}")
        c = mpq(num) if num is not None else _ONE
        if sign == "-":
            c = -c
        k = 0 if zpart is None else (int(exp) if exp is not None else 1)
        coeffs[k] = coeffs.get(k, _ZERO) + c
        pos = m.end()
        first = False
    out = fld.zero
    for k, c in coeffs.items():
        out = out + root_of_unity(fld, k) * fld(c)
    return out


def format_scalar(s: Scalar) -> str:
    parts = []
    for k, c in enumerate(s.coeffs):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            zp = "z" if k == 1 else f"z^{k}"
            body = zp if mag == 1 else f"{mag}*{zp}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"
