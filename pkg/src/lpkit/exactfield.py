"""Exact arithmetic over Q, Q(sqrt(D)) and GF(p^k).

A field is described by a small immutable descriptor (:class:`Rationals`,
:class:`QuadraticExtension`, :class:`FiniteField`).  Calling a descriptor
coerces ints, fractions and strings into :class:`Scalar` values of that field::

    >>> F = FiniteField(13)
    >>> F(5) * F(8)
    Scalar(GF(13), '[1]')

Scalars support ``+ - * / **`` with each other and with plain ints, and compare
exactly.  Nothing here ever touches floating point.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .errors import DivisionByZero, FieldMismatch, NoRootInField, ParseError

__all__ = [
    "Field",
    "Rationals",
    "QuadraticExtension",
    "FiniteField",
    "Scalar",
    "field_from_json",
    "characteristic",
    "solve_unit_quadratic",
    "require_unit_root",
    "DEFAULT_MODULI",
]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")

# Low-to-high coefficient lists of monic irreducible polynomials.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (5, 2): (2, 0, 1),
    (13, 2): (2, 0, 1),
}


def _parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"not a rational number: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None


def _rational_sqrt(x: Fraction):
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _squarefree_part(n: int) -> int:
    """Squarefree integer s with n = s * m^2."""
    sign = -1 if n < 0 else 1
    out = 1
    for prime, exp in sympy.factorint(abs(n)).items():
        if exp % 2:
            out *= prime
    return sign * out


class Field:
    """Common interface of the field descriptors.

    Subclasses work on raw canonical values (Fraction, pairs, ints or tuples);
    :class:`Scalar` wraps those values together with their field.
    """

    characteristic: int = 0
    is_finite: bool = False

    # --- construction -------------------------------------------------
    def __call__(self, x) -> "Scalar":
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field} element used in {self}")
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a field element")
        if isinstance(x, int):
            return Scalar(self, self._from_int(x))
        if isinstance(x, Fraction):
            return Scalar(self, self._from_fraction(x))
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    @property
    def zero(self) -> "Scalar":
        return Scalar(self, self._from_int(0))

    @property
    def one(self) -> "Scalar":
        return Scalar(self, self._from_int(1))

    def _from_fraction(self, x: Fraction):
        num = self._from_int(x.numerator)
        den = self._from_int(x.denominator)
        if self._is_zero(den):
            raise DivisionByZero(f"denominator {x.denominator} vanishes in {self}")
        return self._mul(num, self._inv(den))

    def parse(self, text) -> "Scalar":
        raise NotImplementedError

    def encode(self, value) -> str:
        raise NotImplementedError

    def sqrt(self, x: "Scalar"):
        """A square root of x in this field, or None."""
        raise NotImplementedError

    def sort_key(self, value):
        return value

    def extension_hint(self, x: "Scalar") -> str:
        """Name of an extension in which x has a square root."""
        raise NotImplementedError


@dataclass(frozen=True)
class Rationals(Field):
    def __str__(self):
        return "Q"

    def _from_int(self, n):
        return Fraction(n)

    def _from_fraction(self, x):
        return x

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def parse(self, text):
        if isinstance(text, int) and not isinstance(text, bool):
            return self(text)
        if not isinstance(text, str):
            raise ParseError(f"expected a rational string, got {text!r}")
        return Scalar(self, _parse_rational(text))

    def encode(self, value):
        return str(value)

    def sqrt(self, x):
        r = _rational_sqrt(x.value)
        return None if r is None else Scalar(self, r)

    def extension_hint(self, x):
        v = x.value
        return f"Q(sqrt({_squarefree_part(v.numerator * v.denominator)}))"

    def to_json(self):
        return {"kind": "Q"}


@dataclass(frozen=True)
class QuadraticExtension(Field):
    """Q(r) with r^2 = D; values are pairs (a, b) meaning a + b*r."""

    D: int

    def __post_init__(self):
        if not isinstance(self.D, int) or self.D == 0:
            raise ValueError("D must be a nonzero integer")
        if _squarefree_part(self.D) != self.D or self.D == 1:
            raise ValueError(f"D = {self.D} must be squarefree and not a perfect square")

    def __str__(self):
        return f"Q(sqrt({self.D}))"

    def _from_int(self, n):
        return (Fraction(n), Fraction(0))

    def _from_fraction(self, x):
        return (x, Fraction(0))

    def _add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def _sub(self, x, y):
        return (x[0] - y[0], x[1] - y[1])

    def _mul(self, x, y):
        a, b = x
        c, d = y
        return (a * c + self.D * b * d, a * d + b * c)

    def _neg(self, x):
        return (-x[0], -x[1])

    def _inv(self, x):
        a, b = x
        norm = a * a - self.D * b * b
        return (a / norm, -b / norm)

    def _is_zero(self, x):
        return x[0] == 0 and x[1] == 0

    def parse(self, text):
        if isinstance(text, int) and not isinstance(text, bool):
            return self(text)
        if not isinstance(text, str):
            raise ParseError(f"expected an 'a+b*r' string, got {text!r}")
        s = text.replace(" ", "")
        if not s.endswith("*r"):
            return Scalar(self, (_parse_rational(s), Fraction(0)))
        body = s[:-2]
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut <= 0:
            a, b = "0", body
        else:
            a, b = body[:cut], body[cut:]
            if a.endswith("+"):
                a = a[:-1]
            if b.startswith("+"):
                b = b[1:]
        return Scalar(self, (_parse_rational(a), _parse_rational(b)))

    def encode(self, value):
        a, b = value
        if b == 0:
            return str(a)
        if a == 0:
            return f"{b}*r"
        sign = "+" if b > 0 else "-"
        return f"{a}{sign}{abs(b)}*r"

    def sqrt(self, x):
        a, b = x.value
        if b == 0:
            r = _rational_sqrt(a)
            if r is not None:
                return Scalar(self, (r, Fraction(0)))
            # a = c^2 * D  ->  sqrt(a) = c * r
            c = _rational_sqrt(a / self.D)
            return None if c is None else Scalar(self, (Fraction(0), c))
        # (u + v r)^2 = u^2 + D v^2 + 2uv r
        s = _rational_sqrt(a * a - self.D * b * b)
        if s is None:
            return None
        for cand in ((a + s) / 2, (a - s) / 2):
            u = _rational_sqrt(cand)
            if u:
                return Scalar(self, (u, b / (2 * u)))
        return None

    def sort_key(self, value):
        return value

    def extension_hint(self, x):
        return f"a degree-2 extension of {self}"

    def to_json(self):
        return {"kind": "Qsqrt", "D": self.D}


def _find_irreducible(p: int, k: int):
    for tail in itertools.product(range(p), repeat=k):
        coeffs = tuple(reversed(tail)) + (1,)
        if _is_irreducible(coeffs, p):
            return coeffs
    raise ValueError(f"no irreducible polynomial of degree {k} over GF({p})")


def _is_irreducible(coeffs, p: int) -> bool:
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(coeffs)), x, modulus=p)
    return poly.degree() == len(coeffs) - 1 and poly.is_irreducible


@dataclass(frozen=True)
class FiniteField(Field):
    """GF(p^k) as GF(p)[x]/(modulus).

    Values are ints in [0, p) for k = 1 and length-k coefficient tuples
    (low degree first) otherwise.  ``modulus`` is the monic low-to-high
    coefficient tuple of length k + 1; it defaults to :data:`DEFAULT_MODULI`
    or, failing that, the first irreducible polynomial found by search.
    """

    p: int
    k: int = 1
    modulus: tuple = field(default=None)

    def __post_init__(self):
        if not sympy.isprime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 1:
            raise ValueError("k must be positive")
        mod = self.modulus
        if mod is None:
            if self.k == 1:
                mod = (0, 1)
            else:
                mod = DEFAULT_MODULI.get((self.p, self.k)) or _find_irreducible(self.p, self.k)
        mod = tuple(int(c) % self.p for c in mod)
        if len(mod) != self.k + 1 or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {self.k}")
        if self.k > 1 and not _is_irreducible(mod, self.p):
            raise ValueError(f"modulus {mod} is reducible over GF({self.p})")
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "characteristic", self.p)

    is_finite = True

    def __str__(self):
        return f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"

    @property
    def order(self) -> int:
        return self.p ** self.k

    def _from_int(self, n):
        n %= self.p
        return n if self.k == 1 else (n,) + (0,) * (self.k - 1)

    def _add(self, x, y):
        if self.k == 1:
            return (x + y) % self.p
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def _sub(self, x, y):
        if self.k == 1:
            return (x - y) % self.p
        return tuple((a - b) % self.p for a, b in zip(x, y))

    def _neg(self, x):
        if self.k == 1:
            return -x % self.p
        return tuple(-a % self.p for a in x)

    def _mul(self, x, y):
        p, k = self.p, self.k
        if k == 1:
            return x * y % p
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    prod[i + j] += a * b
        mod = self.modulus
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg] % p
            if c:
                shift = deg - k
                for j in range(k):
                    prod[shift + j] -= c * mod[j]
        return tuple(c % p for c in prod[:k])

    def _inv(self, x):
        if self.k == 1:
            return pow(x, -1, self.p)
        return self._pow(x, self.order - 2)

    def _pow(self, x, e):
        result = self._from_int(1)
        while e:
            if e & 1:
                result = self._mul(result, x)
            x = self._mul(x, x)
            e >>= 1
        return result

    def _is_zero(self, x):
        return x == 0 if self.k == 1 else not any(x)

    def element(self, index: int) -> "Scalar":
        """Element with base-p digits ``index`` (coefficient c0 least significant)."""
        if self.k == 1:
            return Scalar(self, index % self.p)
        digits = []
        for _ in range(self.k):
            index, c = divmod(index, self.p)
            digits.append(c)
        return Scalar(self, tuple(digits))

    def elements(self):
        """All field elements in index order."""
        return [self.element(i) for i in range(self.order)]

    def nonzero_elements(self):
        return [self.element(i) for i in range(1, self.order)]

    def sort_key(self, value):
        if self.k == 1:
            return value
        return sum(c * self.p ** i for i, c in enumerate(value))

    def parse(self, text):
        if isinstance(text, int) and not isinstance(text, bool):
            return self(text)
        if isinstance(text, list):
            coeffs = text
        elif isinstance(text, str):
            s = text.strip()
            if s.startswith("[") and s.endswith("]"):
                inner = s[1:-1].strip()
                try:
                    coeffs = [int(c) for c in inner.split(",")] if inner else []
                except ValueError:
                    raise ParseError(f"bad GF coefficient list {text!r}") from None
            elif re.match(r"^[+-]?\d+$", s):
                return self(int(s))
            else:
                raise ParseError(f"bad GF element {text!r}")
        else:
            raise ParseError(f"bad GF element {text!r}")
        if len(coeffs) != self.k:
            raise ParseError(f"{text!r}: expected {self.k} coefficients")
        coeffs = [c % self.p for c in coeffs]
        return Scalar(self, coeffs[0] if self.k == 1 else tuple(coeffs))

    def encode(self, value):
        coeffs = [value] if self.k == 1 else list(value)
        return "[" + ",".join(str(c) for c in coeffs) + "]"

    def sqrt(self, x):
        if x.is_zero():
            return x
        if self.p == 2:
            # Frobenius has order k, so x^(2^(k-1)) squares to x.
            return x ** (2 ** (self.k - 1))
        n = self.order - 1
        if x ** (n // 2) != 1:
            return None
        q, s = n, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = next(e for e in self.nonzero_elements() if e ** (n // 2) != 1)
        m, c, t, r = s, z ** q, x ** q, x ** ((q + 1) // 2)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2
                i += 1
            b = c ** (2 ** (m - i - 1))
            m, c = i, b * b
            t, r = t * c, r * b
        return r

    def extension_hint(self, x):
        return f"GF({self.p}^{2 * self.k})"

    def to_json(self):
        return {"kind": "GF", "p": self.p, "k": self.k, "modulus": list(self.modulus)}


def field_from_json(obj) -> Field:
    """Inverse of ``Field.to_json``."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError(f"field descriptor must be an object with 'kind': {obj!r}")
    kind = obj["kind"]
    try:
        if kind == "Q":
            return Rationals()
        if kind == "Qsqrt":
            return QuadraticExtension(int(obj["D"]))
        if kind == "GF":
            mod = obj.get("modulus")
            return FiniteField(int(obj["p"]), int(obj.get("k", 1)),
                               None if mod is None else tuple(mod))
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseError(f"bad field descriptor {obj!r}: {exc}") from None
    raise ParseError(f"unknown field kind {kind!r}")


class Scalar:
    """An element of an exact field."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} and {other.field}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field._from_int(other)
        if isinstance(other, Fraction):
            return self.field._from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field._add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field._sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field._sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, self.field._mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if self.field._is_zero(o):
            raise DivisionByZero(f"division by zero in {self.field}")
        return Scalar(self.field, self.field._mul(self.value, self.field._inv(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar(self.field, o) / self

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.value))

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        result = self.field.one
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero(f"zero has no inverse in {self.field}")
        return Scalar(self.field, self.field._inv(self.value))

    def is_zero(self) -> bool:
        return self.field._is_zero(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            o = self._other(other)
        except FieldMismatch:
            return False
        if o is NotImplemented:
            return NotImplemented
        return self.value == o

    def __hash__(self):
        return hash((self.field, self.value))

    def sort_key(self):
        return self.field.sort_key(self.value)

    def __str__(self):
        return self.field.encode(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {str(self)!r})"


def characteristic(f: Field) -> int:
    return f.characteristic


def solve_unit_quadratic(beta: Scalar) -> tuple:
    """Roots q of q^2 - beta*q + 1 = 0 lying in beta's field, sorted.

    The result is closed under q -> 1/q; a double root is listed once and an
    empty tuple means the field is too small.
    """
    F = beta.field
    if F.characteristic == 2:
        if beta.is_zero():
            return (F.one,)
        roots = [q for q in F.nonzero_elements() if q * q - beta * q + 1 == 0]
    else:
        disc = beta * beta - 4
        if disc.is_zero():
            return (beta / 2,)
        s = F.sqrt(disc)
        if s is None:
            return ()
        roots = [(beta + s) / 2, (beta - s) / 2]
    return tuple(sorted(set(roots), key=Scalar.sort_key))


def require_unit_root(beta: Scalar) -> Scalar:
    """First root of q + 1/q = beta, or NoRootInField naming a sufficient extension."""
    roots = solve_unit_quadratic(beta)
    if not roots:
        F = beta.field
        hint = F.extension_hint(beta * beta - 4)
        raise NoRootInField(f"q + 1/q = {beta} has no root in {F}; try {hint}", hint)
    return roots[0]
