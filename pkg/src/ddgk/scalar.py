"""Exact arithmetic in a number field Q(a) = Q[x]/(min_poly).

Elements are stored in the power basis 1, a, ..., a^(d-1) with
``fractions.Fraction`` entries.  Derivations of the coefficient field are not
modelled: every derivation of a finite extension of Q is zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    InvalidFieldAutomorphism,
    NotAnAutomorphism,
    ReducibleModulus,
    ZeroInversion,
)

GENERATOR_NAME = "a"


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact or boolean value {x!r}")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot read {x!r} as a rational")


# dense polynomials over Q, constant term first, no trailing zeros

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _psub(a, b):
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pdivmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        _trim(a)
    return _trim(q), a


def _pegcd(a, b):
    """Return (g, s) with g = gcd(a, b) monic and s*a = g mod b."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0]


class NumberField:
    """The field Q[x]/(min_poly); ``min_poly`` is monic, constant term first.

    Irreducibility is not checked here; a reducible modulus surfaces as
    ``ReducibleModulus`` the first time an inversion hits a zero divisor.
    """

    __slots__ = ("min_poly", "degree", "_fold")

    def __init__(self, min_poly: Sequence = (0, 1)):
        poly = _trim([to_fraction(c) for c in min_poly])
        if len(poly) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        if poly[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        self.min_poly = tuple(poly)
        d = len(poly) - 1
        self.degree = d
        # a^k for k = d .. 2d-2 written in the power basis
        fold = []
        cur = [-c for c in poly[:-1]]
        for _ in range(max(d - 1, 1)):
            fold.append(tuple(cur))
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] -= top * poly[i]
        self._fold = tuple(fold)

    @classmethod
    def rationals(cls) -> "NumberField":
        return cls((0, 1))

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.min_poly == other.min_poly

    def __hash__(self):
        return hash(self.min_poly)

    def __repr__(self):
        if self.degree == 1:
            return "NumberField(Q)"
        return f"NumberField(min_poly={[str(c) for c in self.min_poly]})"

    def _reduce(self, poly: list) -> tuple:
        d = self.degree
        out = list(poly[:d]) + [Fraction(0)] * (d - len(poly[:d]))
        for k in range(d, len(poly)):
            c = poly[k]
            if c:
                for i, f in enumerate(self._fold[k - d]):
                    out[i] += c * f
        return tuple(out)

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (list, tuple)):
            coeffs = [to_fraction(c) for c in value]
            if len(coeffs) > self.degree:
                _, rem = _pdivmod(_trim(coeffs), list(self.min_poly))
                coeffs = rem
            return FieldElement(self, tuple(coeffs) + (Fraction(0),) * (self.degree - len(coeffs)))
        return FieldElement(self, (to_fraction(value),) + (Fraction(0),) * (self.degree - 1))

    @property
    def zero(self) -> "FieldElement":
        return self(0)

    @property
    def one(self) -> "FieldElement":
        return self(1)

    @property
    def gen(self) -> "FieldElement":
        """The class of x, written a."""
        return self([0, 1])

    def basis(self) -> list["FieldElement"]:
        return [self([0] * i + [1]) for i in range(self.degree)]

    def identity(self) -> "FieldAutomorphism":
        return FieldAutomorphism(self, self.gen)


class FieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return FieldElement(self.field, tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.field.degree == 1:
            return FieldElement(self.field, (self.coeffs[0] * other.coeffs[0],))
        prod = _pmul(_trim(list(self.coeffs)), _trim(list(other.coeffs)))
        return FieldElement(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not self:
            raise ZeroInversion("inverse of zero")
        if self.field.degree == 1:
            return FieldElement(self.field, (1 / self.coeffs[0],))
        g, s = _pegcd(_trim(list(self.coeffs)), list(self.field.min_poly))
        if len(g) != 1:
            raise ReducibleModulus(
                f"gcd of {self} with the minimal polynomial has degree {len(g) - 1}"
            )
        return self.field(s)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out, base = self.field.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs == self.field(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def substitute(self, image: "FieldElement") -> "FieldElement":
        """Evaluate this element's representative polynomial at ``image``."""
        out = self.field.zero
        for c in reversed(self.coeffs):
            out = out * image + c
        return out

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
                continue
            mono = GENERATOR_NAME if i == 1 else f"{GENERATOR_NAME}^{i}"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def needs_parens(self) -> bool:
        return sum(1 for c in self.coeffs if c) > 1


class FieldAutomorphism:
    """A Q-automorphism of the field, fixed by the image of the generator."""

    __slots__ = ("field", "image", "order")

    def __init__(self, field: NumberField, image, *, order: int | None = None):
        self.field = field
        self.image = field(image)
        if order is None:
            if _eval_min_poly(field, self.image):
                raise InvalidFieldAutomorphism(
                    f"{self.image} is not a root of the minimal polynomial"
                )
            order = self._find_order()
        self.order = order

    def _find_order(self) -> int:
        gen = self.field.gen
        cur = self.image
        for k in range(1, self.field.degree + 1):
            if cur == gen:
                return k
            cur = cur.substitute(self.image)
        raise NotAnAutomorphism(
            f"a -> {self.image} does not return to a within {self.field.degree} steps"
        )

    def __call__(self, a: FieldElement) -> FieldElement:
        if self.order == 1 or self.field.degree == 1:
            return a
        return a.substitute(self.image)

    def is_identity(self) -> bool:
        return self.order == 1

    def compose(self, other: "FieldAutomorphism") -> "FieldAutomorphism":
        """The map ``self o other``."""
        image = other.image.substitute(self.image)
        return FieldAutomorphism(self.field, image)

    def inverse(self) -> "FieldAutomorphism":
        return self.power(self.order - 1)

    def power(self, k: int) -> "FieldAutomorphism":
        k %= self.order
        out = self.field.identity()
        for _ in range(k):
            out = self.compose(out)
        return out

    def __eq__(self, other):
        return isinstance(other, FieldAutomorphism) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"FieldAutomorphism({GENERATOR_NAME} -> {self.image})"


def _eval_min_poly(field: NumberField, x: FieldElement) -> FieldElement:
    out = field.zero
    for c in reversed(field.min_poly):
        out = out * x + c
    return out


def fe_arith(a: FieldElement, b: FieldElement, kind: str) -> FieldElement:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown operation {kind!r}")


def fe_inv(a: FieldElement) -> FieldElement:
    return a.inv()


def aut_apply(sigma: FieldAutomorphism, a: FieldElement) -> FieldElement:
    return sigma(a)


def aut_invert(sigma: FieldAutomorphism) -> FieldAutomorphism:
    return sigma.inverse()


def field_elements(field: NumberField, values: Iterable) -> list[FieldElement]:
    return [field(v) for v in values]
