"""Hilbert polynomials and Gelfand-Kirillov dimension from a staircase.

With p the largest single exponent among the leading monomials, every
irreducible monomial u is equivalent under shaving at p to a unique
irreducible monomial with all exponents <= p, and the class of a shaved u
with k topped coordinates contributes binom(t - tdeg(u) + k, k) monomials of
degree <= t.  Summing over the finite box gives the Hilbert polynomial,
valid for t >= (m + n) * p.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import NEG_INF, standard_monomials
from .errors import NonDegreeOrdering
from .groebner import GroebnerBasis
from .modfree import ModuleGroebnerBasis


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial over Q in x, constant term first, trailing zeros trimmed."""

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c) -> "RationalPolynomial":
        return cls((c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RationalPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other):
        if isinstance(other, RationalPolynomial):
            if not self.coeffs or not other.coeffs:
                return RationalPolynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, x in enumerate(self.coeffs):
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
            return RationalPolynomial(tuple(out))
        return RationalPolynomial(tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, x) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def shift(self, c) -> "RationalPolynomial":
        """The polynomial x -> self(x - c)."""
        out = RationalPolynomial()
        step = RationalPolynomial((-Fraction(c), 1))
        for a in reversed(self.coeffs):
            out = out * step + RationalPolynomial((a,))
        return out

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def binomial_poly(q: int) -> RationalPolynomial:
    """binom(x + q, q) = (x + q)(x + q - 1)...(x + 1) / q!."""
    out = RationalPolynomial((1,))
    for i in range(1, q + 1):
        out = out * RationalPolynomial((i, 1))
    return out * Fraction(1, math.factorial(q))


def top_shave(u, p: int):
    """(indices where u reaches p, u with every exponent capped at p); 0-based indices."""
    top = tuple(i for i, e in enumerate(u) if e >= p)
    return top, tuple(min(p, e) for e in u)


@dataclass(frozen=True)
class DimensionReport:
    gk_dimension: int | float  # -inf for the zero module
    hilbert_polynomial: RationalPolynomial
    stability_threshold: int
    shave_threshold: int
    field_degree: int
    rank: int
    normal_forms: tuple = ()  # W_p as (pos, exps) pairs

    def value(self, t: int) -> int:
        """HF(t) from the class decomposition of W_p, exact for every t.

        The class of u has binom(t - tdeg(u) + k, k) members of degree <= t
        once t >= tdeg(u) and none before; h(t) drops that cutoff.
        """
        total = 0
        for _, u in self.normal_forms:
            if sum(u) <= t:
                k = len(top_shave(u, self.shave_threshold)[0])
                total += math.comb(t - sum(u) + k, k)
        return self.field_degree * total


def _basis_data(G):
    """(algebra, rank, per-position staircase chains, leading exponents) for either GB kind."""
    if isinstance(G, GroebnerBasis):
        return G.algebra, 1, (G.staircase().minimal_exponents,), G.leading_monomials()
    if isinstance(G, ModuleGroebnerBasis):
        leads = [u for _, u in G.leading_monomials()]
        return G.algebra, G.rank, G.staircase().minimal_exponents, leads
    raise TypeError(f"expected a Groebner basis, got {type(G).__name__}")


def _require_degree_ordering(G):
    if not G.ordering.is_total_degree():
        raise NonDegreeOrdering(
            f"ordering {G.ordering} is not a total-degree ordering; dimension counts need one"
        )


def _irreducible(chain, u) -> bool:
    return not any(all(a <= b for a, b in zip(v, u)) for v in chain)


def shave_threshold(G) -> int:
    _, _, _, leads = _basis_data(G)
    return max((max(u, default=0) for u in leads), default=0)


def hilbert_data(G) -> DimensionReport:
    """Hilbert polynomial and GK dimension of A/I or A^p/N from a Groebner basis."""
    _require_degree_ordering(G)
    alg, rank, chains, leads = _basis_data(G)
    l, d = alg.l, alg.field.degree
    p = max((max(u, default=0) for u in leads), default=0)
    h = RationalPolynomial()
    gk = NEG_INF
    normal_forms = []
    for pos in range(rank):
        for u in itertools.product(range(p + 1), repeat=l):
            if not _irreducible(chains[pos], u):
                continue
            top, _ = top_shave(u, p)
            normal_forms.append((pos, u))
            h = h + binomial_poly(len(top)).shift(sum(u))
            gk = max(gk, len(top))
    return DimensionReport(
        gk_dimension=gk,
        hilbert_polynomial=h * d,
        stability_threshold=l * p,
        shave_threshold=p,
        field_degree=d,
        rank=rank,
        normal_forms=tuple(normal_forms),
    )


def hilbert_value(G, t: int) -> int:
    """d times the number of irreducible monomials of degree <= t, counted directly."""
    _require_degree_ordering(G)
    alg, rank, chains, _ = _basis_data(G)
    count = 0
    for pos in range(rank):
        count += sum(1 for u in standard_monomials(alg.l, t) if _irreducible(chains[pos], u))
    return alg.field.degree * count


def gk_dimension(G):
    return hilbert_data(G).gk_dimension
